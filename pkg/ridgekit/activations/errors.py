"""Error classes for the activation catalog."""

from ridgekit.errors import InputError, InvalidInput, RidgekitError


class UnsupportedDerivative(InputError):
    """A derivative order beyond what the activation supports was requested.
    """

    def __init__(self, name, order, k_max):
        super(UnsupportedDerivative, self).__init__(
            'The %s activation supports derivatives up to order %s, '
            'not %s' % (name, k_max, order))
        self.order = order


class NormDiverges(RidgekitError):
    """The requested growth norm is infinite."""


class SingularPoint(InputError):
    """A Fourier density was queried at the origin."""

    def __init__(self, name):
        super(SingularPoint, self).__init__(
            'The Fourier density of %s is only defined away from 0' % name)


class InvalidTestFunction(InputError):
    """A test function's support is not bounded away from the origin."""


__all__ = [
    'InvalidInput',
    'InvalidTestFunction',
    'NormDiverges',
    'SingularPoint',
    'UnsupportedDerivative',
]
