"""Error classes for domains, weights, targets and norms."""

from ridgekit.errors import InputError, RidgekitError


class DivergentWeight(RidgekitError):
    """A weight constant kept growing when its truncation was doubled."""


class MissingDerivatives(InputError):
    """A norm needs partial derivatives the function does not provide."""

    def __init__(self, what, order, available):
        super(MissingDerivatives, self).__init__(
            'This norm needs %s of order %d, but only order %s is '
            'available' % (what, order, available))
        self.order = order
        self.available = available


class TruncationFailure(RidgekitError):
    """A truncated integral changed too much when its region was doubled."""


class InvalidDomain(InputError):
    """A domain has empty, reversed or non-finite bounds."""


class InvalidWeight(InputError):
    """A weight is unknown, not normalized or has invalid exponents."""
