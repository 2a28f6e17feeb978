"""Error classes for ridgelet profiles, transforms and reconstruction."""

from ridgekit.errors import InputError, RidgekitError


class InvalidSupport(InputError):
    """The Fourier support of a profile is not an interval in (0, ∞)."""

    def __init__(self, zeta1, zeta2):
        super(InvalidSupport, self).__init__(
            'A ridgelet profile needs 0 < zeta1 < zeta2, got zeta1=%g, '
            'zeta2=%g' % (zeta1, zeta2))


class DegenerateAdmissibility(RidgekitError):
    """The admissibility constant vanishes, so the pair cannot reconstruct.
    """


class UseSliceRoute(InputError):
    """The Cartesian transform was requested in too many dimensions."""

    def __init__(self, m, max_dim):
        super(UseSliceRoute, self).__init__(
            'Direct ridgelet quadrature supports at most %d input '
            'dimensions, got %d; use the slice route' % (max_dim, m))


class QuadratureFailure(RidgekitError):
    """An adaptive quadrature did not reach its tolerance."""


class InvalidDirection(InputError):
    """The slice route was asked for the transform at a = 0."""


class TruncationWarning(UserWarning):
    """A truncated integral left a diagnostic above its threshold.

    This is recorded on results and logged; it never aborts a computation.
    """
