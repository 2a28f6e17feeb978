"""Admissibility constants for (profile, activation) pairs."""

import logging
import math

import numpy as np

from ridgekit.activations.catalog import get_activation
from ridgekit.errors import InvalidInput
from ridgekit.ridgelet.errors import DegenerateAdmissibility
from ridgekit.utils.quadrature import gauss_legendre, quad_complex


logger = logging.getLogger(__name__)


#: Moduli below this are treated as a vanishing constant.
DEGENERATE_THRESHOLD = 1e-14

#: Nodes of the fixed-order reference rule.
REFERENCE_NODES = 640


def _check_dim(m):
    if int(m) != m or m < 1:
        raise InvalidInput('Input dimension must be a positive integer, '
                           'got %r' % (m,))

    return int(m)


def admissibility_integral(profile, density, m):
    """Return ``(2π)^(m-1) ∫ conj(ψ̂(ξ)) f(ξ) / |ξ|^m dξ``.

    Args:
        profile (ridgekit.ridgelet.profile.RidgeletProfile):
            The profile. The integrand vanishes outside its support.

        density (callable):
            A Fourier density ``f``, evaluated only on the support of ψ̂.
            A polynomial activation has ``f = 0`` away from the origin.

        m (int):
            The input dimension.

    Returns:
        complex:
        The integral.
    """
    m = _check_dim(m)

    value, err = quad_complex(
        lambda xi: (profile.hat_psi(xi) * density(xi) / abs(xi) ** m),
        profile.zeta1, profile.zeta2, epsabs=0.0, epsrel=1e-12)

    logger.debug('Admissibility integral for m=%d: %r (error %.3g)',
                 m, value, err)

    return (2.0 * np.pi) ** (m - 1) * value


def admissibility_reference(profile, density, m, nodes=REFERENCE_NODES):
    """Return the admissibility integral by fixed-order Gauss-Legendre.

    This is an independent route to :py:func:`admissibility_integral`.
    """
    m = _check_dim(m)
    xi, weights = gauss_legendre(nodes, profile.zeta1, profile.zeta2)
    values = profile.hat_psi(xi) * density(xi) / np.abs(xi) ** m

    return complex((2.0 * np.pi) ** (m - 1) * np.sum(weights * values))


def admissibility_constant(profile, activation, m):
    """Return the admissibility constant ``C_m`` of a catalog activation.

    Raises:
        ridgekit.ridgelet.errors.DegenerateAdmissibility:
            The constant's modulus is below 1e-14.
    """
    spec = get_activation(activation)
    value = admissibility_integral(profile, spec.fourier_density, m)

    if abs(value) < DEGENERATE_THRESHOLD:
        raise DegenerateAdmissibility(
            'The admissibility constant of %s with %r for m=%d vanishes'
            % (spec.name, profile, m))

    return value


def admissibility_lower_bound(profile, activation, m):
    """Return ``C_{ψ,ρ} (2π/ζ2)^m`` with ``C_{ψ,ρ} = |∫ ψ̂ f| / 2π``."""
    spec = get_activation(activation)
    m = _check_dim(m)

    pairing, _ = quad_complex(
        lambda xi: profile.hat_psi(xi) * spec.fourier_density(xi),
        profile.zeta1, profile.zeta2, epsabs=0.0, epsrel=1e-12)

    return abs(pairing) / (2.0 * np.pi) * (2.0 * np.pi / profile.zeta2) ** m


class AdmissiblePair(object):
    """A profile and an activation with their constant in dimension ``m``.

    Attributes:
        profile (ridgekit.ridgelet.profile.RidgeletProfile):
            The ridgelet profile.

        activation (ridgekit.activations.catalog.ActivationSpec):
            The activation.

        m (int):
            The input dimension.

        constant (complex):
            The admissibility constant.
    """

    def __init__(self, profile, activation, m, constant):
        self.profile = profile
        self.activation = activation
        self.m = m
        self.constant = constant

    @property
    def sphere_area(self):
        """The surface area of the unit sphere in ℝ^m."""
        return 2.0 * math.pi ** (0.5 * self.m) / math.gamma(0.5 * self.m)

    def __repr__(self):
        return '<AdmissiblePair %s %r m=%d C=%.6g%+.6gj>' % (
            self.activation.name, self.profile, self.m,
            self.constant.real, self.constant.imag)


def build_pair(profile, activation, m):
    """Return the :py:class:`AdmissiblePair` for the given components.

    Raises:
        ridgekit.ridgelet.errors.DegenerateAdmissibility:
            The admissibility constant vanishes.
    """
    spec = get_activation(activation)

    return AdmissiblePair(profile, spec, _check_dim(m),
                          admissibility_constant(profile, spec, m))
