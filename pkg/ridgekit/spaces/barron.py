"""Ridgelet-Barron norm estimates.

:py:func:`barron_norm_estimate` integrates the weighted squared ridgelet
transform of one representative ``g``. Since the Barron norm is an infimum
over representatives, the value is an upper estimate.
:py:func:`barron_fourier_bound` is the a priori bound in terms of Fourier
partials of ``g``.
"""

import logging
import math

import numpy as np

from ridgekit.ridgelet.sphere import sphere_nodes
from ridgekit.ridgelet.transform import ridgelet_coefficient
from ridgekit.spaces.errors import MissingDerivatives, TruncationFailure
from ridgekit.spaces.targets import multi_indices
from ridgekit.utils.quadrature import gauss_legendre, tensor_rule


logger = logging.getLogger(__name__)


#: Relative change under refinement that counts as a truncation failure.
REFINEMENT_RTOL = 0.02

#: Sphere nodes used by the Barron integral, per dimension.
BARRON_SPHERE_NODES = {
    1: 2,
    2: 16,
    3: 6,
}

#: Gauss-Legendre nodes per axis for Fourier-side integrals.
FOURIER_NODES = {
    1: 256,
    2: 96,
    3: 48,
}


class BarronQuadrature(object):
    """Truncation settings for :py:func:`barron_norm_estimate`.

    Attributes:
        radius (float):
            ``‖a‖`` runs over ``[0, radius]``.

        radial_nodes (int):
            Gauss-Legendre nodes in ``‖a‖``.

        bias_max (float):
            ``b`` runs over ``[-bias_max, bias_max]``.

        bias_step (float):
            Trapezoid step in ``b``.
    """

    def __init__(self, radius=10.0, radial_nodes=64, bias_max=200.0,
                 bias_step=0.5):
        self.radius = float(radius)
        self.radial_nodes = int(radial_nodes)
        self.bias_max = float(bias_max)
        self.bias_step = float(bias_step)

    def refined(self):
        return BarronQuadrature(radius=2.0 * self.radius,
                                radial_nodes=2 * self.radial_nodes,
                                bias_max=2.0 * self.bias_max,
                                bias_step=0.5 * self.bias_step)


def _barron_integral(profile, g, k, gamma, quad):
    m = g.dim_in
    directions, direction_weights = sphere_nodes(m, BARRON_SPHERE_NODES[m])
    radii, radial_weights = gauss_legendre(quad.radial_nodes, 0.0,
                                           quad.radius)

    count = int(round(quad.bias_max / quad.bias_step))
    biases = quad.bias_step * np.arange(-count, count + 1)
    bias_weights = np.full(len(biases), quad.bias_step)
    bias_weights[[0, -1]] *= 0.5

    A = (radii[:, None, None] * directions[None, :, :]).reshape(-1, m)
    a_weights = (radial_weights[:, None] * radii[:, None] ** (m - 1) *
                 direction_weights[None, :]).ravel()
    a_factor = (1.0 + radii ** 2) ** (gamma + k + 0.5 * (m + 1))
    a_weights = a_weights * np.repeat(a_factor, len(directions))

    b_weights = bias_weights * (1.0 + biases ** 2) ** (gamma + 1.0)

    coefficients = ridgelet_coefficient(
        profile, g, np.repeat(A, len(biases), axis=0),
        np.tile(biases, len(A)))
    squared = np.sum(np.abs(coefficients) ** 2, axis=1).reshape(
        len(A), len(biases))

    return float(a_weights @ squared @ b_weights)


def barron_norm_estimate(profile, g, k, gamma, quad=None, check=True):
    """Return the representative-based ridgelet-Barron norm of ``g``.

    This is ``(∫∫ (1 + ‖a‖²)^(γ + k + (m+1)/2) (1 + b²)^(γ+1)
    ‖𝔯g(a, b)‖² db da)^(1/2)`` in polar coordinates for ``a``, with the
    transform from the slice route.

    Args:
        profile (ridgekit.ridgelet.profile.RidgeletProfile):
            The profile ψ.

        g (ridgekit.spaces.targets.TargetFunction):
            The representative.

        k (int):
            The Sobolev order.

        gamma (float):
            The growth exponent.

        quad (BarronQuadrature, optional):
            Truncation settings.

        check (bool, optional):
            Recompute on a refined region and compare.

    Raises:
        ridgekit.spaces.errors.TruncationFailure:
            The refined value differs by more than 2%.
    """
    if getattr(g, 'is_zero', False):
        return 0.0

    if quad is None:
        quad = BarronQuadrature()

    value = _barron_integral(profile, g, k, gamma, quad)

    if check:
        refined = _barron_integral(profile, g, k, gamma, quad.refined())
        change = abs(math.sqrt(refined) - math.sqrt(value))

        logger.debug('Barron estimate %.6g, refined %.6g',
                     math.sqrt(value), math.sqrt(refined))

        if change > REFINEMENT_RTOL * math.sqrt(refined):
            raise TruncationFailure(
                'The Barron estimate changed from %.6g to %.6g when the '
                'truncation was doubled'
                % (math.sqrt(value), math.sqrt(refined)))

    return math.sqrt(value)


def fourier_bound_constant(profile, gamma):
    """Return ``C_1 = 2^(⌈γ⌉/2) π^(-1/2) (⌈γ⌉+2)! max_j ∫ |ψ̂^(j)|``."""
    ceil_gamma = int(math.ceil(gamma))
    largest = max(profile.hat_psi_derivative_l1(j)
                  for j in range(ceil_gamma + 3))

    return (2.0 ** (0.5 * ceil_gamma) / math.sqrt(math.pi) *
            math.factorial(ceil_gamma + 2) * largest)


def barron_fourier_bound(f, profile, gamma, k, zeta1=None, half_width=16.0,
                         nodes=None):
    """Return the Fourier-side bound on the ridgelet-Barron norm.

    This is ``(C_1 / ζ1^(m/2)) Σ_{|β|≤⌈γ⌉+2} (∫ ‖∂_β f̂(ξ)‖² (1 +
    ‖ξ/ζ1‖²)^((4⌈γ⌉ + 2k + m + 5)/2) dξ)^(1/2)``.

    Args:
        f (ridgekit.spaces.targets.TargetFunction):
            The target.

        profile (ridgekit.ridgelet.profile.RidgeletProfile):
            The profile whose ψ̂ enters ``C_1``.

        gamma (float):
            The growth exponent.

        k (int):
            The Sobolev order.

        zeta1 (float, optional):
            Lower support edge. Defaults to the profile's.

        half_width (float, optional):
            Fourier integrals run over ``[-half_width, half_width]^m``.

        nodes (int, optional):
            Gauss-Legendre nodes per axis.

    Raises:
        ridgekit.spaces.errors.MissingDerivatives:
            ``f`` lacks Fourier partials of order ``⌈γ⌉ + 2``.
    """
    ceil_gamma = int(math.ceil(gamma))
    order = ceil_gamma + 2
    available = getattr(f, 'max_fourier_order', -1)

    if available < order:
        raise MissingDerivatives('Fourier partial derivatives', order,
                                 available)

    if getattr(f, 'is_zero', False):
        return 0.0

    m = f.dim_in

    if zeta1 is None:
        zeta1 = profile.zeta1

    if nodes is None:
        nodes = FOURIER_NODES.get(m, 32)

    exponent = 0.5 * (4 * ceil_gamma + 2 * k + m + 5)
    points, weights = tensor_rule([(-half_width, half_width)] * m, nodes)
    weights = weights * (1.0 + np.sum((points / zeta1) ** 2, axis=1)) ** (
        exponent)

    total = 0.0

    for beta in multi_indices(m, order):
        partial = np.asarray(f.fourier_partial_eval(beta, points))
        squared = np.sum(np.abs(partial.reshape(len(points), -1)) ** 2,
                         axis=1)
        total += math.sqrt(float(np.sum(weights * squared)))

    return fourier_bound_constant(profile, gamma) / zeta1 ** (0.5 * m) * total
