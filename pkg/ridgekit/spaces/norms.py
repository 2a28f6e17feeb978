"""Weight constants and weighted norms."""

import itertools
import logging

import numpy as np
from scipy import integrate, stats

from ridgekit.spaces.errors import (DivergentWeight, InvalidDomain,
                                    MissingDerivatives)
from ridgekit.spaces.targets import multi_indices
from ridgekit.utils.quadrature import refine_until_converged, tensor_rule


logger = logging.getLogger(__name__)


#: Gauss-Legendre nodes per axis for Sobolev norms.
DEFAULT_SOBOLEV_NODES = 64

#: Grid points per axis for sup-norms. Always odd.
DEFAULT_GRID_POINTS = {
    1: 2001,
    2: 201,
    3: 41,
}

#: Node caps per axis for tensor weight constants.
WEIGHT_NODE_CAPS = {
    1: 1024,
    2: 256,
    3: 64,
}

#: Radius used for full-space tensor weight constants.
FULL_SPACE_RADIUS = 40.0

#: Points evaluated together.
POINT_BLOCK = 8192

#: Relative change under radius doubling that signals a divergent tensor
#: weight constant.
TENSOR_DIVERGENCE_RTOL = 1e-5


def _radial_gaussian_moment(power, m, radius):
    value, _ = integrate.quad(
        lambda r: (1.0 + r) ** power * stats.chi.pdf(r, m), 0.0, radius,
        epsabs=1e-13, epsrel=1e-11, limit=400)

    return value


def _split_at_origin(lo, hi):
    if lo < 0.0 < hi:
        return [(lo, 0.0), (0.0, hi)]

    return [(lo, hi)]


def _tensor_moment(bounds, w, power, m):
    cap = WEIGHT_NODE_CAPS.get(m, 32)

    # Weights like the Laplace density have a kink on each axis, so every
    # orthant gets its own rule.
    boxes = list(itertools.product(
        *[_split_at_origin(lo, hi) for lo, hi in bounds]))

    def evaluate(n):
        total = 0.0

        for box in boxes:
            points, weights = tensor_rule(box, n)
            norms = np.linalg.norm(points, axis=1)
            total += np.sum(weights * (1.0 + norms) ** power * w(points))

        return total

    value, nodes, converged = refine_until_converged(
        evaluate, min(16, cap), cap, rtol=1e-9)

    if not converged:
        logger.debug('Weight constant quadrature stopped at %d nodes per '
                     'axis', nodes)

    return float(value)


def weight_constant(U, w):
    """Return ``C_{U,w} = (∫_U (1 + ‖u‖)^(γp) w(u) du)^(1/p)``.

    Box domains are integrated as given. Full-space domains are integrated
    over all of ℝ^m (their truncation radius only applies to norms): in one
    dimension through the line constant, for Gaussian weights through the
    radial χ-distribution, otherwise on a box whose radius is doubled to
    detect divergence.

    Raises:
        ridgekit.spaces.errors.DivergentWeight:
            The integral keeps growing when its truncation is doubled.
    """
    m = U.dim
    power = w.gamma * w.p

    if U.kind == 'box':
        value = _tensor_moment(U.bounds, w, power, m)
    elif m == 1:
        return w.line_constant()
    elif w.name == 'gaussian':
        value = _radial_gaussian_moment(power, m, FULL_SPACE_RADIUS)
        wider = _radial_gaussian_moment(power, m, 2.0 * FULL_SPACE_RADIUS)

        if abs(wider - value) > 1e-6 * abs(wider):
            raise DivergentWeight('The Gaussian weight constant did not '
                                  'settle (%.6g vs %.6g)' % (value, wider))
    else:
        radius = min(w.w0.radius, FULL_SPACE_RADIUS)
        value = _tensor_moment([(-radius, radius)] * m, w, power, m)
        wider = _tensor_moment([(-2.0 * radius, 2.0 * radius)] * m, w,
                               power, m)

        if abs(wider - value) > TENSOR_DIVERGENCE_RTOL * abs(wider):
            raise DivergentWeight(
                'The weight constant of %s in dimension %d keeps growing '
                '(%.6g at radius %g, %.6g at radius %g)'
                % (w.name, m, value, radius, wider, 2.0 * radius))

    return value ** (1.0 / w.p)


def product_weight_bound(w, m):
    """Return ``C_{ℝ,w0} m^(γ + 1/p)``, an upper bound for the weight
    constant of the product weight on ℝ^m.
    """
    return w.line_constant() * float(m) ** (w.gamma + 1.0 / w.p)


def _check_order(f, k):
    available = getattr(f, 'max_partial_order', 0)

    if k > available:
        raise MissingDerivatives('partial derivatives', k, available)


def _partial_norms(f, alpha, points):
    values = []

    for start in range(0, len(points), POINT_BLOCK):
        block = points[start:start + POINT_BLOCK]
        partial = np.asarray(f.partial_eval(alpha, block))
        values.append(np.linalg.norm(partial.reshape(len(block), -1),
                                     axis=1))

    return np.concatenate(values)


def weighted_sobolev_norm(f, U, w, k, p=None, nodes=None):
    """Return ``(Σ_{|α|≤k} ∫_U ‖∂_α f(u)‖^p w(u) du)^(1/p)``.

    Args:
        f (object):
            A target, network or combination of them.

        U (ridgekit.spaces.domains.Domain):
            The domain. Full-space domains use their truncation box.

        w (ridgekit.spaces.domains.WeightSpec):
            The weight.

        k (int):
            The derivative order.

        p (float, optional):
            The exponent. Defaults to ``w.p``.

        nodes (int, optional):
            Gauss-Legendre nodes per axis.

    Raises:
        ridgekit.spaces.errors.MissingDerivatives:
            ``f`` does not provide partials of order ``k``.
    """
    _check_order(f, k)

    if p is None:
        p = w.p

    if nodes is None:
        nodes = DEFAULT_SOBOLEV_NODES

    if U.dim != f.dim_in:
        raise InvalidDomain('Domain dimension %d does not match the '
                            'function dimension %d' % (U.dim, f.dim_in))

    points, weights = tensor_rule(U.bounds, nodes)
    weights = weights * w(points)
    total = 0.0

    for alpha in multi_indices(f.dim_in, int(k)):
        total += np.sum(weights * _partial_norms(f, alpha, points) ** p)

    return float(total ** (1.0 / p))


def grid_points(U, points=None):
    """Return the sup-norm grid for ``U`` as an array shaped ``(n, m)``."""
    if points is None:
        points = DEFAULT_GRID_POINTS.get(U.dim, 21)

    points = int(points) | 1
    axes = [np.linspace(lo, hi, points) for lo, hi in U.bounds]
    grids = np.meshgrid(*axes, indexing='ij')

    return np.stack([grid.ravel() for grid in grids], axis=-1)


def weighted_ck_norm(f, U, gamma, k, points=None):
    """Return ``max_{|α|≤k} sup_U ‖∂_α f(u)‖ / (1 + ‖u‖)^γ`` on a grid.

    Raises:
        ridgekit.spaces.errors.MissingDerivatives:
            ``f`` does not provide partials of order ``k``.
    """
    _check_order(f, k)

    grid = grid_points(U, points)
    denominator = (1.0 + np.linalg.norm(grid, axis=1)) ** gamma
    best = 0.0

    for alpha in multi_indices(f.dim_in, int(k)):
        values = _partial_norms(f, alpha, grid) / denominator
        best = max(best, float(np.max(values)))

    return best

