"""Quadrature rules shared by the numerical modules.

Fixed-order rules come from :py:func:`scipy.special.roots_legendre`; adaptive
integrals go through :py:func:`scipy.integrate.quad` (QUADPACK's
Gauss-Kronrod and, for Fourier integrals, its oscillatory QAWO routine).
"""

import functools
import logging

import numpy as np
from scipy import integrate, special


logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=64)
def _legendre_rule(n):
    nodes, weights = special.roots_legendre(n)
    nodes.setflags(write=False)
    weights.setflags(write=False)

    return nodes, weights


def gauss_legendre(n, lo=-1.0, hi=1.0):
    """Return an ``n``-point Gauss-Legendre rule on ``[lo, hi]``.

    Args:
        n (int):
            The number of nodes.

        lo (float, optional):
            The lower end of the interval.

        hi (float, optional):
            The upper end of the interval.

    Returns:
        tuple:
        A 2-tuple of ``(nodes, weights)`` arrays.
    """
    nodes, weights = _legendre_rule(int(n))
    half = 0.5 * (hi - lo)

    return lo + half * (nodes + 1.0), half * weights


def composite_gauss_legendre(lo, hi, panels, order):
    """Return a composite Gauss-Legendre rule over equal panels.

    Nodes are ordered by panel, so summing ``weights * f(nodes)`` reduces
    panel by panel in a fixed order.
    """
    edges = np.linspace(lo, hi, int(panels) + 1)
    base_nodes, base_weights = _legendre_rule(int(order))
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])

    nodes = (mid[:, None] + half[:, None] * base_nodes[None, :]).ravel()
    weights = (half[:, None] * base_weights[None, :]).ravel()

    return nodes, weights


def tensor_rule(bounds, n):
    """Return a tensor-product Gauss-Legendre rule over a box.

    Args:
        bounds (list of tuple):
            One ``(lo, hi)`` pair per axis.

        n (int):
            Nodes per axis.

    Returns:
        tuple:
        A 2-tuple of ``(points, weights)`` where ``points`` has shape
        ``(n ** m, m)``.
    """
    axes = [gauss_legendre(n, lo, hi) for lo, hi in bounds]
    grids = np.meshgrid(*[nodes for nodes, _ in axes], indexing='ij')
    weight_grids = np.meshgrid(*[weights for _, weights in axes],
                               indexing='ij')

    points = np.stack([grid.ravel() for grid in grids], axis=-1)
    weights = np.prod(np.stack([grid.ravel() for grid in weight_grids]),
                      axis=0)

    return points, weights


def quad_complex(func, lo, hi, epsabs=1e-10, epsrel=1e-10, limit=200,
                 points=None):
    """Adaptively integrate a complex-valued scalar function.

    The real and imaginary parts are integrated separately by
    :py:func:`scipy.integrate.quad`.

    Returns:
        tuple:
        A 2-tuple of ``(value, abserr)``.
    """
    kwargs = {
        'epsabs': epsabs,
        'epsrel': epsrel,
        'limit': limit,
    }

    if points is not None:
        kwargs['points'] = points

    re, re_err = integrate.quad(lambda x: np.real(func(x)), lo, hi, **kwargs)
    im, im_err = integrate.quad(lambda x: np.imag(func(x)), lo, hi, **kwargs)

    return complex(re, im), re_err + im_err


def fourier_integral(func, lo, hi, omega, epsabs=1e-10, limit=200):
    """Return ``∫_lo^hi func(x) exp(-i omega x) dx`` for a real ``func``.

    Uses QUADPACK's oscillatory weights, which stay accurate for large
    ``omega`` where a plain Gauss-Kronrod rule would need many subdivisions.
    """
    if omega == 0.0:
        value, _ = integrate.quad(func, lo, hi, epsabs=epsabs, epsrel=0.0,
                                  limit=limit)
        return complex(value, 0.0)

    cos_part, _ = integrate.quad(func, lo, hi, weight='cos', wvar=omega,
                                 epsabs=epsabs, epsrel=0.0, limit=limit)
    sin_part, _ = integrate.quad(func, lo, hi, weight='sin', wvar=omega,
                                 epsabs=epsabs, epsrel=0.0, limit=limit)

    return complex(cos_part, -sin_part)


def refine_until_converged(evaluate, n_start, n_max, rtol, atol=0.0):
    """Double a node count until two successive estimates agree.

    Args:
        evaluate (callable):
            Maps a node count to an estimate (scalar or array).

        n_start (int):
            The first node count to try.

        n_max (int):
            The largest node count allowed.

        rtol (float):
            Relative agreement required between successive estimates.

        atol (float, optional):
            Absolute agreement that is always accepted.

    Returns:
        tuple:
        A 3-tuple of ``(estimate, node_count, converged)``.
    """
    n = int(n_start)
    previous = np.asarray(evaluate(n))

    while 2 * n <= n_max:
        n *= 2
        current = np.asarray(evaluate(n))
        change = np.max(np.abs(current - previous), initial=0.0)
        scale = np.max(np.abs(current), initial=0.0)

        logger.debug('Quadrature refinement to %d nodes changed the '
                     'estimate by %.3g', n, change)

        if change <= max(atol, rtol * scale):
            return current, n, True

        previous = current

    return previous, n, False
