"""The ridgelet transform in Cartesian and Fourier-slice form.

The transform of ``g: ℝ^m → ℝ^d`` is::

    𝔯g(a, b) = ∫ conj(ψ(aᵀu - b)) g(u) ‖a‖ du

The conjugate on ψ makes the Cartesian form agree with the slice form::

    𝔯g(a, b) = (‖a‖ / 2π) ∫ ψ̂(η) ĝ(ηa) exp(iηb) dη

which only needs ĝ on the segment ``[ζ1, ζ2]·a``.
"""

import logging

import numpy as np

from ridgekit.errors import InvalidInput
from ridgekit.ridgelet.errors import (InvalidDirection, QuadratureFailure,
                                      UseSliceRoute)
from ridgekit.utils.parallel import ordered_map
from ridgekit.utils.quadrature import refine_until_converged, tensor_rule


logger = logging.getLogger(__name__)


#: Largest dimension handled by :py:func:`ridgelet_transform_direct`.
MAX_DIRECT_DIM = 3

#: Coefficients are computed in blocks of this many (a, b) pairs.
COEFFICIENT_BLOCK = 1024


class DirectQuadrature(object):
    """Settings for :py:func:`ridgelet_transform_direct`.

    Attributes:
        half_width (float):
            The integral runs over ``[-half_width, half_width]^m``.

        n_start (int):
            Initial Gauss-Legendre nodes per axis.

        n_max (int):
            Node cap per axis. Defaults depend on ``m``.

        rtol (float):
            Relative agreement between successive doublings.

        atol (float):
            Absolute agreement that is always accepted.
    """

    max_nodes = {
        1: 512,
        2: 256,
        3: 128,
    }

    def __init__(self, half_width=8.0, n_start=64, n_max=None, rtol=1e-9,
                 atol=1e-14):
        self.half_width = float(half_width)
        self.n_start = int(n_start)
        self.n_max = n_max
        self.rtol = rtol
        self.atol = atol

    def node_cap(self, m):
        if self.n_max is not None:
            return self.n_max

        return self.max_nodes[m]


def _as_vector(a):
    a = np.atleast_1d(np.asarray(a, dtype=float))

    if a.ndim != 1 or not np.all(np.isfinite(a)):
        raise InvalidInput('Ridgelet directions must be finite vectors')

    return a


def fourier_evaluator(g):
    return getattr(g, 'fourier_eval', g)


def ridgelet_transform_direct(profile, g, a, b, quad=None):
    """Return 𝔯g(a, b) by tensor Gauss-Legendre quadrature over a box.

    Args:
        profile (ridgekit.ridgelet.profile.RidgeletProfile):
            The profile ψ.

        g (ridgekit.spaces.targets.TargetFunction):
            The function to transform. Must be negligible outside the box.

        a (numpy.ndarray):
            The direction, of length ``m ≤ 3``.

        b (float):
            The bias.

        quad (DirectQuadrature, optional):
            Quadrature settings.

    Returns:
        numpy.ndarray:
        The complex transform, of length ``d``.

    Raises:
        ridgekit.ridgelet.errors.UseSliceRoute:
            ``m > 3``.

        ridgekit.ridgelet.errors.QuadratureFailure:
            Doubling the nodes up to the cap did not converge.
    """
    a = _as_vector(a)
    m = len(a)

    if m > MAX_DIRECT_DIM:
        raise UseSliceRoute(m, MAX_DIRECT_DIM)

    if quad is None:
        quad = DirectQuadrature()

    norm = np.linalg.norm(a)

    if norm == 0.0:
        return np.zeros(g.dim_out, dtype=complex)

    bounds = [(-quad.half_width, quad.half_width)] * m

    def evaluate(n):
        points, weights = tensor_rule(bounds, n)
        kernel = np.conj(profile.psi_exact(points @ a - b))
        values = np.asarray(g.eval(points)).reshape(len(points), -1)

        return norm * ((weights * kernel) @ values)

    value, nodes, converged = refine_until_converged(
        evaluate, quad.n_start, quad.node_cap(m), quad.rtol, quad.atol)

    if not converged:
        raise QuadratureFailure(
            'Direct ridgelet quadrature at a=%s, b=%g did not converge with '
            '%d nodes per axis' % (a.tolist(), b, nodes))

    return value


def _coefficient_block(profile, g_hat, A, B, divide_norm):
    count, m = A.shape
    dim_out = np.asarray(g_hat(A[:1] * profile.zeta1)).reshape(1, -1).shape[1]
    values = np.zeros((count, dim_out), dtype=complex)
    panels = profile.rule_panels(B)
    inside = np.abs(B) <= profile.underflow_radius

    # Large |b| oscillates faster across the support, so those rows get a
    # rule with more panels.
    for panel_count in np.unique(panels[inside]):
        index = np.flatnonzero(inside & (panels == panel_count))
        eta, weights = profile.inverse_rule(panel_count)
        rows = max(1, COEFFICIENT_BLOCK // int(panel_count))

        for start in range(0, len(index), rows):
            chunk = index[start:start + rows]
            points = (A[chunk, None, :] * eta[None, :, None]).reshape(-1, m)
            g_values = np.asarray(g_hat(points))
            g_values = g_values.reshape(len(chunk), len(eta), -1)

            phase = weights[None, :] * np.exp(1j * np.outer(B[chunk], eta))
            values[chunk] = np.einsum('cj,cjd->cd', phase, g_values)

    if not divide_norm:
        values *= np.linalg.norm(A, axis=1)[:, None]

    return values


def ridgelet_coefficient(profile, g, A, B, divide_norm=False, workers=None):
    """Return 𝔯g at many (a, b) pairs by the slice route.

    Args:
        profile (ridgekit.ridgelet.profile.RidgeletProfile):
            The profile ψ.

        g (object):
            A target with ``fourier_eval``, or a callable mapping points of
            shape ``(n, m)`` to transforms of shape ``(n, d)``.

        A (numpy.ndarray):
            Directions, shaped ``(n, m)``. Zero directions are allowed.

        B (numpy.ndarray):
            Biases, shaped ``(n,)``.

        divide_norm (bool, optional):
            Return ``𝔯g(a, b) / ‖a‖`` instead, which stays finite at
            ``a = 0``.

        workers (int, optional):
            Worker count for the block computation.

    Returns:
        numpy.ndarray:
        Complex coefficients shaped ``(n, d)``.
    """
    A = np.atleast_2d(np.asarray(A, dtype=float))
    B = np.atleast_1d(np.asarray(B, dtype=float))

    if len(A) != len(B):
        raise InvalidInput('Got %d directions but %d biases'
                           % (len(A), len(B)))

    g_hat = fourier_evaluator(g)
    starts = range(0, len(A), COEFFICIENT_BLOCK)

    blocks = ordered_map(
        lambda start: _coefficient_block(
            profile, g_hat,
            A[start:start + COEFFICIENT_BLOCK],
            B[start:start + COEFFICIENT_BLOCK],
            divide_norm),
        starts, workers=workers)

    if not blocks:
        return np.zeros((0, 1), dtype=complex)

    return np.concatenate(blocks, axis=0)


def ridgelet_transform_slice(profile, g, a, b):
    """Return 𝔯g(a, b) from the Fourier transform of ``g``.

    With ``v = a/‖a‖``, ``s = 1/‖a‖`` and ``t = b/‖a‖`` this is
    ``(1/2π) ∫ ĝ(ξv) conj(ψ̂(ξs)) exp(iξt) dξ``, evaluated by
    Gauss-Legendre quadrature over the support of ψ̂.

    Raises:
        ridgekit.ridgelet.errors.InvalidDirection:
            ``a`` is the zero vector.
    """
    a = _as_vector(a)

    if not np.any(a):
        raise InvalidDirection('The slice route is undefined at a = 0')

    return ridgelet_coefficient(profile, g, a[None, :], [float(b)],
                                workers=1)[0]
