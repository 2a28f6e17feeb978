"""Quadrature nodes on the unit sphere for m ≤ 3."""

import numpy as np

from ridgekit.errors import InvalidInput
from ridgekit.utils.quadrature import gauss_legendre


#: Default node counts per dimension.
DEFAULT_SPHERE_NODES = {
    1: 2,
    2: 48,
    3: 16,
}


def sphere_nodes(m, n=None):
    """Return directions and weights covering the sphere in ℝ^m.

    The weights sum to the sphere's surface area (2, 2π, 4π).

    * ``m=1``: the two points ±1, weight 1 each.
    * ``m=2``: ``n`` equally spaced angles, weight ``2π/n``.
    * ``m=3``: an ``n``-point Gauss-Legendre rule in ``cos θ`` times ``2n``
      equally spaced azimuths.

    Returns:
        tuple:
        A 2-tuple of ``(directions, weights)`` with ``directions`` shaped
        ``(count, m)``.

    Raises:
        ridgekit.activations.errors.InvalidInput:
            ``m`` is not 1, 2 or 3.
    """
    if m not in DEFAULT_SPHERE_NODES:
        raise InvalidInput('Sphere quadrature is available for m = 1, 2, 3, '
                           'not %r' % (m,))

    if n is None:
        n = DEFAULT_SPHERE_NODES[m]

    if m == 1:
        return np.array([[-1.0], [1.0]]), np.array([1.0, 1.0])

    if m == 2:
        angles = 2.0 * np.pi * np.arange(n) / n
        directions = np.stack([np.cos(angles), np.sin(angles)], axis=-1)

        return directions, np.full(n, 2.0 * np.pi / n)

    cos_theta, theta_weights = gauss_legendre(n, -1.0, 1.0)
    azimuths = 2.0 * np.pi * np.arange(2 * n) / (2 * n)
    sin_theta = np.sqrt(1.0 - cos_theta ** 2)

    directions = np.stack([
        np.outer(sin_theta, np.cos(azimuths)).ravel(),
        np.outer(sin_theta, np.sin(azimuths)).ravel(),
        np.repeat(cos_theta, 2 * n),
    ], axis=-1)
    weights = np.repeat(theta_weights, 2 * n) * (np.pi / n)

    return directions, weights
