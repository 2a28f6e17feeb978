"""The activation catalog.

Each activation knows its derivative chain in closed form, its polynomial
growth behaviour and the density of its distributional Fourier transform on
``ℝ∖{0}``. Fourier transforms follow the convention
``f̂(ξ) = ∫ f(u) exp(-iξu) du``.
"""

import functools
import math

import numpy as np
from numpy.polynomial import Polynomial
from scipy import special

from ridgekit.activations.errors import (InvalidInput, NormDiverges,
                                         SingularPoint,
                                         UnsupportedDerivative)


#: Half-width of the grid used by :py:func:`growth_norm`.
GROWTH_GRID_RADIUS = 50.0

#: Number of log-spaced grid points on each side of the origin.
GROWTH_GRID_POINTS = 5000


@functools.lru_cache(maxsize=None)
def _logistic_chain(order):
    """Return P with σ^(order) = P(σ), using σ' = σ(1 - σ)."""
    if order == 0:
        return Polynomial([0.0, 1.0])

    return _logistic_chain(order - 1).deriv() * Polynomial([0.0, 1.0, -1.0])


@functools.lru_cache(maxsize=None)
def _tanh_chain(order):
    """Return P with tanh^(order) = P(tanh), using tanh' = 1 - tanh²."""
    if order == 0:
        return Polynomial([0.0, 1.0])

    return _tanh_chain(order - 1).deriv() * Polynomial([1.0, 0.0, -1.0])


def _check_points(s):
    s = np.asarray(s, dtype=float)

    if not np.all(np.isfinite(s)):
        raise InvalidInput('Activation arguments must be finite')

    return s


class ActivationSpec(object):
    """An activation function from the catalog.

    Subclasses provide the closed forms. Instances carry no state and may be
    shared between threads.

    Attributes:
        name (str):
            The catalog name.

        k_max (float):
            The largest derivative order supported (``math.inf`` for smooth
            activations).

        gamma_min (float):
            The smallest growth exponent for which the ``C^k_{pol,γ}`` norm
            is finite.

        premultiply_pairing (bool):
            Whether the distributional identity is checked on ``ξ·g`` rather
            than ``g``.
    """

    name = None
    k_max = math.inf
    gamma_min = 0.0
    premultiply_pairing = False

    def deriv_eval(self, j, s):
        """Return ρ^(j)(s).

        Args:
            j (int):
                The derivative order.

            s (float or numpy.ndarray):
                Finite evaluation points.

        Returns:
            float or numpy.ndarray:
            The derivative values, shaped like ``s``.

        Raises:
            ridgekit.activations.errors.UnsupportedDerivative:
                ``j`` exceeds :py:attr:`k_max`.

            ridgekit.activations.errors.InvalidInput:
                ``j`` is negative or ``s`` is not finite.
        """
        self.check_order(j)

        return self._derivative(int(j), _check_points(s))

    def __call__(self, s):
        return self.deriv_eval(0, s)

    def check_order(self, j):
        """Validate a derivative order."""
        if int(j) != j or j < 0:
            raise InvalidInput('Derivative order must be a non-negative '
                               'integer, got %r' % (j,))

        if j > self.k_max:
            raise UnsupportedDerivative(self.name, j, self.k_max)

    def fourier_density(self, xi):
        """Return the density of the Fourier transform at ``xi``.

        Raises:
            ridgekit.activations.errors.SingularPoint:
                Any entry of ``xi`` is 0.
        """
        xi = np.asarray(xi, dtype=float)

        if np.any(xi == 0.0):
            raise SingularPoint(self.name)

        with np.errstate(over='ignore'):
            return self._density(xi)

    def tail_limit(self, j, gamma):
        """Return lim |ρ^(j)(s)| / (1 + |s|)^γ as |s| → ∞."""
        raise NotImplementedError

    def _derivative(self, j, s):
        raise NotImplementedError

    def _density(self, xi):
        raise NotImplementedError

    def __repr__(self):
        return '<%s %s>' % (type(self).__name__, self.name)


class SigmoidActivation(ActivationSpec):
    """The logistic sigmoid σ(s) = 1 / (1 + exp(-s))."""

    name = 'sigmoid'

    def _derivative(self, j, s):
        return _logistic_chain(j)(special.expit(s))

    def _density(self, xi):
        return -1j * np.pi / np.sinh(np.pi * xi)

    def tail_limit(self, j, gamma):
        return 1.0 if j == 0 and gamma == 0 else 0.0


class TanhActivation(ActivationSpec):
    """The hyperbolic tangent."""

    name = 'tanh'

    def _derivative(self, j, s):
        return _tanh_chain(j)(np.tanh(s))

    def _density(self, xi):
        return -1j * np.pi / np.sinh(0.5 * np.pi * xi)

    def tail_limit(self, j, gamma):
        return 1.0 if j == 0 and gamma == 0 else 0.0


class SoftplusActivation(ActivationSpec):
    """softplus(s) = log(1 + exp(s)), whose derivative is the sigmoid."""

    name = 'softplus'
    gamma_min = 1.0
    premultiply_pairing = True

    def _derivative(self, j, s):
        if j == 0:
            return np.logaddexp(0.0, s)

        return _logistic_chain(j - 1)(special.expit(s))

    def _density(self, xi):
        return -np.pi / (xi * np.sinh(np.pi * xi))

    def tail_limit(self, j, gamma):
        if j == 0:
            return 1.0 if gamma == 1 else 0.0

        return 0.0


class ReluActivation(ActivationSpec):
    """The rectified linear unit. Only the function itself is available."""

    name = 'relu'
    k_max = 0
    gamma_min = 1.0
    premultiply_pairing = True

    def _derivative(self, j, s):
        return np.maximum(s, 0.0)

    def _density(self, xi):
        return -1.0 / (xi * xi)

    def tail_limit(self, j, gamma):
        return 1.0 if gamma == 1 else 0.0


ACTIVATIONS = {
    cls.name: cls()
    for cls in (SigmoidActivation, TanhActivation, SoftplusActivation,
                ReluActivation)
}


def get_activation(name):
    """Return the catalog activation with the given name.

    Raises:
        ridgekit.activations.errors.InvalidInput:
            The name is not in the catalog.
    """
    if isinstance(name, ActivationSpec):
        return name

    try:
        return ACTIVATIONS[name]
    except KeyError:
        raise InvalidInput('Unknown activation "%s". Choose one of: %s'
                           % (name, ', '.join(sorted(ACTIVATIONS))))


def activation_eval(spec, j, s):
    """Return ρ^(j)(s) for a catalog activation."""
    return get_activation(spec).deriv_eval(j, s)


def fourier_density(spec, xi):
    """Return the distributional Fourier density of ``spec`` at ``xi``."""
    return get_activation(spec).fourier_density(xi)


def growth_grid(radius=GROWTH_GRID_RADIUS, points=GROWTH_GRID_POINTS):
    """Return the symmetric log-spaced grid used for sup-norms, with 0."""
    positive = np.logspace(-6.0, np.log10(radius), points)

    return np.concatenate([-positive[::-1], [0.0], positive])


def growth_norm(spec, k, gamma):
    """Return the ``C^k_{pol,γ}`` norm of a catalog activation.

    This is ``max_{j ≤ k} sup_s |ρ^(j)(s)| / (1 + |s|)^γ``. The supremum is
    the larger of the grid maximum on ``|s| ≤ 50`` and the analytic limit
    at infinity; every catalog activation has monotone tails.

    Raises:
        ridgekit.activations.errors.NormDiverges:
            ``gamma`` is below the activation's ``gamma_min``.

        ridgekit.activations.errors.UnsupportedDerivative:
            ``k`` exceeds the activation's ``k_max``.
    """
    spec = get_activation(spec)
    spec.check_order(k)

    if gamma < spec.gamma_min:
        raise NormDiverges('The C^%d_{pol,%g} norm of %s is infinite; '
                           'gamma must be at least %g'
                           % (k, gamma, spec.name, spec.gamma_min))

    s = growth_grid()
    denominator = (1.0 + np.abs(s)) ** gamma
    best = 0.0

    for j in range(int(k) + 1):
        values = np.abs(spec.deriv_eval(j, s)) / denominator
        best = max(best, float(np.max(values)), spec.tail_limit(j, gamma))

    return best
