"""Target functions with closed-form partials and Fourier transforms.

A target maps ``ℝ^m → ℝ^d``. Points are passed as arrays shaped ``(n, m)``
(a single point may be passed as a length-``m`` vector, and for ``m = 1`` a
flat array is a list of points). Values come back shaped ``(n, d)``, or
``(d,)`` for a single point.

Fourier transforms use ``ĝ(ξ) = ∫ g(u) exp(-iξᵀu) du``.
"""

import itertools
import math

import numpy as np
from numpy.polynomial import Polynomial
from numpy.polynomial import hermite_e

from ridgekit.errors import InvalidInput
from ridgekit.spaces.errors import MissingDerivatives


def multi_indices(m, max_order):
    """Return every multi-index in ``m`` variables with ``|α| ≤ max_order``.

    Indices are ordered by total order, then lexicographically.
    """
    indices = [
        alpha
        for alpha in itertools.product(range(max_order + 1), repeat=m)
        if sum(alpha) <= max_order
    ]

    return sorted(indices, key=lambda alpha: (sum(alpha), alpha))


def as_points(u, m):
    """Return ``(points, single)`` with points shaped ``(n, m)``."""
    u = np.asarray(u, dtype=float)

    if u.ndim == 0:
        if m != 1:
            raise InvalidInput('A scalar point needs m = 1, not m = %d' % m)

        return u.reshape(1, 1), True

    if u.ndim == 1:
        if m == 1:
            return u.reshape(-1, 1), False

        if len(u) != m:
            raise InvalidInput('Point has dimension %d, expected %d'
                               % (len(u), m))

        return u.reshape(1, m), True

    if u.ndim != 2 or u.shape[1] != m:
        raise InvalidInput('Points must be shaped (n, %d), got %s'
                           % (m, u.shape))

    return u, False


def _finish(values, single):
    return values[0] if single else values


def _check_index(alpha, m, available, what):
    alpha = tuple(int(order) for order in np.atleast_1d(alpha))

    if len(alpha) != m or any(order < 0 for order in alpha):
        raise InvalidInput('Multi-index %r does not fit dimension %d'
                           % (alpha, m))

    if sum(alpha) > available:
        raise MissingDerivatives(what, sum(alpha), available)

    return alpha


class TargetFunction(object):
    """Base class for targets.

    Subclasses implement ``_partial(alpha, points)`` and
    ``_fourier_partial(beta, points)`` on ``(n, m)`` arrays.

    Attributes:
        name (str):
            The registry name.

        dim_in (int):
            The input dimension ``m``.

        dim_out (int):
            The output dimension ``d``.

        max_partial_order (float):
            Highest available order of partial derivatives.

        max_fourier_order (float):
            Highest available order of Fourier-side partials, or -1 when
            the Fourier transform is not available.
    """

    name = None
    max_partial_order = math.inf
    max_fourier_order = math.inf

    def __init__(self, dim_in, dim_out=1):
        if int(dim_in) != dim_in or dim_in < 1:
            raise InvalidInput('Target input dimension must be positive')

        self.dim_in = int(dim_in)
        self.dim_out = int(dim_out)

    @property
    def is_zero(self):
        return False

    def eval(self, u):
        return self.partial_eval((0,) * self.dim_in, u)

    __call__ = eval

    def partial_eval(self, alpha, u):
        alpha = _check_index(alpha, self.dim_in, self.max_partial_order,
                             'partial derivatives')
        points, single = as_points(u, self.dim_in)

        return _finish(self._partial(alpha, points), single)

    def fourier_eval(self, xi):
        return self.fourier_partial_eval((0,) * self.dim_in, xi)

    def fourier_partial_eval(self, beta, xi):
        beta = _check_index(beta, self.dim_in, self.max_fourier_order,
                            'Fourier partial derivatives')
        points, single = as_points(xi, self.dim_in)

        return _finish(self._fourier_partial(beta, points), single)

    def as_dict(self):
        """Return a JSON-ready description for run manifests."""
        return {
            'name': self.name,
            'dim_in': self.dim_in,
            'dim_out': self.dim_out,
        }

    def _partial(self, alpha, points):
        raise NotImplementedError

    def _fourier_partial(self, beta, points):
        raise NotImplementedError

    def __add__(self, other):
        return LinearCombination([(1.0, self), (1.0, other)])

    def __sub__(self, other):
        return LinearCombination([(1.0, self), (-1.0, other)])

    def __mul__(self, scale):
        return LinearCombination([(float(scale), self)])

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1.0


class HermiteGaussianTarget(TargetFunction):
    """``c Π_l He_{n_l}(u_l/σ) exp(-u_l²/(2σ²))``.

    Each factor satisfies ``d/dx [He_n(x) e^{-x²/2}] = -He_{n+1}(x)
    e^{-x²/2}`` and has the transform ``σ√(2π) (-i)^n (σξ)^n
    exp(-σ²ξ²/2)``, so every partial on both sides is closed-form.
    """

    name = 'hermite'

    def __init__(self, dim_in, degrees=None, sigma=1.0, amplitude=1.0):
        super(HermiteGaussianTarget, self).__init__(dim_in, 1)

        if degrees is None:
            degrees = (0,) * self.dim_in

        degrees = tuple(int(degree) for degree in degrees)

        if len(degrees) != self.dim_in or min(degrees) < 0:
            raise InvalidInput('Need one non-negative degree per input '
                               'dimension, got %r' % (degrees,))

        if sigma <= 0.0:
            raise InvalidInput('Target scale sigma must be positive')

        self.degrees = degrees
        self.sigma = float(sigma)
        self.amplitude = float(amplitude)
        self._fourier_chains = {}

    @property
    def is_zero(self):
        return self.amplitude == 0.0

    def as_dict(self):
        data = super(HermiteGaussianTarget, self).as_dict()
        data.update({
            'degrees': list(self.degrees),
            'sigma': self.sigma,
            'amplitude': self.amplitude,
        })

        return data

    def _partial(self, alpha, points):
        x = points / self.sigma
        values = np.full(len(points), self.amplitude)

        for axis, (degree, order) in enumerate(zip(self.degrees, alpha)):
            coefficients = [0.0] * (degree + order) + [1.0]
            values = values * ((-1.0 / self.sigma) ** order *
                               hermite_e.hermeval(x[:, axis], coefficients) *
                               np.exp(-0.5 * x[:, axis] ** 2))

        return values[:, None]

    def _fourier_chain(self, degree, order):
        key = (degree, order)

        if key not in self._fourier_chains:
            if order == 0:
                chain = Polynomial([0.0] * degree + [1.0])
            else:
                prev = self._fourier_chain(degree, order - 1)
                chain = (prev.deriv() -
                         self.sigma ** 2 * Polynomial([0.0, 1.0]) * prev)

            self._fourier_chains[key] = chain

        return self._fourier_chains[key]

    def _fourier_partial(self, beta, points):
        values = np.full(len(points), self.amplitude, dtype=complex)
        envelope = np.exp(-0.5 * self.sigma ** 2 * points ** 2)

        for axis, (degree, order) in enumerate(zip(self.degrees, beta)):
            scale = (self.sigma * math.sqrt(2.0 * math.pi) *
                     (-1j) ** degree * self.sigma ** degree)
            chain = self._fourier_chain(degree, order)
            values = values * (scale * chain(points[:, axis]) *
                               envelope[:, axis])

        return values[:, None]


class GaussianTarget(HermiteGaussianTarget):
    """The isotropic Gaussian ``c exp(-‖u‖²/(2σ²))``."""

    name = 'gaussian'

    def __init__(self, dim_in, sigma=1.0, amplitude=1.0):
        super(GaussianTarget, self).__init__(dim_in, sigma=sigma,
                                             amplitude=amplitude)

    def as_dict(self):
        data = super(GaussianTarget, self).as_dict()
        del data['degrees']

        return data


class ZeroTarget(TargetFunction):
    """The zero function."""

    name = 'zero'

    @property
    def is_zero(self):
        return True

    def _partial(self, alpha, points):
        return np.zeros((len(points), self.dim_out))

    def _fourier_partial(self, beta, points):
        return np.zeros((len(points), self.dim_out), dtype=complex)


class PolynomialTarget(TargetFunction):
    """A polynomial on ℝ. It has no Fourier transform as a function."""

    name = 'polynomial'
    max_fourier_order = -1

    def __init__(self, coefficients):
        super(PolynomialTarget, self).__init__(1, 1)
        self.polynomial = Polynomial(np.asarray(coefficients, dtype=float))

    def as_dict(self):
        data = super(PolynomialTarget, self).as_dict()
        data['coefficients'] = self.polynomial.coef.tolist()

        return data

    def _partial(self, alpha, points):
        return self.polynomial.deriv(alpha[0])(points[:, 0])[:, None]


class LinearCombination(TargetFunction):
    """A finite linear combination ``Σ c_i g_i`` of targets.

    Terms may be any objects with the target protocol, including networks,
    which only provide the spatial side.
    """

    name = 'combination'

    def __init__(self, terms):
        terms = [(float(scale), term) for scale, term in terms]

        if not terms:
            raise InvalidInput('A linear combination needs at least one term')

        dims = set((term.dim_in, term.dim_out) for _, term in terms)

        if len(dims) != 1:
            raise InvalidInput('Cannot combine targets with different '
                               'dimensions: %s' % sorted(dims))

        dim_in, dim_out = dims.pop()
        super(LinearCombination, self).__init__(dim_in, dim_out)

        self.terms = terms
        self.max_partial_order = min(
            getattr(term, 'max_partial_order', 0) for _, term in terms)
        self.max_fourier_order = min(
            getattr(term, 'max_fourier_order', -1) for _, term in terms)

    @property
    def is_zero(self):
        return all(scale == 0.0 or getattr(term, 'is_zero', False)
                   for scale, term in self.terms)

    def as_dict(self):
        data = super(LinearCombination, self).as_dict()
        data['terms'] = [
            [scale, term.as_dict() if hasattr(term, 'as_dict') else None]
            for scale, term in self.terms
        ]

        return data

    def _partial(self, alpha, points):
        return sum(scale * np.asarray(term.partial_eval(alpha, points))
                   .reshape(len(points), -1)
                   for scale, term in self.terms)

    def _fourier_partial(self, beta, points):
        return sum(scale * np.asarray(term.fourier_partial_eval(beta, points))
                   .reshape(len(points), -1)
                   for scale, term in self.terms)


class StackedTarget(TargetFunction):
    """A vector-valued target whose outputs are the outputs of its parts."""

    name = 'stacked'

    def __init__(self, targets):
        targets = list(targets)

        if not targets or len(set(t.dim_in for t in targets)) != 1:
            raise InvalidInput('Stacked targets need a common input '
                               'dimension')

        super(StackedTarget, self).__init__(
            targets[0].dim_in, sum(t.dim_out for t in targets))

        self.targets = targets
        self.max_partial_order = min(t.max_partial_order for t in targets)
        self.max_fourier_order = min(t.max_fourier_order for t in targets)

    @property
    def is_zero(self):
        return all(t.is_zero for t in self.targets)

    def as_dict(self):
        data = super(StackedTarget, self).as_dict()
        data['targets'] = [t.as_dict() for t in self.targets]

        return data

    def _partial(self, alpha, points):
        return np.concatenate(
            [t._partial(alpha, points) for t in self.targets], axis=1)

    def _fourier_partial(self, beta, points):
        return np.concatenate(
            [t._fourier_partial(beta, points) for t in self.targets], axis=1)


TARGETS = {
    'gaussian': GaussianTarget,
    'hermite': HermiteGaussianTarget,
    'zero': ZeroTarget,
}


def make_target(name, dim_in, **params):
    """Build a registered target by name.

    Raises:
        ridgekit.activations.errors.InvalidInput:
            The name is unknown or the parameters do not fit it.
    """
    try:
        cls = TARGETS[name]
    except KeyError:
        raise InvalidInput('Unknown target "%s". Choose one of: %s'
                           % (name, ', '.join(sorted(TARGETS))))

    try:
        return cls(dim_in, **params)
    except TypeError as e:
        raise InvalidInput('Invalid parameters for target "%s": %s'
                           % (name, e))
