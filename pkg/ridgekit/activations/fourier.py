"""Numeric verification of the distributional Fourier identities.

For a test function g with compact support away from the origin, the
Fourier transform of the activation acts on g through its density::

    ∫ ρ(s) ĝ(s) ds = ∫ f(ξ) g(ξ) dξ

:py:func:`pairing_check` evaluates both sides by independent quadrature
routes and reports their relative defect.
"""

import logging

import numpy as np

from ridgekit.activations.catalog import get_activation
from ridgekit.activations.errors import InvalidInput, InvalidTestFunction
from ridgekit.utils.quadrature import (composite_gauss_legendre,
                                       fourier_integral, quad_complex)


logger = logging.getLogger(__name__)


class PairingQuadrature(object):
    """Quadrature parameters for :py:func:`pairing_check`.

    Attributes:
        frequency_cutoff (float):
            The ``s``-integral on the activation side runs over
            ``|s| ≤ frequency_cutoff``. Transforms of width-one bumps decay
            like ``exp(-sqrt(2 s))``, which is negligible here.

        panel_width (float):
            Width of each Gauss-Legendre panel in ``s``.

        panel_order (int):
            Nodes per panel.

        epsabs (float):
            Absolute tolerance of the adaptive integrals, both for the test
            function transforms and for the density side.
    """

    def __init__(self, frequency_cutoff=200.0, panel_width=1.0,
                 panel_order=10, epsabs=1e-12):
        if frequency_cutoff <= 0 or panel_width <= 0 or panel_order < 2:
            raise InvalidInput('Pairing quadrature parameters must be '
                               'positive')

        self.frequency_cutoff = float(frequency_cutoff)
        self.panel_width = float(panel_width)
        self.panel_order = int(panel_order)
        self.epsabs = float(epsabs)

    @property
    def key(self):
        return (self.frequency_cutoff, self.panel_width, self.panel_order,
                self.epsabs)

    def nodes(self):
        """Return the half-line rule on ``(0, frequency_cutoff)``."""
        panels = int(np.ceil(self.frequency_cutoff / self.panel_width))

        return composite_gauss_legendre(0.0, panels * self.panel_width,
                                        panels, self.panel_order)


class BumpTestFunction(object):
    """A real smooth test function with compact support.

    The function is ``amplitude * (ξ - center)^degree *
    exp(-1 / ((ξ - lo)(hi - ξ)))`` on ``(lo, hi)`` and 0 elsewhere.

    Transforms computed by :py:meth:`fourier_on` are memoized per
    quadrature setting, so one instance can be checked against every
    activation at the cost of a single transform.
    """

    def __init__(self, lo, hi, degree=0, center=None, amplitude=1.0):
        if not lo < hi:
            raise InvalidTestFunction('Test function support [%g, %g] is '
                                      'empty' % (lo, hi))

        if lo <= 0.0 <= hi:
            raise InvalidTestFunction(
                'Test function support [%g, %g] touches the origin'
                % (lo, hi))

        self.lo = float(lo)
        self.hi = float(hi)
        self.degree = int(degree)

        if center is None:
            center = 0.5 * (self.lo + self.hi)

        self.center = float(center)
        self.amplitude = float(amplitude)
        self._fourier_cache = {}
        self._premultiplied = None

    @property
    def support(self):
        return (self.lo, self.hi)

    @property
    def label(self):
        label = 'bump[%g,%g]' % (self.lo, self.hi)

        if self.degree:
            label += '*(x-%g)^%d' % (self.center, self.degree)

        if self.amplitude == 0.0:
            label = 'zero'

        return label

    def __call__(self, xi):
        xi = np.asarray(xi, dtype=float)
        out = np.zeros_like(xi)
        inside = (xi > self.lo) & (xi < self.hi)
        x = xi[inside]

        out[inside] = (self.amplitude *
                       (x - self.center) ** self.degree *
                       np.exp(-1.0 / ((x - self.lo) * (self.hi - x))))

        return out

    def premultiplied(self):
        """Return the test function ``ξ ↦ ξ·g(ξ)``."""
        if self._premultiplied is None:
            self._premultiplied = PremultipliedTestFunction(self)

        return self._premultiplied

    def fourier_on(self, quad):
        """Return ``ĝ`` on the positive nodes of ``quad``.

        Returns:
            tuple:
            A 3-tuple of ``(nodes, weights, transform)``.
        """
        if quad.key not in self._fourier_cache:
            nodes, weights = quad.nodes()

            if self.amplitude == 0.0:
                values = np.zeros(len(nodes), dtype=complex)
            else:
                values = np.array([
                    fourier_integral(self, self.lo, self.hi, s,
                                     epsabs=quad.epsabs)
                    for s in nodes
                ])

            logger.debug('Transformed %s on %d nodes', self.label,
                         len(nodes))
            self._fourier_cache[quad.key] = (nodes, weights, values)

        return self._fourier_cache[quad.key]


class PremultipliedTestFunction(BumpTestFunction):
    """The product ``ξ·g(ξ)`` for a bump ``g``."""

    def __init__(self, base):
        super(PremultipliedTestFunction, self).__init__(
            base.lo, base.hi, degree=base.degree, center=base.center,
            amplitude=base.amplitude)
        self.base = base

    @property
    def label(self):
        return 'x*%s' % self.base.label

    def __call__(self, xi):
        return np.asarray(xi, dtype=float) * self.base(xi)

    def premultiplied(self):
        raise InvalidInput('Test functions are premultiplied at most once')


def zero_test_function():
    """Return the zero test function."""
    return BumpTestFunction(1.0, 2.0, amplitude=0.0)


def default_test_functions():
    """Return the test functions used by the CLI and the test suite."""
    return [
        BumpTestFunction(1.0, 2.0),
        BumpTestFunction(-2.0, -1.0),
        BumpTestFunction(0.5, 1.5, degree=1, center=0.8),
    ]


def bump_family(lo, hi):
    """Return bumps of degree 0, 1 and 2 supported on ``[lo, hi]``.

    Raises:
        ridgekit.activations.errors.InvalidTestFunction:
            The interval is empty or contains the origin.
    """
    center = 0.5 * (lo + hi)

    return [
        BumpTestFunction(lo, hi),
        BumpTestFunction(lo, hi, degree=1, center=lo),
        BumpTestFunction(lo, hi, degree=2, center=center),
    ]


def pairing_sides(spec, test_fn, quad=None):
    """Return both sides of the distributional identity.

    Returns:
        tuple:
        A 2-tuple ``(activation_side, density_side)`` of complex numbers.
    """
    spec = get_activation(spec)

    if quad is None:
        quad = PairingQuadrature()

    if spec.premultiply_pairing:
        test_fn = test_fn.premultiplied()

    # g is real, so ĝ(-s) is the conjugate of ĝ(s).
    nodes, weights, transform = test_fn.fourier_on(quad)
    activation_side = np.sum(
        weights * (spec(nodes) * transform +
                   spec(-nodes) * np.conj(transform)))

    if test_fn.amplitude == 0.0:
        density_side = 0j
    else:
        density_side, _ = quad_complex(
            lambda xi: spec.fourier_density(xi) * test_fn(xi),
            test_fn.lo, test_fn.hi, epsabs=quad.epsabs, epsrel=1e-12)

    return complex(activation_side), density_side


def pairing_check(spec, test_fn, quad=None):
    """Return the relative defect of the distributional Fourier identity.

    Args:
        spec (ridgekit.activations.catalog.ActivationSpec or str):
            The activation.

        test_fn (BumpTestFunction):
            A real test function supported away from the origin. Softplus
            and ReLU are checked on ``ξ·g``.

        quad (PairingQuadrature, optional):
            Quadrature parameters.

    Returns:
        float:
        ``|lhs - rhs| / (1 + |rhs|)``.
    """
    lhs, rhs = pairing_sides(spec, test_fn, quad)
    residual = abs(lhs - rhs) / (1.0 + abs(rhs))

    logger.debug('Pairing %s / %s: lhs=%r rhs=%r residual=%.3g',
                 get_activation(spec).name, test_fn.label, lhs, rhs,
                 residual)

    return residual
