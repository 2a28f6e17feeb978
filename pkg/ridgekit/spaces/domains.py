"""Integration domains and product weights."""

import functools
import math

import numpy as np
from scipy import integrate, stats

from ridgekit.spaces.errors import (DivergentWeight, InvalidDomain,
                                     InvalidWeight)


#: Tolerance on the total mass of a one-dimensional weight.
MASS_TOLERANCE = 1e-8

#: Relative change under truncation doubling that signals divergence.
DIVERGENCE_RTOL = 1e-6


class Domain(object):
    """A box, or all of ℝ^m truncated to a finite box for quadrature.

    Attributes:
        kind (str):
            ``'box'`` or ``'full'``.

        bounds (list of tuple):
            One ``(lo, hi)`` pair per axis.

        radius (float):
            The truncation radius for ``'full'`` domains, else ``None``.
    """

    def __init__(self, kind, bounds, radius=None):
        if kind not in ('box', 'full'):
            raise InvalidDomain('Unknown domain kind "%s"' % kind)

        bounds = [(float(lo), float(hi)) for lo, hi in bounds]

        if not bounds:
            raise InvalidDomain('A domain needs at least one axis')

        for lo, hi in bounds:
            if not (np.isfinite(lo) and np.isfinite(hi) and lo < hi):
                raise InvalidDomain('Invalid domain interval [%g, %g]'
                                    % (lo, hi))

        self.kind = kind
        self.bounds = bounds
        self.radius = radius

    @classmethod
    def box(cls, bounds):
        return cls('box', bounds)

    @classmethod
    def full_space(cls, dim, radius=8.0):
        if radius <= 0.0:
            raise InvalidDomain('Truncation radius must be positive')

        return cls('full', [(-radius, radius)] * int(dim), radius=radius)

    @property
    def dim(self):
        return len(self.bounds)

    def widened(self):
        """Return the domain with its truncation radius doubled."""
        if self.kind == 'box':
            return self

        return Domain.full_space(self.dim, 2.0 * self.radius)

    def as_dict(self):
        return {
            'kind': self.kind,
            'bounds': [list(pair) for pair in self.bounds],
            'radius': self.radius,
        }

    def __repr__(self):
        if self.kind == 'full':
            return '<Domain R^%d |u_l| <= %g>' % (self.dim, self.radius)

        return '<Domain box %s>' % self.bounds


class _BaseDensity(object):
    name = None
    support = (-math.inf, math.inf)

    #: Half-width of the region holding essentially all of the mass.
    radius = math.inf

    def __call__(self, x):
        raise NotImplementedError


class _GaussianDensity(_BaseDensity):
    name = 'gaussian'
    radius = 40.0

    def __call__(self, x):
        return stats.norm.pdf(x)


class _LaplaceDensity(_BaseDensity):
    name = 'laplace'
    radius = 800.0

    def __call__(self, x):
        return stats.laplace.pdf(x)


class _CauchyDensity(_BaseDensity):
    name = 'cauchy'
    radius = 1e6

    def __call__(self, x):
        return stats.cauchy.pdf(x)


class _UniformDensity(_BaseDensity):
    name = 'uniform'

    def __init__(self, lo=0.0, hi=1.0):
        if not lo < hi:
            raise InvalidWeight('Uniform weight needs lo < hi')

        self.support = (float(lo), float(hi))
        self.radius = max(abs(lo), abs(hi))

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        lo, hi = self.support

        return np.where((x >= lo) & (x <= hi), 1.0 / (hi - lo), 0.0)


DENSITIES = {
    'gaussian': _GaussianDensity,
    'laplace': _LaplaceDensity,
    'cauchy': _CauchyDensity,
    'uniform': _UniformDensity,
}


def _line_integral(w0, power, radius):
    """Return ∫ (1 + |x|)^power w0(x) dx over ``|x| ≤ radius``.

    The range is split at 0 so each piece has a monotone tail. An infinite
    radius integrates over the whole support.
    """
    lo = max(w0.support[0], -radius)
    hi = min(w0.support[1], radius)
    pieces = [(lo, hi)]

    if lo < 0.0 < hi:
        pieces = [(lo, 0.0), (0.0, hi)]

    total = 0.0

    for a, b in pieces:
        value, _ = integrate.quad(
            lambda x: (1.0 + abs(x)) ** power * w0(x), a, b,
            epsabs=1e-13, epsrel=1e-11, limit=400)
        total += value

    return total


class WeightSpec(object):
    """A product weight ``w(u) = Π w0(u_l)`` with growth data ``(γ, p)``.

    Attributes:
        w0 (object):
            The one-dimensional density.

        gamma (float):
            The growth exponent γ ≥ 0.

        p (float):
            The integrability exponent p ≥ 1.
    """

    def __init__(self, w0='gaussian', gamma=0.0, p=2.0, **params):
        try:
            density_cls = DENSITIES[w0]
        except KeyError:
            raise InvalidWeight('Unknown weight "%s". Choose one of: %s'
                                % (w0, ', '.join(sorted(DENSITIES))))

        if gamma < 0.0:
            raise InvalidWeight('Weight exponent gamma must be >= 0')

        if p < 1.0:
            raise InvalidWeight('Integrability exponent p must be >= 1')

        self.w0 = density_cls(**params)
        self.params = params
        self.gamma = float(gamma)
        self.p = float(p)

        mass = _line_integral(self.w0, 0.0, math.inf)

        if abs(mass - 1.0) > MASS_TOLERANCE:
            raise InvalidWeight('The %s weight has mass %.12g, not 1'
                                % (self.w0.name, mass))

    @property
    def name(self):
        return self.w0.name

    def __call__(self, points):
        """Return ``w`` at points shaped ``(n, m)``."""
        points = np.atleast_2d(points)

        return np.prod(self.w0(points), axis=1)

    def with_exponents(self, gamma=None, p=None):
        """Return a copy with a different γ or p."""
        return WeightSpec(self.w0.name,
                          gamma=self.gamma if gamma is None else gamma,
                          p=self.p if p is None else p,
                          **self.params)

    def line_constant(self):
        """Return ``C_{ℝ,w0} = (∫ (1 + |x|)^(γp) w0(x) dx)^(1/p)``.

        Raises:
            ridgekit.spaces.errors.DivergentWeight:
                The integral keeps growing when its range is doubled.
        """
        return _cached_line_constant(self.w0.name,
                                     tuple(sorted(self.params.items())),
                                     self.gamma, self.p)

    def as_dict(self):
        data = {
            'w0': self.w0.name,
            'gamma': self.gamma,
            'p': self.p,
        }
        data.update(self.params)

        return data

    def __repr__(self):
        return '<WeightSpec %s gamma=%g p=%g>' % (self.w0.name, self.gamma,
                                                  self.p)


@functools.lru_cache(maxsize=64)
def _cached_line_constant(name, params, gamma, p):
    w0 = DENSITIES[name](**dict(params))
    power = gamma * p
    value = _line_integral(w0, power, w0.radius)

    if math.isfinite(w0.radius) and w0.support == (-math.inf, math.inf):
        wider = _line_integral(w0, power, 2.0 * w0.radius)

        if abs(wider - value) > DIVERGENCE_RTOL * abs(wider):
            raise DivergentWeight(
                'The weight constant of %s with gamma*p=%g diverges '
                '(%.6g at radius %g, %.6g at radius %g)'
                % (name, power, value, w0.radius, wider, 2.0 * w0.radius))

    return value ** (1.0 / p)
