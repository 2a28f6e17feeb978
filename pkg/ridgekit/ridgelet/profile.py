"""Ridgelet profiles built from a compactly supported Fourier bump.

A profile ψ is defined through its Fourier transform::

    ψ̂(ξ) = exp(-1 / ((ξ - ζ1)(ζ2 - ξ)))   for ζ1 < ξ < ζ2, else 0

and ψ(s) = (1/2π) ∫ ψ̂(ξ) exp(isξ) dξ is tabulated once on a symmetric
lattice, then interpolated.
"""

import functools
import logging

import numpy as np
from numpy.polynomial import Polynomial
from scipy import integrate
from scipy.interpolate import CubicSpline

from ridgekit.errors import InvalidInput
from ridgekit.ridgelet.errors import InvalidSupport
from ridgekit.utils.quadrature import composite_gauss_legendre, gauss_legendre


logger = logging.getLogger(__name__)


#: Radius of the tabulated ψ lattice.
DEFAULT_S_MAX = 200.0

#: Lattice spacing of the ψ table.
DEFAULT_STEP = 0.01

#: Gauss-Legendre nodes on [ζ1, ζ2] for inverse transforms.
DEFAULT_NODES = 256

#: Largest moment order :py:func:`moment` accepts.
MAX_MOMENT_ORDER = 8

#: ψ decays like ``exp(-sqrt(2|s| / (ζ2 - ζ1)))``, which is below the
#: smallest positive double once the root passes this value.
UNDERFLOW_EXPONENT = 745.0

_CHUNK_ROWS = 4096


class RidgeletProfile(object):
    """A ridgelet profile with its ψ table.

    Instances are immutable once built and may be shared between threads.

    Attributes:
        zeta1 (float):
            Lower edge of the Fourier support.

        zeta2 (float):
            Upper edge of the Fourier support.

        s_max (float):
            Radius of the ψ table. ψ is taken as 0 beyond it.

        step (float):
            Lattice spacing of the ψ table.

        lattice (numpy.ndarray):
            The symmetric lattice ``[-s_max, s_max]``.

        psi_table (numpy.ndarray):
            Complex ψ values on :py:attr:`lattice`.
    """

    def __init__(self, zeta1, zeta2, s_max=DEFAULT_S_MAX, step=DEFAULT_STEP,
                 nodes=DEFAULT_NODES):
        if not (0.0 < zeta1 < zeta2) or not np.isfinite(zeta2):
            raise InvalidSupport(zeta1, zeta2)

        if s_max <= 0.0 or step <= 0.0 or step >= s_max:
            raise InvalidInput('The psi table needs 0 < step < s_max')

        self.zeta1 = float(zeta1)
        self.zeta2 = float(zeta2)
        self.s_max = float(s_max)
        self.step = float(step)
        self.nodes = int(nodes)

        xi, weights = gauss_legendre(self.nodes, self.zeta1, self.zeta2)
        self.inverse_nodes = xi
        self.inverse_weights = weights * self.hat_psi(xi) / (2.0 * np.pi)
        self.inverse_nodes.setflags(write=False)
        self.inverse_weights.setflags(write=False)

        self._chains = {}
        self._rules = {1: (self.inverse_nodes, self.inverse_weights)}
        self._tabulate()

    @property
    def support(self):
        return (self.zeta1, self.zeta2)

    @property
    def width(self):
        return self.zeta2 - self.zeta1

    @property
    def underflow_radius(self):
        """The |s| past which ψ underflows to 0 in double precision."""
        return 0.5 * UNDERFLOW_EXPONENT ** 2 * self.width

    def hat_psi(self, xi):
        """Return ψ̂ at ``xi``. Values are real, non-negative and 0 outside
        the support.
        """
        xi = np.asarray(xi, dtype=float)
        out = np.zeros_like(xi)
        inside = (xi > self.zeta1) & (xi < self.zeta2)
        x = xi[inside]
        out[inside] = np.exp(-1.0 / ((x - self.zeta1) * (self.zeta2 - x)))

        return out

    def inverse_rule(self, panels=1):
        """Return nodes on ``[ζ1, ζ2]`` and weights including ``ψ̂/2π``.

        The rule has ``panels`` Gauss-Legendre panels of :py:attr:`nodes`
        points each. It resolves the phase ``exp(isξ)`` for
        ``|s|·(ζ2 - ζ1) ≤ panels·s_max``.
        """
        panels = int(panels)

        if panels not in self._rules:
            xi, weights = composite_gauss_legendre(self.zeta1, self.zeta2,
                                                   panels, self.nodes)
            weights = weights * self.hat_psi(xi) / (2.0 * np.pi)
            xi.setflags(write=False)
            weights.setflags(write=False)
            self._rules[panels] = (xi, weights)

        return self._rules[panels]

    def rule_panels(self, s):
        """Return the panel count :py:meth:`inverse_rule` needs at each s."""
        s = np.minimum(np.abs(np.asarray(s, dtype=float)),
                       self.underflow_radius)
        panels = np.ceil(s * self.width / self.s_max)

        return np.maximum(panels, 1).astype(int)

    def psi_exact(self, s):
        """Return ψ(s) by Gauss-Legendre quadrature of the inverse transform.

        This is an exponential sum, so it is analytic in ``s`` and suited to
        high-order quadrature. Large ``|s|`` gets more panels. Past
        :py:attr:`underflow_radius` the value is 0.
        """
        s = np.asarray(s, dtype=float)
        flat = s.ravel()
        out = np.zeros(flat.shape, dtype=complex)
        panels = self.rule_panels(flat)
        inside = np.abs(flat) <= self.underflow_radius

        for count in np.unique(panels[inside]):
            index = np.flatnonzero(inside & (panels == count))
            xi, weights = self.inverse_rule(count)
            rows = max(1, _CHUNK_ROWS // int(count))

            for start in range(0, len(index), rows):
                chunk = index[start:start + rows]
                phase = np.exp(1j * np.outer(flat[chunk], xi))
                out[chunk] = phase @ weights

        return out.reshape(s.shape)

    def psi(self, s):
        """Return ψ(s) interpolated from the table, 0 for ``|s| > s_max``.
        """
        s = np.asarray(s, dtype=float)
        out = self._spline_re(s) + 1j * self._spline_im(s)

        return np.where(np.abs(s) <= self.s_max, out, 0.0)

    def hat_psi_derivative(self, j, xi):
        """Return the ``j``-th derivative of ψ̂ at ``xi``.

        On the support, ψ̂^(j) = P_j(ξ) / q(ξ)^(2j) · exp(-1/q(ξ)) with
        ``q = (ξ - ζ1)(ζ2 - ξ)`` and polynomials P_j built recursively.
        """
        xi = np.asarray(xi, dtype=float)
        out = np.zeros_like(xi)
        inside = (xi > self.zeta1) & (xi < self.zeta2)
        x = xi[inside]
        q_poly = self._q_polynomial()
        q = q_poly(x)

        with np.errstate(over='ignore', under='ignore', invalid='ignore'):
            scale = np.exp(-1.0 / q - 2.0 * j * np.log(q))
            values = self._derivative_numerator(j)(x) * scale

        out[inside] = np.nan_to_num(values, nan=0.0, posinf=0.0,
                                    neginf=0.0)

        return out

    def hat_psi_derivative_l1(self, j, panels=64, order=16):
        """Return ∫ |ψ̂^(j)(ξ)| dξ by composite Gauss-Legendre quadrature."""
        xi, weights = composite_gauss_legendre(self.zeta1, self.zeta2,
                                               panels, order)

        return float(np.sum(weights * np.abs(self.hat_psi_derivative(j, xi))))

    def _q_polynomial(self):
        return (Polynomial([-self.zeta1, 1.0]) *
                Polynomial([self.zeta2, -1.0]))

    def _derivative_numerator(self, j):
        if j not in self._chains:
            if j == 0:
                self._chains[j] = Polynomial([1.0])
            else:
                prev = self._derivative_numerator(j - 1)
                q = self._q_polynomial()
                dq = q.deriv()
                self._chains[j] = (prev.deriv() * q * q -
                                   2 * (j - 1) * q * dq * prev +
                                   dq * prev)

        return self._chains[j]

    def _tabulate(self):
        count = int(round(self.s_max / self.step))
        half = np.arange(count + 1) * self.step
        values = self.psi_exact(half)

        # ψ(-s) = conj(ψ(s)) because ψ̂ is real.
        self.lattice = np.concatenate([-half[:0:-1], half])
        self.psi_table = np.concatenate([np.conj(values[:0:-1]), values])
        self.lattice.setflags(write=False)
        self.psi_table.setflags(write=False)

        self._spline_re = CubicSpline(self.lattice, self.psi_table.real)
        self._spline_im = CubicSpline(self.lattice, self.psi_table.imag)

        logger.debug('Tabulated psi for support [%g, %g] on %d points',
                     self.zeta1, self.zeta2, len(self.lattice))

    def __repr__(self):
        return '<RidgeletProfile [%g, %g]>' % (self.zeta1, self.zeta2)


@functools.lru_cache(maxsize=16)
def build_profile(zeta1=1.0, zeta2=2.0, s_max=DEFAULT_S_MAX,
                  step=DEFAULT_STEP, nodes=DEFAULT_NODES):
    """Build (or reuse) the profile with Fourier support ``[zeta1, zeta2]``.

    Args:
        zeta1 (float, optional):
            Lower support edge. Must be positive.

        zeta2 (float, optional):
            Upper support edge. Must exceed ``zeta1``.

        s_max (float, optional):
            Radius of the ψ table.

        step (float, optional):
            Spacing of the ψ table.

        nodes (int, optional):
            Gauss-Legendre nodes for the inverse transform.

    Returns:
        RidgeletProfile:
        The profile.

    Raises:
        ridgekit.ridgelet.errors.InvalidSupport:
            The support is not an interval in (0, ∞).
    """
    return RidgeletProfile(float(zeta1), float(zeta2), s_max=s_max,
                           step=step, nodes=nodes)


def moment(profile, j, taper=False):
    """Return ``|∫ s^j ψ(s) ds|`` over ``[-s_max, s_max]`` on the ψ table.

    The integral is a trapezoid sum over the table lattice. ψ decays only
    like ``exp(-sqrt(2|s|))``, so for ``j ≥ 3`` the plain truncated sum is
    dominated by the oscillating tail at ``s_max``. With ``taper`` set the
    integrand is damped by ``exp(-s²/(2R²))`` with ``R = s_max / 20``,
    whose Fourier transform is too narrow to reach the support of ψ̂.

    Raises:
        ridgekit.activations.errors.InvalidInput:
            ``j`` is outside ``0..8``.
    """
    if int(j) != j or not 0 <= j <= MAX_MOMENT_ORDER:
        raise InvalidInput('Moment order must be an integer in 0..%d, got %r'
                           % (MAX_MOMENT_ORDER, j))

    s = profile.lattice
    integrand = s ** int(j) * profile.psi_table

    if taper:
        width = profile.s_max / 20.0
        integrand = integrand * np.exp(-0.5 * (s / width) ** 2)

    return float(abs(integrate.trapezoid(integrand, s)))
