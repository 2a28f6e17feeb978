"""Approximation-rate formulas: slope fits, the rate bound and the
neuron-count planner.
"""

import math

import numpy as np

from ridgekit.errors import InvalidInput
from ridgekit.harness.errors import InvalidExponent


#: Keys :py:func:`rate_bound_rhs` expects.
RATE_COMPONENTS = ('Cp', 'rho_norm', 'C_weight', 'm', 'k', 'p',
                   'C_adm_modulus', 'barron', 'N')

#: Relative slack under which a planned count is rounded to an integer.
PLAN_ROUNDING = 1e-9


def rate_exponent(p):
    """Return ``1 - 1/min(2, p)``, the guaranteed decay exponent in N."""
    return 1.0 - 1.0 / min(2.0, float(p))


def fit_loglog_slope(points):
    """Return the least-squares slope of ``log(error)`` against ``log(N)``.

    Args:
        points (list of tuple):
            ``(N, error)`` pairs.

    Raises:
        ridgekit.errors.InvalidInput:
            There are fewer than two points, or a value is not positive.
    """
    points = list(points)

    if len(points) < 2:
        raise InvalidInput('A slope fit needs at least 2 points, got %d'
                           % len(points))

    N = np.array([n for n, _ in points], dtype=float)
    errors = np.array([error for _, error in points], dtype=float)

    if np.any(N <= 0.0) or np.any(errors <= 0.0) or \
       not np.all(np.isfinite(errors)):
        raise InvalidInput('Slope fits need positive neuron counts and '
                           'errors')

    if len(set(N.tolist())) < 2:
        raise InvalidInput('A slope fit needs at least 2 distinct N')

    slope, _ = np.polyfit(np.log(N), np.log(errors), 1)

    return float(slope)


def rate_bound_rhs(components):
    """Return the rate bound for ``N`` neurons.

    This is ``C_p ‖ρ‖ C_{U,w} m^(k/p) π^((m+1)/4) / (|C_m| Γ((m+1)/2)^(1/2))
    · ‖f‖ / N^(1 - 1/min(2,p))``.

    Args:
        components (dict):
            Values for every key in :py:data:`RATE_COMPONENTS`.

    Raises:
        ridgekit.errors.InvalidInput:
            A component is missing or not positive.
    """
    missing = [key for key in RATE_COMPONENTS if key not in components]

    if missing:
        raise InvalidInput('Missing rate components: %s'
                           % ', '.join(missing))

    values = dict((key, float(components[key])) for key in RATE_COMPONENTS)

    for key, value in values.items():
        if key == 'k':
            valid = value >= 0.0
        elif key == 'p':
            valid = value >= 1.0
        else:
            valid = value > 0.0

        if not valid or not math.isfinite(value):
            raise InvalidInput('Rate component %s must be positive, got %r'
                               % (key, components[key]))

    m = values['m']
    p = values['p']

    return (values['Cp'] * values['rho_norm'] * values['C_weight'] *
            m ** (values['k'] / p) * math.pi ** (0.25 * (m + 1.0)) /
            (values['C_adm_modulus'] * math.sqrt(math.gamma(0.5 * (m + 1.0))))
            * values['barron'] / values['N'] ** rate_exponent(p))


def plan_neurons(C2, C3, m, p, eps):
    """Return ``⌈C2 m^C3 ε^(-q/(q-1))⌉`` with ``q = min(2, p)``.

    Values within a relative 1e-9 of an integer are taken as that integer.

    Raises:
        ridgekit.harness.errors.InvalidExponent:
            ``p ≤ 1``.

        ridgekit.errors.InvalidInput:
            ``C2``, ``m`` or ``eps`` is not positive, or ``C3`` is negative.
    """
    if p <= 1.0:
        raise InvalidExponent('The neuron count diverges for p=%g; p must '
                              'exceed 1' % p)

    if C2 <= 0.0 or C3 < 0.0 or m < 1 or eps <= 0.0:
        raise InvalidInput('plan_neurons needs C2 > 0, C3 >= 0, m >= 1 and '
                           'eps > 0')

    q = min(2.0, float(p))
    value = C2 * float(m) ** C3 * float(eps) ** (-q / (q - 1.0))
    nearest = round(value)

    if nearest >= 1 and abs(value - nearest) <= PLAN_ROUNDING * value:
        return int(nearest)

    return int(math.ceil(value))


def calibrate_rate_constant(rows, components):
    """Return ``C_p`` as the largest error-to-bound ratio at the smallest N.

    Args:
        rows (list of tuple):
            ``(N, error)`` pairs, possibly several per N.

        components (dict):
            Every rate component except ``Cp`` and ``N``.

    Returns:
        float:
        The calibrated constant, or 0 when every error at the smallest N
        vanishes.
    """
    rows = list(rows)

    if not rows:
        raise InvalidInput('Calibration needs at least one row')

    smallest = min(n for n, _ in rows)
    unit = dict(components, Cp=1.0, N=smallest)
    reference = rate_bound_rhs(unit)

    return max(error for n, error in rows if n == smallest) / reference
