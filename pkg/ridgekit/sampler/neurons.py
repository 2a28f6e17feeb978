"""Randomized neurons, sampled networks and the second-moment audit.

A randomized neuron is ``R(u) = y ρ(aᵀu - b)`` with ``a ~ t_m``,
``b ~ t_1`` and the readout::

    y = Re(𝔯g(a, b) / (C_m ‖a‖ p_a(a) p_b(b)))

Its expectation is ``g(u)``. Readouts are not clipped, so they inherit the
heavy tails of ``1 / (p_a p_b)``.
"""

import logging
import math

import numpy as np

from ridgekit.activations.catalog import growth_norm
from ridgekit.errors import InvalidInput
from ridgekit.network.network import Network
from ridgekit.ridgelet.transform import ridgelet_coefficient
from ridgekit.sampler.student_t import StudentTSampler, student_t_pdf
from ridgekit.spaces.barron import barron_norm_estimate
from ridgekit.spaces.norms import DEFAULT_SOBOLEV_NODES, weight_constant
from ridgekit.spaces.targets import multi_indices
from ridgekit.utils.parallel import ordered_map, pairwise_sum
from ridgekit.utils.quadrature import tensor_rule


logger = logging.getLogger(__name__)


#: Neurons per block in the audit.
AUDIT_BLOCK = 1024

#: Standard errors of slack granted to the audit estimate.
AUDIT_SIGMAS = 3.0


class NeuronDraw(object):
    """One randomized neuron.

    Attributes:
        a (numpy.ndarray):
            The direction, of length ``m``.

        b (float):
            The bias.

        y (numpy.ndarray):
            The real readout, of length ``d``.
    """

    def __init__(self, a, b, y):
        self.a = a
        self.b = b
        self.y = y

    def __repr__(self):
        return '<NeuronDraw a=%s b=%g y=%s>' % (self.a.tolist(), self.b,
                                                self.y.tolist())


def neuron_readouts(pair, g, A, B, workers=None):
    """Return the readouts for directions ``A`` and biases ``B``.

    Returns:
        numpy.ndarray:
        Real readouts shaped ``(n, d)``.
    """
    A = np.atleast_2d(A)

    if getattr(g, 'is_zero', False):
        return np.zeros((len(A), g.dim_out))

    coefficients = ridgelet_coefficient(pair.profile, g, A, B,
                                        divide_norm=True, workers=workers)
    density = student_t_pdf(pair.m, A) * student_t_pdf(1, B)

    return np.real(coefficients / (pair.constant * density[:, None]))


def draw_neuron(pair, g, sampler):
    """Draw the next ``(a, b)`` from ``sampler`` and compute its readout."""
    A, B = sampler.take(1)
    y = neuron_readouts(pair, g, A, B, workers=1)

    return NeuronDraw(A[0], float(B[0]), y[0])


def build_network(pair, g, N, sampler, workers=None):
    """Return ``φ_N = (1/N) Σ R_n`` as a network.

    The ``1/N`` average is folded into the readouts.

    Args:
        pair (ridgekit.ridgelet.admissibility.AdmissiblePair):
            The profile, activation and admissibility constant.

        g (ridgekit.spaces.targets.TargetFunction):
            The target.

        N (int):
            The neuron count.

        sampler (ridgekit.sampler.student_t.StudentTSampler):
            The draw stream. ``N`` draws are consumed.

        workers (int, optional):
            Worker count.

    Returns:
        ridgekit.network.network.Network:
        The sampled network.
    """
    if int(N) != N or N < 1:
        raise InvalidInput('Neuron count must be a positive integer, got %r'
                           % (N,))

    N = int(N)
    A, B = sampler.take(N, workers=workers)
    readouts = neuron_readouts(pair, g, A, B, workers=workers)

    logger.debug('Sampled %d neurons for %s (seed %d)', N,
                 pair.activation.name, sampler.seed)

    return Network(pair.activation, readouts / N, A, B)


def _neuron_norms(activation, readouts, A, B, points, weights, k, p):
    pre = A @ points.T - B[:, None]
    m = A.shape[1]
    total = np.zeros(len(A))
    magnitudes = np.abs(A) ** p

    for order in range(k + 1):
        integral = np.abs(activation.deriv_eval(order, pre)) ** p @ weights
        factor = sum(np.prod(magnitudes ** np.asarray(alpha), axis=1)
                     for alpha in multi_indices(m, order)
                     if sum(alpha) == order)
        total += integral * factor

    return np.linalg.norm(readouts, axis=1) ** p * total


class AuditResult(object):
    """The outcome of :py:func:`second_moment_audit`.

    Attributes:
        estimate (float):
            Monte-Carlo value of ``E[‖R‖²]^(1/2)`` in ``W^{k,p}(U, w)``.

        bound (float):
            The explicit upper bound.

        standard_error (float):
            Standard error of :py:attr:`estimate`.

        passed (bool):
            Whether the estimate minus three standard errors is within the
            bound.

        max_share (float):
            The largest single draw's share of the Monte-Carlo sum. Values
            near 1 flag a run dominated by one extreme draw.

        components (dict):
            The factors of the bound.
    """

    def __init__(self, estimate, bound, standard_error, max_share,
                 components=None):
        self.estimate = estimate
        self.bound = bound
        self.standard_error = standard_error
        self.max_share = max_share
        self.components = components or {}
        self.passed = estimate - AUDIT_SIGMAS * standard_error <= bound

    def as_dict(self):
        return {
            'estimate': self.estimate,
            'bound': self.bound,
            'standard_error': self.standard_error,
            'max_share': self.max_share,
            'passed': self.passed,
            'components': self.components,
        }


def second_moment_bound(pair, g, w, U, k, p):
    """Return the explicit bound on ``E[‖R‖²]^(1/2)`` and its factors.

    The bound is ``2^(4+1/p) π ‖ρ‖_{C^k_{pol,γ}} C_{U,w} m^(k/p)
    π^((m+1)/4) / (|C_m| Γ((m+1)/2)^(1/2)) · ‖g‖``, where ``‖g‖`` is the
    representative-based Barron estimate.
    """
    m = pair.m
    w = w.with_exponents(p=p)
    components = {
        'rho_norm': growth_norm(pair.activation, k, w.gamma),
        'weight_constant': weight_constant(U, w),
        'admissibility_modulus': abs(pair.constant),
        'barron': barron_norm_estimate(pair.profile, g, k, w.gamma),
    }

    bound = (2.0 ** (4.0 + 1.0 / p) * math.pi *
             components['rho_norm'] * components['weight_constant'] *
             float(m) ** (k / p) * math.pi ** (0.25 * (m + 1)) /
             (components['admissibility_modulus'] *
              math.sqrt(math.gamma(0.5 * (m + 1)))) *
             components['barron'])

    return bound, components


def second_moment_audit(pair, g, w, U, k, p, n_samples, sampler=None,
                        nodes=None, workers=None):
    """Compare the Monte-Carlo second moment of a neuron with its bound.

    Args:
        pair (ridgekit.ridgelet.admissibility.AdmissiblePair):
            The admissible pair.

        g (ridgekit.spaces.targets.TargetFunction):
            The target.

        w (ridgekit.spaces.domains.WeightSpec):
            The weight. Its γ is used, its p is replaced by ``p``.

        U (ridgekit.spaces.domains.Domain):
            The domain.

        k (int):
            The Sobolev order.

        p (float):
            The integrability exponent.

        n_samples (int):
            Number of neurons drawn.

        sampler (ridgekit.sampler.student_t.StudentTSampler, optional):
            The draw stream. Defaults to seed 0.

        nodes (int, optional):
            Gauss-Legendre nodes per axis for the norms.

        workers (int, optional):
            Worker count.

    Returns:
        AuditResult:
        The estimate, bound and diagnostics.
    """
    if n_samples < 2:
        raise InvalidInput('The audit needs at least 2 samples')

    pair.activation.check_order(k)

    if getattr(g, 'is_zero', False):
        return AuditResult(0.0, 0.0, 0.0, 0.0)

    if sampler is None:
        sampler = StudentTSampler(pair.m)

    bound, components = second_moment_bound(pair, g, w, U, k, p)

    A, B = sampler.take(n_samples, workers=workers)
    readouts = neuron_readouts(pair, g, A, B, workers=workers)
    points, weights = tensor_rule(U.bounds, nodes or DEFAULT_SOBOLEV_NODES)
    weights = weights * w(points)

    def norms_block(start):
        stop = start + AUDIT_BLOCK
        powered = _neuron_norms(pair.activation, readouts[start:stop],
                                A[start:stop], B[start:stop], points,
                                weights, int(k), p)

        return powered ** (2.0 / p)

    squared = np.concatenate(ordered_map(
        norms_block, range(0, n_samples, AUDIT_BLOCK), workers=workers))
    total = pairwise_sum(squared)
    mean = total / n_samples
    estimate = math.sqrt(mean)

    if estimate > 0.0:
        spread = np.std(squared, ddof=1) / math.sqrt(n_samples)
        standard_error = float(spread / (2.0 * estimate))
        max_share = float(np.max(squared) / total)
    else:
        standard_error = 0.0
        max_share = 0.0

    logger.debug('Second-moment audit: estimate %.6g (se %.3g), bound '
                 '%.6g, largest draw share %.3g',
                 estimate, standard_error, bound, max_share)

    return AuditResult(estimate, bound, standard_error, max_share,
                       components)
