"""Reproducible draws from the multivariate Student t law with ν = 1.

The density on ℝ^m is::

    p(a) = Γ((m+1)/2) / π^((m+1)/2) · (1 + ‖a‖²)^(-(m+1)/2)

A draw is a standard Gaussian vector divided by the absolute value of an
independent standard Gaussian scalar.

Draws are organised in blocks. Block ``i`` is generated from
``SeedSequence(seed, spawn_key=(i,))`` in a fixed order (direction
numerators, direction denominators, bias numerators, bias denominators), so
draw ``n`` depends only on the seed and ``n``, never on how the blocks were
scheduled.
"""

import logging
import math

import numpy as np
from scipy import special

from ridgekit.errors import InvalidInput
from ridgekit.utils.parallel import ordered_map


logger = logging.getLogger(__name__)


#: Draws per block.
DEFAULT_BLOCK_SIZE = 4096


def student_t_pdf(m, a):
    """Return the ν = 1 Student t density on ℝ^m at ``a``.

    Args:
        m (int):
            The dimension.

        a (float or numpy.ndarray):
            One point (a scalar or a length-``m`` vector) or points shaped
            ``(n, m)``. For ``m = 1`` a flat array is a list of points.

    Returns:
        float or numpy.ndarray:
        The density values.
    """
    if int(m) != m or m < 1:
        raise InvalidInput('Student t dimension must be a positive integer, '
                           'got %r' % (m,))

    a = np.asarray(a, dtype=float)

    if m == 1:
        squared = a ** 2

        if squared.ndim == 2:
            squared = squared[:, 0]
    else:
        squared = np.sum(a ** 2, axis=-1)

    half = 0.5 * (m + 1)
    log_norm = special.gammaln(half) - half * math.log(math.pi)

    return np.exp(log_norm - half * np.log1p(squared))


class StudentTSampler(object):
    """A deterministic stream of ``(a, b)`` pairs with ``a ~ t_m``,
    ``b ~ t_1``.

    Attributes:
        m (int):
            The dimension of ``a``.

        seed (int):
            The master seed.

        block_size (int):
            Draws per block.

        position (int):
            Index of the next draw :py:meth:`take` returns.
    """

    def __init__(self, m, seed=0, block_size=DEFAULT_BLOCK_SIZE):
        if int(m) != m or m < 1:
            raise InvalidInput('Sampler dimension must be a positive '
                               'integer, got %r' % (m,))

        if int(seed) != seed or seed < 0:
            raise InvalidInput('Seeds must be non-negative integers, got %r'
                               % (seed,))

        if block_size < 1:
            raise InvalidInput('Block size must be positive')

        self.m = int(m)
        self.seed = int(seed)
        self.block_size = int(block_size)
        self.position = 0

    def block(self, index):
        """Return the draws of block ``index`` as ``(A, B)``."""
        sequence = np.random.SeedSequence(self.seed, spawn_key=(index,))
        rng = np.random.default_rng(sequence)
        size = self.block_size

        numerators = rng.standard_normal((size, self.m))
        denominators = np.abs(rng.standard_normal(size))
        bias_numerators = rng.standard_normal(size)
        bias_denominators = np.abs(rng.standard_normal(size))

        return (numerators / denominators[:, None],
                bias_numerators / bias_denominators)

    def draws(self, start, count, workers=None):
        """Return draws ``start .. start + count - 1`` as ``(A, B)``.

        This does not move :py:attr:`position`.
        """
        if count < 0 or start < 0:
            raise InvalidInput('Draw ranges must be non-negative')

        if count == 0:
            return np.zeros((0, self.m)), np.zeros(0)

        first = start // self.block_size
        last = (start + count - 1) // self.block_size

        logger.debug('Drawing %d samples from blocks %d..%d (seed %d)',
                     count, first, last, self.seed)

        blocks = ordered_map(self.block, range(first, last + 1),
                             workers=workers)
        offset = start - first * self.block_size
        A = np.concatenate([block[0] for block in blocks])
        B = np.concatenate([block[1] for block in blocks])

        return A[offset:offset + count], B[offset:offset + count]

    def take(self, count, workers=None):
        """Return the next ``count`` draws as ``(A, B)``."""
        A, B = self.draws(self.position, count, workers=workers)
        self.position += count

        return A, B

    def reset(self):
        self.position = 0

    def __repr__(self):
        return '<StudentTSampler m=%d seed=%d position=%d>' % (
            self.m, self.seed, self.position)


def sample_student_t(sampler, n=None):
    """Return the next direction draw, or the next ``n`` as ``(n, m)``."""
    A, _ = sampler.take(1 if n is None else n)

    return A[0] if n is None else A
