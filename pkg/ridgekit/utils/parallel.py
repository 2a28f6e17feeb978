"""Worker pool with deterministic, ordered reduction.

The pool size is bounded by :envvar:`RIDGEKIT_THREADS`. Results always come
back in submission order, so anything reduced from them is independent of
how many workers ran.
"""

import logging
import os
from concurrent.futures import ThreadPoolExecutor

from ridgekit.utils.errors import WorkerCountError


logger = logging.getLogger(__name__)


THREADS_ENV = 'RIDGEKIT_THREADS'


def get_worker_count():
    """Return the number of workers to use.

    Returns:
        int:
        The value of :envvar:`RIDGEKIT_THREADS` if set, else the CPU count.

    Raises:
        ridgekit.utils.errors.WorkerCountError:
            The environment variable is not a positive integer.
    """
    value = os.environ.get(THREADS_ENV)

    if value is None or value == '':
        return max(1, os.cpu_count() or 1)

    try:
        count = int(value)
    except ValueError:
        raise WorkerCountError(value)

    if count < 1:
        raise WorkerCountError(value)

    return count


def ordered_map(func, items, workers=None):
    """Apply ``func`` to every item and return results in input order.

    Args:
        func (callable):
            A pure function of one argument.

        items (iterable):
            The inputs.

        workers (int, optional):
            Overrides :py:func:`get_worker_count`.

    Returns:
        list:
        ``[func(item) for item in items]``.
    """
    items = list(items)

    if workers is None:
        workers = get_worker_count()

    workers = min(workers, len(items))

    if workers <= 1:
        return [func(item) for item in items]

    logger.debug('Running %d jobs on %d workers', len(items), workers)

    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))


def pairwise_sum(values):
    """Sum arrays along the first axis by a fixed pairwise tree.

    The order of additions depends only on the number of values, which
    keeps Monte-Carlo sums reproducible across worker counts.
    """
    values = list(values)

    if not values:
        return 0.0

    while len(values) > 1:
        paired = [values[i] + values[i + 1]
                  for i in range(0, len(values) - 1, 2)]

        if len(values) % 2:
            paired.append(values[-1])

        values = paired

    return values[0]
