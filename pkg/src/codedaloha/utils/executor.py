"""
The pool executors for running independent evaluations at once.
"""
import logging
from concurrent.futures import ThreadPoolExecutor, ProcessPoolExecutor
from contextlib import contextmanager
from multiprocessing import cpu_count


def resolve_jobs(jobs):
    """The number of workers to use for the given '--jobs' value.

    A value of 0 or None uses one worker per cpu.

    Examples
    --------
    >>> resolve_jobs(3)
    3
    >>> resolve_jobs(0) == cpu_count()
    True
    """
    return cpu_count() if not jobs else max(int(jobs), 1)


@contextmanager
def executor_map(jobs=1, processes=False):
    """A context manager that yields a map-like callable.

    Results are returned in the order of the inputs, whatever the number of
    workers, so that reductions over the results are reproducible.

    Parameters
    ----------
    jobs : Optional[int]
        The number of workers. With a single worker, the builtin map is used
        and no pool is created.
    processes : Optional[bool]
        If True, use a pool of processes. Otherwise, use a pool of threads.
        The mapped function and its arguments must be picklable for
        processes.

    Examples
    --------
    >>> with executor_map(jobs=2) as pmap:
    ...     list(pmap(abs, [-1, -2, 3]))
    [1, 2, 3]
    """
    jobs = resolve_jobs(jobs)
    if jobs == 1:
        yield map
        return

    pool_cls = ProcessPoolExecutor if processes else ThreadPoolExecutor
    logging.debug("Starting a {} with {} workers".format(pool_cls.__name__,
                                                         jobs))
    with pool_cls(max_workers=jobs) as pool:
        def _map(func, iterable):
            return list(pool.map(func, iterable))
        yield _map
