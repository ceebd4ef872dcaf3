"""Order-preserving map over an optional process pool."""
import os
from concurrent.futures import ProcessPoolExecutor
from itertools import starmap


def resolve_workers(workers):
    if workers is None or workers < 0:
        raise ValueError("workers must be >= 0")
    return workers or os.cpu_count() or 1


def pmap(fn, arg_tuples, workers=1):
    """Return ``[fn(*args) for args in arg_tuples]``, possibly in parallel.

    Results come back in input order regardless of worker count, so callers
    that merge them get identical output for any parallelism setting.
    """
    arg_tuples = list(arg_tuples)
    workers = resolve_workers(workers)
    if workers == 1 or len(arg_tuples) <= 1:
        return list(starmap(fn, arg_tuples))
    with ProcessPoolExecutor(max_workers=min(workers, len(arg_tuples))) as pool:
        return list(pool.map(fn, *zip(*arg_tuples)))
