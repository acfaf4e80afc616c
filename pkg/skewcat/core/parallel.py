"""
Core functionality for parallel processing.
"""
from typing import Any, Callable, List, Optional, Sequence
from multiprocessing import Pool, cpu_count

from ..utils.errors import SkewcatError
from ..utils.logger import setup_logger

logger = setup_logger(__name__)


def parallel_map(process_func: Callable,
                 items: Sequence[Any],
                 *args,
                 workers: Optional[int] = None,
                 **kwargs) -> List[Any]:
    """Apply a function to independent items, in parallel when worthwhile.

    [WORKFLOW]
    1. Setup processing pool (skipped for one worker or one item)
    2. Apply function to each item
    3. Collect results in input order

    [PARAMETERS]
    process_func : Callable
        Module-level function called as process_func(item, *args, **kwargs)
    items : Sequence[Any]
        Independent work items, e.g. harness seeds
    workers : Optional[int]
        Pool size; defaults to one less than the CPU count
    *args, **kwargs
        Additional arguments for process_func

    [OUTPUT]
    List[Any]
        Results in the order of items, so merged reports are deterministic

    [RAISES]
    SkewcatError
        If a worker fails
    """
    n_workers = workers or max(1, cpu_count() - 1)
    if n_workers == 1 or len(items) <= 1:
        return [process_func(item, *args, **kwargs) for item in items]

    logger.debug(f"Dispatching {len(items)} items to {n_workers} workers")
    try:
        with Pool(n_workers) as pool:
            results = [pool.apply_async(process_func, (item, *args), kwargs) for item in items]
            return [r.get() for r in results]
    except SkewcatError:
        raise
    except Exception as e:
        raise SkewcatError(f"Parallel processing failed: {str(e)}")
