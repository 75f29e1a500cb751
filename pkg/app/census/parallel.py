"""Chunked map-reduce over disjoint index ranges

Work functions must be module-level so they pickle into worker processes.
Results come back in task order, so any fold over them is independent of
the number of workers.
"""

import concurrent.futures
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar

from app.settings import get_settings

T = TypeVar("T")
R = TypeVar("R")


def chunk_ranges(total: int, chunk_size: int) -> List[Tuple[int, int]]:
    """Split range(total) into consecutive [start, stop) pieces"""
    if chunk_size < 1:
        raise ValueError(f"chunk_size must be >= 1, got {chunk_size}")
    return [(start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]


def resolve_workers(workers: Optional[int]) -> int:
    """Requested worker count capped by EUCLAB_THREADS"""
    limit = get_settings().compute.threads
    if workers is None:
        return limit
    return max(1, min(workers, limit))


def map_chunks(fn: Callable[[T], R], tasks: Sequence[T], workers: Optional[int] = None) -> List[R]:
    """Apply fn to every task, in worker processes when more than one is allowed"""
    count = resolve_workers(workers)
    if count <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]
    with concurrent.futures.ProcessPoolExecutor(max_workers=min(count, len(tasks))) as executor:
        return list(executor.map(fn, tasks))
