"""Order-preserving parallel map used by the sweeps and by row-split decompositions."""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def pmap(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> list[R]:
    """Apply ``fn`` to every item, in input order.

    ``fn`` must be a module-level callable so that it pickles. With ``workers <= 1`` the map
    runs in-process, which keeps tracebacks and coverage simple.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    logger.debug("pmap: %d items over %d workers", len(items), workers)
    chunk = max(1, len(items) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))
