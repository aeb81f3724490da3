"""Order-preserving parallel map controlled by ``PARTDYN_WORKERS``."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")

ENV_VAR = "PARTDYN_WORKERS"


def worker_count() -> int:
    raw = os.environ.get(ENV_VAR, "1").strip()
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{ENV_VAR} must be >= 1")
    return value


def ordered_map(func: Callable[[T], R], items: Iterable[T], workers: int | None = None) -> list[R]:
    """``[func(x) for x in items]``, spread over processes when asked.

    ``func`` must be picklable (a module-level function).  Results keep the
    input order whatever the scheduling.
    """
    items = list(items)
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(items) < 2:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items, chunksize=max(1, len(items) // (4 * workers))))
