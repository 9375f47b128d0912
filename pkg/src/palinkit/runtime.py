"""Runtime knobs: parallelism is bounded by the PALINKIT_THREADS env var
(0 or unset means auto).  Results are always merged in input order, so output
never depends on scheduling."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

ENV_THREADS = "PALINKIT_THREADS"


def thread_count() -> int:
    raw = os.environ.get(ENV_THREADS, "0")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n < 0:
        n = 0
    if n == 0:
        return os.cpu_count() or 1
    return n


def parallel_map(fn: Callable[[T], R], items: Sequence[T]) -> list[R]:
    """Order-preserving map honoring the thread bound."""
    n = thread_count()
    if n <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def map_chunks(fn: Callable[[Sequence[T]], Iterable[R]], items: Sequence[T]) -> list[R]:
    """Split items into one chunk per worker, apply fn per chunk, and
    concatenate results in input order."""
    n = thread_count()
    if n <= 1 or len(items) <= n:
        return list(fn(items))
    size = (len(items) + n - 1) // n
    chunks = [items[i : i + size] for i in range(0, len(items), size)]
    out: list[R] = []
    for part in parallel_map(lambda ch: list(fn(ch)), chunks):
        out.extend(part)
    return out
