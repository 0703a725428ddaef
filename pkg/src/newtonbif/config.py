from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, TypeVar

from .groebner import DEFAULT_MAX_PAIRS

T = TypeVar("T")
R = TypeVar("R")


@dataclass(frozen=True)
class Config:
    max_pairs: int = DEFAULT_MAX_PAIRS
    root_tol: float = 1e-12
    dedup_tol: float = 1e-10
    max_root_iter: int = 5000
    jobs: int = 1


DEFAULT_CONFIG = Config()


def ordered_map(fn: Callable[[T], R], items: Iterable[T], jobs: int) -> list[R]:
    """``map`` that may run on a thread pool; results always come back in input order."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))
