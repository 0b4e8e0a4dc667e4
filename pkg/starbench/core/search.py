"""Shared machinery for the exact searches.

- SearchStatus / SearchOutcome: what a search reports
- Budget: wall-clock deadline checked between nodes
- Incumbent: best value seen so far, shared between worker threads
- run_subtrees: evaluates independent subtrees on a thread pool
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
import logging
import threading
import time
from typing import Any, Generic, TypeVar

from .errors import InvalidParameterError

logger = logging.getLogger(__name__)

W = TypeVar("W")
T = TypeVar("T")


class SearchStatus(str, Enum):
    PROVEN = "proven"
    LOWER_BOUND_ONLY = "lower-bound-only"
    TRIVIAL_ALL_RAINBOW = "trivial-all-rainbow"


@dataclass(frozen=True)
class SearchOutcome(Generic[W]):
    """Result of an exact maximisation.

    ``value`` is optimal when status is PROVEN or TRIVIAL_ALL_RAINBOW and
    only a lower bound otherwise; ``witness`` always attains ``value``.
    """

    value: int
    status: SearchStatus
    witness: W
    nodes: int
    seconds: float

    @property
    def proven(self) -> bool:
        return self.status is not SearchStatus.LOWER_BOUND_ONLY

    def to_dict(self, *, timing: bool = False) -> dict[str, Any]:
        d: dict[str, Any] = {"value": self.value, "status": self.status.value, "nodes": self.nodes}
        if timing:
            d["seconds"] = round(self.seconds, 3)
        return d


class Budget:
    """Wall-clock budget; ``None`` means unlimited."""

    def __init__(self, seconds: float | None):
        if seconds is not None and seconds <= 0:
            raise InvalidParameterError(f"budget must be positive, got {seconds}")
        self._start = time.monotonic()
        self._deadline = None if seconds is None else self._start + seconds
        self._expired = threading.Event()

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self._start

    @property
    def expired(self) -> bool:
        return self._expired.is_set()

    def check(self) -> bool:
        """Return True (and latch) once the deadline has passed."""
        if self._expired.is_set():
            return True
        if self._deadline is not None and time.monotonic() >= self._deadline:
            self._expired.set()
            logger.warning("Search budget exhausted after %.1f s", self.elapsed)
            return True
        return False


class Incumbent(Generic[W]):
    """Best solution known so far.

    A seed (from a construction or a heuristic) sets the value to beat but
    is replaced by the first search solution of equal value, so a completed
    single-threaded search reports the first optimum in branch order.
    """

    def __init__(self, value: int, witness: W):
        self._lock = threading.Lock()
        self.value = value
        self.witness = witness
        self.found = False

    def offer(self, value: int, witness: W) -> bool:
        with self._lock:
            if value > self.value or (value == self.value and not self.found):
                if value > self.value:
                    logger.debug("Incumbent improved to %d", value)
                self.value = value
                self.witness = witness
                self.found = True
                return True
            return False

    def admits(self, bound: int) -> bool:
        """True if a subtree with this upper bound may still improve the answer."""
        return bound > self.value or (bound == self.value and not self.found)


def run_subtrees(work: Callable[[T], int], subtrees: Iterable[T], threads: int) -> int:
    """Run ``work`` on every subtree and return the summed node counts."""
    items = list(subtrees)
    if threads <= 1:
        return sum(work(item) for item in items)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return sum(pool.map(work, items))
