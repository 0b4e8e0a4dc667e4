"""Exact anti-Ramsey numbers for stars: ar(n, s) = t_max + 1.

t_max is the largest number of colors in a surjective coloring of K_n^3
where every s-star has two triples of equal color. The search colors
triples in colex order. With symmetry pruning on, colors form a
restricted-growth string (a new color is always the next unused id).
A copy whose last triple is being colored must not end up rainbow, and an
uncolored triple that is the only open triple of a rainbow-so-far copy is
forced to reuse a color, which tightens the bound

    colors used + uncolored triples - forced triples.
"""

from __future__ import annotations

from dataclasses import dataclass
import logging
from math import comb

from ..const import AR_LONG_RUN_N, AR_MAX_N_S2, PROGRESS_EVERY_NODES, SPLIT_DEPTH
from .coloring import (
    EdgeColoring,
    lower_bound_coloring,
    rainbow_extension_coloring,
    validate_rainbow_free,
)
from .constructions import FormulaValue, ar_formula, comparison_label, is_constructible
from .errors import InvalidParameterError, SizeLimitError
from .search import Budget, Incumbent, SearchOutcome, SearchStatus, run_subtrees
from .turan import greedy_star_free
from .types import Pair, iter_pairs, triple_rank

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
#  s-star copies
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StarCopy:
    core: int
    pairs: tuple[Pair, ...]
    triples: tuple[int, ...]  # colex ranks, ascending


@dataclass(frozen=True)
class StarCopyIndex:
    """Every s-star in K_n^3 and, per triple rank, the copies containing it."""

    n: int
    s: int
    copies: tuple[StarCopy, ...]
    incidence: tuple[tuple[int, ...], ...]

    @staticmethod
    def expected_count(n: int, s: int) -> int:
        """n * C(n-1, 2s) * (2s-1)!!"""
        if n < 2 * s + 1:
            return 0
        double_factorial = 1
        for odd in range(1, 2 * s, 2):
            double_factorial *= odd
        return n * comb(n - 1, 2 * s) * double_factorial


def _matchings(vertices: list[int], s: int) -> list[tuple[Pair, ...]]:
    """All s-matchings of the complete graph on ``vertices``, pairs in colex order."""
    pairs = [(vertices[a], vertices[b]) for a, b in iter_pairs(len(vertices))]
    out: list[tuple[Pair, ...]] = []

    def extend(start: int, used: int, chosen: list[Pair]) -> None:
        if len(chosen) == s:
            out.append(tuple(chosen))
            return
        for i in range(start, len(pairs)):
            a, b = pairs[i]
            bits = (1 << a) | (1 << b)
            if not used & bits:
                chosen.append((a, b))
                extend(i + 1, used | bits, chosen)
                chosen.pop()

    extend(0, 0, [])
    return out


def enumerate_star_copies(n: int, s: int) -> StarCopyIndex:
    if n < 3:
        raise InvalidParameterError(f"n must be >= 3, got {n}")
    if s < 2:
        raise InvalidParameterError(f"s must be >= 2, got {s}")
    copies: list[StarCopy] = []
    incidence: list[list[int]] = [[] for _ in range(comb(n, 3))]
    for core in range(n):
        others = [u for u in range(n) if u != core]
        for matching in _matchings(others, s):
            ranks = tuple(sorted(triple_rank(*sorted((core, a, b))) for a, b in matching))
            for r in ranks:
                incidence[r].append(len(copies))
            copies.append(StarCopy(core, matching, ranks))
    return StarCopyIndex(n, s, tuple(copies), tuple(tuple(i) for i in incidence))


# ---------------------------------------------------------------------------
#  Search
# ---------------------------------------------------------------------------


class _ArSearch:
    def __init__(
        self,
        index: StarCopyIndex,
        budget: Budget,
        incumbent: Incumbent[EdgeColoring],
        symmetry: bool,
    ):
        self.n = index.n
        self.total = comb(index.n, 3)
        self.index = index
        self.budget = budget
        self.incumbent = incumbent
        self.symmetry = symmetry
        # copies whose last triple is i
        self.closing: list[list[StarCopy]] = [[] for _ in range(self.total)]
        # copies whose only open triple is i once triples < start are colored,
        # grouped by start: pending[start] = [(copy, last triple)]
        self.pending: list[list[tuple[StarCopy, int]]] = [[] for _ in range(self.total + 1)]
        for copy in index.copies:
            last, second = copy.triples[-1], copy.triples[-2]
            self.closing[last].append(copy)
            for start in range(second + 1, last + 1):
                self.pending[start].append((copy, last))

    def _rainbow(self, colors: list[int], copy: StarCopy, upto: int) -> bool:
        seen = {colors[t] for t in copy.triples if t < upto}
        return len(seen) == sum(1 for t in copy.triples if t < upto)

    def forced(self, colors: list[int], start: int) -> set[int]:
        return {last for copy, last in self.pending[start] if self._rainbow(colors, copy, start)}

    def closes_rainbow(self, colors: list[int], i: int) -> bool:
        return any(self._rainbow(colors, copy, i + 1) for copy in self.closing[i])

    def options(self, used: set[int], i: int, is_forced: bool) -> list[int]:
        """Colors to try for triple i: a new color first, then used ones ascending."""
        existing = sorted(used)
        if is_forced:
            return existing
        if self.symmetry:
            return [len(used), *existing]
        fresh = [c for c in range(self.total) if c not in used]
        return [*fresh, *existing]

    def dfs(self, colors: list[int], used: dict[int, int], i: int, counter: list[int]) -> None:
        counter[0] += 1
        if counter[0] % PROGRESS_EVERY_NODES == 0:
            logger.debug("ar n=%d s=%d: %d nodes, best %d", self.n, self.index.s, counter[0],
                         self.incumbent.value)
        if counter[0] % 1024 == 0 and self.budget.check():
            return
        if self.budget.expired:
            return
        if i == self.total:
            self.incumbent.offer(len(used), EdgeColoring.from_labels(self.n, colors))
            return
        forced = self.forced(colors, i)
        if not self.incumbent.admits(len(used) + (self.total - i) - len(forced)):
            return
        for c in self.options(set(used), i, i in forced):
            colors[i] = c
            used[c] = used.get(c, 0) + 1
            if not self.closes_rainbow(colors, i):
                self.dfs(colors, used, i + 1, counter)
            used[c] -= 1
            if not used[c]:
                del used[c]
            colors[i] = -1

    def prefixes(self, depth: int) -> list[list[int]]:
        out: list[list[int]] = []
        colors = [-1] * self.total
        used: dict[int, int] = {}

        def walk(i: int) -> None:
            if i == min(depth, self.total):
                out.append(colors[:i])
                return
            for c in self.options(set(used), i, i in self.forced(colors, i)):
                colors[i] = c
                used[c] = used.get(c, 0) + 1
                if not self.closes_rainbow(colors, i):
                    walk(i + 1)
                used[c] -= 1
                if not used[c]:
                    del used[c]
                colors[i] = -1

        walk(0)
        return out

    def run_prefix(self, prefix: list[int]) -> int:
        colors = prefix + [-1] * (self.total - len(prefix))
        used: dict[int, int] = {}
        for c in prefix:
            used[c] = used.get(c, 0) + 1
        counter = [0]
        self.dfs(colors, used, len(prefix), counter)
        return counter[0]


def _seed(n: int, s: int) -> EdgeColoring:
    candidates = []
    if s - 1 >= 3 and is_constructible(n, s - 1):
        candidates.append(lower_bound_coloring(n, s - 1))
    greedy = greedy_star_free(n, s - 1)
    if greedy.edge_count < comb(n, 3):
        candidates.append(rainbow_extension_coloring(greedy))
    for coloring in sorted(candidates, key=lambda c: -c.t):
        if validate_rainbow_free(coloring, s):
            return coloring
        logger.warning("Seed coloring with %d colors is not rainbow-free; skipped", coloring.t)
    return EdgeColoring.monochromatic(n)


def _check_caps(n: int, s: int, long_run: bool, force: bool) -> None:
    if force or n < 2 * s + 1:
        return
    if s == 2 and n <= AR_MAX_N_S2:
        return
    if s == 3 and n <= AR_LONG_RUN_N and long_run:
        return
    hint = "long_run" if s == 3 and n <= AR_LONG_RUN_N else "force"
    raise SizeLimitError(f"ar search at n={n}, s={s} is above the default caps; pass {hint}")


def max_colors_no_rainbow(
    n: int,
    s: int,
    *,
    budget: float | None = None,
    threads: int = 1,
    symmetry: bool = True,
    long_run: bool = False,
    force: bool = False,
) -> SearchOutcome[EdgeColoring]:
    """Most colors in a coloring of K_n^3 with no rainbow s-star.

    Args:
        n: Number of vertices (>= 3).
        s: Star size (>= 2).
        budget: Wall-clock limit in seconds; None for unlimited.
        threads: Worker threads; the optimal value does not depend on it.
        symmetry: Restrict to restricted-growth colorings.
        long_run: Allow s=3 at n=7.
        force: Lift all default caps.

    Raises:
        InvalidParameterError: n < 3, s < 2 or threads < 1.
        SizeLimitError: instance above the default caps.
    """
    if n < 3:
        raise InvalidParameterError(f"n must be >= 3, got {n}")
    if s < 2:
        raise InvalidParameterError(f"s must be >= 2, got {s}")
    if threads < 1:
        raise InvalidParameterError(f"threads must be >= 1, got {threads}")
    clock = Budget(budget)
    if n < 2 * s + 1:
        return SearchOutcome(
            comb(n, 3), SearchStatus.TRIVIAL_ALL_RAINBOW, EdgeColoring.rainbow(n), 0, clock.elapsed
        )
    _check_caps(n, s, long_run, force)

    seed = _seed(n, s)
    logger.info("ar search n=%d s=%d seeded at %d colors", n, s, seed.t)
    incumbent: Incumbent[EdgeColoring] = Incumbent(seed.t, seed)
    search = _ArSearch(enumerate_star_copies(n, s), clock, incumbent, symmetry)
    if threads == 1:
        nodes = search.run_prefix([])
    else:
        nodes = run_subtrees(search.run_prefix, search.prefixes(SPLIT_DEPTH), threads)
    status = SearchStatus.LOWER_BOUND_ONLY if clock.expired else SearchStatus.PROVEN
    logger.info("ar search n=%d s=%d: value %d (%s), %d nodes", n, s, incumbent.value, status.value,
                nodes)
    return SearchOutcome(incumbent.value, status, incumbent.witness, nodes, clock.elapsed)


# ---------------------------------------------------------------------------
#  Report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ArReport:
    n: int
    s: int
    outcome: SearchOutcome[EdgeColoring]
    formula: FormulaValue

    @property
    def ar(self) -> int:
        return self.outcome.value + 1

    @property
    def label(self) -> str:
        return comparison_label(self.ar, self.formula, proven=self.outcome.proven)

    def fields(self, *, timing: bool = False) -> dict:
        d = {"value": self.outcome.value, "ar": self.ar, "status": self.outcome.status.value,
             "nodes": self.outcome.nodes}
        if timing:
            d["seconds"] = round(self.outcome.seconds, 3)
        d["formula"] = self.formula.value
        d["label"] = self.label
        return d

    def render(self, *, timing: bool = False) -> str:
        return " ".join(f"{k}={v}" for k, v in self.fields(timing=timing).items())


def ar_exact(n: int, s: int, **kwargs) -> ArReport:
    """ar(n, s) from the exact search, compared against the reference formula.

    Keyword arguments are passed to max_colors_no_rainbow.
    """
    outcome = max_colors_no_rainbow(n, s, **kwargs)
    return ArReport(n, s, outcome, ar_formula(n, s))
