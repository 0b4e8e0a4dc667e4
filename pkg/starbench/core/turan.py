"""Exact f(n, k) by branch-and-bound.

Triples are decided in colex order, include branch first. Links are kept
as bitmasks over pair ranks; adding T = {a, b, c} changes the links of a,
b and c, and T is admissible iff for each x in T the link of x plus the
pair T - x still has matching number <= k-1, i.e. the link of x minus all
pairs touching T - x has matching number <= k-2.

The upper bound at a node is the smaller of
  - current edges + admissible remaining triples
  - floor(sum_v min(deg_v + admissible triples through v, cap) / 3)
where cap is the most edges a link on n-1 vertices can have with nu <= k-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import logging

from ..const import EXACT_F_MAX_N, EXACT_F_MAX_N_K2, PROGRESS_EVERY_NODES, SPLIT_DEPTH
from .constructions import ConstructionSpec, is_constructible, matching_extremal_edges
from .errors import InvalidParameterError, SizeLimitError
from .search import Budget, Incumbent, SearchOutcome, SearchStatus, run_subtrees
from .stars import is_star_free
from .types import ThreeGraph, iter_pairs, iter_triples, pair_rank

logger = logging.getLogger(__name__)


@dataclass
class _State:
    links: list[int]
    degrees: list[int]
    chosen: list[int] = field(default_factory=list)
    nodes: int = 0


class _TuranSearch:
    def __init__(self, n: int, k: int, budget: Budget, incumbent: Incumbent[ThreeGraph]):
        self.n = n
        self.k = k
        self.budget = budget
        self.incumbent = incumbent
        self.triples = list(iter_triples(n))
        self.pair_vertices = list(iter_pairs(n))
        self.incident = [0] * n
        for idx, (a, b) in enumerate(self.pair_vertices):
            self.incident[a] |= 1 << idx
            self.incident[b] |= 1 << idx
        # per triple: (x, bit of the pair T - x, pairs touching T - x)
        self.parts = []
        for a, b, c in self.triples:
            row = []
            for x, (p, q) in ((a, (b, c)), (b, (a, c)), (c, (a, b))):
                row.append((x, 1 << pair_rank(p, q), self.incident[p] | self.incident[q]))
            self.parts.append(tuple(row))
        self.cap = matching_extremal_edges(n - 1, k - 1)
        self._memo: dict[int, int] = {}

    # ---- matching number of a link ----

    def nu(self, mask: int) -> int:
        if mask == 0:
            return 0
        got = self._memo.get(mask)
        if got is None:
            low = mask & -mask
            a, b = self.pair_vertices[low.bit_length() - 1]
            rest = mask ^ low
            got = max(self.nu(rest), 1 + self.nu(rest & ~(self.incident[a] | self.incident[b])))
            self._memo[mask] = got
        return got

    def admissible(self, links: list[int], j: int) -> bool:
        limit = self.k - 2
        return all(self.nu(links[x] & ~touching) <= limit for x, _, touching in self.parts[j])

    # ---- state ----

    def fresh_state(self) -> _State:
        return _State([0] * self.n, [0] * self.n)

    def apply(self, state: _State, j: int) -> None:
        for x, bit, _ in self.parts[j]:
            state.links[x] |= bit
            state.degrees[x] += 1
        state.chosen.append(j)

    def undo(self, state: _State, j: int) -> None:
        for x, bit, _ in self.parts[j]:
            state.links[x] &= ~bit
            state.degrees[x] -= 1
        state.chosen.pop()

    def graph_of(self, chosen: list[int]) -> ThreeGraph:
        return ThreeGraph(self.n, frozenset(self.triples[j] for j in chosen))

    # ---- search ----

    def bound(self, state: _State, open_triples: list[int]) -> int:
        through = [0] * self.n
        for j in open_triples:
            for x in self.triples[j]:
                through[x] += 1
        by_degree = sum(min(d + t, self.cap) for d, t in zip(state.degrees, through)) // 3
        return min(len(state.chosen) + len(open_triples), by_degree)

    def dfs(self, state: _State, start: int) -> None:
        state.nodes += 1
        if state.nodes % PROGRESS_EVERY_NODES == 0:
            logger.debug("exact_f n=%d k=%d: %d nodes, best %d", self.n, self.k, state.nodes,
                         self.incumbent.value)
        if state.nodes % 1024 == 0 and self.budget.check():
            return
        if self.budget.expired:
            return
        open_triples = [j for j in range(start, len(self.triples)) if self.admissible(state.links, j)]
        if not open_triples:
            self.incumbent.offer(len(state.chosen), self.graph_of(state.chosen))
            return
        if not self.incumbent.admits(self.bound(state, open_triples)):
            return
        j = open_triples[0]
        self.apply(state, j)
        self.dfs(state, j + 1)
        self.undo(state, j)
        self.dfs(state, j + 1)

    def prefixes(self, depth: int) -> list[tuple[list[int], int]]:
        """Branch decisions on the first admissible triples, in DFS order."""
        out: list[tuple[list[int], int]] = []
        state = self.fresh_state()

        def walk(start: int, level: int) -> None:
            nxt = next(
                (j for j in range(start, len(self.triples)) if self.admissible(state.links, j)), None
            )
            if level == depth or nxt is None:
                out.append((list(state.chosen), start))
                return
            self.apply(state, nxt)
            walk(nxt + 1, level + 1)
            self.undo(state, nxt)
            walk(nxt + 1, level + 1)

        walk(0, 0)
        return out

    def run_prefix(self, prefix: tuple[list[int], int]) -> int:
        chosen, start = prefix
        state = self.fresh_state()
        for j in chosen:
            self.apply(state, j)
        self.dfs(state, start)
        return state.nodes


def greedy_star_free(n: int, k: int) -> ThreeGraph:
    """Colex-greedy k-star-free 3-graph (the first leaf of the exact search)."""
    search = _TuranSearch(n, k, Budget(None), Incumbent(-1, ThreeGraph.empty(n)))
    state = search.fresh_state()
    for j in range(len(search.triples)):
        if search.admissible(state.links, j):
            search.apply(state, j)
    return search.graph_of(state.chosen)


def _check_parameters(n: int, k: int, force: bool) -> None:
    if n < 3:
        raise InvalidParameterError(f"n must be >= 3, got {n}")
    if k < 2:
        raise InvalidParameterError(f"k must be >= 2, got {k}")
    cap = EXACT_F_MAX_N_K2 if k == 2 else EXACT_F_MAX_N
    if n > cap and not force:
        raise SizeLimitError(f"exact_f is capped at n <= {cap} for k={k}; pass force to lift")


def exact_f(
    n: int,
    k: int,
    *,
    budget: float | None = None,
    threads: int = 1,
    force: bool = False,
) -> SearchOutcome[ThreeGraph]:
    """Maximum edge count of a k-star-free 3-graph on n vertices.

    Args:
        n: Number of vertices (>= 3).
        k: Star size (>= 2).
        budget: Wall-clock limit in seconds; None for unlimited.
        threads: Worker threads. The optimal value does not depend on it;
            the witness is the first optimum in branch order only for 1.
        force: Lift the default instance caps.

    Returns:
        SearchOutcome whose witness is a k-star-free graph with ``value`` edges.

    Raises:
        InvalidParameterError: n < 3, k < 2 or threads < 1.
        SizeLimitError: n above the cap and force not set.
    """
    _check_parameters(n, k, force)
    if threads < 1:
        raise InvalidParameterError(f"threads must be >= 1, got {threads}")
    clock = Budget(budget)

    seed = greedy_star_free(n, k)
    if is_constructible(n, k):
        built = ConstructionSpec.for_parameters(n, k).build()
        if built.edge_count > seed.edge_count and is_star_free(built, k):
            seed = built
    logger.info("exact_f n=%d k=%d seeded at %d edges", n, k, seed.edge_count)

    incumbent: Incumbent[ThreeGraph] = Incumbent(seed.edge_count, seed)
    search = _TuranSearch(n, k, clock, incumbent)
    if threads == 1:
        nodes = search.run_prefix(([], 0))
    else:
        nodes = run_subtrees(search.run_prefix, search.prefixes(SPLIT_DEPTH), threads)

    status = SearchStatus.LOWER_BOUND_ONLY if clock.expired else SearchStatus.PROVEN
    logger.info("exact_f n=%d k=%d: value %d (%s), %d nodes", n, k, incumbent.value, status.value, nodes)
    return SearchOutcome(incumbent.value, status, incumbent.witness, nodes, clock.elapsed)
