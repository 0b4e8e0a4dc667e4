"""Matchings on simple graphs: maximum matching, Tutte and Gallai criteria,
factor-criticality, and Hamiltonian cycles.

The maximum matching comes from the blossom implementation in networkx.
Perfect-matching questions on small graphs (n <= 16) are answered by a
memoised bitmask search, which doubles as the exhaustive oracle the
blossom result is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
import logging

import networkx as nx

from ..const import TUTTE_EXHAUSTIVE_MAX_N
from .errors import InvalidParameterError, SizeLimitError
from .types import Graph, Pair

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MatchingResult:
    """Maximum matching with an optional Tutte certificate."""

    size: int
    pairs: tuple[Pair, ...]
    certificate: frozenset[int] | None = None


# ---------------------------------------------------------------------------
#  Bitmask helpers
# ---------------------------------------------------------------------------


def _full_mask(n: int) -> int:
    return (1 << n) - 1


def _perfect_matchable(adj: tuple[int, ...], mask: int, memo: dict[int, bool]) -> bool:
    """True iff the vertex set ``mask`` has a perfect matching in adj."""
    if mask == 0:
        return True
    cached = memo.get(mask)
    if cached is not None:
        return cached
    low = mask & -mask
    rest = mask ^ low
    candidates = adj[low.bit_length() - 1] & rest
    found = False
    while candidates:
        bit = candidates & -candidates
        if _perfect_matchable(adj, rest ^ bit, memo):
            found = True
            break
        candidates ^= bit
    memo[mask] = found
    return found


def _matching_number(adj: tuple[int, ...], mask: int, memo: dict[int, int]) -> int:
    if mask == 0:
        return 0
    cached = memo.get(mask)
    if cached is not None:
        return cached
    low = mask & -mask
    rest = mask ^ low
    best = _matching_number(adj, rest, memo)
    candidates = adj[low.bit_length() - 1] & rest
    limit = rest.bit_count() // 2 + 1
    while candidates and best < limit:
        bit = candidates & -candidates
        best = max(best, 1 + _matching_number(adj, rest ^ bit, memo))
        candidates ^= bit
    memo[mask] = best
    return best


def _odd_component_count(adj: tuple[int, ...], mask: int) -> int:
    odd = 0
    remaining = mask
    while remaining:
        frontier = remaining & -remaining
        component = frontier
        while frontier:
            bit = frontier & -frontier
            frontier ^= bit
            fresh = adj[bit.bit_length() - 1] & mask & ~component
            component |= fresh
            frontier |= fresh
        remaining &= ~component
        odd += component.bit_count() & 1
    return odd


# ---------------------------------------------------------------------------
#  Maximum matching
# ---------------------------------------------------------------------------


def max_matching(graph: Graph, *, certify: bool = False) -> MatchingResult:
    """Maximum matching; ``size`` is exactly nu(G).

    With ``certify=True`` a Tutte set is attached whenever G has no perfect
    matching (exhaustive, so only for n <= 16).
    """
    matched = nx.max_weight_matching(graph.to_networkx(), maxcardinality=True)
    pairs = tuple(sorted((min(a, b), max(a, b)) for a, b in matched))
    certificate = None
    if certify and not (graph.n % 2 == 0 and len(pairs) == graph.n // 2):
        certificate = tutte_witness(graph)
    return MatchingResult(len(pairs), pairs, certificate)


def matching_number_exhaustive(graph: Graph) -> int:
    """nu(G) by exhaustive bitmask search (oracle for max_matching)."""
    return _matching_number(graph.adjacency_masks, _full_mask(graph.n), {})


def has_perfect_matching(graph: Graph) -> bool:
    if graph.n % 2:
        return False
    if graph.n <= TUTTE_EXHAUSTIVE_MAX_N:
        return _perfect_matchable(graph.adjacency_masks, _full_mask(graph.n), {})
    return max_matching(graph).size == graph.n // 2


def odd_components(graph: Graph, removed: frozenset[int] | set[int] | tuple[int, ...]) -> int:
    """o(G - S): number of odd-order components after deleting S."""
    mask = _full_mask(graph.n)
    for v in removed:
        mask &= ~(1 << v)
    return _odd_component_count(graph.adjacency_masks, mask)


def tutte_witness(graph: Graph) -> frozenset[int] | None:
    """A set S with o(G - S) > |S|, or None when G has a perfect matching.

    Smallest witnesses are found first (by size, then lex order).
    """
    if graph.n > TUTTE_EXHAUSTIVE_MAX_N:
        raise SizeLimitError(
            f"exhaustive Tutte search is limited to n <= {TUTTE_EXHAUSTIVE_MAX_N}, got {graph.n}"
        )
    if has_perfect_matching(graph):
        return None
    adj = graph.adjacency_masks
    full = _full_mask(graph.n)
    for size in range(graph.n + 1):
        for chosen in combinations(range(graph.n), size):
            mask = full
            for v in chosen:
                mask &= ~(1 << v)
            if _odd_component_count(adj, mask) > size:
                return frozenset(chosen)
    raise AssertionError("no Tutte witness for a graph without a perfect matching")


# ---------------------------------------------------------------------------
#  Factor-criticality
# ---------------------------------------------------------------------------


def is_factor_critical(graph: Graph) -> bool:
    """True iff n is odd and G - v has a perfect matching for every v."""
    if graph.n % 2 == 0:
        return False
    if graph.n > TUTTE_EXHAUSTIVE_MAX_N:
        return all(has_perfect_matching(graph.remove_vertices([v])) for v in range(graph.n))
    adj = graph.adjacency_masks
    full = _full_mask(graph.n)
    memo: dict[int, bool] = {}
    return all(_perfect_matchable(adj, full & ~(1 << v), memo) for v in range(graph.n))


def is_factor_critical_gallai(graph: Graph) -> bool:
    """Gallai's criterion: odd order and o(G - S) <= |S| for every non-empty S."""
    if graph.n % 2 == 0:
        return False
    if graph.n > TUTTE_EXHAUSTIVE_MAX_N:
        raise SizeLimitError(
            f"exhaustive Gallai check is limited to n <= {TUTTE_EXHAUSTIVE_MAX_N}, got {graph.n}"
        )
    adj = graph.adjacency_masks
    full = _full_mask(graph.n)
    for removed in range(1, full + 1):
        if _odd_component_count(adj, full & ~removed) > removed.bit_count():
            return False
    return True


def _forced_edges(adj: tuple[int, ...], mask: int, memo: dict) -> tuple[bool, frozenset[Pair]]:
    """(has a perfect matching, edges lying in every perfect matching) on ``mask``."""
    if mask == 0:
        return True, frozenset()
    cached = memo.get(mask)
    if cached is not None:
        return cached
    low = mask & -mask
    v = low.bit_length() - 1
    rest = mask ^ low
    candidates = adj[v] & rest
    exists = False
    common: frozenset[Pair] | None = None
    while candidates:
        bit = candidates & -candidates
        candidates ^= bit
        ok, inner = _forced_edges(adj, rest ^ bit, memo)
        if not ok:
            continue
        exists = True
        here = inner | {(v, bit.bit_length() - 1)}
        common = here if common is None else common & here
        if not common:
            break
    result = (exists, common if common is not None else frozenset())
    memo[mask] = result
    return result


def non_critical_edges(graph: Graph) -> tuple[Pair, ...]:
    """Edges f for which G - f is not factor-critical (odd n <= 16).

    G - f - v has a perfect matching unless f lies in every perfect matching
    of G - v, so one pass over the vertices decides every edge at once.
    """
    if graph.n % 2 == 0:
        return graph.sorted_edges
    if graph.n > TUTTE_EXHAUSTIVE_MAX_N:
        raise SizeLimitError(f"edge-criticality check is limited to n <= {TUTTE_EXHAUSTIVE_MAX_N}")
    adj = graph.adjacency_masks
    full = _full_mask(graph.n)
    memo: dict = {}
    bad: set[Pair] = set()
    for v in range(graph.n):
        ok, forced = _forced_edges(adj, full & ~(1 << v), memo)
        if not ok:
            return graph.sorted_edges
        bad |= forced
    return tuple(sorted(bad))


# ---------------------------------------------------------------------------
#  Hamiltonicity
# ---------------------------------------------------------------------------


def hamiltonian_cycle(graph: Graph) -> tuple[int, ...] | None:
    """A Hamiltonian cycle as a vertex sequence starting at 0, or None.

    Exact backtracking; a branch dies as soon as some unvisited vertex has
    fewer than two usable neighbours left.
    """
    n = graph.n
    if n < 3:
        raise InvalidParameterError(f"Hamiltonian cycles need n >= 3, got {n}")
    adj = graph.adjacency_masks
    if any(d < 2 for d in graph.degrees):
        return None
    full = _full_mask(n)
    path = [0]

    def feasible(visited: int, current: int) -> bool:
        open_set = (full & ~visited) | (1 << current) | 1
        unvisited = full & ~visited
        while unvisited:
            bit = unvisited & -unvisited
            unvisited ^= bit
            if (adj[bit.bit_length() - 1] & open_set & ~bit).bit_count() < 2:
                return False
        return True

    def extend(visited: int, current: int) -> bool:
        if visited == full:
            return bool(adj[current] & 1)
        candidates = adj[current] & ~visited
        while candidates:
            bit = candidates & -candidates
            candidates ^= bit
            nxt = bit.bit_length() - 1
            if not feasible(visited | bit, nxt):
                continue
            path.append(nxt)
            if extend(visited | bit, nxt):
                return True
            path.pop()
        return False

    return tuple(path) if extend(1, 0) else None


def is_hamiltonian_cycle(graph: Graph, cycle: tuple[int, ...]) -> bool:
    """True iff ``cycle`` is a permutation of V(G) whose cyclic successors are edges."""
    if len(cycle) != graph.n or set(cycle) != set(range(graph.n)):
        return False
    return all(graph.has_edge(cycle[i], cycle[(i + 1) % graph.n]) for i in range(graph.n))
