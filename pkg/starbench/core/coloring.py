"""Edge-colorings of K_n^3, good pairs and rainbow stars.

- EdgeColoring: total, surjective coloring indexed by colex triple rank
- zc / good_pairs / disjoint_good_pairs / good_partner_counts
- find_rainbow_star: exact search for a rainbow s-star
- rainbow_extension_coloring / lower_bound_coloring: rainbow F plus one
  extra color on every other triple
- rainbow_representative_subgraph: one triple per color
"""

from __future__ import annotations

from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
import logging
from math import comb

import networkx as nx

from ..const import GOOD_PAIR_COUNT_OFFSET, GOOD_PAIR_FACTOR
from .constructions import ConstructionSpec
from .errors import InvalidParameterError
from .stars import StarWitness
from .types import Pair, ThreeGraph, Triple, colex_key, iter_pairs, iter_triples, triple_rank

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EdgeColoring:
    """Exactly-t coloring of all C(n,3) triples, stored in colex rank order."""

    n: int
    colors: tuple[int, ...]
    t: int

    def __post_init__(self):
        if self.n < 3:
            raise InvalidParameterError(f"a coloring of K_n^3 needs n >= 3, got {self.n}")
        if len(self.colors) != comb(self.n, 3):
            raise InvalidParameterError(
                f"expected {comb(self.n, 3)} colors for n={self.n}, got {len(self.colors)}"
            )
        if self.t < 1:
            raise InvalidParameterError(f"t must be >= 1, got {self.t}")
        bad = next((c for c in self.colors if not 0 <= c < self.t), None)
        if bad is not None:
            raise InvalidParameterError(f"color {bad} outside 0..{self.t - 1}")
        missing = self.t - len(set(self.colors))
        if missing:
            raise InvalidParameterError(f"coloring is not surjective: {missing} of {self.t} colors unused")

    @classmethod
    def monochromatic(cls, n: int) -> EdgeColoring:
        return cls(n, (0,) * comb(n, 3), 1)

    @classmethod
    def rainbow(cls, n: int) -> EdgeColoring:
        total = comb(n, 3)
        return cls(n, tuple(range(total)), total)

    @classmethod
    def from_labels(cls, n: int, labels: Iterable[int]) -> EdgeColoring:
        """Renumber arbitrary labels to 0..t-1 in order of first occurrence."""
        renumber: dict[int, int] = {}
        colors = tuple(renumber.setdefault(c, len(renumber)) for c in labels)
        return cls(n, colors, len(renumber))

    def color(self, triple: Iterable[int]) -> int:
        u, v, w = sorted(triple)
        return self.colors[triple_rank(u, v, w)]

    @cached_property
    def classes(self) -> tuple[tuple[Triple, ...], ...]:
        """Triples of each color, colex order within a class."""
        out: list[list[Triple]] = [[] for _ in range(self.t)]
        for t, c in zip(iter_triples(self.n), self.colors):
            out[c].append(t)
        return tuple(tuple(cls) for cls in out)

    @cached_property
    def pair_color_counts(self) -> dict[Pair, int]:
        return {p: len(zc(self, p)) for p in iter_pairs(self.n)}


# ---------------------------------------------------------------------------
#  Color sets and good pairs
# ---------------------------------------------------------------------------


def zc(coloring: EdgeColoring, vertices: Iterable[int]) -> frozenset[int]:
    """Z_c(U): colors on triples containing U, for |U| in {1, 2}."""
    u_set = sorted(set(vertices))
    if len(u_set) not in (1, 2):
        raise InvalidParameterError(f"U must have 1 or 2 vertices, got {len(u_set)}")
    for x in u_set:
        if not 0 <= x < coloring.n:
            raise InvalidParameterError(f"vertex {x} out of range for n={coloring.n}")
    others = [x for x in range(coloring.n) if x not in u_set]
    if len(u_set) == 2:
        return frozenset(coloring.color((*u_set, w)) for w in others)
    (u,) = u_set
    return frozenset(
        coloring.color((u, a, b)) for i, a in enumerate(others) for b in others[i + 1 :]
    )


def _threshold(k: int, factor: int) -> int:
    if k < 2:
        raise InvalidParameterError(f"k must be >= 2, got {k}")
    return factor * k


def good_pairs(coloring: EdgeColoring, k: int, *, factor: int = GOOD_PAIR_FACTOR) -> list[Pair]:
    """Pairs with z_c <= factor*k, colex order."""
    limit = _threshold(k, factor)
    return [p for p, count in coloring.pair_color_counts.items() if count <= limit]


def good_partner_counts(
    coloring: EdgeColoring, k: int, *, factor: int = GOOD_PAIR_FACTOR
) -> tuple[int, ...]:
    """For each u, how many v form a good pair with it."""
    counts = [0] * coloring.n
    for a, b in good_pairs(coloring, k, factor=factor):
        counts[a] += 1
        counts[b] += 1
    return tuple(counts)


@dataclass(frozen=True)
class GoodPairReport:
    k: int
    pairs: tuple[Pair, ...]
    colors: frozenset[int]

    @property
    def q(self) -> int:
        return len(self.colors)

    @property
    def q_bound(self) -> int:
        return 6 * self.k * self.k + 18 * self.k

    @property
    def within_bound(self) -> bool:
        return self.q <= self.q_bound

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "pairs": [list(p) for p in self.pairs],
            "q": self.q,
            "q_bound": self.q_bound,
            "within_bound": self.within_bound,
        }


def disjoint_good_pairs(
    coloring: EdgeColoring,
    k: int,
    count: int | None = None,
    *,
    factor: int = GOOD_PAIR_FACTOR,
) -> GoodPairReport | None:
    """Greedily pick ``count`` (default 2k+6) disjoint good pairs in colex order.

    Returns None when the greedy choice runs out of pairs.
    """
    if count is None:
        count = 2 * k + GOOD_PAIR_COUNT_OFFSET
    if count < 1:
        raise InvalidParameterError(f"count must be >= 1, got {count}")
    used: set[int] = set()
    chosen: list[Pair] = []
    for a, b in good_pairs(coloring, k, factor=factor):
        if a in used or b in used:
            continue
        chosen.append((a, b))
        used.update((a, b))
        if len(chosen) == count:
            colors = frozenset().union(*(zc(coloring, p) for p in chosen))
            return GoodPairReport(k, tuple(chosen), colors)
    logger.debug("Only %d disjoint good pairs available, wanted %d", len(chosen), count)
    return None


# ---------------------------------------------------------------------------
#  Rainbow stars
# ---------------------------------------------------------------------------


class _CoreSearch:
    """Rainbow matchings in the link of one core, colored by the triple colors.

    A color class with several candidate edges is branched on (unused, or
    used by one of its edges, tried by ascending z_c); once every class left
    has a single edge the question is an ordinary maximum matching.
    """

    def __init__(self, coloring: EdgeColoring, core: int):
        self.core = core
        self.zc = coloring.pair_color_counts
        self.edges: list[tuple[Pair, int]] = [
            ((a, b), coloring.color((core, a, b)))
            for a, b in iter_pairs(coloring.n)
            if core not in (a, b)
        ]

    def exists(self, blocked: frozenset[int], banned: frozenset[int], need: int) -> bool:
        if need <= 0:
            return True
        live = [(p, c) for p, c in self.edges if c not in banned and not blocked.intersection(p)]
        return self._exists(live, need)

    def _exists(self, live: list[tuple[Pair, int]], need: int) -> bool:
        if need <= 0:
            return True
        by_color: dict[int, list[Pair]] = {}
        for p, c in live:
            by_color.setdefault(c, []).append(p)
        if len(by_color) < need:
            return False
        g = nx.Graph()
        g.add_edges_from(p for p, _ in live)
        if len(nx.max_weight_matching(g, maxcardinality=True)) < need:
            return False
        multi = [(len(ps), c) for c, ps in by_color.items() if len(ps) > 1]
        if not multi:
            return True
        _, color = min(multi)
        rest = [(p, c) for p, c in live if c != color]
        if self._exists(rest, need):
            return True
        for a, b in sorted(by_color[color], key=lambda p: (self.zc[p], colex_key(p))):
            remaining = [(p, c) for p, c in rest if a not in p and b not in p]
            if self._exists(remaining, need - 1):
                return True
        return False

    def first_witness(self, s: int) -> StarWitness:
        """Colex-least rainbow s-matching, assuming one exists."""
        chosen: list[Pair] = []
        blocked: set[int] = set()
        banned: set[int] = set()
        for p, c in sorted(self.edges, key=lambda e: colex_key(e[0])):
            if len(chosen) == s:
                break
            if c in banned or blocked.intersection(p):
                continue
            if self.exists(frozenset(blocked | set(p)), frozenset(banned | {c}), s - len(chosen) - 1):
                chosen.append(p)
                blocked.update(p)
                banned.add(c)
        rays = sorted((tuple(sorted((self.core, *p))) for p in chosen), key=colex_key)
        return StarWitness(self.core, tuple(rays))  # type: ignore[arg-type]


def find_rainbow_star(coloring: EdgeColoring, s: int, *, threads: int = 1) -> StarWitness | None:
    """First rainbow s-star in (core, colex pair) order, or None.

    Raises:
        InvalidParameterError: s < 2 or n < 2s+1.
    """
    if s < 2:
        raise InvalidParameterError(f"s must be >= 2, got {s}")
    if coloring.n < 2 * s + 1:
        raise InvalidParameterError(f"an {s}-star needs n >= {2 * s + 1}, got n={coloring.n}")
    if coloring.t < s:
        return None
    searches = [_CoreSearch(coloring, v) for v in range(coloring.n)]

    def has_star(search: _CoreSearch) -> bool:
        return search.exists(frozenset(), frozenset(), s)

    if threads <= 1:
        hit = next((search for search in searches if has_star(search)), None)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            flags = list(pool.map(has_star, searches))
        hit = next((search for search, flag in zip(searches, flags) if flag), None)
    return None if hit is None else hit.first_witness(s)


def validate_rainbow_free(coloring: EdgeColoring, s: int) -> bool:
    """Independent check that no s-star is rainbow (trivially true when none fits)."""
    if coloring.n < 2 * s + 1:
        return True
    return find_rainbow_star(coloring, s) is None


# ---------------------------------------------------------------------------
#  Colorings built from 3-graphs
# ---------------------------------------------------------------------------


def rainbow_extension_coloring(graph: ThreeGraph) -> EdgeColoring:
    """Distinct colors on the edges of F (colex order), one extra color elsewhere."""
    total = comb(graph.n, 3)
    if graph.edge_count == total:
        raise InvalidParameterError("F is complete; the extra color would be unused")
    rank = {t: i for i, t in enumerate(graph.sorted_edges)}
    extra = graph.edge_count
    colors = tuple(rank.get(t, extra) for t in iter_triples(graph.n))
    return EdgeColoring(graph.n, colors, extra + 1)


def lower_bound_coloring(n: int, k: int) -> EdgeColoring:
    """Rainbow extremal k-star-free construction plus one extra color (f(n,k)+1 colors)."""
    if k < 3:
        raise InvalidParameterError(f"lower_bound_coloring needs k >= 3, got {k}")
    return rainbow_extension_coloring(ConstructionSpec.for_parameters(n, k).build())


def rainbow_representative_subgraph(
    coloring: EdgeColoring, excluded: Iterable[int] = ()
) -> ThreeGraph:
    """The colex-least triple of every color outside ``excluded``."""
    skip = set(excluded)
    bad = [c for c in skip if not 0 <= c < coloring.t]
    if bad:
        raise InvalidParameterError(f"excluded colors outside 0..{coloring.t - 1}: {sorted(bad)}")
    edges = frozenset(cls[0] for c, cls in enumerate(coloring.classes) if c not in skip)
    return ThreeGraph(coloring.n, edges)
