"""Combinatorial value types for starbench.

All structural types are defined in this single module:
- Ranking: colexicographic ranks of pairs and triples
- ThreeGraph: 3-uniform hypergraph on vertices 0..n-1
- Graph: simple 2-graph (links, G_k, matching lemmas)

Vertices are dense integers. Both graph types may carry a label map back
to the vertex ids of the object they were derived from, so identity
survives links, vertex removal and induced subgraphs.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb

import networkx as nx

from .errors import InvalidParameterError

Pair = tuple[int, int]
Triple = tuple[int, int, int]


# ---------------------------------------------------------------------------
#  Ranking
# ---------------------------------------------------------------------------


def triple_rank(u: int, v: int, w: int) -> int:
    """Colex rank of the sorted triple u < v < w.

    >>> triple_rank(0, 1, 2), triple_rank(0, 1, 3), triple_rank(1, 2, 3)
    (0, 1, 3)
    """
    if not (0 <= u < v < w):
        raise InvalidParameterError(f"triple must be sorted and distinct, got ({u}, {v}, {w})")
    return comb(w, 3) + comb(v, 2) + u


def triple_unrank(rank: int, n: int) -> Triple:
    """Inverse of triple_rank over the C(n,3) triples of [n]."""
    total = comb(n, 3)
    if not (0 <= rank < total):
        raise InvalidParameterError(f"rank must be in 0..{total - 1}, got {rank}")
    w = 2
    while comb(w + 1, 3) <= rank:
        w += 1
    rank -= comb(w, 3)
    v = 1
    while comb(v + 1, 2) <= rank:
        v += 1
    rank -= comb(v, 2)
    return (rank, v, w)


def pair_rank(u: int, v: int) -> int:
    """Colex rank of the sorted pair u < v."""
    if not (0 <= u < v):
        raise InvalidParameterError(f"pair must be sorted and distinct, got ({u}, {v})")
    return comb(v, 2) + u


def colex_key(item: tuple[int, ...]) -> tuple[int, ...]:
    """Sort key giving colex order on sorted tuples of equal size."""
    return item[::-1]


def normalize_triple(triple: Iterable[int]) -> Triple:
    """Return the triple sorted ascending; reject repeated vertices."""
    t = tuple(sorted(triple))
    if len(t) != 3 or len(set(t)) != 3:
        raise InvalidParameterError(f"a triple needs 3 distinct vertices, got {tuple(triple)}")
    return t  # type: ignore[return-value]


def normalize_pair(pair: Iterable[int]) -> Pair:
    """Return the pair sorted ascending; reject loops."""
    p = tuple(sorted(pair))
    if len(p) != 2 or p[0] == p[1]:
        raise InvalidParameterError(f"a pair needs 2 distinct vertices, got {tuple(pair)}")
    return p  # type: ignore[return-value]


def iter_triples(n: int) -> Iterator[Triple]:
    """All triples of [n] in colex order (rank 0 first)."""
    for w in range(2, n):
        for v in range(1, w):
            for u in range(v):
                yield (u, v, w)


def iter_pairs(n: int) -> Iterator[Pair]:
    """All pairs of [n] in colex order."""
    for v in range(1, n):
        for u in range(v):
            yield (u, v)


def _check_labels(labels: tuple[int, ...] | None, n: int) -> None:
    if labels is not None and len(labels) != n:
        raise InvalidParameterError(f"label map needs {n} entries, got {len(labels)}")


# ---------------------------------------------------------------------------
#  ThreeGraph
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ThreeGraph:
    """3-uniform hypergraph on vertices 0..n-1 with sorted triples."""

    n: int
    edges: frozenset[Triple]
    labels: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameterError(f"vertex count must be non-negative, got {self.n}")
        for t in self.edges:
            if len(t) != 3 or not (0 <= t[0] < t[1] < t[2] < self.n):
                raise InvalidParameterError(f"invalid triple {t} for n={self.n}")
        _check_labels(self.labels, self.n)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Iterable[int]],
        labels: tuple[int, ...] | None = None,
    ) -> ThreeGraph:
        """Build from arbitrary-order vertex triples (normalized here)."""
        return cls(n, frozenset(normalize_triple(t) for t in edges), labels)

    @classmethod
    def empty(cls, n: int) -> ThreeGraph:
        return cls(n, frozenset())

    def __contains__(self, triple: object) -> bool:
        return triple in self.edges

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def edge_count(self) -> int:
        """e(F)."""
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Triple, ...]:
        """Edges in colex order."""
        return tuple(sorted(self.edges, key=colex_key))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for t in self.edges:
            for x in t:
                deg[x] += 1
        return tuple(deg)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.degrees[v]

    @cached_property
    def pair_frequencies(self) -> dict[Pair, int]:
        """z(u,v) for every pair that lies in at least one edge."""
        freq: dict[Pair, int] = {}
        for u, v, w in self.edges:
            for p in ((u, v), (u, w), (v, w)):
                freq[p] = freq.get(p, 0) + 1
        return freq

    def label(self, v: int) -> int:
        """Original vertex id of v (identity when no label map is attached)."""
        self._check_vertex(v)
        return v if self.labels is None else self.labels[v]

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise InvalidParameterError(f"vertex {v} out of range for n={self.n}")


# ---------------------------------------------------------------------------
#  Graph
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 0..n-1 with sorted pairs."""

    n: int
    edges: frozenset[Pair]
    labels: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameterError(f"vertex count must be non-negative, got {self.n}")
        for e in self.edges:
            if len(e) != 2 or not (0 <= e[0] < e[1] < self.n):
                raise InvalidParameterError(f"invalid edge {e} for n={self.n}")
        _check_labels(self.labels, self.n)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Iterable[int]],
        labels: tuple[int, ...] | None = None,
    ) -> Graph:
        return cls(n, frozenset(normalize_pair(e) for e in edges), labels)

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, frozenset(combinations(range(n), 2)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> Graph:
        return cls.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))

    @classmethod
    def petersen(cls) -> Graph:
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)

    def __contains__(self, edge: object) -> bool:
        return edge in self.edges

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Pair, ...]:
        """Edges in lex order."""
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return tuple(frozenset(s) for s in adj)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbourhoods as vertex bitmasks."""
        masks = [0] * self.n
        for a, b in self.edges:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        return tuple(masks)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    @property
    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees sorted non-increasing."""
        return tuple(sorted(self.degrees, reverse=True))

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def label(self, v: int) -> int:
        if not (0 <= v < self.n):
            raise InvalidParameterError(f"vertex {v} out of range for n={self.n}")
        return v if self.labels is None else self.labels[v]

    def remove_edge(self, edge: Iterable[int]) -> Graph:
        """G - f; the vertex set is unchanged."""
        e = normalize_pair(edge)
        if e not in self.edges:
            raise InvalidParameterError(f"edge {e} not in graph")
        return Graph(self.n, self.edges - {e}, self.labels)

    def remove_vertices(self, removed: Iterable[int]) -> Graph:
        """G - X with dense relabeling; the label map is composed."""
        gone = set(removed)
        keep = [v for v in range(self.n) if v not in gone]
        return self.induced(keep)

    def induced(self, kept: Iterable[int]) -> Graph:
        """G[X] with dense relabeling in increasing vertex order."""
        keep = sorted(set(kept))
        for v in keep:
            if not (0 <= v < self.n):
                raise InvalidParameterError(f"vertex {v} out of range for n={self.n}")
        index = {v: i for i, v in enumerate(keep)}
        edges = frozenset(
            (index[a], index[b]) for a, b in self.edges if a in index and b in index
        )
        return Graph(len(keep), edges, tuple(self.label(v) for v in keep))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g
