"""Operations on 3-uniform hypergraphs: K_n^3, links, pair frequencies, deletions."""

from __future__ import annotations

from collections.abc import Iterable
from itertools import combinations

from .errors import InvalidParameterError
from .types import Graph, Pair, ThreeGraph, Triple, normalize_triple


def complete_three_graph(n: int) -> ThreeGraph:
    """K_n^3: all C(n,3) triples."""
    if n < 3:
        raise InvalidParameterError(f"K_n^3 needs n >= 3, got {n}")
    return ThreeGraph(n, frozenset(combinations(range(n), 3)))


def link(graph: ThreeGraph, v: int) -> Graph:
    """N_F(v) as a 2-graph on V(F) - v.

    Vertices are relabeled densely; the label map points at the vertex
    ids of ``graph`` (or further back if ``graph`` itself carries labels).
    """
    if not (0 <= v < graph.n):
        raise InvalidParameterError(f"vertex {v} out of range for n={graph.n}")
    others = [u for u in range(graph.n) if u != v]
    index = {u: i for i, u in enumerate(others)}
    pairs = set()
    for t in graph.edges:
        if v in t:
            a, b = (x for x in t if x != v)
            pairs.add((index[a], index[b]))
    return Graph(graph.n - 1, frozenset(pairs), tuple(graph.label(u) for u in others))


def link_pairs(graph: ThreeGraph, v: int) -> frozenset[Pair]:
    """N_F(v) as pairs of original (unrelabeled) vertex ids of ``graph``."""
    if not (0 <= v < graph.n):
        raise InvalidParameterError(f"vertex {v} out of range for n={graph.n}")
    return frozenset(
        tuple(x for x in t if x != v)  # type: ignore[misc]
        for t in graph.edges
        if v in t
    )


def pair_frequency(graph: ThreeGraph, u: int, v: int) -> int:
    """z(u,v) = |{w : {u,v,w} in F}|."""
    if u == v:
        raise InvalidParameterError("pair frequency needs two distinct vertices")
    for x in (u, v):
        if not (0 <= x < graph.n):
            raise InvalidParameterError(f"vertex {x} out of range for n={graph.n}")
    return graph.pair_frequencies.get((min(u, v), max(u, v)), 0)


def induced(graph: ThreeGraph, kept: Iterable[int]) -> ThreeGraph:
    """F[X]: edges inside X, vertices relabeled densely in increasing order."""
    keep = sorted(set(kept))
    for x in keep:
        if not (0 <= x < graph.n):
            raise InvalidParameterError(f"vertex {x} out of range for n={graph.n}")
    index = {x: i for i, x in enumerate(keep)}
    edges = frozenset(
        (index[a], index[b], index[c])
        for a, b, c in graph.edges
        if a in index and b in index and c in index
    )
    return ThreeGraph(len(keep), edges, tuple(graph.label(x) for x in keep))


def remove_vertices(graph: ThreeGraph, removed: Iterable[int]) -> ThreeGraph:
    """F - X: drop X and every edge meeting X."""
    gone = set(removed)
    for x in gone:
        if not (0 <= x < graph.n):
            raise InvalidParameterError(f"vertex {x} out of range for n={graph.n}")
    return induced(graph, (x for x in range(graph.n) if x not in gone))


def remove_edges(graph: ThreeGraph, removed: Iterable[Iterable[int]]) -> ThreeGraph:
    """F - Y: drop exactly the edges in Y; Y must be a subset of E(F)."""
    gone: set[Triple] = {normalize_triple(t) for t in removed}
    missing = gone - graph.edges
    if missing:
        raise InvalidParameterError(f"triples not in the hypergraph: {sorted(missing)}")
    return ThreeGraph(graph.n, graph.edges - gone, graph.labels)
