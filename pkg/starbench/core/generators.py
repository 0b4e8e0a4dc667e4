"""Seeded random corpora and exhaustive graph streams for tests and audits."""

from __future__ import annotations

from collections.abc import Iterator
import random

import networkx as nx

from ..const import ALL_GRAPHS_MAX_N, DEFAULT_SEED
from .errors import InvalidParameterError, SizeLimitError
from .hypergraph import remove_edges
from .stars import find_k_star
from .types import Graph, ThreeGraph, iter_triples


def _rng(rng: random.Random | None) -> random.Random:
    return rng if rng is not None else random.Random(DEFAULT_SEED)


def _check_probability(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise InvalidParameterError(f"probability must be in [0, 1], got {p}")


def random_graph(n: int, p: float, rng: random.Random | None = None) -> Graph:
    """G(n, p)."""
    _check_probability(p)
    g = nx.gnp_random_graph(n, p, seed=_rng(rng))
    return Graph.from_edges(n, g.edges())


def random_three_graph(n: int, p: float, rng: random.Random | None = None) -> ThreeGraph:
    """Each triple independently with probability p, drawn in colex order."""
    _check_probability(p)
    r = _rng(rng)
    return ThreeGraph(n, frozenset(t for t in iter_triples(n) if r.random() < p))


def random_star_free(
    n: int, k: int, rng: random.Random | None = None, density: float = 0.5
) -> ThreeGraph:
    """Random 3-graph thinned until k-star-free by deleting one ray of each k-star found."""
    if k < 1:
        raise InvalidParameterError(f"k must be >= 1, got {k}")
    r = _rng(rng)
    graph = random_three_graph(n, density, r)
    while (star := find_k_star(graph, k)) is not None:
        graph = remove_edges(graph, [r.choice(star.rays)])
    return graph


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, by edge bitmask over lex-ordered pairs."""
    if n < 0:
        raise InvalidParameterError(f"n must be >= 0, got {n}")
    if n > ALL_GRAPHS_MAX_N:
        raise SizeLimitError(f"all_graphs is limited to n <= {ALL_GRAPHS_MAX_N}, got {n}")
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))
