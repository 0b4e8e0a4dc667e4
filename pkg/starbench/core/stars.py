"""k-stars in 3-graphs.

An s-star with core v is the same thing as an s-matching in the link of v,
so every query here reduces to a maximum matching on a link.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameterError
from .hypergraph import link_pairs
from .matching import max_matching
from .types import Graph, Pair, ThreeGraph, Triple, colex_key, normalize_triple


@dataclass(frozen=True)
class StarWitness:
    """k triples through ``core`` whose other pairs are pairwise disjoint."""

    core: int
    rays: tuple[Triple, ...]

    def __post_init__(self):
        seen: set[int] = set()
        for ray in self.rays:
            if self.core not in ray:
                raise InvalidParameterError(f"ray {ray} does not contain core {self.core}")
            rest = set(ray) - {self.core}
            if rest & seen:
                raise InvalidParameterError(f"ray {ray} meets another ray outside the core")
            seen |= rest

    @property
    def k(self) -> int:
        return len(self.rays)

    @property
    def pairs(self) -> tuple[Pair, ...]:
        return tuple(
            tuple(x for x in ray if x != self.core)  # type: ignore[misc]
            for ray in self.rays
        )

    def to_dict(self) -> dict:
        return {"core": self.core, "rays": [list(r) for r in self.rays]}


def _link_graph(graph: ThreeGraph, v: int) -> Graph:
    # Keeps the vertex ids of ``graph``; v itself is isolated.
    return Graph(graph.n, link_pairs(graph, v))


def max_star(graph: ThreeGraph, v: int) -> int:
    """Largest s such that ``graph`` has an s-star with core v."""
    return max_matching(_link_graph(graph, v)).size


def max_star_backtracking(graph: ThreeGraph, v: int) -> int:
    """Same as max_star, by direct search over sets of pairwise-disjoint rays."""
    pairs = sorted(link_pairs(graph, v), key=colex_key)
    best = 0

    def extend(start: int, used: int, size: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + (len(pairs) - start) <= best:
            return
        for i in range(start, len(pairs)):
            a, b = pairs[i]
            bits = (1 << a) | (1 << b)
            if not used & bits:
                extend(i + 1, used | bits, size + 1)

    extend(0, 0, 0)
    return best


def link_star_profile(graph: ThreeGraph) -> tuple[int, ...]:
    """nu(link(F, v)) for every vertex v."""
    return tuple(max_star(graph, v) for v in range(graph.n))


def find_k_star(graph: ThreeGraph, k: int) -> StarWitness | None:
    """A k-star, taken at the smallest core that carries one, or None."""
    if k < 1:
        raise InvalidParameterError(f"k must be >= 1, got {k}")
    for v in range(graph.n):
        if graph.degrees[v] < k:
            continue
        matching = max_matching(_link_graph(graph, v))
        if matching.size >= k:
            rays = sorted((normalize_triple((v, *p)) for p in matching.pairs[:k]), key=colex_key)
            return StarWitness(v, tuple(rays))
    return None


def is_star_free(graph: ThreeGraph, k: int) -> bool:
    """True iff no vertex has a k-matching in its link."""
    return find_k_star(graph, k) is None
