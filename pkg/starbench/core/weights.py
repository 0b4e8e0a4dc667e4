"""Pair classes, the triple weight distribution and vertex weights.

Weights are integers counting sixths, so 1/3 = 2, 1/2 = 3 and 1 = 6; every
comparison against the slack constants is exact.

A pair p = {u, v} is class A when z(p) >= 2k-1, B when k <= z(p) <= 2k-2,
and C otherwise. Each edge T spreads weight 6 over its three pairs sorted
by (-z, colex rank):

    all pairs in A+B, or all in B+C      ->  (2, 2, 2)
    p1 in A, p2 in A+B, p3 in C          ->  (3, 3, 0)
    p1 in A, p2 in C                     ->  (6, 0, 0)

W_v sums the weight T = {v} + p puts on p over the link of v. The audit
compares W_v with k(k-1) and, for even k, with k(k-3/2), and runs the
structure detectors when the slack threshold is crossed.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from itertools import combinations
import logging

import networkx as nx

from .errors import ConsistencyError, InvalidParameterError, PreconditionError
from .hypergraph import link_pairs
from .matching import is_factor_critical
from .stars import is_star_free
from .types import Graph, Pair, ThreeGraph, Triple, iter_pairs, normalize_triple, pair_rank

logger = logging.getLogger(__name__)

SIXTHS = 6


class PairClass(str, Enum):
    A = "A"
    B = "B"
    C = "C"


class WitnessKind(str, Enum):
    TWO_DISJOINT_KK = "two-disjoint-Kk"
    KK1_PLUS_CRITICAL = "Kk-1-plus-critical"
    CONDITIONS_ABC = "conditions-abc"
    NONE = "none"


def pair_class(z: int, k: int) -> PairClass:
    if z >= 2 * k - 1:
        return PairClass.A
    if z >= k:
        return PairClass.B
    return PairClass.C


def _check_k(k: int) -> None:
    if k < 2:
        raise InvalidParameterError(f"k must be >= 2, got {k}")


def bound_sixths(k: int) -> int:
    """k(k-1) in sixths."""
    return SIXTHS * k * (k - 1)


def even_bound_sixths(k: int) -> int:
    """k(k-3/2) in sixths."""
    return SIXTHS * k * k - 9 * k


def slack_threshold_sixths(k: int) -> int:
    """k(k-1) - 2/3: larger values need the two-disjoint-Kk structure."""
    return bound_sixths(k) - 4


def even_slack_threshold_sixths(k: int) -> int:
    """k(k-3/2) - 1/2: larger values need one of the even-k structures."""
    return even_bound_sixths(k) - 3


def format_sixths(value: int) -> str:
    return str(Fraction(value, SIXTHS))


# ---------------------------------------------------------------------------
#  Classes and weights
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PairClassTable:
    """Class of every pair of V(F) for a fixed k."""

    k: int
    n: int
    frequencies: dict[Pair, int] = field(repr=False)

    def z(self, u: int, v: int) -> int:
        return self.frequencies.get((min(u, v), max(u, v)), 0)

    def class_of(self, u: int, v: int) -> PairClass:
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise InvalidParameterError(f"({u}, {v}) is not a pair of V(F)")
        return pair_class(self.z(u, v), self.k)

    def items(self) -> Iterator[tuple[Pair, PairClass]]:
        for p in iter_pairs(self.n):
            yield p, pair_class(self.z(*p), self.k)

    def histogram(self) -> dict[PairClass, int]:
        counts = Counter(c for _, c in self.items())
        return {c: counts.get(c, 0) for c in PairClass}


def classify_pairs(graph: ThreeGraph, k: int) -> PairClassTable:
    _check_k(k)
    return PairClassTable(k, graph.n, dict(graph.pair_frequencies))


def _split(table: PairClassTable, triple: Triple) -> tuple[tuple[Pair, int], ...]:
    u, v, w = triple
    pairs = sorted(((u, v), (u, w), (v, w)), key=lambda p: (-table.z(*p), pair_rank(*p)))
    c1, c2, c3 = (pair_class(table.z(*p), table.k) for p in pairs)
    if {c1, c2, c3} <= {PairClass.A, PairClass.B} or {c1, c2, c3} <= {PairClass.B, PairClass.C}:
        shares = (2, 2, 2)
    elif c2 is PairClass.C:
        shares = (6, 0, 0)
    else:
        shares = (3, 3, 0)
    return tuple(zip(pairs, shares))


def triple_weights(graph: ThreeGraph, k: int, triple: Triple) -> tuple[tuple[Pair, int], ...]:
    """omega(T, p) for the three pairs of T, in sixths, heaviest pair first.

    Raises:
        InvalidParameterError: T is not an edge of F.
    """
    _check_k(k)
    t = normalize_triple(triple)
    if t not in graph.edges:
        raise InvalidParameterError(f"triple {t} is not an edge")
    return _split(classify_pairs(graph, k), t)


@dataclass(frozen=True)
class WeightTable:
    """Vertex weights W_v (sixths) and the per-edge distribution they come from."""

    k: int
    sixths: tuple[int, ...]
    omega: dict[Triple, dict[Pair, int]] = field(repr=False)

    def weight(self, v: int) -> Fraction:
        return Fraction(self.sixths[v], SIXTHS)

    @property
    def total(self) -> Fraction:
        return Fraction(sum(self.sixths), SIXTHS)


def vertex_weights(graph: ThreeGraph, k: int) -> WeightTable:
    """W_v for every vertex; both summation identities are checked exactly."""
    _check_k(k)
    table = classify_pairs(graph, k)
    omega: dict[Triple, dict[Pair, int]] = {}
    sixths = [0] * graph.n
    for t in graph.sorted_edges:
        split = dict(_split(table, t))
        if sum(split.values()) != SIXTHS:
            raise ConsistencyError(f"weights of {t} do not sum to 1", expected=SIXTHS, actual=split)
        omega[t] = split
        for v in t:
            sixths[v] += split[tuple(x for x in t if x != v)]  # type: ignore[index]
    if sum(sixths) != SIXTHS * graph.edge_count:
        raise ConsistencyError(
            "vertex weights do not sum to e(F)", expected=SIXTHS * graph.edge_count, actual=sum(sixths)
        )
    return WeightTable(k, tuple(sixths), omega)


def weight_surplus(graph: ThreeGraph, k: int) -> int:
    """n*B - e(F) in sixths, B = k(k-1) for odd k and k(k-3/2) for even k."""
    _check_k(k)
    per_vertex = bound_sixths(k) if k % 2 else even_bound_sixths(k)
    return graph.n * per_vertex - SIXTHS * graph.edge_count


# ---------------------------------------------------------------------------
#  Structure detectors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StructureWitness:
    """Named pieces of the link structure explaining a large W_v.

    Vertex ids are those of F.
    """

    kind: WitnessKind
    components: tuple[frozenset[int], ...] = ()
    removed: frozenset[int] = frozenset()
    critical: frozenset[int] = frozenset()
    low_vertex: int | None = None
    centers: tuple[int, ...] = ()
    leaves: frozenset[int] = frozenset()

    def to_dict(self) -> dict:
        d: dict = {"kind": self.kind.value}
        if self.components:
            d["components"] = [sorted(c) for c in self.components]
        if self.kind is WitnessKind.KK1_PLUS_CRITICAL:
            d["critical"] = sorted(self.critical)
            d["z"] = self.low_vertex
        if self.kind is WitnessKind.CONDITIONS_ABC:
            d["S"] = sorted(self.removed)
            d["F0"] = sorted(self.critical)
            d["centers"] = list(self.centers)
            d["leaves"] = sorted(self.leaves)
        return d


NO_STRUCTURE = StructureWitness(WitnessKind.NONE)


class _Link:
    """Link of v as a networkx graph on F's vertex ids, plus class lookups."""

    def __init__(self, graph: ThreeGraph, table: PairClassTable, v: int):
        self.v = v
        self.k = table.k
        self.table = table
        self.pairs = link_pairs(graph, v)
        self.nx = nx.Graph()
        self.nx.add_edges_from(self.pairs)

    @cached_property
    def support(self) -> frozenset[int]:
        return frozenset(self.nx.nodes)

    @cached_property
    def components(self) -> list[frozenset[int]]:
        return sorted((frozenset(c) for c in nx.connected_components(self.nx)), key=min)

    def all_edges_a(self) -> bool:
        return all(self.table.class_of(*p) is PairClass.A for p in self.pairs)

    def spokes_all_c(self) -> bool:
        return all(self.table.class_of(self.v, u) is PairClass.C for u in self.support)


def _as_graph(g: nx.Graph, vertices: frozenset[int]) -> Graph:
    order = sorted(vertices)
    index = {u: i for i, u in enumerate(order)}
    return Graph.from_edges(
        len(order), ((index[a], index[b]) for a, b in g.subgraph(order).edges()), tuple(order)
    )


def _is_complete(g: nx.Graph, vertices: frozenset[int], size: int) -> bool:
    m = len(vertices)
    return m == size and g.subgraph(vertices).number_of_edges() == m * (m - 1) // 2


def _critical_with_low_vertex(g: nx.Graph, vertices: frozenset[int], k: int) -> int | None:
    """The degree-(k-2) vertex if g[vertices] is factor-critical with degrees (k-1,...,k-1,k-2)."""
    sub = g.subgraph(vertices)
    degrees = sorted(d for _, d in sub.degree())
    if degrees != [k - 2] + [k - 1] * (len(vertices) - 1):
        return None
    if not is_factor_critical(_as_graph(g, vertices)):
        return None
    return next(u for u, d in sorted(sub.degree()) if d == k - 2)


def detect_two_disjoint_kk(link: _Link) -> StructureWitness | None:
    comps = [c for c in link.components if len(c) > 1]
    if len(comps) != 2 or not all(_is_complete(link.nx, c, link.k) for c in comps):
        return None
    if not link.all_edges_a():
        return None
    return StructureWitness(WitnessKind.TWO_DISJOINT_KK, components=tuple(comps))


def detect_kk1_plus_critical(link: _Link) -> StructureWitness | None:
    k = link.k
    comps = [c for c in link.components if len(c) > 1]
    if len(comps) != 2:
        return None
    small, large = sorted(comps, key=len)
    if not _is_complete(link.nx, small, k - 1) or len(large) != k + 1:
        return None
    low = _critical_with_low_vertex(link.nx, large, k)
    if low is None:
        return None
    return StructureWitness(
        WitnessKind.KK1_PLUS_CRITICAL, components=(small, large), critical=large, low_vertex=low
    )


def _star_partition(edges: set[Pair], stars: int, size: int) -> tuple[int, ...] | None:
    """Centers of an edge-disjoint split of ``edges`` into stars of exactly ``size`` edges.

    A star of maximum degree k-1 is taken to have exactly k-1 edges.
    """
    if not edges:
        return () if stars == 0 else None
    if stars == 0 or len(edges) != stars * size:
        return None
    first = min(edges)
    for center in first:
        incident = sorted(e for e in edges if center in e and e != first)
        for rest in combinations(incident, size - 1):
            star = {first, *rest}
            tail = _star_partition(edges - star, stars - 1, size)
            if tail is not None:
                return (center, *tail)
    return None


def detect_conditions_abc(link: _Link) -> StructureWitness | None:
    k = link.k
    g = link.nx
    if g.number_of_nodes() and max(d for _, d in g.degree()) > k - 1:
        return None
    if not (link.all_edges_a() and link.spokes_all_c()):
        return None
    support = sorted(link.support)
    for size in range((k - 2) // 2 + 1):
        target = 2 * k - 1 - 2 * size
        for removed in combinations(support, size):
            rest = g.subgraph(u for u in support if u not in removed)
            big = [frozenset(c) for c in nx.connected_components(rest) if len(c) > 1]
            if len(big) != 1 or len(big[0]) != target:
                continue
            f0 = big[0]
            if _critical_with_low_vertex(g, f0, k) is None:
                continue
            residual = {tuple(sorted(e)) for e in g.edges() if e[0] not in f0 and e[1] not in f0}
            centers = _star_partition(residual, size, k - 1)  # type: ignore[arg-type]
            if centers is None:
                continue
            touched = {x for e in residual for x in e}
            return StructureWitness(
                WitnessKind.CONDITIONS_ABC,
                removed=frozenset(removed),
                critical=f0,
                centers=centers,
                leaves=frozenset(touched - set(centers)),
            )
    return None


# ---------------------------------------------------------------------------
#  Audit
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeightRecord:
    vertex: int
    sixths: int
    bound: int
    even_bound: int | None
    histogram: dict[PairClass, int]
    witness: StructureWitness
    equality: bool
    exceeds_even_bound: bool
    violation: bool

    @property
    def slack(self) -> int:
        return self.bound - self.sixths

    def render(self) -> str:
        hist = ",".join(f"{c.value}={self.histogram[c]}" for c in PairClass)
        return (
            f"{self.vertex} {format_sixths(self.sixths)}({format_sixths(self.bound)}) "
            f"{hist} {self.witness.kind.value}"
        )

    def to_dict(self) -> dict:
        return {
            "v": self.vertex,
            "W": format_sixths(self.sixths),
            "bound": format_sixths(self.bound),
            "even_bound": None if self.even_bound is None else format_sixths(self.even_bound),
            "histogram": {c.value: n for c, n in self.histogram.items()},
            "witness": self.witness.to_dict(),
            "equality": self.equality,
            "exceeds_even_bound": self.exceeds_even_bound,
            "violation": self.violation,
        }


@dataclass(frozen=True)
class WeightAudit:
    k: int
    records: tuple[WeightRecord, ...]
    surplus: int

    @property
    def violations(self) -> tuple[WeightRecord, ...]:
        return tuple(r for r in self.records if r.violation)


def audit_weight_lemma(graph: ThreeGraph, k: int) -> WeightAudit:
    """Check the vertex-weight bounds on one k-star-free 3-graph.

    Raises:
        PreconditionError: F contains a k-star.
    """
    _check_k(k)
    if not is_star_free(graph, k):
        raise PreconditionError(f"the 3-graph contains a {k}-star")
    table = classify_pairs(graph, k)
    weights = vertex_weights(graph, k)
    even = k % 2 == 0
    records = []
    for v in range(graph.n):
        w = weights.sixths[v]
        link = _Link(graph, table, v)
        witness = None
        violation = w > bound_sixths(k)
        if w > slack_threshold_sixths(k):
            witness = detect_two_disjoint_kk(link)
            violation = violation or witness is None
        # above k(k-3/2) itself is reported data, not a violation
        if even and even_slack_threshold_sixths(k) < w <= even_bound_sixths(k):
            witness = witness or detect_kk1_plus_critical(link) or detect_conditions_abc(link)
            violation = violation or witness is None
        hist = Counter(table.class_of(*p) for p in link.pairs)
        records.append(
            WeightRecord(
                vertex=v,
                sixths=w,
                bound=bound_sixths(k),
                even_bound=even_bound_sixths(k) if even else None,
                histogram={c: hist.get(c, 0) for c in PairClass},
                witness=witness or NO_STRUCTURE,
                equality=w == (even_bound_sixths(k) if even else bound_sixths(k)),
                exceeds_even_bound=even and w > even_bound_sixths(k),
                violation=violation,
            )
        )
    audit = WeightAudit(k, tuple(records), weight_surplus(graph, k))
    if audit.violations:
        logger.warning("Weight audit found %d violating vertices", len(audit.violations))
    return audit
