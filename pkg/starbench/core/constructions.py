"""Closed-form extremal values and the extremal constructions.

- f_formula / ar_formula: reference values with the order from which the
  closed form is claimed
- matching_extremal_edges: most edges of a graph with matching number <= s
- ConstructionSpec: vertex roles of the odd and even constructions
- construct_odd, build_gk, construct_even: the extremal k-star-free 3-graphs

Role indices are fixed (odd: S = 0..k-1, R = k..2k-1; even: x_i = i-1,
y_i = k+i-2, z = 2k-2, free vertices after them) so every construction is
bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
import logging
from math import comb

from .errors import ConsistencyError, InvalidParameterError
from .stars import find_k_star
from .types import Graph, ThreeGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FormulaValue:
    """A closed-form value and the smallest n from which it is claimed."""

    value: int
    min_n: int
    in_regime: bool
    source: str

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "min_n": self.min_n,
            "in_regime": self.in_regime,
            "source": self.source,
        }


LABEL_AGREE = "agree"
LABEL_DISAGREE_BELOW = "disagree-below-threshold"
LABEL_DISAGREE = "disagree"
LABEL_NO_CLAIM = "no-claim"


def comparison_label(value: int, formula: FormulaValue, *, proven: bool = True) -> str:
    """Compare a computed value with a formula; only a mismatch in the regime is "disagree"."""
    if not proven:
        return LABEL_NO_CLAIM
    if value == formula.value:
        return LABEL_AGREE
    return LABEL_DISAGREE if formula.in_regime else LABEL_DISAGREE_BELOW


# ---------------------------------------------------------------------------
#  Formulas
# ---------------------------------------------------------------------------


def _turan_k2(n: int) -> int:
    return {0: n, 1: n - 1, 2: n - 2, 3: n - 2}[n % 4]


def f_formula(n: int, k: int) -> FormulaValue:
    """Closed-form f(n, k), dispatched on k = 2, odd k and even k."""
    if k < 2:
        raise InvalidParameterError(f"k must be >= 2, got {k}")
    if n < 3:
        raise InvalidParameterError(f"n must be >= 3, got {n}")
    if k == 2:
        return FormulaValue(_turan_k2(n), 3, True, "k=2, by n mod 4")
    if k % 2:
        value = (n - 2 * k) * k * (k - 1) + 2 * comb(k, 3)
        min_n = k * (k - 1) * (5 * k + 2) // 2 + 1
        source = "odd k"
    else:
        value = (n * k * (2 * k - 3) - (2 * k**3 - 9 * k + 6)) // 2
        min_n = 2 * k**3 - 9 * k + 8
        source = "even k"
    return FormulaValue(value, min_n, n >= min_n, source)


def ar_formula(n: int, s: int) -> FormulaValue:
    """Reference anti-Ramsey number ar(n, s)."""
    if s < 2:
        raise InvalidParameterError(f"s must be >= 2, got {s}")
    if n < 3:
        raise InvalidParameterError(f"n must be >= 3, got {n}")
    if s == 2:
        return FormulaValue(2, 3, True, "s=2, from the definition")
    if s == 3:
        extra = 2 if n % 4 in (0, 1) else 3
        return FormulaValue(_turan_k2(n) + extra, 20, n >= 20, f"s=3, f(n,2)+{extra}")
    k = s - 1
    min_n = (5 * k**3 + 15 * k**2 + 52 * k - 6) // 2 + 1
    return FormulaValue(f_formula(n, k).value + 2, min_n, n >= min_n, "f(n,s-1)+2")


def matching_extremal_edges(m: int, s: int) -> int:
    """Maximum edge count of a graph on m vertices with nu <= s."""
    if m < 0 or s < 0:
        raise InvalidParameterError(f"need m, s >= 0, got m={m}, s={s}")
    if m <= 2 * s + 1:
        return comb(m, 2)
    return max(comb(2 * s + 1, 2), comb(s, 2) + s * (m - s))


# ---------------------------------------------------------------------------
#  Roles
# ---------------------------------------------------------------------------


class ConstructionKind(str, Enum):
    ODD = "odd"
    EVEN = "even"


@dataclass(frozen=True)
class ConstructionSpec:
    """Parameters and vertex roles of an extremal construction."""

    n: int
    k: int
    kind: ConstructionKind

    def __post_init__(self):
        object.__setattr__(self, "kind", ConstructionKind(self.kind))
        if self.kind is ConstructionKind.ODD:
            if self.k < 3 or self.k % 2 == 0:
                raise InvalidParameterError(f"odd construction needs odd k >= 3, got k={self.k}")
            if self.n < 2 * self.k:
                raise InvalidParameterError(f"odd construction needs n >= 2k, got n={self.n}")
        else:
            if self.k < 4 or self.k % 2:
                raise InvalidParameterError(f"even construction needs even k >= 4, got k={self.k}")
            if self.n < 2 * self.k - 1:
                raise InvalidParameterError(f"even construction needs n >= 2k-1, got n={self.n}")

    @classmethod
    def for_parameters(cls, n: int, k: int) -> ConstructionSpec:
        """Pick the construction matching the parity of k."""
        return cls(n, k, ConstructionKind.ODD if k % 2 else ConstructionKind.EVEN)

    @property
    def s_set(self) -> range:
        return range(0, self.k)

    @property
    def r_set(self) -> range:
        return range(self.k, 2 * self.k)

    def x(self, i: int) -> int:
        return i - 1

    def y(self, i: int) -> int:
        return self.k + i - 2

    @property
    def z(self) -> int:
        return 2 * self.k - 2

    @property
    def header_comment(self) -> str:
        k = self.k
        if self.kind is ConstructionKind.ODD:
            return f"S=0..{k - 1} R={k}..{2 * k - 1}"
        return f"x=0..{k - 2} y={k - 1}..{2 * k - 3} z={2 * k - 2}"

    def build(self) -> ThreeGraph:
        if self.kind is ConstructionKind.ODD:
            return construct_odd(self.n, self.k)
        return construct_even(self.n, self.k)


def is_constructible(n: int, k: int) -> bool:
    """True if an extremal construction exists for (n, k)."""
    try:
        ConstructionSpec.for_parameters(n, k)
    except InvalidParameterError:
        return False
    return True


def _self_check(graph: ThreeGraph, n: int, k: int) -> ThreeGraph:
    expected = f_formula(n, k).value
    if graph.edge_count != expected:
        raise ConsistencyError(
            f"construction at n={n}, k={k} does not match f(n,k)",
            expected=expected,
            actual=graph.edge_count,
        )
    witness = find_k_star(graph, k)
    if witness is not None:
        raise ConsistencyError(
            f"construction at n={n}, k={k} contains a {k}-star", expected=None, actual=witness
        )
    return graph


# ---------------------------------------------------------------------------
#  Constructions
# ---------------------------------------------------------------------------


def construct_odd(n: int, k: int) -> ThreeGraph:
    """Triples with two or more vertices in S and none in R, and vice versa."""
    ConstructionSpec(n, k, ConstructionKind.ODD)
    edges = set()
    for t in combinations(range(n), 3):
        in_s = sum(x < k for x in t)
        in_r = sum(k <= x < 2 * k for x in t)
        if (in_s >= 2 and in_r == 0) or (in_r >= 2 and in_s == 0):
            edges.add(t)
    logger.debug("Odd construction n=%d k=%d has %d edges", n, k, len(edges))
    return _self_check(ThreeGraph(n, frozenset(edges)), n, k)


def build_gk(k: int) -> Graph:
    """The (2k-1)-vertex graph underlying the even construction.

    All x_i y_j, except x_i y_i with 2i > k, plus x_i z and y_i z for 2i > k.
    """
    if k < 4 or k % 2:
        raise InvalidParameterError(f"G_k needs even k >= 4, got k={k}")
    spec = ConstructionSpec(2 * k - 1, k, ConstructionKind.EVEN)
    edges = []
    for i in range(1, k):
        for j in range(1, k):
            if not (i == j and 2 * i > k):
                edges.append((spec.x(i), spec.y(j)))
        if 2 * i > k:
            edges.append((spec.x(i), spec.z))
            edges.append((spec.y(i), spec.z))
    return Graph.from_edges(2 * k - 1, edges)


def construct_even(n: int, k: int) -> ThreeGraph:
    """Triples meeting V(G_k) in exactly one edge of G_k, triples inside
    V(G_k) containing at least two edges of G_k, and the k/2 triples
    {z, x_1, y_i} for i <= k/2.

    The extra link pairs of z all meet x_1, so z keeps a (k-1)-matching at most.
    """
    spec = ConstructionSpec(n, k, ConstructionKind.EVEN)
    gk = build_gk(k)
    core = 2 * k - 1
    edges = set()
    for t in combinations(range(n), 3):
        inside = [x for x in t if x < core]
        if len(inside) == 2:
            if gk.has_edge(*inside):
                edges.add(t)
        elif len(inside) == 3:
            a, b, c = t
            if gk.has_edge(a, b) + gk.has_edge(a, c) + gk.has_edge(b, c) >= 2:
                edges.add(t)
    for i in range(1, k // 2 + 1):
        edges.add(tuple(sorted((spec.z, spec.x(1), spec.y(i)))))
    logger.debug("Even construction n=%d k=%d has %d edges", n, k, len(edges))
    return _self_check(ThreeGraph(n, frozenset(edges)), n, k)
