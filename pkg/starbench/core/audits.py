"""Lemma audits over generated instances.

- audit_degree_critical_lemma: G - f factor-critical for near-regular G
- audit_hamiltonian_lemma: 6-vertex graphs with degrees (3,3,3,3,2,2)
- audit_formulas: closed forms against the exact oracles and constructions
- audit_weight_corpus: weight bounds on seeded random star-free 3-graphs

Every audit returns an AuditReport whose text form ends with
``checked=<N> violations=<V>``.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, islice
import logging
import random
from typing import TypeVar

from ..const import DEFAULT_SAMPLES, DEFAULT_SEED, PROGRESS_EVERY_NODES
from .coloring import lower_bound_coloring, validate_rainbow_free
from .constructions import (
    LABEL_DISAGREE,
    ConstructionSpec,
    comparison_label,
    f_formula,
    is_constructible,
)
from .degree_sequences import MODE_EXHAUSTIVE, graphs_with_degree_sequence, is_graphical
from .errors import InvalidParameterError
from .generators import random_star_free
from .matching import hamiltonian_cycle, is_hamiltonian_cycle, non_critical_edges
from .serialization import dump_graph_inline
from .stars import link_star_profile
from .turan import exact_f
from .types import Graph, iter_pairs
from .weights import audit_weight_lemma, format_sixths

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

_CHUNK = 1024

# (n, k) instances for the exact-oracle and construction checks
FORMULA_EXACT_CASES: tuple[tuple[int, int], ...] = ((4, 2), (5, 2), (6, 2), (6, 3))
FORMULA_CONSTRUCTION_CASES: tuple[tuple[int, int], ...] = ((20, 3), (25, 5), (31, 7), (20, 4), (30, 6))
FORMULA_COLORING_CASES: tuple[tuple[int, int], ...] = ((20, 3), (20, 4))


@dataclass
class AuditReport:
    """Outcome of one audit.

    ``details`` are informational lines printed before the violations;
    only ``violations`` decide pass or fail.
    """

    name: str
    checked: int = 0
    violations: list[str] = field(default_factory=list)
    details: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def summary(self) -> str:
        return f"checked={self.checked} violations={len(self.violations)}"

    def lines(self) -> list[str]:
        return [*self.details, *self.violations, self.summary]

    def to_dict(self) -> dict:
        return {
            "audit": self.name,
            "checked": self.checked,
            "violations": list(self.violations),
            "details": list(self.details),
        }


def _evaluate(fn: Callable[[T], R], items: Iterable[T], threads: int) -> Iterator[tuple[T, R]]:
    """Apply fn to items, yielding (item, result) in generation order."""
    if threads <= 1:
        for item in items:
            yield item, fn(item)
        return
    it = iter(items)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        while chunk := list(islice(it, _CHUNK)):
            yield from zip(chunk, pool.map(fn, chunk))


# ---------------------------------------------------------------------------
#  Degree-critical graphs
# ---------------------------------------------------------------------------


def degree_critical_sequences(k: int, order: int) -> list[tuple[int, ...]]:
    """All entries k-1, or all k-1 except one k-2 (placed last)."""
    return [(k - 1,) * order, (k - 1,) * (order - 1) + (k - 2,)]


def _check_orders(k: int, orders: Iterable[int] | None) -> list[int]:
    if orders is None:
        return [m for m in range(k, 2 * k) if m % 2]
    chosen = sorted(set(orders))
    for m in chosen:
        if m % 2 == 0 or not k <= m <= 2 * k - 1:
            raise InvalidParameterError(f"orders must be odd and in {k}..{2 * k - 1}, got {m}")
    return chosen


def audit_degree_critical_lemma(
    k: int,
    *,
    mode: str = MODE_EXHAUSTIVE,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    orders: Iterable[int] | None = None,
    threads: int = 1,
) -> AuditReport:
    """Check that G - f is factor-critical for every edge f of every odd-order
    graph G on at most 2k-1 vertices with degrees k-1 (one vertex may have k-2).

    Args:
        k: Star size (>= 5).
        mode: ``exhaustive`` or ``sample``.
        samples: Graphs per degree sequence in sample mode.
        seed: Sampler seed; each sequence is sampled from this same seed.
        orders: Odd orders to audit; defaults to every odd order in k..2k-1.
        threads: Worker threads for the per-graph checks.

    Returns:
        Report with one ``COUNTEREXAMPLE <graph> edge=u,v`` line per failure.

    Raises:
        InvalidParameterError: k < 5 or a bad order.
        SizeLimitError: exhaustive enumeration above the generator limit.
    """
    if k < 5:
        raise InvalidParameterError(f"k must be >= 5, got {k}")
    report = AuditReport("degree-critical")
    for order in _check_orders(k, orders):
        for seq in degree_critical_sequences(k, order):
            if not is_graphical(seq):
                report.details.append(f"# skipped non-graphical {','.join(map(str, seq))}")
                continue
            graphs = graphs_with_degree_sequence(seq, mode=mode, count=samples, seed=seed)
            before = report.checked
            for graph, bad in _evaluate(non_critical_edges, graphs, threads):
                report.checked += 1
                if report.checked % PROGRESS_EVERY_NODES == 0:
                    logger.debug("degree-critical audit: %d graphs checked", report.checked)
                for u, v in bad:
                    report.violations.append(f"COUNTEREXAMPLE {dump_graph_inline(graph)} edge={u},{v}")
            logger.info("Order %d sequence %s: %d graphs", order, seq, report.checked - before)
    logger.info("Degree-critical audit k=%d: %s", k, report.summary)
    return report


# ---------------------------------------------------------------------------
#  Hamiltonicity
# ---------------------------------------------------------------------------

HAMILTONIAN_DEGREES = (3, 3, 3, 3, 2, 2)


def hamiltonian_lemma_graphs() -> Iterator[Graph]:
    """Labeled 6-vertex graphs with degree multiset {3,3,3,3,2,2}."""
    n = len(HAMILTONIAN_DEGREES)
    target = tuple(sorted(HAMILTONIAN_DEGREES, reverse=True))
    pairs = list(iter_pairs(n))
    for edges in combinations(pairs, sum(HAMILTONIAN_DEGREES) // 2):
        graph = Graph(n, frozenset(edges))
        if graph.degree_sequence == target:
            yield graph


def audit_hamiltonian_lemma() -> AuditReport:
    """Every graph from hamiltonian_lemma_graphs has a Hamiltonian cycle."""
    report = AuditReport("hamiltonian")
    for graph in hamiltonian_lemma_graphs():
        report.checked += 1
        cycle = hamiltonian_cycle(graph)
        if cycle is None or not is_hamiltonian_cycle(graph, cycle):
            report.violations.append(f"NON-HAMILTONIAN {dump_graph_inline(graph)}")
    logger.info("Hamiltonian audit: %s", report.summary)
    return report


# ---------------------------------------------------------------------------
#  Formulas
# ---------------------------------------------------------------------------


def audit_formulas(
    *,
    budget: float | None = None,
    exact_cases: Iterable[tuple[int, int]] = FORMULA_EXACT_CASES,
    construction_cases: Iterable[tuple[int, int]] = FORMULA_CONSTRUCTION_CASES,
    coloring_cases: Iterable[tuple[int, int]] = FORMULA_COLORING_CASES,
) -> AuditReport:
    """Compare f_formula with exact_f, and check the constructions and their colorings.

    A mismatch counts as a violation only when n is inside the formula's
    regime; below it the line is labeled disagree-below-threshold.
    """
    report = AuditReport("formulas")
    for n, k in exact_cases:
        outcome = exact_f(n, k, budget=budget)
        formula = f_formula(n, k)
        label = comparison_label(outcome.value, formula, proven=outcome.proven)
        line = (
            f"f n={n} k={k} exact={outcome.value} status={outcome.status.value} "
            f"formula={formula.value} label={label}"
        )
        report.checked += 1
        if label == LABEL_DISAGREE:
            report.violations.append(f"MISMATCH {line}")
        else:
            report.details.append(line)
        if is_constructible(n, k):
            built = ConstructionSpec.for_parameters(n, k).build().edge_count
            report.checked += 1
            if built > outcome.value:
                report.violations.append(f"MISMATCH construction n={n} k={k} edges={built} > exact")

    for n, k in construction_cases:
        spec = ConstructionSpec.for_parameters(n, k)
        graph = spec.build()
        profile = link_star_profile(graph)
        formula = f_formula(n, k).value
        star_free = max(profile) <= k - 1
        line = (
            f"construction kind={spec.kind.value} n={n} k={k} edges={graph.edge_count} "
            f"formula={formula} star-free={'yes' if star_free else 'no'} max-star={max(profile)}"
        )
        report.checked += 1
        if graph.edge_count != formula or not star_free or max(profile) != k - 1:
            report.violations.append(f"MISMATCH {line}")
        else:
            report.details.append(line)

    for n, k in coloring_cases:
        coloring = lower_bound_coloring(n, k)
        ok = validate_rainbow_free(coloring, k + 1)
        expected = f_formula(n, k).value + 1
        line = f"coloring n={n} k={k} colors={coloring.t} rainbow-free={'yes' if ok else 'no'}"
        report.checked += 1
        if not ok or coloring.t != expected:
            report.violations.append(f"MISMATCH {line}")
        else:
            report.details.append(line)
    logger.info("Formula audit: %s", report.summary)
    return report


# ---------------------------------------------------------------------------
#  Weight corpus
# ---------------------------------------------------------------------------


def audit_weight_corpus(
    count: int,
    max_n: int,
    *,
    ks: Iterable[int] = (3, 4, 5),
    seed: int = DEFAULT_SEED,
) -> AuditReport:
    """Run audit_weight_lemma on ``count`` seeded random star-free 3-graphs.

    Instance i uses k = ks[i mod len(ks)], n uniform in k+2..max_n and a
    uniform density in [0.3, 0.9]. Even-k vertices above the even bound
    are listed as details, not violations.
    """
    ks = tuple(ks)
    if count < 1:
        raise InvalidParameterError(f"count must be >= 1, got {count}")
    if not ks or min(ks) < 2:
        raise InvalidParameterError(f"ks must be non-empty with every k >= 2, got {ks}")
    if max_n < max(ks) + 2:
        raise InvalidParameterError(f"max_n must be >= {max(ks) + 2}, got {max_n}")
    rng = random.Random(seed)
    report = AuditReport("weight")
    for i in range(count):
        k = ks[i % len(ks)]
        n = rng.randint(k + 2, max_n)
        graph = random_star_free(n, k, rng, density=rng.uniform(0.3, 0.9))
        audit = audit_weight_lemma(graph, k)
        report.checked += 1
        for record in audit.records:
            where = f"instance={i} n={n} k={k} m={graph.edge_count} v={record.vertex}"
            if record.violation:
                report.violations.append(f"VIOLATION {where} W={format_sixths(record.sixths)}")
            elif record.exceeds_even_bound:
                report.details.append(f"# above-even-bound {where} W={format_sixths(record.sixths)}")
    logger.info("Weight corpus audit: %s", report.summary)
    return report
