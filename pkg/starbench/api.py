"""starbench public API: one-call workflows over the core modules."""

from __future__ import annotations

import logging
from pathlib import Path

from .core.ar_search import ArReport, ar_exact
from .core.audits import (
    AuditReport,
    audit_degree_critical_lemma,
    audit_formulas,
    audit_hamiltonian_lemma,
    audit_weight_corpus,
)
from .core.coloring import EdgeColoring
from .core.constructions import ConstructionKind, ConstructionSpec
from .core.errors import InvalidParameterError
from .core.search import SearchOutcome
from .core.serialization import (
    dump_coloring,
    dump_three_graph,
    parse_coloring,
    parse_three_graph,
)
from .core.stars import StarWitness, find_k_star
from .core.turan import exact_f
from .core.types import ThreeGraph

logger = logging.getLogger(__name__)

AUDITS = ("degree-critical", "hamiltonian", "weight", "formulas")


def load_three_graph(path: str | Path) -> ThreeGraph:
    """Read a 3-graph file.

    Raises:
        OSError: The file cannot be read.
        FormatError: The content is malformed.
    """
    return parse_three_graph(Path(path).read_text())


def save_three_graph(graph: ThreeGraph, path: str | Path, comments: tuple[str, ...] = ()) -> None:
    Path(path).write_text(dump_three_graph(graph, comments))
    logger.info("Wrote %d edges to %s", graph.edge_count, path)


def load_coloring(path: str | Path) -> EdgeColoring:
    """Read a coloring file (all C(n,3) triples in colex order).

    Raises:
        OSError: The file cannot be read.
        FormatError: The content is malformed or the coloring is not surjective.
    """
    return parse_coloring(Path(path).read_text())


def save_coloring(coloring: EdgeColoring, path: str | Path, comments: tuple[str, ...] = ()) -> None:
    Path(path).write_text(dump_coloring(coloring, comments))
    logger.info("Wrote %d-coloring of K_%d^3 to %s", coloring.t, coloring.n, path)


def construct(n: int, k: int, kind: str | None = None) -> tuple[ThreeGraph, ConstructionSpec]:
    """Build the extremal k-star-free 3-graph on n vertices.

    Args:
        n: Number of vertices.
        k: Star size; odd k uses the odd construction, even k the even one.
        kind: ``"odd"`` or ``"even"``; must match the parity of k when given.

    Returns:
        The 3-graph and the spec naming its vertex roles.

    Raises:
        InvalidParameterError: kind does not match k, or n too small.
    """
    spec = ConstructionSpec.for_parameters(n, k)
    if kind is not None and ConstructionKind(kind) is not spec.kind:
        raise InvalidParameterError(f"the {kind} construction needs {kind} k, got k={k}")
    return spec.build(), spec


def check_star_free(graph: ThreeGraph, k: int) -> StarWitness | None:
    """None if the 3-graph is k-star-free, otherwise the first k-star found."""
    return find_k_star(graph, k)


def exact_turan(n: int, k: int, **kwargs) -> SearchOutcome[ThreeGraph]:
    """Exact f(n, k); keyword arguments go to exact_f."""
    return exact_f(n, k, **kwargs)


def anti_ramsey(n: int, s: int, **kwargs) -> ArReport:
    """Exact ar(n, s) with the formula comparison; keyword arguments go to max_colors_no_rainbow."""
    return ar_exact(n, s, **kwargs)


def run_audit(name: str, **kwargs) -> AuditReport:
    """Run one of the named audits in AUDITS with its keyword arguments.

    Raises:
        InvalidParameterError: Unknown audit name.
    """
    if name == "degree-critical":
        return audit_degree_critical_lemma(**kwargs)
    if name == "hamiltonian":
        return audit_hamiltonian_lemma(**kwargs)
    if name == "weight":
        return audit_weight_corpus(**kwargs)
    if name == "formulas":
        return audit_formulas(**kwargs)
    raise InvalidParameterError(f"unknown audit {name!r}; expected one of {', '.join(AUDITS)}")
