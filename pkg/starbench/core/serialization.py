"""Canonical text formats.

ThreeGraph:    ``n m`` then m lines ``u v w`` (u<v<w), colex order.
Graph:         ``n m`` then m lines ``u v`` (u<v), lex order.
EdgeColoring:  ``n t`` then C(n,3) lines ``u v w c`` in colex triple order.

Lines starting with ``#`` are comments and may appear anywhere; they are
dropped by the parsers, so the canonical (comment-free) text round-trips
bit-exactly.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from math import comb
from typing import TYPE_CHECKING

from .errors import FormatError, InvalidParameterError
from .types import Graph, ThreeGraph, iter_triples

if TYPE_CHECKING:
    from .coloring import EdgeColoring


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _ints(fields: list[str], expected: int, lineno: int) -> list[int]:
    if len(fields) != expected:
        raise FormatError(f"expected {expected} integers, got {len(fields)}", line=lineno)
    try:
        return [int(f) for f in fields]
    except ValueError as err:
        raise FormatError(f"not an integer: {err}", line=lineno) from err


def _header(lines: Iterator[tuple[int, list[str]]]) -> tuple[int, int, int]:
    try:
        lineno, fields = next(lines)
    except StopIteration as err:
        raise FormatError("empty input") from err
    a, b = _ints(fields, 2, lineno)
    if a < 0 or b < 0:
        raise FormatError("header values must be non-negative", line=lineno)
    return a, b, lineno


def _comment_block(comments: Iterable[str]) -> str:
    return "".join(f"# {c}\n" for c in comments)


# ---------------------------------------------------------------------------
#  ThreeGraph
# ---------------------------------------------------------------------------


def dump_three_graph(graph: ThreeGraph, comments: Iterable[str] = ()) -> str:
    body = "".join(f"{u} {v} {w}\n" for u, v, w in graph.sorted_edges)
    return f"{_comment_block(comments)}{graph.n} {graph.edge_count}\n{body}"


def parse_three_graph(text: str) -> ThreeGraph:
    lines = _content_lines(text)
    n, m, header_line = _header(lines)
    edges = set()
    for lineno, fields in lines:
        u, v, w = _ints(fields, 3, lineno)
        if not (0 <= u < v < w < n):
            raise FormatError(f"triple must satisfy 0 <= u < v < w < {n}", line=lineno)
        if (u, v, w) in edges:
            raise FormatError(f"duplicate triple {u} {v} {w}", line=lineno)
        edges.add((u, v, w))
    if len(edges) != m:
        raise FormatError(f"header announces {m} triples, found {len(edges)}", line=header_line)
    return ThreeGraph(n, frozenset(edges))


# ---------------------------------------------------------------------------
#  Graph
# ---------------------------------------------------------------------------


def dump_graph(graph: Graph, comments: Iterable[str] = ()) -> str:
    body = "".join(f"{a} {b}\n" for a, b in graph.sorted_edges)
    return f"{_comment_block(comments)}{graph.n} {graph.edge_count}\n{body}"


def dump_graph_inline(graph: Graph) -> str:
    """Single-line form of the graph format (line breaks become ';')."""
    return dump_graph(graph).rstrip("\n").replace("\n", ";")


def parse_graph(text: str) -> Graph:
    """Parse the graph format; ';' is accepted as a line separator."""
    lines = _content_lines(text.replace(";", "\n"))
    n, m, header_line = _header(lines)
    edges = set()
    for lineno, fields in lines:
        a, b = _ints(fields, 2, lineno)
        if not (0 <= a < b < n):
            raise FormatError(f"edge must satisfy 0 <= u < v < {n}", line=lineno)
        if (a, b) in edges:
            raise FormatError(f"duplicate edge {a} {b}", line=lineno)
        edges.add((a, b))
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}", line=header_line)
    return Graph(n, frozenset(edges))


# ---------------------------------------------------------------------------
#  EdgeColoring
# ---------------------------------------------------------------------------


def dump_coloring(coloring: EdgeColoring, comments: Iterable[str] = ()) -> str:
    body = "".join(
        f"{u} {v} {w} {c}\n" for (u, v, w), c in zip(iter_triples(coloring.n), coloring.colors)
    )
    return f"{_comment_block(comments)}{coloring.n} {coloring.t}\n{body}"


def parse_coloring(text: str) -> EdgeColoring:
    """Parse a coloring; every triple must be listed once, in colex order."""
    from .coloring import EdgeColoring

    lines = _content_lines(text)
    n, t, header_line = _header(lines)
    expected = iter_triples(n)
    colors: list[int] = []
    for lineno, fields in lines:
        u, v, w, c = _ints(fields, 4, lineno)
        want = next(expected, None)
        if want is None:
            raise FormatError(f"more than C({n},3) triples", line=lineno)
        if (u, v, w) != want:
            raise FormatError(f"expected triple {want} in colex order, got {(u, v, w)}", line=lineno)
        if not (0 <= c < t):
            raise FormatError(f"color {c} outside 0..{t - 1}", line=lineno)
        colors.append(c)
    if len(colors) != comb(n, 3):
        raise FormatError(f"expected {comb(n, 3)} triples, found {len(colors)}", line=header_line)
    try:
        return EdgeColoring(n, tuple(colors), t)
    except InvalidParameterError as err:
        raise FormatError(str(err), line=header_line) from err
