"""Degree sequences: graphicality, exhaustive labeled enumeration, sampling."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from itertools import combinations
import logging
import random

import networkx as nx

from ..const import DEFAULT_SEED, DEGREE_SEQUENCE_MAX_SUM
from .errors import InvalidParameterError, SizeLimitError
from .types import Graph

logger = logging.getLogger(__name__)

MODE_EXHAUSTIVE = "exhaustive"
MODE_SAMPLE = "sample"


def is_graphical(seq: Sequence[int]) -> bool:
    """Erdos-Gallai test."""
    if any(d < 0 for d in seq):
        return False
    return nx.is_graphical(list(seq), method="eg")


def _check_graphical(seq: Sequence[int]) -> None:
    if not is_graphical(seq):
        raise InvalidParameterError(f"degree sequence {tuple(seq)} is not graphical")


def graphs_with_degree_sequence(
    seq: Sequence[int],
    *,
    mode: str = MODE_EXHAUSTIVE,
    count: int | None = None,
    seed: int = DEFAULT_SEED,
) -> Iterator[Graph]:
    """Graphs on ``len(seq)`` labeled vertices where vertex i has degree seq[i].

    ``exhaustive`` yields every labeled realization exactly once.
    ``sample`` yields ``count`` graphs reached by seeded double-edge
    switches from a Havel-Hakimi realization.

    Raises:
        InvalidParameterError: sequence not graphical, unknown mode or bad count.
        SizeLimitError: exhaustive mode with degree sum above the limit.
    """
    seq = tuple(seq)
    _check_graphical(seq)
    if mode == MODE_EXHAUSTIVE:
        if sum(seq) > DEGREE_SEQUENCE_MAX_SUM:
            raise SizeLimitError(
                f"exhaustive enumeration is limited to degree sum <= {DEGREE_SEQUENCE_MAX_SUM}, "
                f"got {sum(seq)}"
            )
        return _enumerate(seq)
    if mode == MODE_SAMPLE:
        if count is None or count < 1:
            raise InvalidParameterError(f"sample mode needs count >= 1, got {count}")
        return _sample(seq, count, seed)
    raise InvalidParameterError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
#  Exhaustive enumeration
# ---------------------------------------------------------------------------


def _enumerate(seq: tuple[int, ...]) -> Iterator[Graph]:
    """Row-by-row backtracking; vertex i picks its neighbours among j > i.

    After each row the residual degrees of the later vertices must still be
    graphical, so no branch dead-ends.
    """
    n = len(seq)
    residual = list(seq)
    edges: list[tuple[int, int]] = []

    def rows(i: int) -> Iterator[Graph]:
        if i == n:
            yield Graph.from_edges(n, edges)
            return
        need = residual[i]
        open_vertices = [j for j in range(i + 1, n) if residual[j] > 0]
        if need > len(open_vertices):
            return
        for chosen in combinations(open_vertices, need):
            for j in chosen:
                residual[j] -= 1
            residual[i] = 0
            if is_graphical(residual[i + 1 :]):
                edges.extend((i, j) for j in chosen)
                yield from rows(i + 1)
                del edges[len(edges) - need :]
            residual[i] = need
            for j in chosen:
                residual[j] += 1

    yield from rows(0)


# ---------------------------------------------------------------------------
#  Sampling
# ---------------------------------------------------------------------------


def _sample(seq: tuple[int, ...], count: int, seed: int) -> Iterator[Graph]:
    rng = random.Random(seed)
    n = len(seq)
    # havel_hakimi_graph numbers only the positive-degree vertices
    positions = [i for i, d in enumerate(seq) if d > 0]
    current = nx.havel_hakimi_graph(list(seq))
    swaps = max(1, current.number_of_edges())
    rigid = False
    for _ in range(count):
        if not rigid:
            try:
                nx.double_edge_swap(current, nswap=swaps, max_tries=100 * swaps, seed=rng)
            except (nx.NetworkXError, nx.NetworkXAlgorithmError):
                rigid = True
                logger.warning("Degree sequence %s admits no edge switch; sampling one graph", seq)
        yield Graph.from_edges(n, ((positions[a], positions[b]) for a, b in current.edges()))
