"""Tests for ranking helpers, ThreeGraph and Graph."""

from math import comb

import pytest

from starbench.core.errors import InvalidParameterError
from starbench.core.types import (
    Graph,
    ThreeGraph,
    colex_key,
    iter_pairs,
    iter_triples,
    normalize_pair,
    normalize_triple,
    pair_rank,
    triple_rank,
    triple_unrank,
)

# ---- Ranking ----


def test_triple_rank_first_values():
    assert triple_rank(0, 1, 2) == 0
    assert triple_rank(0, 1, 3) == 1
    assert triple_rank(0, 2, 3) == 2
    assert triple_rank(1, 2, 3) == 3


@pytest.mark.parametrize("n", range(3, 13))
def test_iter_triples_matches_rank(n):
    """iter_triples walks ranks 0, 1, 2, ... in order and unranking inverts it."""
    for i, t in enumerate(iter_triples(n)):
        assert triple_rank(*t) == i
        assert triple_unrank(i, n) == t
        assert triple_rank(*triple_unrank(i, n)) == i


def test_iter_triples_count():
    assert len(list(iter_triples(8))) == comb(8, 3)


def test_iter_pairs_matches_rank():
    for i, p in enumerate(iter_pairs(6)):
        assert pair_rank(*p) == i


def test_triple_rank_rejects_unsorted():
    with pytest.raises(InvalidParameterError, match="sorted and distinct"):
        triple_rank(2, 1, 3)


def test_triple_unrank_out_of_range():
    with pytest.raises(InvalidParameterError, match="rank must be in"):
        triple_unrank(comb(5, 3), 5)


def test_colex_key_orders_by_largest_element():
    triples = [(0, 1, 3), (1, 2, 3), (0, 1, 2), (0, 2, 3)]
    assert sorted(triples, key=colex_key) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]


def test_normalize():
    assert normalize_triple([5, 1, 3]) == (1, 3, 5)
    assert normalize_pair((4, 2)) == (2, 4)
    with pytest.raises(InvalidParameterError):
        normalize_triple([1, 1, 2])
    with pytest.raises(InvalidParameterError):
        normalize_pair([3, 3])


# ---- ThreeGraph ----


def test_three_graph_from_edges_normalizes():
    g = ThreeGraph.from_edges(5, [(2, 1, 0), (4, 3, 1)])
    assert g.edges == frozenset({(0, 1, 2), (1, 3, 4)})
    assert g.edge_count == 2
    assert len(g) == 2
    assert (0, 1, 2) in g


def test_three_graph_rejects_out_of_range():
    with pytest.raises(InvalidParameterError, match="invalid triple"):
        ThreeGraph(3, frozenset({(0, 1, 3)}))


def test_three_graph_sorted_edges_colex():
    g = ThreeGraph.from_edges(5, [(1, 2, 3), (0, 1, 4), (0, 1, 2)])
    assert g.sorted_edges == ((0, 1, 2), (1, 2, 3), (0, 1, 4))


def test_three_graph_degrees_and_pair_frequencies():
    g = ThreeGraph.from_edges(4, [(0, 1, 2), (0, 1, 3)])
    assert g.degrees == (2, 2, 1, 1)
    assert g.degree(0) == 2
    assert g.pair_frequencies[(0, 1)] == 2
    assert g.pair_frequencies[(0, 2)] == 1
    assert (2, 3) not in g.pair_frequencies


def test_three_graph_degree_out_of_range():
    with pytest.raises(InvalidParameterError, match="out of range"):
        ThreeGraph.empty(3).degree(3)


def test_three_graph_label_map():
    g = ThreeGraph(3, frozenset({(0, 1, 2)}), (4, 7, 9))
    assert g.label(1) == 7
    assert ThreeGraph.empty(3).label(2) == 2


def test_three_graph_bad_label_map():
    with pytest.raises(InvalidParameterError, match="label map"):
        ThreeGraph(3, frozenset(), (0, 1))


# ---- Graph ----


def test_graph_constructors():
    assert Graph.complete(5).edge_count == 10
    assert Graph.cycle(6).degrees == (2,) * 6
    assert Graph.complete_bipartite(2, 3).edge_count == 6
    petersen = Graph.petersen()
    assert petersen.n == 10
    assert petersen.edge_count == 15
    assert set(petersen.degrees) == {3}


def test_graph_rejects_loops():
    with pytest.raises(InvalidParameterError):
        Graph.from_edges(3, [(1, 1)])


def test_graph_degree_sequence_sorted():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert g.degrees == (3, 1, 1, 1)
    assert g.degree_sequence == (3, 1, 1, 1)
    assert Graph.from_edges(3, [(1, 2)]).degree_sequence == (1, 1, 0)


def test_graph_adjacency_masks():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert g.adjacency_masks == (0b010, 0b101, 0b010)
    assert g.has_edge(2, 1)
    assert not g.has_edge(0, 2)


def test_graph_remove_edge():
    g = Graph.complete(4).remove_edge((3, 0))
    assert g.edge_count == 5
    assert not g.has_edge(0, 3)
    with pytest.raises(InvalidParameterError, match="not in graph"):
        g.remove_edge((0, 3))


def test_graph_remove_vertices_keeps_labels():
    g = Graph.cycle(5).remove_vertices([0])
    assert g.n == 4
    assert g.labels == (1, 2, 3, 4)
    # path 1-2-3-4 relabeled to 0-1-2-3
    assert g.sorted_edges == ((0, 1), (1, 2), (2, 3))
    h = g.remove_vertices([0])
    assert h.labels == (2, 3, 4)


def test_graph_induced():
    g = Graph.complete(5).induced([4, 1, 2])
    assert g.n == 3
    assert g.edge_count == 3
    assert [g.label(v) for v in range(3)] == [1, 2, 4]


def test_graph_to_networkx_keeps_isolated_vertices():
    g = Graph.from_edges(4, [(0, 1)]).to_networkx()
    assert g.number_of_nodes() == 4
    assert g.number_of_edges() == 1
