"""Tests for the random and exhaustive generators."""

import random

import pytest

from starbench.core.errors import InvalidParameterError, SizeLimitError
from starbench.core.generators import all_graphs, random_graph, random_star_free, random_three_graph
from starbench.core.stars import is_star_free


def test_random_graph_extremes():
    assert random_graph(6, 0.0).edge_count == 0
    assert random_graph(6, 1.0).edge_count == 15


def test_random_three_graph_extremes():
    assert random_three_graph(6, 0.0).edge_count == 0
    assert random_three_graph(6, 1.0).edge_count == 20


def test_random_three_graph_seeded():
    a = random_three_graph(8, 0.5, random.Random(4))
    b = random_three_graph(8, 0.5, random.Random(4))
    assert a == b


def test_rejects_probability():
    with pytest.raises(InvalidParameterError, match="probability"):
        random_three_graph(5, 1.5)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_random_star_free(rng, k):
    for _ in range(5):
        g = random_star_free(rng.randint(k + 2, 9), k, rng, density=0.8)
        assert is_star_free(g, k)


def test_all_graphs_counts():
    assert sum(1 for _ in all_graphs(4)) == 64
    assert len(set(all_graphs(3))) == 8


def test_all_graphs_limit():
    with pytest.raises(SizeLimitError, match="n <= 7"):
        next(all_graphs(8))
