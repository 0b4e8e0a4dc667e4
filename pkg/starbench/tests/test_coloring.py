"""Tests for edge-colorings, good pairs and rainbow stars."""

from itertools import combinations
from math import comb

import pytest

from starbench.core.coloring import (
    EdgeColoring,
    disjoint_good_pairs,
    find_rainbow_star,
    good_pairs,
    good_partner_counts,
    lower_bound_coloring,
    rainbow_extension_coloring,
    rainbow_representative_subgraph,
    validate_rainbow_free,
    zc,
)
from starbench.core.constructions import f_formula
from starbench.core.errors import InvalidParameterError
from starbench.core.hypergraph import complete_three_graph
from starbench.core.types import ThreeGraph, iter_pairs


def _brute_rainbow_cores(coloring, s):
    """Cores with a rainbow s-star, by checking every s-set of link pairs."""
    cores = []
    for core in range(coloring.n):
        pairs = [p for p in iter_pairs(coloring.n) if core not in p]
        for chosen in combinations(pairs, s):
            if len({x for p in chosen for x in p}) != 2 * s:
                continue
            if len({coloring.color((core, *p)) for p in chosen}) == s:
                cores.append(core)
                break
    return cores


# ---- EdgeColoring ----


def test_monochromatic_and_rainbow():
    mono = EdgeColoring.monochromatic(5)
    assert mono.t == 1
    assert mono.color((4, 0, 2)) == 0
    rainbow = EdgeColoring.rainbow(5)
    assert rainbow.t == 10
    assert rainbow.color((0, 1, 2)) == 0
    assert rainbow.color((2, 3, 4)) == 9


def test_from_labels_renumbers_by_first_occurrence():
    c = EdgeColoring.from_labels(4, [7, 3, 7, 9])
    assert c.colors == (0, 1, 0, 2)
    assert c.t == 3
    assert c.classes == (((0, 1, 2), (0, 2, 3)), ((0, 1, 3),), ((1, 2, 3),))


@pytest.mark.parametrize(
    "colors, t, match",
    [
        ((0, 0, 0), 1, "expected 4 colors"),
        ((0, 0, 0, 2), 2, "outside 0..1"),
        ((0, 0, 0, 0), 2, "not surjective"),
    ],
)
def test_edge_coloring_rejects(colors, t, match):
    with pytest.raises(InvalidParameterError, match=match):
        EdgeColoring(4, colors, t)


# ---- Color sets and good pairs ----


def test_zc_pairs_and_vertices():
    rainbow = EdgeColoring.rainbow(6)
    assert len(zc(rainbow, (0, 1))) == 4
    assert len(zc(rainbow, (2,))) == comb(5, 2)
    assert zc(EdgeColoring.monochromatic(6), (1, 3)) == frozenset({0})


def test_zc_rejects_bad_sets():
    c = EdgeColoring.monochromatic(5)
    with pytest.raises(InvalidParameterError, match="1 or 2 vertices"):
        zc(c, (0, 1, 2))
    with pytest.raises(InvalidParameterError, match="out of range"):
        zc(c, (0, 7))


def test_good_pairs_monochromatic():
    c = EdgeColoring.monochromatic(6)
    assert good_pairs(c, 2) == list(iter_pairs(6))
    assert good_partner_counts(c, 2) == (5,) * 6


def test_good_pairs_threshold():
    # rainbow on 9 vertices: every pair sees 7 colors, above 3k = 6 for k = 2
    c = EdgeColoring.rainbow(9)
    assert good_pairs(c, 2) == []
    assert len(good_pairs(c, 3)) == comb(9, 2)


def test_disjoint_good_pairs_greedy():
    c = EdgeColoring.rainbow(7)
    report = disjoint_good_pairs(c, 2, 3)
    assert report.pairs == ((0, 1), (2, 3), (4, 5))
    assert report.q == len(report.colors)
    assert disjoint_good_pairs(c, 2, 4) is None


def test_disjoint_good_pairs_on_lower_bound_coloring():
    report = disjoint_good_pairs(lower_bound_coloring(30, 3), 3, 12)
    assert report is not None
    assert len(report.pairs) == 12
    assert len({x for p in report.pairs for x in p}) == 24
    assert report.within_bound
    assert report.to_dict()["q_bound"] == 108


def test_disjoint_good_pairs_rejects_count():
    with pytest.raises(InvalidParameterError, match="count must be >= 1"):
        disjoint_good_pairs(EdgeColoring.monochromatic(5), 2, 0)


# ---- Rainbow stars ----


def test_find_rainbow_star_colex_least():
    star = find_rainbow_star(EdgeColoring.rainbow(5), 2)
    assert star.core == 0
    assert star.rays == ((0, 1, 2), (0, 3, 4))


def test_find_rainbow_star_too_few_colors():
    assert find_rainbow_star(EdgeColoring.monochromatic(7), 2) is None


def test_find_rainbow_star_rejects():
    with pytest.raises(InvalidParameterError, match="s must be >= 2"):
        find_rainbow_star(EdgeColoring.monochromatic(5), 1)
    with pytest.raises(InvalidParameterError, match="needs n >= 7"):
        find_rainbow_star(EdgeColoring.monochromatic(5), 3)


def test_find_rainbow_star_matches_brute_force(rng):
    for _ in range(30):
        n = rng.randint(5, 8)
        s = rng.choice([2, 3]) if n >= 7 else 2
        coloring = EdgeColoring.from_labels(n, [rng.randrange(4) for _ in range(comb(n, 3))])
        expected = _brute_rainbow_cores(coloring, s)
        star = find_rainbow_star(coloring, s)
        if not expected:
            assert star is None
            continue
        assert star.core == expected[0]
        assert len({coloring.color(ray) for ray in star.rays}) == s


def test_find_rainbow_star_thread_invariant(rng):
    coloring = EdgeColoring.from_labels(7, [rng.randrange(3) for _ in range(35)])
    assert find_rainbow_star(coloring, 3) == find_rainbow_star(coloring, 3, threads=4)


def test_validate_rainbow_free_trivial_when_no_star_fits():
    assert validate_rainbow_free(EdgeColoring.rainbow(6), 3)
    assert not validate_rainbow_free(EdgeColoring.rainbow(5), 2)


# ---- Colorings from 3-graphs ----


def test_rainbow_extension_coloring():
    f = ThreeGraph.from_edges(5, [(0, 1, 2), (2, 3, 4)])
    c = rainbow_extension_coloring(f)
    assert c.t == 3
    assert c.color((0, 1, 2)) == 0
    assert c.color((2, 3, 4)) == 1
    assert c.color((0, 1, 3)) == 2


def test_rainbow_extension_rejects_complete():
    with pytest.raises(InvalidParameterError, match="complete"):
        rainbow_extension_coloring(complete_three_graph(5))


@pytest.mark.parametrize("n, k", [(20, 3), (20, 4)])
def test_lower_bound_coloring_is_rainbow_free(n, k):
    coloring = lower_bound_coloring(n, k)
    assert coloring.t == f_formula(n, k).value + 1
    assert find_rainbow_star(coloring, k + 1) is None


def test_lower_bound_coloring_rejects_k2():
    with pytest.raises(InvalidParameterError, match="k >= 3"):
        lower_bound_coloring(7, 2)


def test_rainbow_representative_subgraph():
    c = EdgeColoring.rainbow(5)
    assert rainbow_representative_subgraph(c) == complete_three_graph(5)
    assert rainbow_representative_subgraph(c, excluded=[0]).edge_count == 9
    lb = lower_bound_coloring(20, 3)
    sub = rainbow_representative_subgraph(lb, excluded=[lb.t - 1])
    assert sub.edge_count == 86
    with pytest.raises(InvalidParameterError, match="excluded colors"):
        rainbow_representative_subgraph(c, excluded=[10])
