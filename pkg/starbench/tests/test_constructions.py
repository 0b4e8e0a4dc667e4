"""Tests for the closed-form values and the extremal constructions."""

import pytest

from starbench.core.constructions import (
    LABEL_AGREE,
    LABEL_DISAGREE,
    LABEL_DISAGREE_BELOW,
    LABEL_NO_CLAIM,
    ConstructionKind,
    ConstructionSpec,
    FormulaValue,
    _self_check,
    ar_formula,
    build_gk,
    comparison_label,
    construct_even,
    construct_odd,
    f_formula,
    is_constructible,
    matching_extremal_edges,
)
from starbench.core.errors import ConsistencyError, InvalidParameterError
from starbench.core.stars import find_k_star, is_star_free, link_star_profile
from starbench.core.types import ThreeGraph

# ---- Formulas ----


@pytest.mark.parametrize(
    "n, expected",
    [(4, 4), (5, 4), (6, 4), (7, 5), (8, 8), (9, 8), (10, 8), (11, 9), (12, 12)],
)
def test_f_formula_k2(n, expected):
    assert f_formula(n, 2).value == expected


def test_f_formula_odd_and_even():
    assert f_formula(20, 3).value == 86
    assert f_formula(20, 4).value == 151
    assert f_formula(25, 5).value == (25 - 10) * 20 + 20


def test_f_formula_thresholds():
    odd = f_formula(20, 3)
    assert odd.min_n == 3 * 2 * 17 // 2 + 1
    assert odd.in_regime is False
    even = f_formula(20, 4)
    assert even.min_n == 2 * 64 - 36 + 8
    assert even.in_regime is False
    assert f_formula(100, 4).in_regime is True


def test_f_formula_rejects_parameters():
    with pytest.raises(InvalidParameterError, match="k must be >= 2"):
        f_formula(10, 1)
    with pytest.raises(InvalidParameterError, match="n must be >= 3"):
        f_formula(2, 3)


def test_ar_formula():
    assert ar_formula(20, 3).value == 22
    assert ar_formula(22, 3).value == 23
    assert ar_formula(5, 2).value == 2
    assert ar_formula(6, 3).value == 7
    assert ar_formula(6, 3).in_regime is False
    assert ar_formula(40, 4).value == f_formula(40, 3).value + 2


def test_formula_value_to_dict():
    d = f_formula(20, 3).to_dict()
    assert d["value"] == 86
    assert d["source"] == "odd k"


@pytest.mark.parametrize("m, s, expected", [(5, 2, 10), (6, 1, 5), (7, 2, 11), (3, 0, 0)])
def test_matching_extremal_edges(m, s, expected):
    assert matching_extremal_edges(m, s) == expected


def test_comparison_label():
    inside = FormulaValue(10, 5, True, "test")
    below = FormulaValue(10, 50, False, "test")
    assert comparison_label(10, inside) == LABEL_AGREE
    assert comparison_label(11, inside) == LABEL_DISAGREE
    assert comparison_label(11, below) == LABEL_DISAGREE_BELOW
    assert comparison_label(11, inside, proven=False) == LABEL_NO_CLAIM


# ---- Roles ----


def test_spec_roles():
    spec = ConstructionSpec(9, 4, ConstructionKind.EVEN)
    assert [spec.x(i) for i in range(1, 4)] == [0, 1, 2]
    assert [spec.y(i) for i in range(1, 4)] == [3, 4, 5]
    assert spec.z == 6
    assert spec.header_comment == "x=0..2 y=3..5 z=6"
    odd = ConstructionSpec.for_parameters(20, 3)
    assert odd.kind is ConstructionKind.ODD
    assert list(odd.s_set) == [0, 1, 2]
    assert list(odd.r_set) == [3, 4, 5]
    assert odd.header_comment == "S=0..2 R=3..5"


def test_spec_accepts_string_kind():
    assert ConstructionSpec(20, 3, "odd").kind is ConstructionKind.ODD


@pytest.mark.parametrize(
    "n, k, kind, match",
    [
        (20, 4, "odd", "odd k"),
        (5, 3, "odd", "n >= 2k"),
        (20, 3, "even", "even k"),
        (6, 4, "even", "n >= 2k-1"),
    ],
)
def test_spec_rejects(n, k, kind, match):
    with pytest.raises(InvalidParameterError, match=match):
        ConstructionSpec(n, k, kind)


def test_is_constructible():
    assert is_constructible(20, 3)
    assert is_constructible(7, 4)
    assert not is_constructible(7, 2)
    assert not is_constructible(5, 3)


# ---- Constructions ----


def test_construct_odd_small():
    f = construct_odd(6, 3)
    # K_3^3 on S and on R
    assert f.edges == frozenset({(0, 1, 2), (3, 4, 5)})


def test_build_gk_4():
    g = build_gk(4)
    assert g.n == 7
    assert g.edge_count == 10
    assert not g.has_edge(2, 5)  # x_3 y_3
    assert g.has_edge(0, 3)  # x_1 y_1
    assert g.has_edge(2, 6) and g.has_edge(5, 6)


def test_build_gk_rejects_odd():
    with pytest.raises(InvalidParameterError):
        build_gk(5)


def test_construct_even_smallest():
    assert construct_even(7, 4).edge_count == 21


def test_construct_even_special_triples_share_x1():
    # x_1 = 0, y_1 = 3, y_2 = 4, x_2 = 1, z = 6
    f = construct_even(9, 4)
    assert (0, 3, 6) in f.edges
    assert (0, 4, 6) in f.edges
    assert (1, 4, 6) not in f.edges
    assert find_k_star(f, 4) is None
    assert link_star_profile(f)[6] == 3


@pytest.mark.parametrize("n", [7, 9, 12, 20])
def test_construct_even_is_star_free(n):
    assert is_star_free(construct_even(n, 4), 4)


def test_self_check_rejects_a_graph_with_a_star():
    # right edge count for f(5, 2), but vertex 0 is the core of a 2-star
    f = ThreeGraph.from_edges(5, [(0, 1, 2), (0, 3, 4), (1, 2, 3), (1, 2, 4)])
    with pytest.raises(ConsistencyError, match="contains a 2-star"):
        _self_check(f, 5, 2)


@pytest.mark.parametrize("n, k", [(20, 3), (25, 5), (31, 7), (20, 4), (30, 6)])
def test_construction_is_extremal_candidate(n, k):
    """Edge count equals the formula, the graph is k-star-free and some vertex has a (k-1)-star."""
    f = ConstructionSpec.for_parameters(n, k).build()
    assert f.edge_count == f_formula(n, k).value
    assert is_star_free(f, k)
    assert max(link_star_profile(f)) == k - 1


def test_constructions_are_deterministic():
    assert construct_even(12, 4) == construct_even(12, 4)
    assert construct_odd(12, 5) == construct_odd(12, 5)
