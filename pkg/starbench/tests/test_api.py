"""Tests for the public API module."""

import pytest

import starbench
from starbench.core.errors import FormatError, InvalidParameterError
from starbench.core.search import SearchStatus


def test_construct_matches_formula():
    """construct() returns the graph and its role spec."""
    graph, spec = starbench.construct(20, 3)
    assert graph.edge_count == 86
    assert spec.header_comment == "S=0..2 R=3..5"


def test_construct_kind_mismatch():
    """An explicit kind must match the parity of k."""
    with pytest.raises(InvalidParameterError, match="needs even k"):
        starbench.construct(20, 3, kind="even")


def test_save_and_load_three_graph(tmp_path):
    graph, spec = starbench.construct(12, 3)
    path = tmp_path / "f.txt"
    starbench.save_three_graph(graph, path, (spec.header_comment,))
    assert path.read_text().startswith("# S=0..2 R=3..5\n")
    assert starbench.load_three_graph(path) == graph


def test_save_and_load_coloring(tmp_path):
    coloring = starbench.lower_bound_coloring(12, 3)
    path = tmp_path / "c.txt"
    starbench.save_coloring(coloring, path)
    assert starbench.load_coloring(path) == coloring


def test_load_malformed(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("5 2\n0 1 2\n")
    with pytest.raises(FormatError, match="line"):
        starbench.load_three_graph(path)


def test_load_missing_file(tmp_path):
    with pytest.raises(OSError):
        starbench.load_three_graph(tmp_path / "missing.txt")


def test_check_star_free():
    assert starbench.check_star_free(starbench.complete_three_graph(4), 2) is None
    assert starbench.check_star_free(starbench.complete_three_graph(5), 2) is not None


def test_exact_turan():
    outcome = starbench.exact_turan(5, 2)
    assert outcome.value == 4
    assert outcome.status is SearchStatus.PROVEN


def test_anti_ramsey_trivial():
    report = starbench.anti_ramsey(6, 3)
    assert report.ar == 21


def test_run_audit_dispatch():
    report = starbench.run_audit("hamiltonian")
    assert report.name == "hamiltonian"
    assert report.passed


def test_run_audit_unknown():
    with pytest.raises(InvalidParameterError, match="unknown audit"):
        starbench.run_audit("tutte")


def test_version():
    """Version string is available."""
    assert hasattr(starbench, "__version__")
    assert isinstance(starbench.__version__, str)


def test_all_exports_accessible():
    """All items in __all__ are importable."""
    for name in starbench.__all__:
        assert hasattr(starbench, name), f"{name} not accessible from starbench"


@pytest.mark.parametrize(
    "name", ["induced", "remove_vertices", "remove_edges", "triple_rank", "triple_unrank"]
)
def test_hypergraph_helpers_exported(name):
    assert name in starbench.__all__
    assert callable(getattr(starbench, name))
