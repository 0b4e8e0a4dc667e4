"""End-to-end tests for the starbench command line."""

import json

import pytest

from starbench import __version__
from starbench.const import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION
from starbench.core.search import Budget

# ---- construct / star-check ----


@pytest.mark.parametrize("kind, n, k, edges", [("odd", 20, 3, 86), ("even", 20, 4, 151), ("odd", 25, 5, 320)])
def test_construct_then_star_check(cli, tmp_path, kind, n, k, edges) -> None:
    """A construction file passes star-check at its own k."""
    path = tmp_path / "f.txt"
    code, out, _ = cli("construct", "--kind", kind, "--n", n, "--k", k, "--out", path)
    assert code == EXIT_OK
    assert out == [f"kind={kind} n={n} k={k} edges={edges} out={path}"]
    assert path.read_text().startswith("# ")

    code, out, _ = cli("star-check", "--k", k, "--in", path)
    assert code == EXIT_OK
    assert out == [f"star-free=yes k={k} max-star={k - 1}"]


def test_star_check_reports_witness(cli, tmp_path) -> None:
    path = tmp_path / "f.txt"
    cli("construct", "--kind", "odd", "--n", 20, "--k", 3, "--out", path)
    code, out, _ = cli("star-check", "--k", 2, "--in", path)
    assert code == EXIT_VIOLATION
    assert out[0].startswith("star-free=no k=2 core=")


def test_construct_is_deterministic(cli, tmp_path) -> None:
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    cli("construct", "--kind", "even", "--n", 12, "--k", 4, "--out", a)
    cli("construct", "--kind", "even", "--n", 12, "--k", 4, "--out", b)
    assert a.read_text() == b.read_text()


# ---- colorings ----


def test_color_lb_then_rainbow_find(cli, tmp_path) -> None:
    path = tmp_path / "c.txt"
    code, out, _ = cli("color-lb", "--n", 20, "--k", 3, "--out", path)
    assert code == EXIT_OK
    assert out == [f"n=20 k=3 colors=87 out={path}"]

    code, out, _ = cli("rainbow-find", "--s", 4, "--coloring", path)
    assert code == EXIT_OK
    assert out == ["s=4 rainbow=none"]

    code, out, _ = cli("rainbow-find", "--s", 4, "--coloring", path, "--expect", "found")
    assert code == EXIT_VIOLATION


def test_rainbow_find_expect_found(cli, tmp_path) -> None:
    path = tmp_path / "c.txt"
    cli("color-lb", "--n", 20, "--k", 3, "--out", path)
    code, out, _ = cli("rainbow-find", "--s", 3, "--coloring", path, "--expect", "found")
    assert code == EXIT_OK
    assert out[0].startswith("s=3 rainbow=found core=")


def test_good_pairs(cli, tmp_path) -> None:
    path = tmp_path / "c.txt"
    cli("color-lb", "--n", 30, "--k", 3, "--out", path)
    code, out, _ = cli("good-pairs", "--k", 3, "--coloring", path)
    assert code == EXIT_OK
    assert "within_bound=yes" in out[0]
    assert "q_bound=108" in out[0]


def test_good_pairs_too_few_vertices(cli, tmp_path) -> None:
    path = tmp_path / "c.txt"
    cli("color-lb", "--n", 12, "--k", 3, "--out", path)
    code, out, _ = cli("good-pairs", "--k", 3, "--coloring", path)
    assert code == EXIT_VIOLATION
    assert out[0].startswith("k=3 pairs=none")


# ---- exact searches ----


def test_ar_trivial_line(cli) -> None:
    code, out, _ = cli("ar", "--n", 6, "--s", 3)
    assert code == EXIT_OK
    assert out == [
        "value=20 ar=21 status=trivial-all-rainbow nodes=0 formula=7 label=disagree-below-threshold"
    ]


def test_ar_json_lines_mirror_text(cli) -> None:
    code, out, _ = cli("--format", "json-lines", "ar", "--n", 6, "--s", 3)
    assert code == EXIT_OK
    assert json.loads(out[0]) == {
        "value": 20,
        "ar": 21,
        "status": "trivial-all-rainbow",
        "nodes": 0,
        "formula": 7,
        "label": "disagree-below-threshold",
    }


def test_ar_writes_witness(cli, tmp_path) -> None:
    path = tmp_path / "w.txt"
    code, out, _ = cli("ar", "--n", 5, "--s", 2, "--out", path)
    assert code == EXIT_OK
    assert "ar=2 " in out[0]
    assert out[0].endswith(f"label=agree witness={path}")
    assert path.exists()


def test_ar_is_deterministic(cli) -> None:
    assert cli("ar", "--n", 5, "--s", 2)[1] == cli("ar", "--n", 5, "--s", 2)[1]


def test_f_exact(cli, tmp_path) -> None:
    path = tmp_path / "w.txt"
    code, out, _ = cli("f-exact", "--n", 5, "--k", 2, "--out", path)
    assert code == EXIT_OK
    assert out[0].startswith("value=4 status=proven nodes=")
    assert "formula=4 label=agree" in out[0]
    assert path.read_text().splitlines()[0] == "# k=2 value=4 status=proven"


def test_f_exact_timing(cli) -> None:
    code, out, _ = cli("--timing", "f-exact", "--n", 4, "--k", 2)
    assert code == EXIT_OK
    assert " seconds=" in out[0]


def test_f_exact_budget_exhausted(cli, monkeypatch) -> None:
    monkeypatch.setattr(Budget, "expired", property(lambda self: True))
    code, out, _ = cli("f-exact", "--n", 6, "--k", 2)
    assert code == EXIT_BUDGET
    assert "status=lower-bound-only" in out[0]
    assert out[0].endswith("label=no-claim")


def test_f_exact_size_limit(cli) -> None:
    code, out, err = cli("f-exact", "--n", 8, "--k", 2)
    assert code == EXIT_USAGE
    assert out == []
    assert "pass force" in err


# ---- weights ----


def test_weights_on_construction(cli, tmp_path) -> None:
    path = tmp_path / "f.txt"
    cli("construct", "--kind", "odd", "--n", 20, "--k", 3, "--out", path)
    code, out, _ = cli("weights", "--k", 3, "--in", path)
    assert code == EXIT_OK
    assert len(out) == 21
    assert out[-1] == "surplus=34 violations=0"


def test_weights_json_lines(cli, tmp_path) -> None:
    path = tmp_path / "f.txt"
    cli("construct", "--kind", "odd", "--n", 20, "--k", 3, "--out", path)
    code, out, _ = cli("--format", "json-lines", "weights", "--k", 3, "--in", path)
    assert code == EXIT_OK
    records = [json.loads(line) for line in out]
    assert [r["v"] for r in records[:-1]] == list(range(20))
    assert records[-1] == {"surplus": "34", "violations": 0}


def test_weights_needs_star_free_input(cli, tmp_path) -> None:
    path = tmp_path / "f.txt"
    cli("construct", "--kind", "odd", "--n", 20, "--k", 3, "--out", path)
    code, _, err = cli("weights", "--k", 2, "--in", path)
    assert code == EXIT_VIOLATION
    assert "2-star" in err


# ---- audits ----


def test_audit_hamiltonian(cli) -> None:
    code, out, _ = cli("audit", "--lemma", "hamiltonian")
    assert code == EXIT_OK
    assert out[-1].startswith("checked=")
    assert out[-1].endswith(" violations=0")


def test_audit_degree_critical(cli) -> None:
    code, out, _ = cli("audit", "--lemma", "degree-critical", "--k", 5, "--orders", 5, 7)
    assert code == EXIT_OK
    assert out[-1] == "checked=466 violations=0"


def test_audit_degree_critical_needs_k(cli) -> None:
    code, _, err = cli("audit", "--lemma", "degree-critical")
    assert code == EXIT_USAGE
    assert "needs --k" in err


def test_audit_weight_single_file(cli, tmp_path) -> None:
    path = tmp_path / "f.txt"
    cli("construct", "--kind", "even", "--n", 20, "--k", 4, "--out", path)
    code, out, _ = cli("audit", "--lemma", "weight", "--k", 4, "--in", path)
    assert code == EXIT_OK
    assert out[-1].endswith("violations=0")


def test_audit_weight_corpus(cli) -> None:
    code, out, _ = cli("--seed", 5, "audit", "--lemma", "weight", "--k", 3, "--count", 4, "--max-n", 8)
    assert code == EXIT_OK
    assert out[-1] == "checked=4 violations=0"


# ---- usage and input errors ----


def test_version(cli) -> None:
    code, out, _ = cli("--version")
    assert code == EXIT_OK
    assert out == [f"starbench {__version__}"]


@pytest.mark.parametrize(
    "argv",
    [
        ("construct", "--kind", "odd", "--n", "20", "--k", "4", "--out", "x.txt"),
        ("construct", "--kind", "odd", "--n", "2", "--k", "3", "--out", "x.txt"),
        ("construct", "--kind", "odd", "--n", "20"),
        ("ar", "--n", "6", "--s", "1"),
        ("nonsense",),
    ],
)
def test_usage_errors(cli, tmp_path, monkeypatch, argv) -> None:
    monkeypatch.chdir(tmp_path)
    code, out, _ = cli(*argv)
    assert code == EXIT_USAGE
    assert out == []


def test_missing_input_file(cli, tmp_path) -> None:
    code, _, err = cli("star-check", "--k", 3, "--in", tmp_path / "missing.txt")
    assert code == EXIT_USAGE
    assert "starbench: error:" in err


def test_malformed_input_file(cli, tmp_path) -> None:
    path = tmp_path / "bad.txt"
    path.write_text("5 1\n0 1 9\n")
    code, _, err = cli("star-check", "--k", 2, "--in", path)
    assert code == EXIT_USAGE
    assert "line 2" in err


# ---- config ----


def test_config_file_sets_format(cli, tmp_path) -> None:
    config = tmp_path / "starbench.yaml"
    config.write_text("format: json-lines\n")
    code, out, _ = cli("--config", config, "ar", "--n", 6, "--s", 3)
    assert code == EXIT_OK
    assert json.loads(out[0])["ar"] == 21


def test_flag_overrides_config(cli, tmp_path) -> None:
    config = tmp_path / "starbench.yaml"
    config.write_text("format: json-lines\n")
    code, out, _ = cli("--config", config, "--format", "text", "ar", "--n", 6, "--s", 3)
    assert code == EXIT_OK
    assert out[0].startswith("value=20 ")


def test_bad_config_file(cli, tmp_path) -> None:
    config = tmp_path / "starbench.yaml"
    config.write_text("threads: 0\n")
    code, _, err = cli("--config", config, "ar", "--n", 6, "--s", 3)
    assert code == EXIT_USAGE
    assert "starbench: error:" in err
