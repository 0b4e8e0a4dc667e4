"""starbench command line.

    python -m starbench [global flags] <command> [flags]

Reports go to stdout, one record per line, as ``key=value`` text or as
JSON lines with the same fields. Logs go to stderr. Exit codes: 0 verified,
1 violation or unwanted witness, 2 usage or input error, 3 budget
exhausted before a proof.
"""

from __future__ import annotations

import argparse
from collections.abc import Callable, Sequence
import json
import logging
import sys
from typing import Any

import voluptuous as vol

from . import __version__
from .api import (
    AUDITS,
    anti_ramsey,
    check_star_free,
    construct,
    exact_turan,
    load_coloring,
    load_three_graph,
    run_audit,
    save_coloring,
    save_three_graph,
)
from .config import load_config, merge
from .const import (
    CONF_BUDGET,
    CONF_FORMAT,
    CONF_SAMPLES,
    CONF_SEED,
    CONF_THREADS,
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VIOLATION,
    FORMAT_JSON_LINES,
    FORMATS,
)
from .core.audits import AuditReport
from .core.coloring import disjoint_good_pairs, find_rainbow_star, good_partner_counts, lower_bound_coloring
from .core.constructions import comparison_label, f_formula
from .core.degree_sequences import MODE_EXHAUSTIVE, MODE_SAMPLE
from .core.errors import (
    ConsistencyError,
    FormatError,
    InvalidParameterError,
    PreconditionError,
    SizeLimitError,
)
from .core.search import SearchStatus
from .core.stars import StarWitness, link_star_profile
from .core.weights import audit_weight_lemma, format_sixths

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
#  Flag schemas
# ---------------------------------------------------------------------------

_ORDER = vol.All(vol.Coerce(int), vol.Range(min=3))
_STAR = vol.All(vol.Coerce(int), vol.Range(min=2))
_POSITIVE = vol.All(vol.Coerce(int), vol.Range(min=1))
_OPTIONAL_POSITIVE = vol.Any(None, _POSITIVE)

COMMAND_SCHEMAS: dict[str, vol.Schema] = {
    "construct": vol.Schema(
        {
            vol.Required("kind"): vol.In(("odd", "even")),
            vol.Required("n"): _ORDER,
            vol.Required("k"): vol.All(vol.Coerce(int), vol.Range(min=3)),
            vol.Required("out"): str,
        },
        extra=vol.ALLOW_EXTRA,
    ),
    "star-check": vol.Schema(
        {vol.Required("k"): _POSITIVE, vol.Required("input"): str}, extra=vol.ALLOW_EXTRA
    ),
    "f-exact": vol.Schema({vol.Required("n"): _ORDER, vol.Required("k"): _STAR}, extra=vol.ALLOW_EXTRA),
    "weights": vol.Schema({vol.Required("k"): _STAR, vol.Required("input"): str}, extra=vol.ALLOW_EXTRA),
    "color-lb": vol.Schema(
        {
            vol.Required("n"): _ORDER,
            vol.Required("k"): vol.All(vol.Coerce(int), vol.Range(min=3)),
            vol.Required("out"): str,
        },
        extra=vol.ALLOW_EXTRA,
    ),
    "rainbow-find": vol.Schema(
        {
            vol.Required("s"): _STAR,
            vol.Required("coloring"): str,
            vol.Required("expect"): vol.In(("none", "found")),
        },
        extra=vol.ALLOW_EXTRA,
    ),
    "good-pairs": vol.Schema(
        {vol.Required("k"): _STAR, vol.Required("coloring"): str, "count": _OPTIONAL_POSITIVE},
        extra=vol.ALLOW_EXTRA,
    ),
    "ar": vol.Schema({vol.Required("n"): _ORDER, vol.Required("s"): _STAR}, extra=vol.ALLOW_EXTRA),
    "audit": vol.Schema(
        {
            vol.Required("lemma"): vol.In(AUDITS),
            "k": vol.Any(None, _STAR),
            vol.Required("mode"): vol.In((MODE_EXHAUSTIVE, MODE_SAMPLE)),
            "count": _POSITIVE,
            "max_n": _ORDER,
        },
        extra=vol.ALLOW_EXTRA,
    ),
}


# ---------------------------------------------------------------------------
#  Output
# ---------------------------------------------------------------------------


def _text(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        if value and isinstance(value[0], (list, tuple)):
            return ";".join(",".join(map(str, item)) for item in value)
        return ",".join(map(str, value))
    if value is None:
        return "none"
    return str(value)


class Output:
    """Writes report records in the selected format."""

    def __init__(self, fmt: str, stream=None):
        self.json = fmt == FORMAT_JSON_LINES
        self.stream = stream if stream is not None else sys.stdout

    def record(self, fields: dict[str, Any], text: str | None = None) -> None:
        """One report line; ``text`` replaces the key=value rendering in text mode."""
        if self.json:
            line = json.dumps(fields)
        else:
            line = text if text is not None else " ".join(f"{k}={_text(v)}" for k, v in fields.items())
        print(line, file=self.stream)

    def audit(self, report: AuditReport) -> None:
        for line in report.details:
            self.record({"audit": report.name, "detail": line}, line)
        for line in report.violations:
            self.record({"audit": report.name, "violation": line}, line)
        self.record({"checked": report.checked, "violations": len(report.violations)})


def _star_fields(witness: StarWitness) -> dict[str, Any]:
    return {"core": witness.core, "rays": [list(r) for r in witness.rays]}


# ---------------------------------------------------------------------------
#  Commands
# ---------------------------------------------------------------------------


def cmd_construct(args: argparse.Namespace, config: dict, out: Output) -> int:
    graph, spec = construct(args.n, args.k, args.kind)
    save_three_graph(graph, args.out, comments=(spec.header_comment,))
    out.record({"kind": spec.kind.value, "n": args.n, "k": args.k, "edges": graph.edge_count,
                "out": args.out})
    return EXIT_OK


def cmd_star_check(args: argparse.Namespace, config: dict, out: Output) -> int:
    graph = load_three_graph(args.input)
    witness = check_star_free(graph, args.k)
    if witness is None:
        profile = link_star_profile(graph)
        out.record({"star-free": True, "k": args.k, "max-star": max(profile, default=0)})
        return EXIT_OK
    out.record({"star-free": False, "k": args.k, **_star_fields(witness)})
    return EXIT_VIOLATION


def cmd_f_exact(args: argparse.Namespace, config: dict, out: Output) -> int:
    outcome = exact_turan(args.n, args.k, budget=config[CONF_BUDGET], threads=config[CONF_THREADS],
                          force=args.force)
    formula = f_formula(args.n, args.k)
    fields = outcome.to_dict(timing=args.timing)
    fields["formula"] = formula.value
    fields["label"] = comparison_label(outcome.value, formula, proven=outcome.proven)
    if args.out:
        save_three_graph(outcome.witness, args.out,
                         comments=(f"k={args.k} value={outcome.value} status={outcome.status.value}",))
        fields["witness"] = args.out
    out.record(fields)
    return EXIT_OK if outcome.proven else EXIT_BUDGET


def cmd_weights(args: argparse.Namespace, config: dict, out: Output) -> int:
    audit = audit_weight_lemma(load_three_graph(args.input), args.k)
    for record in audit.records:
        out.record(record.to_dict(), record.render())
    out.record({"surplus": format_sixths(audit.surplus), "violations": len(audit.violations)})
    return EXIT_VIOLATION if audit.violations else EXIT_OK


def cmd_color_lb(args: argparse.Namespace, config: dict, out: Output) -> int:
    coloring = lower_bound_coloring(args.n, args.k)
    comment = f"rainbow extremal {args.k}-star-free 3-graph plus one color"
    save_coloring(coloring, args.out, comments=(comment,))
    out.record({"n": args.n, "k": args.k, "colors": coloring.t, "out": args.out})
    return EXIT_OK


def cmd_rainbow_find(args: argparse.Namespace, config: dict, out: Output) -> int:
    coloring = load_coloring(args.coloring)
    witness = find_rainbow_star(coloring, args.s, threads=config[CONF_THREADS])
    if witness is None:
        out.record({"s": args.s, "rainbow": "none"})
    else:
        colors = [coloring.color(r) for r in witness.rays]
        out.record({"s": args.s, "rainbow": "found", **_star_fields(witness), "colors": colors})
    found = witness is not None
    return EXIT_OK if found == (args.expect == "found") else EXIT_VIOLATION


def cmd_good_pairs(args: argparse.Namespace, config: dict, out: Output) -> int:
    coloring = load_coloring(args.coloring)
    partners = good_partner_counts(coloring, args.k)
    report = disjoint_good_pairs(coloring, args.k, args.count)
    if report is None:
        out.record({"k": args.k, "pairs": "none", "min-partners": min(partners)})
        return EXIT_VIOLATION
    out.record({"k": args.k, "pairs": [list(p) for p in report.pairs], "q": report.q,
                "q_bound": report.q_bound, "within_bound": report.within_bound,
                "min-partners": min(partners)})
    return EXIT_OK


def cmd_ar(args: argparse.Namespace, config: dict, out: Output) -> int:
    report = anti_ramsey(args.n, args.s, budget=config[CONF_BUDGET], threads=config[CONF_THREADS],
                         symmetry=not args.no_symmetry, long_run=args.long_run, force=args.force)
    fields = report.fields(timing=args.timing)
    if args.out:
        comment = f"s={args.s} colors={report.outcome.value} status={report.outcome.status.value}"
        save_coloring(report.outcome.witness, args.out, comments=(comment,))
        fields["witness"] = args.out
    out.record(fields)
    return EXIT_BUDGET if report.outcome.status is SearchStatus.LOWER_BOUND_ONLY else EXIT_OK


def cmd_audit(args: argparse.Namespace, config: dict, out: Output) -> int:
    if args.lemma == "degree-critical":
        if args.k is None:
            raise InvalidParameterError("audit --lemma degree-critical needs --k")
        report = run_audit(args.lemma, k=args.k, mode=args.mode, samples=config[CONF_SAMPLES],
                           seed=config[CONF_SEED], orders=args.orders, threads=config[CONF_THREADS])
    elif args.lemma == "weight" and args.input:
        if args.k is None:
            raise InvalidParameterError("audit --lemma weight --in FILE needs --k")
        return cmd_weights(args, config, out)
    elif args.lemma == "weight":
        ks = (args.k,) if args.k is not None else (3, 4, 5)
        report = run_audit(args.lemma, count=args.count, max_n=args.max_n, ks=ks, seed=config[CONF_SEED])
    elif args.lemma == "formulas":
        report = run_audit(args.lemma, budget=config[CONF_BUDGET])
    else:
        report = run_audit(args.lemma)
    out.audit(report)
    return EXIT_OK if report.passed else EXIT_VIOLATION


COMMANDS: dict[str, Callable[[argparse.Namespace, dict, Output], int]] = {
    "construct": cmd_construct,
    "star-check": cmd_star_check,
    "f-exact": cmd_f_exact,
    "weights": cmd_weights,
    "color-lb": cmd_color_lb,
    "rainbow-find": cmd_rainbow_find,
    "good-pairs": cmd_good_pairs,
    "ar": cmd_ar,
    "audit": cmd_audit,
}


# ---------------------------------------------------------------------------
#  Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="starbench", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=FORMATS, default=None, help="report format (default text)")
    parser.add_argument("--config", default=None, help="YAML file with flag defaults")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    parser.add_argument("--seed", type=int, default=None, help="seed for sampling and random corpora")
    parser.add_argument("--threads", type=int, default=None, help="worker threads")
    parser.add_argument("--timing", action="store_true", help="add wall-clock seconds to reports")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("construct", help="write an extremal k-star-free 3-graph")
    p.add_argument("--kind", required=True, choices=("odd", "even"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("star-check", help="check that a 3-graph is k-star-free")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--in", dest="input", required=True)

    p = sub.add_parser("f-exact", help="exact f(n, k) by branch and bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=float, default=None, help="seconds")
    p.add_argument("--out", default=None, help="write the witness 3-graph")
    p.add_argument("--force", action="store_true", help="lift the default instance caps")

    p = sub.add_parser("weights", help="vertex weights and structure witnesses")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--in", dest="input", required=True)

    p = sub.add_parser("color-lb", help="write the lower-bound coloring")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("rainbow-find", help="search a coloring for a rainbow s-star")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--expect", choices=("none", "found"), default="none")

    p = sub.add_parser("good-pairs", help="disjoint good pairs of a coloring")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--count", type=int, default=None, help="pairs wanted (default 2k+6)")

    p = sub.add_parser("ar", help="exact anti-Ramsey number for stars")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--budget", type=float, default=None, help="seconds")
    p.add_argument("--no-symmetry", action="store_true", help="disable restricted-growth pruning")
    p.add_argument("--long-run", action="store_true", help="allow s=3 at n=7")
    p.add_argument("--force", action="store_true", help="lift the default instance caps")
    p.add_argument("--out", default=None, help="write the witness coloring")

    p = sub.add_parser("audit", help="run a lemma audit")
    p.add_argument("--lemma", required=True, choices=AUDITS)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--mode", choices=(MODE_EXHAUSTIVE, MODE_SAMPLE), default=MODE_EXHAUSTIVE)
    p.add_argument("--samples", type=int, default=None, help="graphs per degree sequence in sample mode")
    p.add_argument("--orders", type=int, nargs="+", default=None, help="odd orders to audit")
    p.add_argument("--in", dest="input", default=None, help="audit one 3-graph instead of a corpus")
    p.add_argument("--count", type=int, default=1000, help="weight corpus size")
    p.add_argument("--max-n", type=int, default=10, help="largest order in the weight corpus")
    p.add_argument("--budget", type=float, default=None, help="seconds per exact search")
    return parser


def _configure_logging(verbose: int) -> None:
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("starbench").setLevel(level)


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv, dispatch one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    _configure_logging(args.verbose)

    try:
        COMMAND_SCHEMAS[args.command](vars(args))
        config = merge(
            load_config(args.config),
            {
                CONF_SEED: args.seed,
                CONF_THREADS: args.threads,
                CONF_FORMAT: args.format,
                CONF_BUDGET: getattr(args, "budget", None),
                CONF_SAMPLES: getattr(args, "samples", None),
            },
        )
        return COMMANDS[args.command](args, config, Output(config[CONF_FORMAT]))
    except (InvalidParameterError, FormatError, SizeLimitError, OSError, vol.Invalid) as err:
        print(f"starbench: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, ConsistencyError) as err:
        print(f"starbench: {err}", file=sys.stderr)
        return EXIT_VIOLATION


def main() -> None:
    sys.exit(run())
