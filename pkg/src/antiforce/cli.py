"""Command line interface.

Graphs travel between subcommands as JSON on stdin/stdout, so pipelines
compose: `antiforce gen path --k 4 | antiforce power --m 2 | antiforce af`.

Exit codes: 0 success, 1 usage or input error, 2 budget exhaustion,
3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import graph as graphio
from .antiforcing import af_subset_search, af_via_matchings
from .budget import Budget, BudgetExceededError, default_budget, parse_budget
from .families import FAMILIES, build
from .formulas import BoundPair, FormulaResult
from .graph import power
from .harness import (
    COLUMNS,
    DEFAULT_CROSS_CHECK_N_LIMIT,
    DEFAULT_ORACLE_N_LIMIT,
    InternalInvariantError,
    SweepSpec,
    default_sweep_spec,
    emit_report,
    evaluate_formula,
    format_value,
    parse_range,
    run_sweep,
)
from .matching import enumerate_perfect_matchings, has_unique_perfect_matching


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="antiforce")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p_gen = sub.add_parser("gen", help="emit a family graph as JSON")
    p_gen.add_argument("family", choices=sorted(FAMILIES))
    p_gen.add_argument("--k", type=int, required=True)

    p_pow = sub.add_parser("power", help="raise the stdin graph to a distance power")
    p_pow.add_argument("--m", type=int, required=True)

    p_pm = sub.add_parser("pm", help="perfect matchings of the stdin graph")
    mode = p_pm.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--unique", action="store_true")
    p_pm.add_argument("--cap", type=int, default=None)

    p_af = sub.add_parser("af", help="anti-forcing number of the stdin graph")
    p_af.add_argument("--method", choices=("subset", "matchings"), default="matchings")
    p_af.add_argument("--budget", type=str, default=None, metavar="NODES[:SECONDS]")

    p_formula = sub.add_parser("formula", help="closed-form value for a family")
    p_formula.add_argument("family", choices=sorted(FAMILIES))
    p_formula.add_argument("--k", type=int, required=True)
    p_formula.add_argument("--m", type=int, required=True)

    p_verify = sub.add_parser("verify", help="sweep a family against the oracle")
    p_verify.add_argument("family", choices=sorted(FAMILIES))
    p_verify.add_argument("--k-range", type=str, default=None, metavar="A[:B[:STEP]]")
    p_verify.add_argument("--m-range", type=str, default=None, metavar="A[:B[:STEP]]")
    p_verify.add_argument("--budget", type=str, default=None, metavar="NODES[:SECONDS]")
    p_verify.add_argument("--oracle-n-limit", type=int, default=DEFAULT_ORACLE_N_LIMIT)
    p_verify.add_argument(
        "--cross-check-n-limit", type=int, default=DEFAULT_CROSS_CHECK_N_LIMIT
    )
    p_verify.add_argument("--format", choices=("csv", "json"), default="csv")
    p_verify.add_argument("--out", type=str, default=None)
    p_verify.add_argument("--workers", type=int, default=1)

    p_report = sub.add_parser("report", help="re-emit a JSON record array from stdin")
    p_report.add_argument("--format", choices=("csv", "json"), required=True)
    p_report.add_argument("--out", type=str, default=None)

    return parser


def _read_graph() -> graphio.Graph:
    text = sys.stdin.read()
    if not text.strip():
        raise UsageError("expected a graph on stdin (JSON or 'n m' edge list)")
    return graphio.loads(text)


def _cmd_gen(args: argparse.Namespace) -> int:
    print(graphio.to_json(build(args.family, args.k)))
    return 0


def _cmd_power(args: argparse.Namespace) -> int:
    print(graphio.to_json(power(_read_graph(), args.m)))
    return 0


def _cmd_pm(args: argparse.Namespace) -> int:
    g = _read_graph()
    if args.unique:
        print(json.dumps({"unique": has_unique_perfect_matching(g)}))
        return 0
    matchings = enumerate_perfect_matchings(g, cap=args.cap)
    if args.count:
        if args.cap is not None:
            raise UsageError("--count ignores --cap; drop one of them")
        print(json.dumps({"count": len(matchings)}))
        return 0
    print(json.dumps({"matchings": [[list(e) for e in sorted(m)] for m in matchings]}))
    return 0


def _cmd_af(args: argparse.Namespace) -> int:
    g = _read_graph()
    budget = parse_budget(args.budget) if args.budget else default_budget()
    run = af_subset_search if args.method == "subset" else af_via_matchings
    result = run(g, budget)
    print(
        json.dumps(
            {
                "value": result.value,
                "witness": [list(e) for e in sorted(result.witness)],
                "method": result.method,
            }
        )
    )
    return 0


def _cmd_formula(args: argparse.Namespace) -> int:
    res = evaluate_formula(args.family, args.k, args.m)
    if res is None:
        raise UsageError(f"no closed form for family {args.family!r}")
    if isinstance(res, BoundPair):
        doc = {
            "value": None,
            "kind": "bounds",
            "case": "bounds",
            "applicability": "in_range",
            "lower": format_value(res.lower),
            "upper": format_value(res.upper),
        }
    else:
        assert isinstance(res, FormulaResult)
        value = res.value if isinstance(res.value, int) else format_value(res.value)
        doc = {
            "value": value,
            "kind": res.kind,
            "case": res.case,
            "applicability": res.applicability,
        }
    print(json.dumps(doc))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.workers < 1:
        raise UsageError("--workers must be >= 1")
    budget = parse_budget(args.budget) if args.budget else default_budget()
    if args.k_range is None and args.m_range is None:
        base = default_sweep_spec(args.family)
        ks, ms = base.k_values, base.m_values
    else:
        default = default_sweep_spec(args.family)
        ks = parse_range(args.k_range) if args.k_range else default.k_values
        ms = parse_range(args.m_range) if args.m_range else default.m_values
    spec = SweepSpec(
        family=args.family,
        k_values=ks,
        m_values=ms,
        budget_nodes=budget.max_nodes,
        budget_seconds=budget.max_seconds,
        oracle_n_limit=args.oracle_n_limit,
        cross_check_n_limit=args.cross_check_n_limit,
        output=args.out,
    )
    records = run_sweep(spec, workers=args.workers)
    text = emit_report(records, fmt=args.format, path=args.out)
    if args.out is None:
        sys.stdout.write(text)
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    try:
        records = json.loads(sys.stdin.read())
    except json.JSONDecodeError as exc:
        raise UsageError(f"stdin is not a JSON record array: {exc}") from None
    if not isinstance(records, list):
        raise UsageError("expected a JSON array of record objects")
    rows = []
    for rec in records:
        missing = [c for c in COLUMNS if c not in rec]
        if missing:
            raise UsageError(f"record missing keys: {missing}")
        rows.append([str(rec[c]) for c in COLUMNS])
    if args.format == "csv":
        import csv as _csv
        import io

        buf = io.StringIO()
        writer = _csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        writer.writerows(rows)
        text = buf.getvalue()
    else:
        text = json.dumps(records, indent=2) + "\n"
    from collections import Counter

    counts = Counter(str(rec["status"]) for rec in records)
    summary = " ".join(f"{s}={c}" for s, c in sorted(counts.items()))
    print(f"records={len(records)} {summary}".rstrip(), file=sys.stderr)
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "power": _cmd_power,
    "pm": _cmd_pm,
    "af": _cmd_af,
    "formula": _cmd_formula,
    "verify": _cmd_verify,
    "report": _cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_help(sys.stderr)
            return 1
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"antiforce: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"antiforce: {exc}", file=sys.stderr)
        return 1
    except BudgetExceededError as exc:
        bounds = []
        if exc.lower is not None:
            bounds.append(f"value >= {exc.lower}")
        if exc.upper is not None:
            bounds.append(f"value <= {exc.upper}")
        hint = f" ({', '.join(bounds)})" if bounds else ""
        print(f"antiforce: budget exhausted{hint}", file=sys.stderr)
        return 2
    except InternalInvariantError as exc:
        print(f"antiforce: internal invariant failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
