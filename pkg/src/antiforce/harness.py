"""Verification harness: sweeps formulas against the exact oracles.

Every comparison lands in a VerificationRecord, one row per (family, k,
m). Formula evaluation failures never abort a sweep; they become
OUT_OF_RANGE rows. Oracle budgets never abort a sweep either; they
become SKIPPED rows. A disagreement between the two independent oracles
does abort: that is an internal invariant failure, not a finding.

Reports are deterministic byte for byte: fixed column order, fixed row
order, exact rational formatting.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .antiforcing import af_subset_search, af_via_matchings, is_anti_forcing_set
from .budget import Budget, BudgetExceededError
from .families import build
from .formulas import (
    IN_RANGE,
    OUT_OF_RANGE,
    BoundPair,
    FormulaResult,
    Value,
    af_cycle_power_bounds,
    af_friendship_power,
    af_ortho_power,
    af_ortho_power_closed_form,
    af_para_power,
    af_para_power_closed_form,
    af_path_power,
    af_triangular_chain_power,
)
from .graph import Graph, power

STATUSES = (
    "MATCH",
    "MISMATCH",
    "WITHIN_BOUNDS",
    "BOUND_VIOLATION",
    "OUT_OF_RANGE",
    "SKIPPED",
)

COLUMNS = (
    "family",
    "k",
    "m",
    "n",
    "formula_value",
    "formula_case",
    "applicability",
    "oracle_value",
    "bound_lower",
    "bound_upper",
    "status",
)

EVEN_K_FAMILIES = frozenset({"ortho-chain", "para-chain"})

DEFAULT_ORACLE_N_LIMIT = 14
DEFAULT_CROSS_CHECK_N_LIMIT = 8


class InternalInvariantError(Exception):
    """The two oracles disagreed or a witness failed re-verification."""


def format_value(x: Value | None) -> str:
    """Exact textual form: integers bare, other rationals as a/b, None as n/a."""
    if x is None:
        return "n/a"
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return str(x)


@dataclass(frozen=True)
class VerificationRecord:
    family: str
    k: int
    m: int
    n: int
    formula_value: Value | None
    formula_case: str
    applicability: str
    oracle_value: int | None
    bound_lower: Fraction | None
    bound_upper: Fraction | None
    status: str

    def as_row(self) -> list[str]:
        return [
            self.family,
            str(self.k),
            str(self.m),
            str(self.n),
            format_value(self.formula_value),
            self.formula_case,
            self.applicability,
            "skipped(budget)" if self.oracle_value is None else str(self.oracle_value),
            format_value(self.bound_lower),
            format_value(self.bound_upper),
            self.status,
        ]

    def as_json(self) -> dict[str, object]:
        row = self.as_row()
        doc: dict[str, object] = dict(zip(COLUMNS, row))
        doc["k"] = self.k
        doc["m"] = self.m
        doc["n"] = self.n
        if self.oracle_value is not None:
            doc["oracle_value"] = self.oracle_value
        return doc


def classify_status(
    *,
    formula_value: Value | None,
    applicability: str,
    oracle_value: int | None,
    bound_lower: Fraction | None,
    bound_upper: Fraction | None,
) -> str:
    """Pure status classification; the only consumer of record semantics.

    Precedence: out-of-range rows are never graded, budget-starved rows
    are SKIPPED, bound rows grade against the interval, everything else
    is an equality check.
    """
    if applicability == OUT_OF_RANGE:
        return "OUT_OF_RANGE"
    if oracle_value is None:
        return "SKIPPED"
    if bound_lower is not None or bound_upper is not None:
        ok_low = bound_lower is None or oracle_value >= bound_lower
        ok_up = bound_upper is None or oracle_value <= bound_upper
        return "WITHIN_BOUNDS" if ok_low and ok_up else "BOUND_VIOLATION"
    if formula_value is None:
        return "OUT_OF_RANGE"
    return "MATCH" if formula_value == oracle_value else "MISMATCH"


def evaluate_formula(family: str, k: int, m: int) -> FormulaResult | BoundPair | None:
    """Dispatch to the family's evaluator; None when no formula exists."""
    if family == "path":
        return af_path_power(k, m)
    if family == "cycle":
        return af_cycle_power_bounds(k, m)
    if family == "friendship":
        return af_friendship_power(k, m)
    if family == "tri-chain":
        return af_triangular_chain_power(k, m)
    if family == "ortho-chain":
        return af_ortho_power(k, m)
    if family == "para-chain":
        return af_para_power(k, m)
    if family == "complete":
        return None
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class SweepSpec:
    family: str
    k_values: tuple[int, ...]
    m_values: tuple[int, ...]
    budget_nodes: int = 50_000_000
    budget_seconds: float = 10.0
    oracle_n_limit: int = DEFAULT_ORACLE_N_LIMIT
    cross_check_n_limit: int = DEFAULT_CROSS_CHECK_N_LIMIT
    output: str | None = None

    def __post_init__(self) -> None:
        if not self.k_values or not self.m_values:
            raise ValueError("sweep ranges must be non-empty")
        if self.budget_nodes <= 0 or self.budget_seconds <= 0:
            raise ValueError("budget caps must be positive")

    def points(self) -> list[tuple[int, int]]:
        ks = [
            k
            for k in self.k_values
            if not (self.family in EVEN_K_FAMILIES and k % 2)
        ]
        return [(k, m) for k in ks for m in self.m_values]


def parse_range(text: str) -> tuple[int, ...]:
    """Inclusive integer range A, A:B, or A:B:STEP."""
    parts = text.split(":")
    if len(parts) > 3 or any(not p for p in parts):
        raise ValueError(f"bad range {text!r}, expected A[:B[:STEP]]")
    nums = [int(p) for p in parts]
    if len(nums) == 1:
        return (nums[0],)
    step = nums[2] if len(nums) == 3 else 1
    if step < 1:
        raise ValueError(f"range step must be >= 1, got {step}")
    if nums[1] < nums[0]:
        raise ValueError(f"empty range {text!r}")
    return tuple(range(nums[0], nums[1] + 1, step))


def _oracle_af(g: Graph, nodes: int, seconds: float, n_limit: int):
    """Exact anti-forcing result, or None when the budget rules it out.

    Odd-order graphs bypass the size limit: the no-PM convention value
    is an edge count, there is nothing to search.
    """
    if g.n % 2 == 0 and g.n > n_limit:
        return None
    try:
        return af_via_matchings(g, Budget(max_nodes=nodes, max_seconds=seconds))
    except BudgetExceededError:
        return None


def sweep_point(
    family: str,
    k: int,
    m: int,
    budget_nodes: int,
    budget_seconds: float,
    oracle_n_limit: int,
    cross_check_n_limit: int,
) -> VerificationRecord:
    base = build(family, k)
    g = power(base, m)
    res = evaluate_formula(family, k, m)

    formula_value: Value | None = None
    lower: Fraction | None = None
    upper: Fraction | None = None
    if isinstance(res, BoundPair):
        case = "bounds"
        applicability = IN_RANGE
        lower, upper = res.lower, res.upper
    elif isinstance(res, FormulaResult):
        formula_value = res.value
        case = res.case
        applicability = res.applicability
    else:
        case = "n/a"
        applicability = OUT_OF_RANGE

    result = _oracle_af(g, budget_nodes, budget_seconds, oracle_n_limit)
    oracle = None if result is None else result.value

    if oracle is not None and g.n <= cross_check_n_limit:
        try:
            check = af_subset_search(
                g, Budget(max_nodes=budget_nodes, max_seconds=budget_seconds)
            )
        except BudgetExceededError:
            check = None
        if check is not None and check.value != oracle:
            raise InternalInvariantError(
                f"oracle disagreement on {family}(k={k})^{m}: "
                f"subset={check.value} matchings={oracle}"
            )

    status = classify_status(
        formula_value=formula_value,
        applicability=applicability,
        oracle_value=oracle,
        bound_lower=lower,
        bound_upper=upper,
    )

    if (
        status == "MISMATCH"
        and result is not None
        and result.method == "via_matchings"
        and not is_anti_forcing_set(g, result.witness)
    ):
        raise InternalInvariantError(f"unverifiable witness on {family}(k={k})^{m}")

    return VerificationRecord(
        family=family,
        k=k,
        m=m,
        n=base.n,
        formula_value=formula_value,
        formula_case=case,
        applicability=applicability,
        oracle_value=oracle,
        bound_lower=lower,
        bound_upper=upper,
        status=status,
    )


def _sweep_point_args(args: tuple) -> VerificationRecord:
    return sweep_point(*args)


def run_sweep(spec: SweepSpec, workers: int = 1) -> list[VerificationRecord]:
    """One record per sweep point, in (k, m) iteration order."""
    argses = [
        (
            spec.family,
            k,
            m,
            spec.budget_nodes,
            spec.budget_seconds,
            spec.oracle_n_limit,
            spec.cross_check_n_limit,
        )
        for k, m in spec.points()
    ]
    if workers <= 1:
        return [sweep_point(*a) for a in argses]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_sweep_point_args, argses))


def run_monotonicity_check(
    g: Graph,
    m_max: int,
    budget_nodes: int = 50_000_000,
    budget_seconds: float = 10.0,
    name: str = "graph",
) -> list[VerificationRecord]:
    """Check af(g^m) is non-decreasing in m, via the oracle alone.

    Each row grades af(g^m) against the last successfully computed
    previous value as a lower bound; budget-starved rows are SKIPPED and
    later rows fall back to the last value that is known.
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    records: list[VerificationRecord] = []
    last_known: int | None = None
    for m in range(1, m_max + 1):
        gm = power(g, m)
        try:
            value: int | None = af_via_matchings(
                gm, Budget(max_nodes=budget_nodes, max_seconds=budget_seconds)
            ).value
        except BudgetExceededError:
            value = None
        if value is None:
            status = "SKIPPED"
        elif last_known is None or value >= last_known:
            status = "WITHIN_BOUNDS"
        else:
            status = "BOUND_VIOLATION"
        records.append(
            VerificationRecord(
                family=name,
                k=g.n,
                m=m,
                n=g.n,
                formula_value=None,
                formula_case="monotonicity",
                applicability=IN_RANGE,
                oracle_value=value,
                bound_lower=Fraction(last_known) if last_known is not None else None,
                bound_upper=None,
                status=status,
            )
        )
        if value is not None:
            last_known = value
    return records


def run_edge_count_audit(
    family: str, k_values: tuple[int, ...], m_values: tuple[int, ...]
) -> list[VerificationRecord]:
    """Grade edge-count formulas against directly counted |E(family(k)^m)|.

    Only rows whose formula is an edge-count claim participate; exact
    and bound rows (even paths and cycles) are outside this audit.
    """
    records: list[VerificationRecord] = []
    for k in k_values:
        if family in EVEN_K_FAMILIES and k % 2:
            continue
        base = build(family, k)
        for m in m_values:
            res = evaluate_formula(family, k, m)
            if not isinstance(res, FormulaResult) or res.kind != "edge_count":
                continue
            counted = len(power(base, m).edges)
            status = classify_status(
                formula_value=res.value,
                applicability=res.applicability,
                oracle_value=counted,
                bound_lower=None,
                bound_upper=None,
            )
            records.append(
                VerificationRecord(
                    family=family,
                    k=k,
                    m=m,
                    n=base.n,
                    formula_value=res.value,
                    formula_case=res.case,
                    applicability=res.applicability,
                    oracle_value=counted,
                    bound_lower=None,
                    bound_upper=None,
                    status=status,
                )
            )
    return records


def check_closed_form_consistency(k_max: int = 12) -> list[tuple[str, int, int, Value, Value]]:
    """Compare chain recurrences against their closed-form counterparts.

    Returns every in-range disagreement as (family, k, m, recurrence,
    closed form); an empty list means the algebra is consistent. The
    para odd-m closed form is known to disagree (by 2(m-3) for odd
    m >= 5); those rows are findings this function reports.
    """
    bad: list[tuple[str, int, int, Value, Value]] = []
    for k in range(2, k_max + 1, 2):
        for m in range(3, k + 2):
            rec = af_ortho_power(k, m)
            closed = af_ortho_power_closed_form(k, m)
            if rec.applicability == IN_RANGE and rec.value != closed:
                bad.append(("ortho-chain", k, m, rec.value, closed))
        for m in range(2, 2 * k + 2):
            rec = af_para_power(k, m)
            closed = af_para_power_closed_form(k, m)
            if rec.applicability == IN_RANGE and rec.value != closed:
                bad.append(("para-chain", k, m, rec.value, closed))
    return bad


def emit_report(
    records: list[VerificationRecord],
    fmt: str = "csv",
    path: str | None = None,
) -> str:
    """Serialize records; per-status counts go to stderr."""
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        for rec in records:
            writer.writerow(rec.as_row())
        text = buf.getvalue()
    elif fmt == "json":
        text = json.dumps([rec.as_json() for rec in records], indent=2) + "\n"
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    counts = Counter(rec.status for rec in records)
    summary = " ".join(f"{s}={counts[s]}" for s in STATUSES if counts[s])
    print(f"records={len(records)} {summary}".rstrip(), file=sys.stderr)
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


DEFAULT_RANGES: dict[str, tuple[tuple[int, ...], tuple[int, ...]]] = {
    "path": (tuple(range(2, 9)), (2, 3)),
    "cycle": (tuple(range(3, 9)), (2, 3)),
    "complete": (tuple(range(2, 7)), (2, 3)),
    "friendship": (tuple(range(1, 5)), (2, 3)),
    "tri-chain": (tuple(range(1, 6)), (2, 3)),
    "ortho-chain": ((2, 4, 6, 8), (2, 3, 4)),
    "para-chain": ((2, 4, 6, 8), (2, 3, 4)),
}


def default_sweep_spec(family: str) -> SweepSpec:
    if family not in DEFAULT_RANGES:
        raise ValueError(f"no default ranges for family {family!r}")
    ks, ms = DEFAULT_RANGES[family]
    return SweepSpec(family=family, k_values=ks, m_values=ms)
