"""Command-line front end.

Subcommands: eval (one parameter cell: count, ratio factor,
classification), table (the reference tables in markdown, CSV or JSON),
verify (enumeration sweeps diffed against the closed forms plus ratio and
classification checks), census (entanglement-assisted parameter rows).

Exit codes: 0 success, 1 verification mismatch, 2 violated precondition or
infeasible enumeration. The oracle work limit resolves from --work-limit,
then the HULLCOUNT_WORK_LIMIT environment variable, then the package
default. Table and census output is byte-stable across runs: plain decimal
integers, no locale formatting, CSV rows terminated with CRLF.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import formulas
from .algebra import FormKind, field_of_order
from .eaqecc import entanglement_census
from .errors import (
    BadRangeError,
    HullCountError,
    OutOfValidRangeError,
    ParityViolationError,
    WorkLimitExceededError,
)
from .exactnum import rat_str
from .formulas import HermitianParams, SymplecticParams
from .oracle import (
    DEFAULT_WORK_LIMIT,
    HullSpectrum,
    SpectrumComparison,
    hull_spectrum,
    spectra_csv,
    spectrum_vs_formula,
)
from .ratios import (
    RatioClassification,
    comparison_rows,
    quadratic_character,
    ratio_report,
)

_FORMS = {f.value: f for f in FormKind}

# reference grids: (length, k, q) per row, ambient length first
HERMITIAN_TABLE_ROWS = [
    (4, 1, 2), (5, 1, 2), (6, 1, 2), (7, 1, 2),
    (4, 2, 2), (5, 2, 2), (6, 2, 2), (6, 3, 2),
    (7, 2, 2), (7, 3, 2), (8, 2, 2),
    (4, 1, 3), (5, 1, 3), (6, 1, 3),
    (4, 2, 3), (5, 2, 3), (6, 2, 3), (6, 3, 3),
]
SYMPLECTIC_TABLE_ROWS = [
    (4, 2, 2), (6, 2, 2), (8, 2, 2), (8, 4, 2),
    (10, 2, 2), (10, 4, 2), (12, 4, 2), (12, 6, 2),
    (4, 2, 3), (6, 2, 3), (8, 2, 3), (8, 4, 3),
]


def _resolve_work_limit(flag: int | None) -> int:
    if flag is not None:
        if flag <= 0:
            raise BadRangeError(f"work limit must be positive, got {flag}")
        return flag
    env = os.environ.get("HULLCOUNT_WORK_LIMIT")
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise BadRangeError(
                f"HULLCOUNT_WORK_LIMIT must be an integer, got {env!r}"
            ) from None
        if value <= 0:
            raise BadRangeError(f"HULLCOUNT_WORK_LIMIT must be positive, got {value}")
        return value
    return DEFAULT_WORK_LIMIT


def _ambient_length(form: FormKind, args: argparse.Namespace) -> int:
    # symplectic lengths always travel as the full ambient 2n
    if form is FormKind.SYMPLECTIC:
        if args.ambient is None:
            raise BadRangeError("the symplectic form takes --ambient 2n, not -n")
        if args.n is not None:
            raise BadRangeError("give --ambient for the symplectic form, not -n")
        if args.ambient < 0 or args.ambient % 2 != 0:
            raise BadRangeError(
                f"ambient length must be even and non-negative, got {args.ambient}"
            )
        return args.ambient
    if args.n is None:
        raise BadRangeError(f"the {form.value} form needs -n")
    if args.ambient is not None:
        raise BadRangeError(f"--ambient is symplectic-only; the {form.value} form takes -n")
    if args.n < 0:
        raise BadRangeError(f"length must be non-negative, got {args.n}")
    return args.n


# -- eval -----------------------------------------------------------------------

def cmd_eval(args: argparse.Namespace) -> int:
    form = _FORMS[args.form]
    length = _ambient_length(form, args)
    k, ell, q = args.k, args.ell, args.q
    if k < 0 or ell < 0:
        raise BadRangeError(f"k and l must be non-negative, got k={k} l={ell}")
    if form is FormKind.HERMITIAN:
        count = formulas.count_hermitian(HermitianParams(length, k, ell, q))
    elif form is FormKind.SYMPLECTIC:
        count = formulas.count_symplectic(SymplecticParams(length, k, ell, q))
    else:
        limit = _resolve_work_limit(args.work_limit)
        spectrum = hull_spectrum(length, k, field_of_order(q), form, limit)
        count = spectrum.counts.get(ell, 0)
    lines = [
        f"form: {form.value}",
        f"length: {length}",
        f"k: {k}",
        f"hull: {ell}",
        f"q: {q}",
        f"count: {count}",
    ]
    try:
        report = ratio_report(form, length, k, ell, q)
    except (OutOfValidRangeError, ParityViolationError) as exc:
        lines.append(f"alpha: undefined ({exc})")
    else:
        lines.append(f"alpha: {rat_str(report.alpha)}")
        lines.append(f"cofactor: {report.cofactor}")
        lines.append(f"step_ratio: {rat_str(report.full_ratio)}")
        lines.append(f"classification: {report.classification.value}")
        lines.append(f"count_monotone: {'yes' if report.monotone_a else 'no'}")
        if report.equality_boundary:
            lines.append("note: alpha sits exactly on the 1/2 floor")
    print("\n".join(lines))
    return 0


# -- table ----------------------------------------------------------------------

def _table_cells(form: FormKind) -> list[tuple[int, int, int, list[tuple[int, int, bool]]]]:
    """Rows (length, k, q, cells) with cells (ell, count, violation); the
    violation flag marks a count strictly above its predecessor in ell."""
    out = []
    if form is FormKind.HERMITIAN:
        for n, k, q in HERMITIAN_TABLE_ROWS:
            cells = []
            prev: int | None = None
            for ell in range(0, min(k, n - k) + 1):
                c = formulas.count_hermitian(HermitianParams(n, k, ell, q))
                cells.append((ell, c, prev is not None and c > prev))
                prev = c
            out.append((n, k, q, cells))
        return out
    for two_n, k, q in SYMPLECTIC_TABLE_ROWS:
        cells = []
        prev = None
        for ell in range(0, min(k, two_n - k) + 1, 2):
            c = formulas.count_symplectic(SymplecticParams(two_n, k, ell, q))
            cells.append((ell, c, prev is not None and c > prev))
            prev = c
        out.append((two_n, k, q, cells))
    return out


def _counts_markdown(form: FormKind, rows) -> str:
    step = 2 if form is FormKind.SYMPLECTIC else 1
    max_ell = max(cells[-1][0] for _, _, _, cells in rows)
    ells = list(range(0, max_ell + 1, step))
    first = "2n" if form is FormKind.SYMPLECTIC else "n"
    head = f"| {first} | k | q | " + " | ".join(f"A_{e}" for e in ells) + " |"
    rule = "| ---: | ---: | ---: | " + " | ".join("---:" for _ in ells) + " |"
    lines = [head, rule]
    for length, k, q, cells in rows:
        by_ell = {e: (c, v) for e, c, v in cells}
        rendered = []
        for e in ells:
            if e not in by_ell:
                rendered.append("")
                continue
            c, viol = by_ell[e]
            rendered.append(f"**{c}**" if viol else str(c))
        lines.append(f"| {length} | {k} | {q} | " + " | ".join(rendered) + " |")
    return "\n".join(lines) + "\n"


def _counts_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(["length", "k", "q", "ell", "count", "monotonicity_violation"])
    for length, k, q, cells in rows:
        for ell, c, viol in cells:
            writer.writerow([length, k, q, ell, c, "true" if viol else "false"])
    return buf.getvalue()


def _counts_json(rows) -> str:
    payload = [
        {
            "length": length,
            "k": k,
            "q": q,
            "ell": ell,
            "count": c,
            "monotonicity_violation": viol,
        }
        for length, k, q, cells in rows
        for ell, c, viol in cells
    ]
    return json.dumps(payload, indent=2) + "\n"


def _comparison_payload() -> list[dict[str, object]]:
    rows = comparison_rows((2, 3))
    return [
        {
            "form": row.form.value,
            "step": row.step,
            "alpha_lower_bound": row.alpha_lower_bound,
            "alpha_asymptotic": row.alpha_asymptotic,
            "limit_q2": rat_str(row.count_ratio_limits[2]),
            "limit_q3": rat_str(row.count_ratio_limits[3]),
            "exceptions": row.exceptions,
        }
        for row in rows
    ]


def _comparison_markdown() -> str:
    rows = _comparison_payload()
    cols = [str(r["form"]) for r in rows]
    lines = [
        "| quantity | " + " | ".join(cols) + " |",
        "| :--- | " + " | ".join(":---" for _ in cols) + " |",
    ]
    for label, key in [
        ("step in l", "step"),
        ("alpha lower bound", "alpha_lower_bound"),
        ("alpha asymptotic", "alpha_asymptotic"),
        ("count ratio limit, q=2", "limit_q2"),
        ("count ratio limit, q=3", "limit_q3"),
        ("exceptions", "exceptions"),
    ]:
        lines.append(
            f"| {label} | " + " | ".join(str(r[key]) for r in rows) + " |"
        )
    return "\n".join(lines) + "\n"


def _comparison_csv() -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    keys = [
        "form", "step", "alpha_lower_bound", "alpha_asymptotic",
        "limit_q2", "limit_q3", "exceptions",
    ]
    writer.writerow(keys)
    for row in _comparison_payload():
        writer.writerow([row[key] for key in keys])
    return buf.getvalue()


def cmd_table(args: argparse.Namespace) -> int:
    if args.which == "comparison":
        if args.format == "markdown":
            sys.stdout.write(_comparison_markdown())
        elif args.format == "csv":
            sys.stdout.write(_comparison_csv())
        else:
            sys.stdout.write(json.dumps(_comparison_payload(), indent=2) + "\n")
        return 0
    form = _FORMS[args.which]
    rows = _table_cells(form)
    if args.format == "markdown":
        sys.stdout.write(_counts_markdown(form, rows))
    elif args.format == "csv":
        sys.stdout.write(_counts_csv(rows))
    else:
        sys.stdout.write(_counts_json(rows))
    return 0


# -- verify ---------------------------------------------------------------------

def _sweep_cells(form: FormKind, args: argparse.Namespace) -> list[tuple[int, int]]:
    cells = []
    if form is FormKind.SYMPLECTIC:
        for length in range(2, args.max_ambient + 1, 2):
            for k in range(0, length + 1):
                if args.max_k is not None and k > args.max_k:
                    break
                cells.append((length, k))
        return cells
    top = args.max_n
    for n in range(2, top + 1):
        # closed-form sweeps cover every k; the euclidean identities are
        # stated for k up to n/2 only
        k_hi = n // 2 if form is FormKind.EUCLIDEAN else n - 1
        for k in range(1, k_hi + 1):
            if args.max_k is not None and k > args.max_k:
                break
            cells.append((n, k))
    return cells


def _oracle_counts(comp: SpectrumComparison) -> dict[int, int]:
    return {cell.ell: cell.oracle for cell in comp.cells}


def _hermitian_problems(comp: SpectrumComparison) -> list[str]:
    counts = _oracle_counts(comp)
    n, k, q = comp.length, comp.k, comp.q
    problems = []
    for ell in range(0, min(k, n - k)):
        rep = ratio_report(FormKind.HERMITIAN, n, k, ell, q)
        lhs = Fraction(counts.get(ell, 0))
        rhs = rep.full_ratio * counts.get(ell + 1, 0)
        if lhs != rhs:
            problems.append(f"l={ell}: ratio identity fails ({lhs} != {rhs})")
        boundary = rep.classification is RatioClassification.HERMITIAN_BOUNDARY
        if (not rep.monotone_a) != (boundary and q == 2):
            problems.append(f"l={ell}: monotonicity exception set mismatch")
        if (counts.get(ell, 0) > counts.get(ell + 1, 0)) != rep.monotone_a:
            problems.append(f"l={ell}: ratio and count monotonicity disagree")
        if rep.alpha < Fraction(q, q + 1):
            problems.append(f"l={ell}: alpha below q/(q+1)")
    return problems


def _symplectic_problems(comp: SpectrumComparison) -> list[str]:
    counts = _oracle_counts(comp)
    two_n, k, q = comp.length, comp.k, comp.q
    problems = []
    first = k % 2
    for ell in range(first, min(k, two_n - k) - 1, 2):
        try:
            rep = ratio_report(FormKind.SYMPLECTIC, two_n, k, ell, q)
        except OutOfValidRangeError:
            continue
        lhs = Fraction(counts.get(ell, 0))
        rhs = rep.full_ratio * counts.get(ell + 2, 0)
        if lhs != rhs:
            problems.append(f"l={ell}: ratio identity fails ({lhs} != {rhs})")
        exceptional = rep.classification is RatioClassification.SYMPLECTIC_EXCEPTION_ES
        if (not rep.monotone_a) != exceptional:
            problems.append(f"l={ell}: E_S membership mismatch")
        if (counts.get(ell, 0) > counts.get(ell + 2, 0)) != rep.monotone_a:
            problems.append(f"l={ell}: ratio and count monotonicity disagree")
    return problems


def _euclidean_problems(comp: SpectrumComparison) -> list[str]:
    counts = _oracle_counts(comp)
    n, k, q = comp.length, comp.k, comp.q
    problems = []
    for ell in range(0, k):
        try:
            rep = ratio_report(FormKind.EUCLIDEAN, n, k, ell, q)
        except OutOfValidRangeError:
            # no finite factor: the successor count must vanish
            if counts.get(ell + 1, 0) != 0:
                problems.append(f"l={ell}: successor count should vanish")
            continue
        lhs = Fraction(counts.get(ell, 0))
        rhs = rep.full_ratio * counts.get(ell + 1, 0)
        if lhs != rhs:
            problems.append(f"l={ell}: ratio identity fails ({lhs} != {rhs})")
        if rep.alpha < Fraction(1, 2):
            problems.append(f"l={ell}: alpha below 1/2")
        half = rep.classification is RatioClassification.EUCLIDEAN_HALF_BOUND
        regime = (
            q % 2 == 1
            and n % 2 == 0
            and (k - ell) % 2 == 1
            and quadratic_character((-1) ** (n // 2), q) == 1
        )
        if half != regime:
            problems.append(f"l={ell}: half-bound regime mismatch")
    return problems


_PROBLEM_FNS = {
    FormKind.HERMITIAN: _hermitian_problems,
    FormKind.SYMPLECTIC: _symplectic_problems,
    FormKind.EUCLIDEAN: _euclidean_problems,
}


def _spectrum_of(comp: SpectrumComparison) -> HullSpectrum:
    order = comp.q * comp.q if comp.form is FormKind.HERMITIAN else comp.q
    counts = {cell.ell: cell.oracle for cell in comp.cells if cell.oracle}
    return HullSpectrum(comp.length, comp.k, comp.form, order, counts)


def cmd_verify(args: argparse.Namespace) -> int:
    forms = args.forms or ["hermitian", "symplectic", "euclidean"]
    qs = args.qs or [2]
    limit = _resolve_work_limit(args.work_limit)
    dumped: list[HullSpectrum] = []
    failures: list[str] = []
    checked = 0
    for name in forms:
        form = _FORMS[name]
        for q in qs:
            for length, k in _sweep_cells(form, args):
                label = f"{name} length={length} k={k} q={q}"
                comp = spectrum_vs_formula(length, k, q, form, limit)
                if args.dump:
                    dumped.append(_spectrum_of(comp))
                problems = [] if comp.passed else [comp.first_failure() or "mismatch"]
                problems += _PROBLEM_FNS[form](comp)
                checked += 1
                if problems:
                    failures.append(f"{label}: {problems[0]}")
                    print(f"FAIL {label}: {problems[0]}")
                else:
                    print(f"PASS {label}")
    if args.dump:
        text = spectra_csv(dumped)
        if args.dump == "-":
            sys.stdout.write(text)
        else:
            with open(args.dump, "w", newline="") as handle:
                handle.write(text)
    if failures:
        print(f"{len(failures)} of {checked} cells failed; first: {failures[0]}")
        return 1
    print(f"all {checked} cells pass")
    return 0


# -- census ---------------------------------------------------------------------

def cmd_census(args: argparse.Namespace) -> int:
    form = _FORMS[args.form]
    length = _ambient_length(form, args)
    if args.k < 0:
        raise BadRangeError(f"k must be non-negative, got {args.k}")
    rows = entanglement_census(length, args.k, args.q, form)
    if args.format == "markdown":
        lines = [
            "| l | ebits | count | exceptional |",
            "| ---: | ---: | ---: | :--- |",
        ]
        for row in rows:
            flag = "yes" if row.exceptional else "no"
            lines.append(f"| {row.ell} | {row.ebits} | {row.count} | {flag} |")
        sys.stdout.write("\n".join(lines) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow(["ell", "ebits", "count", "exceptional"])
        for row in rows:
            writer.writerow(
                [row.ell, row.ebits, row.count, "true" if row.exceptional else "false"]
            )
        sys.stdout.write(buf.getvalue())
    else:
        payload = [
            {
                "ell": row.ell,
                "ebits": row.ebits,
                "count": row.count,
                "exceptional": row.exceptional,
            }
            for row in rows
        ]
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    return 0


# -- parser ---------------------------------------------------------------------

def _add_cell_arguments(parser: argparse.ArgumentParser, with_ell: bool) -> None:
    parser.add_argument("-n", type=int, default=None,
                        help="ambient length (euclidean and hermitian forms)")
    parser.add_argument("--ambient", type=int, default=None,
                        help="ambient length 2n (symplectic form)")
    parser.add_argument("-k", type=int, required=True, help="code dimension")
    if with_ell:
        parser.add_argument("-l", "--hull", dest="ell", type=int, required=True,
                            help="hull dimension")
    parser.add_argument("-q", type=int, required=True,
                        help="field order (subfield order for hermitian)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hullcount",
        description="Exact counts of linear codes by hull dimension.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one parameter cell")
    p_eval.add_argument("--form", required=True, choices=sorted(_FORMS))
    _add_cell_arguments(p_eval, with_ell=True)
    p_eval.add_argument("--work-limit", type=int, default=None,
                        help="subspace cap for euclidean enumeration")

    p_table = sub.add_parser("table", help="render a reference table")
    p_table.add_argument("which", choices=["hermitian", "symplectic", "comparison"])
    p_table.add_argument("--format", choices=["markdown", "csv", "json"],
                         default="markdown")

    p_verify = sub.add_parser(
        "verify", help="enumeration sweep against the closed forms"
    )
    p_verify.add_argument("--form", action="append", dest="forms",
                          choices=sorted(_FORMS),
                          help="repeatable; default all three")
    p_verify.add_argument("--max-n", type=int, default=4,
                          help="largest euclidean/hermitian length")
    p_verify.add_argument("--max-ambient", type=int, default=6,
                          help="largest symplectic ambient length 2n")
    p_verify.add_argument("--max-k", type=int, default=None)
    p_verify.add_argument("-q", action="append", dest="qs", type=int,
                          help="repeatable; default 2")
    p_verify.add_argument("--work-limit", type=int, default=None)
    p_verify.add_argument("--dump", metavar="PATH", default=None,
                          help="write the oracle spectra as CSV ('-' for stdout)")

    p_census = sub.add_parser("census", help="entanglement-assisted parameters")
    p_census.add_argument("--form", required=True,
                          choices=["hermitian", "symplectic"])
    _add_cell_arguments(p_census, with_ell=False)
    p_census.add_argument("--format", choices=["markdown", "csv", "json"],
                          default="markdown")
    return parser


_COMMANDS = {
    "eval": cmd_eval,
    "table": cmd_table,
    "verify": cmd_verify,
    "census": cmd_census,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except WorkLimitExceededError as exc:
        print(f"error: infeasible: {exc}", file=sys.stderr)
        return 2
    except HullCountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
