"""Command-line entry point.

Exit codes: 0 success, 1 I/O failure, 2 bad arguments (class, spec, element),
3 survey of a monoid with no registered example claim, 4 property violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Sequence

from .classify import classify
from .conditions import (
    CONDITIONS,
    ConditionId,
    check_all,
    check_uniqueness,
    survey,
)
from .core import Budget, MonoidClass, MonoidError, Unsupported
from .families import build
from .lemmas import SuiteResult, implication_suite, run_lemma_suites
from .profiles import enumerate_profiles, table_breakdown

EXIT_IO = 1
EXIT_USAGE = 2
EXIT_NO_CLAIM = 3
EXIT_VIOLATION = 4


class UsageError(Exception):
    pass


def _json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _md(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(str(x) for x in row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def _table(fmt: str, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    return _csv(header, rows) if fmt == "csv" else _md(header, rows)


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _budget(args: argparse.Namespace) -> Budget:
    try:
        return Budget.from_env(
            max_factor_count=args.budget_max_factor_count,
            max_power=args.budget_max_power,
            max_divisor_enumeration=args.budget_max_divisor_enumeration,
            max_depth=args.budget_max_depth,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _monoid(args: argparse.Namespace):
    try:
        return build(args.monoid)
    except (MonoidError, ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc


def _element(m, text: str):
    try:
        return m.parse(text)
    except (MonoidError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _class(text: str) -> MonoidClass:
    try:
        return MonoidClass.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


# -- profiles -------------------------------------------------------------------------

def cmd_profiles(args: argparse.Namespace) -> int:
    if args.action == "enumerate":
        result = enumerate_profiles(args.cls)
        print(result.count)
        if args.out:
            _write(_json(result.to_json()) if args.emit == "json" else result.to_csv(), args.out)
        return 0
    breakdown = table_breakdown(args.cls)
    if args.emit == "json":
        text = _json(breakdown.to_json())
    elif args.emit == "csv":
        text = breakdown.to_csv()
    else:
        rows = [(*r.key, r.count, "" if r.paper is None else r.paper) for r in breakdown.rows]
        text = _md([*breakdown.columns, "L3", "published L3"], rows)
    _write(text, args.out)
    for row in breakdown.mismatches:
        print(f"mismatch at {row.key}: computed {row.count}, published {row.paper}", file=sys.stderr)
    return 0


# -- element --------------------------------------------------------------------------

def cmd_element(args: argparse.Namespace) -> int:
    m = _monoid(args)
    a = _element(m, args.element)
    budget = _budget(args)
    if args.action == "classify":
        data = classify(m, a, budget).to_json()
        if args.emit == "json":
            _write(_json({"monoid": m.spec, **data}), args.out)
        else:
            rows = [(k, json.dumps(data[k]).strip('"')) for k in ("element", "unit", "sqf", "gpr", "atom")]
            rows += [(f"witness_{k}", json.dumps(v, sort_keys=True)) for k, v in sorted(data["witnesses"].items())]
            _write(_table(args.emit, ["field", "value"], rows), args.out)
        return 0
    wanted = _conditions(args.conditions)
    results = check_all(m, a, budget)
    entries = {}
    for cond in wanted:
        r = results[cond]
        entry: dict[str, Any] = {"answer": r.answer.value}
        if r.witness is not None:
            entry["witness"] = r.witness.to_json(m)
        if r.reason:
            entry["reason"] = r.reason
        entries[cond.value] = entry
    if args.emit == "json":
        _write(_json({"monoid": m.spec, "element": m.format(a), "conditions": entries}), args.out)
    else:
        rows = [(c, e["answer"], json.dumps(e.get("witness", ""), sort_keys=True), e.get("reason", ""))
                for c, e in entries.items()]
        _write(_table(args.emit, ["condition", "answer", "witness", "reason"], rows), args.out)
    return 0


def _conditions(text: str | None) -> list[ConditionId]:
    if not text:
        return list(CONDITIONS)
    try:
        return [ConditionId.parse(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# -- survey ---------------------------------------------------------------------------

def cmd_survey(args: argparse.Namespace) -> int:
    m = _monoid(args)
    try:
        report = survey(m, args.bound, _budget(args))
    except Unsupported as exc:
        raise UsageError(str(exc)) from exc
    if args.emit == "json":
        text = _json(report.to_json())
    elif args.emit == "csv":
        text = report.to_csv()
    else:
        rows = [(c.value, t.yes, t.no, t.unknown, t.status) for c, t in report.tallies.items()]
        text = _md(["condition", "yes", "no", "unknown", "status"], rows)
    _write(text, args.out)
    summary = sys.stdout if args.out else sys.stderr
    if report.claim is None:
        print(f"{m.spec}: no example claim registered for this monoid", file=summary)
        return EXIT_NO_CLAIM
    found = report.discrepancies
    print(f"{m.spec}: {len(found)} discrepancies against {report.claim_source}", file=summary)
    for d in found:
        print(f"  {d['condition']}: claimed {d['paper']}, computed {d['computed']}", file=summary)
    return 0


# -- verify ---------------------------------------------------------------------------

def cmd_verify(args: argparse.Namespace) -> int:
    m = _monoid(args)
    budget = _budget(args)
    if not m.enumerable:
        raise UsageError(f"{m.spec} has no enumerable element window")
    window = m.elements(args.bound)
    if args.action == "lemmas":
        results = run_lemma_suites(m, args.bound, args.seed, budget) + implication_suite(m, window, budget)
    else:
        results = _uniqueness(m, window, _conditions(args.conditions or "3s,6s"), budget)
    for r in results:
        print(r.line())
    if args.out:
        payload = {
            "monoid": m.spec,
            "bound": args.bound,
            "seed": args.seed,
            "suites": [{"name": r.name, "checked": r.checked, "skipped": r.skipped,
                        "unresolved": r.unresolved, "passed": r.passed, "violations": r.violations}
                       for r in results],
        }
        _write(_json(payload), args.out)
    return 0 if all(r.passed for r in results) else EXIT_VIOLATION


def _uniqueness(m, window, conds, budget) -> list[SuiteResult]:
    out = []
    for cond in conds:
        res = SuiteResult(f"{cond.value} witnesses unique up to associates")
        for a in window:
            try:
                report = check_uniqueness(m, a, cond, budget)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
            if not report.complete:
                res.unresolved += 1
            res.checked += 1
            if report.violation is not None:
                w1, w2 = report.violation
                res.fail(f"{m.format(a)}: {json.dumps(w1.to_json(m), sort_keys=True)} vs "
                         f"{json.dumps(w2.to_json(m), sort_keys=True)}")
        out.append(res)
    return out


# -- parser ---------------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser, emit_default: str = "json") -> None:
    p.add_argument("--emit", choices=("json", "csv", "md"), default=emit_default)
    p.add_argument("--out", help="write the report here instead of stdout")


def _add_budget(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("budget (defaults 16, 32, 100000, 6)")
    g.add_argument("--budget-max-factor-count", type=int)
    g.add_argument("--budget-max-power", type=int, help="also settable via MONOIDLAB_BUDGET_MAX_POWER")
    g.add_argument("--budget-max-divisor-enumeration", type=int)
    g.add_argument("--budget-max-depth", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monoidlab", description=(
        "Square-free and radical factorization conditions in commutative monoids."))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profiles", help="consistent condition profiles per monoid class")
    p.add_argument("action", choices=("enumerate", "tables"))
    p.add_argument("--class", dest="cls", type=_class, required=True,
                   help=", ".join(c.value for c in MonoidClass))
    _add_common(p, "csv")
    p.set_defaults(func=cmd_profiles)

    p = sub.add_parser("element", help="classify one element or decide its conditions")
    p.add_argument("action", choices=("classify", "conditions"))
    p.add_argument("--monoid", required=True)
    p.add_argument("--element", required=True)
    p.add_argument("--conditions", help="comma-separated ids, default all eighteen")
    _add_common(p)
    _add_budget(p)
    p.set_defaults(func=cmd_element)

    p = sub.add_parser("survey", help="tally all conditions over an element window")
    p.add_argument("--monoid", required=True)
    p.add_argument("--bound", type=int, default=3)
    _add_common(p)
    _add_budget(p)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("verify", help="run property suites over an element window")
    p.add_argument("action", choices=("lemmas", "uniqueness"))
    p.add_argument("--monoid", required=True)
    p.add_argument("--bound", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--conditions", help="uniqueness only; default 3s,6s")
    _add_common(p)
    _add_budget(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"monoidlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"monoidlab: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
