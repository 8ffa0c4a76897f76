"""Acceptance criteria, one PASS/FAIL line each in the terminal summary.

Run directly with ``python3 tests/test_acceptance.py`` or as part of pytest.
"""

import sys
import time

import pytest

import oracles
from conftest import ACCEPTANCE_LINES
from monoidlab import cli
from monoidlab.classify import is_radical_generator, is_square_free
from monoidlab.conditions import ConditionId, check_uniqueness, survey
from monoidlab.core import Ternary
from monoidlab.families import build
from monoidlab.lemmas import implication_suite, run_lemma_suites
from monoidlab.profiles import enumerate_profiles, table_breakdown

YES = Ternary.YES


def record(label, ok, detail):
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'} criterion {label}: {detail}")


# -- 1 ---------------------------------------------------------------------------------

COUNTS = {"general": 2960, "atomic": 2708, "accp": 324, "sr": 57, "preschreier": 26, "gcd": 11, "gcds": 7}


def test_criterion_1_profile_counts():
    start = time.perf_counter()
    got = {cls: enumerate_profiles(cls).count for cls in COUNTS}
    elapsed = time.perf_counter() - start
    ok = got == COUNTS and elapsed < 5
    record(1, ok, f"profile counts {list(got.values())} in {elapsed:.2f}s (limit 5s)")
    assert got == COUNTS
    assert elapsed < 5


# -- 2 ---------------------------------------------------------------------------------

def test_criterion_2_general_table():
    b = table_breakdown("general")
    keys = [r.key for r in b.rows]
    counts = [r.count for r in b.rows]
    expected_keys = [(2, 2), (2, 1), (2, 0), (1, 1), (1, 0), (0, 0)]
    expected = [4, 264, 1512, 88, 840, 252]
    ok = keys == expected_keys and counts == expected
    record(2, ok, f"general breakdown by (v(0sr), v(2sr)) gives {counts}")
    assert ok


# -- 3 ---------------------------------------------------------------------------------

def oracle_windows():
    """(spec, elements, square-free oracle, radical oracle) for every checked family."""
    out = []
    for k in (2, 3):
        m = build(f"numerical:{k}")
        out.append((m, m.elements(12), lambda a, k=k: oracles.num_sqf(k, a), lambda a, k=k: oracles.num_gpr(k, a)))
    for d in (1, 2):
        m = build(f"free:{d}")
        out.append((m, m.elements(6), oracles.free_sqf, lambda a: oracles.free_gpr(a, box=7, top_n=7)))
    for p, q in ((1, 1), (1, 2)):
        m = build(f"chain:{p},{q}")
        out.append((m, m.elements(6),
                    lambda a, p=p, q=q: oracles.chain_sqf(a.xs, a.y, p, q),
                    lambda a, p=p, q=q: oracles.chain_gpr(a.xs, a.y, p, q)))
    return out


def test_criterion_3_oracle_equivalence():
    start = time.perf_counter()
    mismatches = []
    total = 0
    for m, window, sqf, gpr in oracle_windows():
        for a in window:
            total += 1
            if (is_square_free(m, a).answer is YES) != sqf(a):
                mismatches.append((m.spec, m.format(a), "sqf"))
            if (is_radical_generator(m, a).answer is YES) != gpr(a):
                mismatches.append((m.spec, m.format(a), "gpr"))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 60
    record(3, ok, f"{total} elements over six families, {len(mismatches)} mismatches, {elapsed:.1f}s (limit 60s)")
    assert not mismatches, mismatches[:10]
    assert elapsed < 60


# -- 4 ---------------------------------------------------------------------------------

REQUIRED_SUITES = {
    "free:2": [
        "divisors of square-free elements are square-free",
        "divisors of radical elements are radical",
        "factorizations of square-free elements are pairwise coprime",
        "pairwise coprime square-free elements have square-free product",
        "pairwise coprime square-free divisors of b have product dividing b",
        "lcm of radical elements is radical",
        "square-free and radical coincide pointwise",
    ],
    "numerical:2": [
        "divisors of square-free elements are square-free",
        "divisors of radical elements are radical",
        "factorizations of square-free elements are pairwise coprime",
    ],
}


def test_criterion_4_lemma_suites():
    failures = []
    checked = 0
    for spec, bound in (("free:2", 6), ("numerical:2", 12)):
        results = {r.name: r for r in run_lemma_suites(build(spec), bound)}
        for name in REQUIRED_SUITES[spec]:
            r = results.get(name)
            if r is None:
                failures.append(f"{spec}: missing suite {name}")
            elif not r.passed:
                failures.append(r.line())
            else:
                checked += r.checked
        failures += [r.line() for r in results.values() if not r.passed and r.name not in REQUIRED_SUITES[spec]]
    record(4, not failures, f"lemma suites on free:2 and numerical:2, {checked} cases, {len(failures)} violations")
    assert not failures, failures


# -- 5 ---------------------------------------------------------------------------------

def test_criterion_5_element_implications():
    failures = []
    checked = skipped = 0
    for m, window, _, _ in oracle_windows():
        for r in implication_suite(m, window):
            checked += r.checked
            skipped += r.skipped
            if not r.passed:
                failures.append(f"{m.spec}: {r.line()}")
    record(5, not failures, f"{checked} implication checks, {skipped} skipped for unknown antecedents, "
                            f"{len(failures)} violations")
    assert not failures, failures


# -- 6 ---------------------------------------------------------------------------------

def test_criterion_6_uniqueness():
    free1, free2 = build("free:1"), build("free:2")
    elements = [(free1, (a,)) for a in range(65)]
    elements += [(free2, (i, j)) for i in range(6) for j in range(6)]
    problems = []
    for m, a in elements:
        for cond in ("3s", "6s"):
            r = check_uniqueness(m, a, cond)
            if not (r.complete and r.unique):
                problems.append((m.spec, a, cond))
    record(6, not problems, f"3s and 6s witnesses on {len(elements)} elements, {len(problems)} not unique or incomplete")
    assert not problems, problems


# -- 7 ---------------------------------------------------------------------------------

SUSTAINED = ("4s", "4's", "5s", "5's")


@pytest.fixture(scope="module")
def example_surveys():
    chain = build("chain:1,2")
    rationals = survey(build("rationals"))
    chain_report = survey(chain, 3)
    rational_holds = sorted(c.value for c in rationals.conjecture)
    exact = rational_holds == sorted(["4's", "4'r", "5's", "5'r", "6s", "6r"]) and not rationals.discrepancies
    tally = chain_report.tallies[ConditionId.S2]
    refuter = chain.format(tally.refuting) if tally.refuting is not None else None
    broken = [c for c in SUSTAINED if chain_report.tallies[ConditionId.parse(c)].status != "holds"]
    reports = {"numerical:2": survey(build("numerical:2"), 12), "free:2": survey(build("free:2"), 6)}
    emitted = all(r.claim is not None and r.discrepancies for r in reports.values())
    parts = [
        f"rationals {'exact' if exact else 'differs'}",
        f"chain:1,2 refutes 2s at {refuter}",
        "chain:1,2 sustains 4s,4's,5s,5's" if not broken
        else f"chain:1,2 refutes {','.join(broken)} on y-carrying elements",
        "discrepancy reports for " + ", ".join(f"{s} ({len(r.discrepancies)})" for s, r in reports.items()),
    ]
    record(7, exact and refuter is not None and not broken and emitted, "; ".join(parts))
    return {"exact": exact, "refuter": refuter, "broken": broken, "emitted": emitted, "reports": reports}


def test_criterion_7_rationals_exact(example_surveys):
    assert example_surveys["exact"]


def test_criterion_7_chain_refutes_2s(example_surveys):
    assert example_surveys["refuter"] == "y1"


@pytest.mark.xfail(strict=True, reason="y-carrying elements such as y1 admit no 4s, 5s or 5's factorization; "
                                       "the published list does not hold on the window")
def test_criterion_7_chain_sustains_listed(example_surveys):
    assert example_surveys["broken"] == []


def test_criterion_7_discrepancy_reports(example_surveys):
    assert example_surveys["emitted"]
    for report in example_surveys["reports"].values():
        data = report.to_json()
        assert data["discrepancies"] == report.discrepancies


# -- 8 ---------------------------------------------------------------------------------

COMMANDS = [
    ["profiles", "enumerate", "--class", "general"],
    ["profiles", "enumerate", "--class", "gcds", "--emit", "json"],
    ["profiles", "tables", "--class", "general"],
    ["element", "classify", "--monoid", "numerical:2", "--element", "7"],
    ["element", "conditions", "--monoid", "chain:1,2", "--element", "y1"],
    ["survey", "--monoid", "rationals"],
    ["survey", "--monoid", "chain:1,2", "--bound", "3"],
    ["survey", "--monoid", "numerical:2", "--bound", "12", "--emit", "csv"],
    ["verify", "lemmas", "--monoid", "free:2", "--bound", "6", "--seed", "1"],
    ["verify", "uniqueness", "--monoid", "free:1", "--bound", "64"],
]


def test_criterion_8_determinism(tmp_path, capsys):
    differing = []
    for i, argv in enumerate(COMMANDS):
        outputs = []
        for run in ("a", "b"):
            path = tmp_path / f"{i}{run}"
            cli.main([*argv, "--out", str(path)])
            outputs.append(path.read_bytes())
        if outputs[0] != outputs[1]:
            differing.append(" ".join(argv))
    capsys.readouterr()
    record(8, not differing, f"{len(COMMANDS)} commands run twice, {len(differing)} differ")
    assert not differing, differing


if __name__ == "__main__":
    code = pytest.main([__file__, "-q", "-p", "no:cacheprovider"])
    sys.exit(code)
