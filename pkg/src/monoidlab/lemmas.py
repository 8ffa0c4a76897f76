"""Property suites run over a bounded element window of one family.

Each suite checks a structural statement about square-free and radical
elements, or a per-element implication between conditions, and records
the first (smallest) counterexample it meets.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from . import core
from .classify import gpr_set, is_radical_generator, is_square_free, sqf_set
from .conditions import CONDITIONS, ConditionId, check_all, validate_witness
from .core import DEFAULT_BUDGET, Budget, Element, Monoid, MonoidClass, Ternary


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    skipped: int = 0
    unresolved: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def fail(self, message: str) -> None:
        self.violations.append(message)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f", skipped {self.skipped}" if self.skipped else ""
        if self.unresolved:
            extra += f", unresolved {self.unresolved}"
        out = f"{status} {self.name} (checked {self.checked}{extra})"
        if self.violations:
            out += f": {self.violations[0]}"
        return out


def _yes(t: Ternary) -> bool:
    return t is Ternary.YES


def _fmt(m: Monoid, *xs: Element) -> str:
    return ", ".join(m.format(x) for x in xs)


def _nonunit_divisors(m: Monoid, a: Element, budget: Budget) -> list[Element]:
    return [d for d in m.divisors(a, budget) if not m.is_unit(d)]


def core_laws(m: Monoid, window: list[Element], rng: random.Random, samples: int = 200) -> SuiteResult:
    res = SuiteResult("monoid laws: associativity, commutativity, identity, cancellation")
    for _ in range(samples):
        a, b, c = (rng.choice(window) for _ in range(3))
        res.checked += 1
        if m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c)):
            res.fail(f"associativity at {_fmt(m, a, b, c)}")
        if m.mul(a, b) != m.mul(b, a):
            res.fail(f"commutativity at {_fmt(m, a, b)}")
        if m.mul(a, m.identity) != a:
            res.fail(f"identity at {_fmt(m, a)}")
        if m.quotient(m.mul(a, b), b) != a:
            res.fail(f"cancellation at {_fmt(m, a, b)}")
    return res


def divisor_closure(m: Monoid, members: list[Element], kind: str, budget: Budget) -> SuiteResult:
    label = "square-free" if kind == "s" else "radical"
    test = is_square_free if kind == "s" else is_radical_generator
    res = SuiteResult(f"divisors of {label} elements are {label}")
    for a in members:
        for b in m.divisors(a, budget):
            res.checked += 1
            if not _yes(test(m, b, budget).answer):
                res.fail(f"{m.format(b)} divides {m.format(a)}")
    return res


def coprime_factorizations(m: Monoid, members: list[Element], budget: Budget) -> SuiteResult:
    """Factors of a square-free element into two or three non-units are pairwise coprime."""
    res = SuiteResult("factorizations of square-free elements are pairwise coprime")
    for a in members:
        for b in _nonunit_divisors(m, a, budget):
            rest = m.quotient(a, b)
            if m.is_unit(rest):
                continue
            splits = [(b, rest)]
            splits += [(b, c, m.quotient(rest, c)) for c in _nonunit_divisors(m, rest, budget)
                       if not m.is_unit(m.quotient(rest, c))]
            for factors in splits:
                res.checked += 1
                for x, y in combinations(factors, 2):
                    if not _yes(core.coprime(m, x, y, budget)):
                        res.fail(f"{m.format(a)} = {' * '.join(m.format(f) for f in factors)}")
                        break
    return res


def gpr_in_sqf(m: Monoid, window: list[Element], budget: Budget) -> SuiteResult:
    res = SuiteResult("radical elements are square-free")
    for a in window:
        r = is_radical_generator(m, a, budget).answer
        if not _yes(r):
            continue
        res.checked += 1
        if is_square_free(m, a, budget).answer is Ternary.NO:
            res.fail(m.format(a))
    return res


def gpr_equals_sqf(m: Monoid, window: list[Element], budget: Budget) -> SuiteResult:
    res = SuiteResult("square-free and radical coincide pointwise")
    for a in window:
        s = is_square_free(m, a, budget).answer
        r = is_radical_generator(m, a, budget).answer
        res.checked += 1
        if s is not r:
            res.fail(f"{m.format(a)}: sqf={s.value}, gpr={r.value}")
    return res


def coprime_products(m: Monoid, members: list[Element], budget: Budget) -> SuiteResult:
    res = SuiteResult("pairwise coprime square-free elements have square-free product")
    for x, y in combinations(members, 2):
        if not _yes(core.coprime(m, x, y, budget)):
            continue
        res.checked += 1
        t = is_square_free(m, m.mul(x, y), budget).answer
        if t is Ternary.NO:
            res.fail(f"{_fmt(m, x, y)}")
        elif t is Ternary.UNKNOWN:
            res.unresolved += 1
    return res


def coprime_common_divisors(m: Monoid, window: list[Element], budget: Budget) -> SuiteResult:
    res = SuiteResult("pairwise coprime square-free divisors of b have product dividing b")
    for b in window:
        divs = [d for d in m.divisors(b, budget) if _yes(is_square_free(m, d, budget).answer)]
        for x, y in combinations(divs, 2):
            if not _yes(core.coprime(m, x, y, budget)):
                continue
            res.checked += 1
            if not m.divides(m.mul(x, y), b):
                res.fail(f"{_fmt(m, x, y)} under {m.format(b)}")
    return res


def lcm_radical(m: Monoid, members: list[Element], rng: random.Random,
                budget: Budget, samples: int = 200) -> SuiteResult:
    res = SuiteResult("lcm of radical elements is radical")
    if len(members) < 2:
        return res
    for _ in range(samples):
        xs = rng.sample(members, rng.randint(2, min(4, len(members))))
        lcm = core.lcm_of_set(m, xs)
        if lcm is None:
            res.skipped += 1
            continue
        res.checked += 1
        t = is_radical_generator(m, lcm, budget).answer
        if t is Ternary.NO:
            res.fail(f"lcm({_fmt(m, *xs)}) = {m.format(lcm)}")
        elif t is Ternary.UNKNOWN:
            res.unresolved += 1
    return res


def divisor_gcds(m: Monoid, window: list[Element], rng: random.Random,
                 budget: Budget, samples: int = 200) -> SuiteResult:
    res = SuiteResult("every set of divisors has a gcd")
    for _ in range(samples):
        a = rng.choice(window)
        divs = m.divisors(a, budget)
        xs = rng.sample(divs, rng.randint(1, min(4, len(divs))))
        res.checked += 1
        g = core.gcd_of_set(m, xs, budget)
        if g is None or not all(m.divides(g, x) for x in xs):
            res.fail(f"divisors {_fmt(m, *xs)} of {m.format(a)}")
    return res


def run_lemma_suites(m: Monoid, bound: int, seed: int = 0,
                     budget: Budget = DEFAULT_BUDGET) -> list[SuiteResult]:
    """Structural suites appropriate to the classes ``m`` declares."""
    rng = random.Random(seed)
    window = m.elements(bound)
    sqf = sqf_set(m, bound, budget)
    gpr = gpr_set(m, bound, budget)
    declared = m.declared_classes
    results = [
        core_laws(m, window, rng),
        divisor_closure(m, sqf, "s", budget),
        divisor_closure(m, gpr, "r", budget),
        coprime_factorizations(m, sqf, budget),
        gpr_in_sqf(m, window, budget),
    ]
    if MonoidClass.PRE_SCHREIER in declared:
        results += [
            coprime_products(m, sqf, budget),
            coprime_common_divisors(m, window, budget),
            gpr_equals_sqf(m, window, budget),
        ]
    if MonoidClass.GCD in declared:
        results.append(lcm_radical(m, gpr, rng, budget))
    if MonoidClass.GCDS in declared:
        results.append(divisor_gcds(m, window, rng, budget))
    return results


# -- per-element implications ---------------------------------------------------------

def element_implications(m: Monoid) -> list[tuple[ConditionId, ConditionId]]:
    pairs = []
    for k in "sr":
        for a, b in (("2", "1"), ("2", "3"), ("3", "6"), ("2", "5")):
            pairs.append((ConditionId(a + k), ConditionId(b + k)))
    pairs += [(ConditionId.R4, ConditionId.R4P), (ConditionId.R5, ConditionId.R5P)]
    pairs += [(ConditionId(n + "r"), ConditionId(n + "s")) for n in "0123456"]
    if MonoidClass.PRE_SCHREIER in m.declared_classes:
        pairs += [(ConditionId.S1, ConditionId.S2), (ConditionId.S1, ConditionId.S4),
                  (ConditionId.S4, ConditionId.S5)]
    return pairs


def implication_suite(m: Monoid, window: list[Element],
                      budget: Budget = DEFAULT_BUDGET) -> list[SuiteResult]:
    """Per-element implications plus re-validation of every YES witness."""
    pairs = element_implications(m)
    results = {p: SuiteResult(f"{p[0].value} => {p[1].value} per element") for p in pairs}
    witnesses = SuiteResult("every witness re-validates")
    cache: dict = {}
    for a in window:
        answers = check_all(m, a, budget, cache)
        for (x, y), res in results.items():
            ax, ay = answers[x].answer, answers[y].answer
            if ax is Ternary.UNKNOWN:
                res.skipped += 1
            elif ax is Ternary.YES:
                res.checked += 1
                if ay is Ternary.NO:
                    res.fail(f"at {m.format(a)}")
                elif ay is Ternary.UNKNOWN:
                    res.unresolved += 1
        for cond in CONDITIONS:
            w = answers[cond].witness
            if w is not None:
                witnesses.checked += 1
                if not validate_witness(m, a, w, budget):
                    witnesses.fail(f"{cond.value} at {m.format(a)}")
    return list(results.values()) + [witnesses]
