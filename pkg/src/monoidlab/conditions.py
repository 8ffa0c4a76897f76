"""Element-level decision procedures for the eighteen factorization conditions.

Each condition comes in a square-free flavour (``s``) and a radical flavour
(``r``); the two differ only in which class the factors are drawn from.  A
search answers YES with a witness that re-validates, NO only when the search
space was exhausted (or the family supplies a proof), UNKNOWN otherwise.
"""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

from .classify import in_class
from .core import (
    DEFAULT_BUDGET,
    Budget,
    BudgetExhausted,
    DivisorSetInfinite,
    Element,
    Monoid,
    Ternary,
)
from .families import Chain, DoubleChain, Dyadic, FreeCommutative, Numerical, Rationals


class ConditionId(enum.Enum):
    S0 = "0s"
    R0 = "0r"
    S1 = "1s"
    R1 = "1r"
    S2 = "2s"
    R2 = "2r"
    S3 = "3s"
    R3 = "3r"
    S4 = "4s"
    R4 = "4r"
    S4P = "4's"
    R4P = "4'r"
    S5 = "5s"
    R5 = "5r"
    S5P = "5's"
    R5P = "5'r"
    S6 = "6s"
    R6 = "6r"

    @property
    def kind(self) -> str:
        return self.value[-1]

    @property
    def number(self) -> str:
        return self.value[:-1]

    @property
    def twin(self) -> ConditionId:
        return ConditionId(self.number + ("r" if self.kind == "s" else "s"))

    @classmethod
    def parse(cls, text: str) -> ConditionId:
        # "4ps" is accepted as a shell-friendly spelling of "4's"
        key = text.strip().replace("p", "'")
        return cls(key)


CONDITIONS: tuple[ConditionId, ...] = tuple(ConditionId)
NUMBERS = ("0", "1", "2", "3", "4", "4'", "5", "5'", "6")


@dataclass(frozen=True)
class Witness:
    condition: ConditionId
    factors: tuple = ()
    b: Any = None
    c: Any = None
    d: Any = None
    n: int | None = None
    # class divisors consulted by a universal sub-check, or the family rule used
    checked: tuple = ()
    rule: str | None = None

    def to_json(self, m: Monoid) -> dict:
        out: dict[str, Any] = {}
        if self.factors:
            out["factors"] = [m.format(x) for x in self.factors]
        for name in ("b", "c", "d"):
            value = getattr(self, name)
            if value is not None:
                out[name] = m.format(value)
        if self.n is not None:
            out["n"] = self.n
        if self.checked:
            out["checked"] = [m.format(x) for x in self.checked]
        if self.rule:
            out["rule"] = self.rule
        return out


@dataclass(frozen=True)
class ConditionResult:
    condition: ConditionId
    answer: Ternary
    witness: Witness | None = None
    reason: str | None = None


class _Search:
    """Per-call search state: membership cache and truncation bookkeeping."""

    def __init__(self, m: Monoid, kind: str, budget: Budget, cache: dict | None = None):
        self.m = m
        self.kind = kind
        self.budget = budget
        self.truncated = False
        self.notes: list[str] = []
        self.members = cache if cache is not None else {}
        self._divisors: dict[Element, tuple[list[Element], bool]] = {}

    def truncate(self, note: str) -> None:
        self.truncated = True
        if note not in self.notes:
            self.notes.append(note)

    def member(self, x: Element) -> Ternary:
        key = (self.kind, x)
        if key not in self.members:
            self.members[key] = in_class(self.m, x, self.kind, self.budget)
        return self.members[key]

    def class_divisors(self, x: Element) -> tuple[list[Element], bool]:
        if x in self._divisors:
            found, complete = self._divisors[x]
        else:
            special = self.m.special_class_divisors(x, self.kind)
            if special is not None:
                found, complete = special
            else:
                try:
                    divs = self.m.divisors(x, self.budget)
                    complete = self.m.divisors_complete(x)
                except (DivisorSetInfinite, BudgetExhausted) as exc:
                    divs, complete = [], False
                    self.truncate(str(exc))
                found = []
                for d in divs:
                    t = self.member(d)
                    if t is Ternary.YES:
                        found.append(d)
                    elif t is Ternary.UNKNOWN:
                        complete = False
            self._divisors[x] = (found, complete)
        if not complete:
            self.truncate(f"class divisors of {self.m.format(x)} are a bounded slice")
        return found, complete

    def coprime(self, a: Element, b: Element) -> bool:
        if self.m.is_unit(a) or self.m.is_unit(b):
            return True
        t = self.m.coprime(a, b, self.budget)
        if t is Ternary.UNKNOWN:
            self.truncate("coprimality undecided")
        return t is Ternary.YES

    def power_index(self, a: Element, c: Element) -> int | None:
        if self.m.is_unit(a):
            return 1
        t, n = self.m.power_index(a, c, self.budget)
        if t is Ternary.UNKNOWN:
            self.truncate(f"power search stopped at n = {self.budget.max_power}")
        return n if t is Ternary.YES else None

    def every_divides(self, x: Element, y: Element) -> tuple[Ternary, tuple, str | None]:
        """Every class divisor of ``x`` divides ``y``."""
        rule = self.m.class_divisors_divide(x, y, self.kind)
        if rule is not None:
            return Ternary.of(rule), (), "support inclusion at the common depth"
        found, complete = self.class_divisors(x)
        if not all(self.m.divides(d, y) for d in found):
            return Ternary.NO, tuple(found), None
        return (Ternary.YES if complete else Ternary.UNKNOWN), tuple(found), None

    def every_square_divides(self, x: Element) -> tuple[Ternary, tuple, str | None]:
        """Every class divisor ``d`` of ``x`` has ``d^2 | x``."""
        rule = self.m.class_divisors_square_divide(x, self.kind)
        if rule is not None:
            return Ternary.of(rule), (), "exponents 0 or at least 2 at every depth"
        found, complete = self.class_divisors(x)
        m = self.m
        if not all(m.divides(m.mul(d, d), x) for d in found):
            return Ternary.NO, tuple(found), None
        return (Ternary.YES if complete else Ternary.UNKNOWN), tuple(found), None

    def too_deep(self, depth: int) -> bool:
        if depth > self.budget.max_factor_count:
            self.truncate(f"more than {self.budget.max_factor_count} factors needed")
            return True
        return False


# -- searches ---------------------------------------------------------------------
# each yields every witness it can reach, in canonical order

def _gen_products(ctx: _Search, a: Element, cond: ConditionId) -> Iterator[Witness]:
    """0: a = s_1 s_2 ... s_n."""
    m = ctx.m
    if m.is_unit(a):
        yield Witness(cond, factors=(a,))
        return
    dead: set = set()

    # factors are emitted in non-increasing canonical order to skip permutations
    def rec(r, cap, depth):
        if (r, cap) in dead or ctx.too_deep(depth):
            return
        hit = False
        if ctx.member(r) is Ternary.YES and (cap is None or m.sort_key(r) <= cap):
            hit = True
            yield (r,)
        found, _ = ctx.class_divisors(r)
        for s in reversed(found):
            if m.is_unit(s) or s == r:
                continue
            key = m.sort_key(s)
            if cap is not None and key > cap:
                continue
            for rest in rec(m.quotient(r, s), key, depth + 1):
                hit = True
                yield (s,) + rest
        if not hit:
            dead.add((r, cap))

    for factors in rec(a, None, 1):
        yield Witness(cond, factors=factors)


def _gen_graded(ctx: _Search, a: Element, cond: ConditionId) -> Iterator[Witness]:
    """1: a = s_1 s_2^2 ... s_n^n with pairwise coprime s_i."""
    m = ctx.m
    if m.is_unit(a):
        yield Witness(cond, factors=(a,))
        return

    def rec(r, k, chosen):
        if m.is_unit(r):
            yield chosen
            return
        if ctx.too_deep(k):
            return
        found, _ = ctx.class_divisors(r)
        powers = [(s, m.power(s, k)) for s in found]
        fits = [(s, sk) for s, sk in powers if m.divides(sk, r)]
        # s^j | r for j >= k forces s^k | r, so without a non-unit fit now
        # only units remain and r can never be used up
        if not any(not m.is_unit(s) for s, _ in fits):
            return
        for s, sk in fits:
            if all(ctx.coprime(s, t) for t in chosen):
                yield from rec(m.quotient(r, sk), k + 1, chosen + (s,))

    for factors in rec(a, 1, ()):
        yield Witness(cond, factors=factors)


def _gen_chain(ctx: _Search, a: Element, cond: ConditionId) -> Iterator[Witness]:
    """2: a = s_1 s_2 ... s_n with s_i | s_{i+1}."""
    m = ctx.m
    if m.is_unit(a):
        yield Witness(cond, factors=(a,))
        return
    dead: set = set()

    # peel the largest factor first; each next one divides the previous
    def rec(r, top, depth):
        if m.is_unit(r):
            yield ()
            return
        if (r, top) in dead or ctx.too_deep(depth):
            return
        hit = False
        found, _ = ctx.class_divisors(r)
        for s in reversed(found):
            if m.is_unit(s) or (top is not None and not m.divides(s, top)):
                continue
            for rest in rec(m.quotient(r, s), s, depth + 1):
                hit = True
                yield (s,) + rest
        if not hit:
            dead.add((r, top))

    for desc in rec(a, None, 1):
        yield Witness(cond, factors=tuple(reversed(desc)))


def _gen_binary(ctx: _Search, a: Element, cond: ConditionId) -> Iterator[Witness]:
    """3: a = s_0 s_1^2 s_2^4 ... s_n^(2^n)."""
    m = ctx.m
    dead: set = set()

    def rec(r, depth):
        if m.is_unit(r):
            yield (r,)
            return
        if r in dead or ctx.too_deep(depth):
            return
        hit = False
        found, _ = ctx.class_divisors(r)
        for s0 in found:
            root = m.sqrt(m.quotient(r, s0), ctx.budget)
            if root is None:
                continue
            if m.is_unit(root):
                hit = True
                yield (s0,)
                continue
            for rest in rec(root, depth + 1):
                hit = True
                yield (s0,) + rest
        if not hit:
            dead.add(r)

    for factors in rec(a, 1):
        yield Witness(cond, factors=factors)


def _splits(ctx: _Search, a: Element) -> Iterator[tuple[Element, Element]]:
    found, _ = ctx.class_divisors(a)
    for c in found:
        yield ctx.m.quotient(a, c), c


def _gen_pure_power(ctx: _Search, a: Element, cond: ConditionId) -> Iterator[Witness]:
    """4: a = bc, b ⊥ c, with d in the class, d^2 | b and b | d^n."""
    m = ctx.m
    for b, c in _splits(ctx, a):
        if not ctx.coprime(b, c):
            continue
        found, _ = ctx.class_divisors(b)
        for d in found:
            if not m.divides(m.mul(d, d), b):
                continue
            n = ctx.power_index(b, d)
            if n is not None:
                yield Witness(cond, b=b, c=c, d=d, n=n)


def _gen_square_full(ctx: _Search, a: Element, cond: ConditionId) -> Iterator[Witness]:
    """4': a = bc, b ⊥ c, every class divisor of b divides it squared."""
    for b, c in _splits(ctx, a):
        if not ctx.coprime(b, c):
            continue
        verdict, checked, rule = ctx.every_square_divides(b)
        if verdict is Ternary.UNKNOWN:
            ctx.truncate("universal check over class divisors undecided")
        if verdict is Ternary.YES:
            yield Witness(cond, b=b, c=c, checked=checked, rule=rule)


def _gen_radical_power(ctx: _Search, a: Element, cond: ConditionId) -> Iterator[Witness]:
    """5: a = bc with a | c^n."""
    for b, c in _splits(ctx, a):
        n = ctx.power_index(a, c)
        if n is not None:
            yield Witness(cond, b=b, c=c, n=n)


def _gen_radical_cover(ctx: _Search, a: Element, cond: ConditionId) -> Iterator[Witness]:
    """5': a = bc and every class divisor of a divides c."""
    for b, c in _splits(ctx, a):
        verdict, checked, rule = ctx.every_divides(a, c)
        if verdict is Ternary.UNKNOWN:
            ctx.truncate("universal check over class divisors undecided")
        if verdict is Ternary.YES:
            yield Witness(cond, b=b, c=c, checked=checked, rule=rule)


def _gen_square_times(ctx: _Search, a: Element, cond: ConditionId) -> Iterator[Witness]:
    """6: a = b^2 c."""
    m = ctx.m
    for q, c in _splits(ctx, a):
        b = m.sqrt(q, ctx.budget)
        if b is not None:
            yield Witness(cond, b=b, c=c)


_SEARCHES: dict[str, Callable[[_Search, Element, ConditionId], Iterator[Witness]]] = {
    "0": _gen_products,
    "1": _gen_graded,
    "2": _gen_chain,
    "3": _gen_binary,
    "4": _gen_pure_power,
    "4'": _gen_square_full,
    "5": _gen_radical_power,
    "5'": _gen_radical_cover,
    "6": _gen_square_times,
}


def _as_condition(cond: ConditionId | str) -> ConditionId:
    return cond if isinstance(cond, ConditionId) else ConditionId.parse(cond)


def check_condition(m: Monoid, a: Element, cond: ConditionId | str,
                    budget: Budget = DEFAULT_BUDGET, cache: dict | None = None) -> ConditionResult:
    cond = _as_condition(cond)
    a = m.validate(a)
    proof = m.refute(a, cond.value)
    if proof is not None:
        return ConditionResult(cond, Ternary.NO, reason=proof)
    ctx = _Search(m, cond.kind, budget, cache)
    search = _SEARCHES[cond.number](ctx, a, cond)
    try:
        witness = next(search, None)
    except BudgetExhausted as exc:
        witness = None
        ctx.truncate(str(exc))
    if witness is not None:
        return ConditionResult(cond, Ternary.YES, witness)
    if not ctx.truncated:
        return ConditionResult(cond, Ternary.NO, reason="search space exhausted")
    if m.search_is_exhaustive(a, cond.value):
        return ConditionResult(cond, Ternary.NO, reason="every admissible split lies in the searched slice")
    return ConditionResult(cond, Ternary.UNKNOWN, reason="; ".join(ctx.notes))


def check_all(m: Monoid, a: Element, budget: Budget = DEFAULT_BUDGET,
              cache: dict | None = None) -> dict[ConditionId, ConditionResult]:
    cache = {} if cache is None else cache
    return {cond: check_condition(m, a, cond, budget, cache) for cond in CONDITIONS}


def all_witnesses(m: Monoid, a: Element, cond: ConditionId | str,
                  budget: Budget = DEFAULT_BUDGET, limit: int = 10_000) -> tuple[list[Witness], bool]:
    """Every witness reachable within the budget, and whether the scan was exhaustive."""
    cond = _as_condition(cond)
    a = m.validate(a)
    ctx = _Search(m, cond.kind, budget)
    out = []
    for w in _SEARCHES[cond.number](ctx, a, cond):
        out.append(w)
        if len(out) >= limit:
            ctx.truncate("witness limit reached")
            break
    return out, not ctx.truncated


def validate_witness(m: Monoid, a: Element, w: Witness, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Recheck a witness from scratch using only core operations and classifiers."""
    cond = w.condition
    ctx = _Search(m, cond.kind, budget)
    is_member = lambda x: ctx.member(x) is Ternary.YES  # noqa: E731
    number = cond.number
    eq = m.associates_eq
    if number in ("0", "1", "2", "3"):
        fs = w.factors
        if not fs or not all(is_member(s) for s in fs):
            return False
        if number == "0":
            return eq(m.product(fs), a)
        if number == "1":
            pairwise = all(m.coprime(s, t, budget) is Ternary.YES or m.is_unit(s) or m.is_unit(t)
                           for i, s in enumerate(fs) for t in fs[i + 1:])
            return pairwise and eq(m.product(m.power(s, i + 1) for i, s in enumerate(fs)), a)
        if number == "2":
            chained = all(m.divides(s, t) for s, t in zip(fs, fs[1:]))
            return chained and eq(m.product(fs), a)
        return eq(m.product(m.power(s, 2**i) for i, s in enumerate(fs)), a)
    b, c = w.b, w.c
    if b is None or c is None or not is_member(c):
        return False
    if number == "6":
        return eq(m.mul(m.mul(b, b), c), a)
    if not eq(m.mul(b, c), a):
        return False
    if number == "4":
        d = w.d
        return (ctx.coprime(b, c) and d is not None and is_member(d)
                and m.divides(m.mul(d, d), b) and w.n is not None and m.divides(b, m.power(d, w.n)))
    if number == "4'":
        return ctx.coprime(b, c) and ctx.every_square_divides(b)[0] is Ternary.YES
    if number == "5":
        return w.n is not None and m.divides(a, m.power(c, w.n))
    return ctx.every_divides(a, c)[0] is Ternary.YES


# -- uniqueness ---------------------------------------------------------------------

UNIQUENESS_CONDITIONS = (ConditionId.S1, ConditionId.S2, ConditionId.S3, ConditionId.S6, ConditionId.R5)


@dataclass
class UniquenessReport:
    element: Element
    condition: ConditionId
    witness_count: int
    complete: bool
    violation: tuple[Witness, Witness] | None = None

    @property
    def unique(self) -> bool:
        return self.violation is None


def _shape(m: Monoid, w: Witness) -> tuple:
    number = w.condition.number
    if number in ("1", "3"):
        fs = list(w.factors)
        while len(fs) > 1 and m.is_unit(fs[-1]):
            fs.pop()
        return tuple(fs)
    if number == "2":
        fs = list(w.factors)
        while len(fs) > 1 and m.is_unit(fs[0]):
            fs.pop(0)
        return tuple(fs)
    return (w.b, w.c)


def _same_up_to_associates(m: Monoid, x: tuple, y: tuple) -> bool:
    return len(x) == len(y) and all(m.associates_eq(s, t) for s, t in zip(x, y))


def check_uniqueness(m: Monoid, a: Element, cond: ConditionId | str,
                     budget: Budget = DEFAULT_BUDGET) -> UniquenessReport:
    cond = _as_condition(cond)
    if cond not in UNIQUENESS_CONDITIONS:
        raise ValueError(f"uniqueness is only checked for {[c.value for c in UNIQUENESS_CONDITIONS]}")
    witnesses, complete = all_witnesses(m, a, cond, budget)
    report = UniquenessReport(m.validate(a), cond, len(witnesses), complete)
    if witnesses:
        first = _shape(m, witnesses[0])
        for w in witnesses[1:]:
            if not _same_up_to_associates(m, first, _shape(m, w)):
                report.violation = (witnesses[0], w)
                break
    return report


# -- published claims and surveys ---------------------------------------------------

def paper_claim(m: Monoid) -> tuple[str, dict[ConditionId, bool | None]] | None:
    """The condition vector the source examples attribute to ``m``, if any."""
    every = {c: True for c in CONDITIONS}
    if isinstance(m, Numerical) or (type(m) is FreeCommutative and m.d == 1):
        return "Example 1", every
    if type(m) is FreeCommutative and m.d == 2:
        holds = {"0s", "1s", "2s", "3s", "4s", "4'r", "5s", "5'r", "6s"}
        return "Example 3", {c: c.value in holds for c in CONDITIONS}
    if isinstance(m, (Rationals, Dyadic)):
        holds = {"4's", "4'r", "5's", "5'r", "6s", "6r"}
        return "Example 4", {c: c.value in holds for c in CONDITIONS}
    if isinstance(m, Chain):
        holds = {"4s", "4's", "5s", "5's"}
        if m.p == 1 and m.q == 1:
            return "Example 5(1)", every
        if m.q % 2 == 0:
            return "Example 5(2)", {c: c.value in holds for c in CONDITIONS}
        if m.q >= 3 and m.p != 1:
            return "Example 5(3)", {c: c.value in holds for c in CONDITIONS}
        return None
    if isinstance(m, DoubleChain):
        fails = {"1s", "1r", "2s", "2r"}
        return "Example 6", {c: (False if c.value in fails else None) for c in CONDITIONS}
    return None


@dataclass
class Tally:
    yes: int = 0
    no: int = 0
    unknown: int = 0
    refuting: Element | None = None
    refuting_reason: str | None = None

    @property
    def status(self) -> str:
        if self.no:
            return "fails"
        if self.unknown:
            return "unknown"
        return "holds"


@dataclass
class SurveyReport:
    monoid: Monoid
    window: dict
    basis: str
    tallies: dict[ConditionId, Tally] = field(default_factory=dict)
    claim_source: str | None = None
    claim: dict[ConditionId, bool | None] | None = None

    @property
    def conjecture(self) -> list[ConditionId]:
        return [c for c in CONDITIONS if self.tallies[c].status == "holds"]

    @property
    def vector(self) -> dict[ConditionId, str]:
        return {c: self.tallies[c].status for c in CONDITIONS}

    @property
    def discrepancies(self) -> list[dict]:
        out = []
        if self.claim is None:
            return out
        for c in CONDITIONS:
            claimed = self.claim.get(c)
            if claimed is None:
                continue
            status = self.tallies[c].status
            expected = "holds" if claimed else "fails"
            if status != expected:
                out.append({"condition": c.value, "paper": expected, "computed": status})
        return out

    def to_json(self) -> dict:
        m = self.monoid
        conditions = {}
        for c in CONDITIONS:
            t = self.tallies[c]
            entry: dict[str, Any] = {"yes": t.yes, "no": t.no, "unknown": t.unknown, "status": t.status}
            if t.refuting is not None:
                entry["refuting_witness"] = {"element": m.format(t.refuting), "reason": t.refuting_reason}
            conditions[c.value] = entry
        claim = None
        if self.claim is not None:
            claim = [c.value for c in CONDITIONS if self.claim.get(c)]
        return {
            "monoid": m.spec,
            "window": self.window,
            "basis": self.basis,
            "conditions": conditions,
            "conjecture": [c.value for c in self.conjecture],
            "paper_source": self.claim_source,
            "paper_claim": claim,
            "discrepancies": self.discrepancies,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["condition", "yes", "no", "unknown", "status", "paper", "refuting_element"])
        for c in CONDITIONS:
            t = self.tallies[c]
            claimed = ""
            if self.claim is not None and self.claim.get(c) is not None:
                claimed = "holds" if self.claim[c] else "fails"
            refuting = self.monoid.format(t.refuting) if t.refuting is not None else ""
            writer.writerow([c.value, t.yes, t.no, t.unknown, t.status, claimed, refuting])
        return buf.getvalue()


def survey(m: Monoid, bound: int = 3, budget: Budget = DEFAULT_BUDGET) -> SurveyReport:
    if m.enumerable:
        elements = m.elements(bound)
        window = {"bound": bound, "size": len(elements)}
        basis = "sampled window: 'holds' means no counterexample among the window elements"
    else:
        elements = m.samples()
        window = {"samples": [m.format(x) for x in elements], "size": len(elements)}
        # no Sqf/Gpr element besides 0 and a/2 always exists, so the
        # per-element answers do not depend on which positive element is used
        basis = "analytic family: every positive element admits the same decisions"
    claim = paper_claim(m)
    report = SurveyReport(m, window, basis, {c: Tally() for c in CONDITIONS},
                          claim[0] if claim else None, claim[1] if claim else None)
    cache: dict = {}
    for a in elements:
        for cond, result in check_all(m, a, budget, cache).items():
            t = report.tallies[cond]
            if result.answer is Ternary.YES:
                t.yes += 1
            elif result.answer is Ternary.NO:
                t.no += 1
                if t.refuting is None:
                    t.refuting, t.refuting_reason = a, result.reason
            else:
                t.unknown += 1
    return report
