"""Square-free, radical-generator and atom classification with witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .core import (
    DEFAULT_BUDGET,
    Budget,
    BudgetExhausted,
    DivisorSetInfinite,
    Element,
    Monoid,
    Ternary,
    Unsupported,
)

SQF = "s"
GPR = "r"


@dataclass(frozen=True)
class Verdict:
    answer: Ternary
    witness: Any = None
    reason: str | None = None


def is_square_free(m: Monoid, a: Element, budget: Budget = DEFAULT_BUDGET) -> Verdict:
    if m.is_unit(a):
        return Verdict(Ternary.YES)
    rule = m.analytic_square_free(a)
    if rule is True:
        return Verdict(Ternary.YES)
    witness = m.square_witness(a, budget)
    if witness is not None:
        return Verdict(Ternary.NO, witness)
    if rule is False:
        # analytic rule says no but no certificate was found; stay sound
        return Verdict(Ternary.UNKNOWN, reason="square witness not located within budget")
    if m.divisors_complete(a):
        return Verdict(Ternary.YES)
    return Verdict(Ternary.UNKNOWN, reason="divisor search is depth-bounded")


def is_radical_generator(m: Monoid, a: Element, budget: Budget = DEFAULT_BUDGET) -> Verdict:
    if m.is_unit(a):
        return Verdict(Ternary.YES)
    rule = m.analytic_radical(a)
    if rule is True:
        return Verdict(Ternary.YES)
    witness = m.radical_witness(a, budget)
    if witness is not None:
        return Verdict(Ternary.NO, witness)
    # a universal statement over all b is never certified by bounded search
    return Verdict(Ternary.UNKNOWN, reason=f"no counterexample with n <= {budget.max_power}")


def is_atom(m: Monoid, a: Element, budget: Budget = DEFAULT_BUDGET) -> Verdict:
    if m.is_unit(a):
        return Verdict(Ternary.NO, reason="units are not atoms")
    rule = m.analytic_atom(a)
    split = _proper_split(m, a, budget)
    if split is not None:
        return Verdict(Ternary.NO, split)
    if rule is True:
        return Verdict(Ternary.YES)
    if rule is False:
        if m.analytic_square_free(a) is False:
            b, c = m.square_witness(a, budget) or (None, None)
            if b is not None:
                return Verdict(Ternary.NO, (b, m.mul(b, c)))
        return Verdict(Ternary.UNKNOWN, reason="no explicit splitting found")
    if m.divisors_complete(a):
        return Verdict(Ternary.YES)
    return Verdict(Ternary.UNKNOWN, reason="divisor search is depth-bounded")


def _proper_split(m: Monoid, a: Element, budget: Budget) -> tuple[Element, Element] | None:
    try:
        divs = m.divisors(a, budget)
    except (DivisorSetInfinite, BudgetExhausted):
        return None
    for b in divs:
        if m.is_unit(b) or b == a:
            continue
        return b, m.quotient(a, b)
    return None


def in_class(m: Monoid, a: Element, kind: str, budget: Budget = DEFAULT_BUDGET) -> Ternary:
    """Membership in Sqf (``kind="s"``) or Gpr (``kind="r"``)."""
    if kind == SQF:
        return is_square_free(m, a, budget).answer
    if kind == GPR:
        return is_radical_generator(m, a, budget).answer
    raise ValueError(f"kind must be 's' or 'r', not {kind!r}")


@dataclass
class ClassificationReport:
    element: Element
    is_unit: bool
    square_free: Verdict
    radical_generator: Verdict
    atom: Verdict
    monoid: Monoid = field(repr=False, compare=False, default=None)

    def to_json(self) -> dict:
        m = self.monoid
        fmt = m.format if m is not None else str

        witnesses = {}
        if self.square_free.witness is not None:
            b, c = self.square_free.witness
            witnesses["sqf"] = {"b": fmt(b), "c": fmt(c)}
        if self.radical_generator.witness is not None:
            b, n = self.radical_generator.witness
            witnesses["gpr"] = {"b": fmt(b), "n": n}
        if self.atom.witness is not None:
            b, c = self.atom.witness
            witnesses["atom"] = {"b": fmt(b), "c": fmt(c)}
        return {
            "element": fmt(self.element),
            "unit": self.is_unit,
            "sqf": self.square_free.answer.value,
            "gpr": self.radical_generator.answer.value,
            "atom": self.atom.answer.value,
            "witnesses": witnesses,
        }


def classify(m: Monoid, a: Element, budget: Budget = DEFAULT_BUDGET) -> ClassificationReport:
    a = m.validate(a)
    return ClassificationReport(
        element=a,
        is_unit=m.is_unit(a),
        square_free=is_square_free(m, a, budget),
        radical_generator=is_radical_generator(m, a, budget),
        atom=is_atom(m, a, budget),
        monoid=m,
    )


def _window(m: Monoid, bound: int) -> list[Element]:
    if not m.enumerable:
        raise Unsupported(f"{m.spec} has no enumerable element window")
    return m.elements(bound)


def sqf_set(m: Monoid, bound: int, budget: Budget = DEFAULT_BUDGET) -> list[Element]:
    return [a for a in _window(m, bound) if is_square_free(m, a, budget).answer is Ternary.YES]


def gpr_set(m: Monoid, bound: int, budget: Budget = DEFAULT_BUDGET) -> list[Element]:
    return [a for a in _window(m, bound) if is_radical_generator(m, a, budget).answer is Ternary.YES]


def irr_set(m: Monoid, bound: int, budget: Budget = DEFAULT_BUDGET) -> list[Element]:
    return [a for a in _window(m, bound) if is_atom(m, a, budget).answer is Ternary.YES]
