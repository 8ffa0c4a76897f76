"""Monoid abstraction, three-valued answers and the basic divisibility queries.

Every shipped family is a commutative cancellative monoid with a trivial
unit group, so elements are stored as canonical representatives and
associate classes collapse to equality.
"""

from __future__ import annotations

import enum
import os
from abc import ABC, abstractmethod
from dataclasses import dataclass, replace
from typing import Any, Hashable, Iterable, Sequence

Element = Hashable


class MonoidError(Exception):
    pass


class InvalidElement(MonoidError, ValueError):
    pass


class InvalidSpec(MonoidError, ValueError):
    pass


class DivisorSetInfinite(MonoidError):
    pass


class BudgetExhausted(MonoidError):
    pass


class Unsupported(MonoidError):
    pass


class Ternary(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, flag: bool) -> Ternary:
        return cls.YES if flag else cls.NO

    @property
    def is_yes(self) -> bool:
        return self is Ternary.YES

    @property
    def is_no(self) -> bool:
        return self is Ternary.NO

    def __bool__(self) -> bool:
        raise TypeError("Ternary has no truth value; compare against Ternary.YES")


class MonoidClass(enum.Enum):
    """Monoid classes, listed from the most general to the most special."""

    GENERAL = "general"
    ATOMIC = "atomic"
    ACCP = "accp"
    SR = "sr"
    PRE_SCHREIER = "preschreier"
    GCD = "gcd"
    GCDS = "gcds"

    @classmethod
    def parse(cls, text: str) -> MonoidClass:
        key = text.strip().lower().replace("-", "").replace("_", "")
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(f"unknown monoid class {text!r}")


@dataclass(frozen=True)
class Budget:
    max_factor_count: int = 16
    max_power: int = 32
    max_divisor_enumeration: int = 10**5
    max_depth: int = 6

    def __post_init__(self) -> None:
        for name in ("max_factor_count", "max_power", "max_divisor_enumeration", "max_depth"):
            if getattr(self, name) < 1:
                raise ValueError(f"budget field {name} must be a positive integer")

    @classmethod
    def from_env(cls, **overrides: int | None) -> Budget:
        """Defaults, then ``MONOIDLAB_BUDGET_MAX_POWER``, then explicit overrides."""
        budget = cls()
        env = os.environ.get("MONOIDLAB_BUDGET_MAX_POWER")
        if env:
            budget = replace(budget, max_power=int(env))
        given = {k: v for k, v in overrides.items() if v is not None}
        return replace(budget, **given) if given else budget


DEFAULT_BUDGET = Budget()


class Monoid(ABC):
    """A concrete commutative cancellative monoid with a trivial unit group.

    Subclasses supply element validation, the operation, exact divisibility
    and divisor enumeration; everything else has a generic fallback built
    on those.
    """

    name: str = "monoid"
    has_finite_divisor_sets: bool = True
    has_gcd: bool = False
    has_analytic_classifiers: bool = True
    enumerable: bool = True
    declared_classes: frozenset[MonoidClass] = frozenset()
    # classes the source material attributes to the family, kept apart from
    # the ones the implementation vouches for
    paper_classes: frozenset[MonoidClass] = frozenset()

    identity: Element

    @property
    def spec(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.spec}>"

    # -- required surface ------------------------------------------------
    @abstractmethod
    def validate(self, a: Element) -> Element:
        """Return the canonical form of ``a`` or raise InvalidElement."""

    @abstractmethod
    def mul(self, a: Element, b: Element) -> Element: ...

    @abstractmethod
    def divides(self, a: Element, b: Element) -> bool: ...

    @abstractmethod
    def quotient(self, b: Element, a: Element) -> Element:
        """The unique ``c`` with ``b = a * c``; raises ValueError if ``a`` does not divide ``b``."""

    @abstractmethod
    def divisors(self, a: Element, budget: Budget = DEFAULT_BUDGET) -> list[Element]: ...

    @abstractmethod
    def parse(self, text: str) -> Element: ...

    @abstractmethod
    def format(self, a: Element) -> str: ...

    @abstractmethod
    def sort_key(self, a: Element) -> Any: ...

    # -- defaults ----------------------------------------------------------
    def is_unit(self, a: Element) -> bool:
        return a == self.identity

    def associates_eq(self, a: Element, b: Element) -> bool:
        return a == b

    def divisors_complete(self, a: Element) -> bool:
        """Whether ``divisors(a)`` is the full divisor set rather than a bounded slice."""
        return self.has_finite_divisor_sets

    def power(self, a: Element, n: int) -> Element:
        if n < 0:
            raise ValueError("negative power")
        result = self.identity
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return result

    def product(self, items: Iterable[Element]) -> Element:
        result = self.identity
        for x in items:
            result = self.mul(result, x)
        return result

    def sorted(self, items: Iterable[Element]) -> list[Element]:
        return sorted(items, key=self.sort_key)

    def common_divisors(self, a: Element, b: Element, budget: Budget = DEFAULT_BUDGET) -> list[Element]:
        return [d for d in self.divisors(a, budget) if self.divides(d, b)]

    def gcd(self, a: Element, b: Element, budget: Budget = DEFAULT_BUDGET) -> Element | None:
        common = self.common_divisors(a, b, budget)
        for g in common:
            if all(self.divides(d, g) for d in common):
                return g
        return None

    def lcm(self, a: Element, b: Element) -> Element | None:
        raise Unsupported(f"{self.spec} has no lcm routine")

    def coprime(self, a: Element, b: Element, budget: Budget = DEFAULT_BUDGET) -> Ternary:
        try:
            divs = self.divisors(a, budget)
        except (DivisorSetInfinite, BudgetExhausted):
            return Ternary.UNKNOWN
        for d in divs:
            if not self.is_unit(d) and self.divides(d, b):
                return Ternary.NO
        return Ternary.YES if self.divisors_complete(a) else Ternary.UNKNOWN

    def power_index(self, a: Element, c: Element, budget: Budget = DEFAULT_BUDGET) -> tuple[Ternary, int | None]:
        """Least ``n >= 1`` with ``a | c^n`` (searched up to ``budget.max_power``)."""
        cn = c
        for n in range(1, budget.max_power + 1):
            if self.divides(a, cn):
                return Ternary.YES, n
            cn = self.mul(cn, c)
        return Ternary.UNKNOWN, None

    def sqrt(self, a: Element, budget: Budget = DEFAULT_BUDGET) -> Element | None:
        """The ``b`` with ``b * b == a``, if any."""
        for b in self.divisors(a, budget):
            if self.mul(b, b) == a:
                return b
        return None

    def elements(self, bound: int) -> list[Element]:
        raise Unsupported(f"{self.spec} has no enumerable element window")

    def samples(self) -> list[Element]:
        """Elements surveyed when no enumerable window exists."""
        raise Unsupported(f"{self.spec} has no sample list")

    # analytic classifiers: None means "no closed form, fall back to search"
    def analytic_square_free(self, a: Element) -> bool | None:
        return None

    def analytic_radical(self, a: Element) -> bool | None:
        return None

    def analytic_atom(self, a: Element) -> bool | None:
        return None

    def square_witness(self, a: Element, budget: Budget = DEFAULT_BUDGET) -> tuple[Element, Element] | None:
        """A pair ``(b, c)`` with ``a = b^2 c`` and ``b`` a non-unit."""
        try:
            divs = self.divisors(a, budget)
        except (DivisorSetInfinite, BudgetExhausted):
            return None
        for b in divs:
            if self.is_unit(b):
                continue
            bb = self.mul(b, b)
            if self.divides(bb, a):
                return b, self.quotient(a, bb)
        return None

    def radical_witness(self, a: Element, budget: Budget = DEFAULT_BUDGET) -> tuple[Element, int] | None:
        """A pair ``(b, n)`` with ``a | b^n`` and ``a`` not dividing ``b``."""
        try:
            candidates = self.divisors(a, budget)
        except (DivisorSetInfinite, BudgetExhausted):
            return None
        for b in candidates:
            if self.divides(a, b):
                continue
            verdict, n = self.power_index(a, b, budget)
            if verdict is Ternary.YES:
                return b, n
        return None

    # hooks used by the condition engine; None means "use the generic path"
    def special_class_divisors(self, a: Element, kind: str) -> tuple[list[Element], bool] | None:
        return None

    def class_divisors_divide(self, x: Element, y: Element, kind: str) -> bool | None:
        """Exact answer to: every Sqf/Gpr divisor of ``x`` divides ``y``."""
        return None

    def class_divisors_square_divide(self, x: Element, kind: str) -> bool | None:
        """Exact answer to: every Sqf/Gpr divisor ``d`` of ``x`` has ``d^2 | x``."""
        return None

    def refute(self, a: Element, condition: str) -> str | None:
        """A standalone proof sketch that ``condition`` fails at ``a``."""
        return None

    def search_is_exhaustive(self, a: Element, condition: str) -> bool:
        """Whether the bounded witness search for ``condition`` at ``a`` already covers every candidate."""
        return False


# -- module-level operations ---------------------------------------------

def _checked(m: Monoid, *elements: Element) -> list[Element]:
    return [m.validate(x) for x in elements]


def mul(m: Monoid, a: Element, b: Element) -> Element:
    a, b = _checked(m, a, b)
    return m.mul(a, b)


def is_unit(m: Monoid, a: Element) -> bool:
    (a,) = _checked(m, a)
    return m.is_unit(a)


def divides(m: Monoid, a: Element, b: Element) -> Ternary:
    a, b = _checked(m, a, b)
    return Ternary.of(m.divides(a, b))


def divisors(m: Monoid, a: Element, budget: Budget = DEFAULT_BUDGET) -> list[Element]:
    (a,) = _checked(m, a)
    # for depth-bounded families this is a slice; callers check divisors_complete
    result = m.divisors(a, budget)
    if len(result) > budget.max_divisor_enumeration:
        raise BudgetExhausted(f"{len(result)} divisors exceed max_divisor_enumeration")
    return result


def associates_eq(m: Monoid, a: Element, b: Element) -> bool:
    a, b = _checked(m, a, b)
    return m.associates_eq(a, b)


def coprime(m: Monoid, a: Element, b: Element, budget: Budget = DEFAULT_BUDGET) -> Ternary:
    a, b = _checked(m, a, b)
    if m.is_unit(a) or m.is_unit(b):
        return Ternary.YES
    return m.coprime(a, b, budget)


def gcd(m: Monoid, a: Element, b: Element, budget: Budget = DEFAULT_BUDGET) -> Element | None:
    a, b = _checked(m, a, b)
    return m.gcd(a, b, budget)


def gcd_of_set(m: Monoid, xs: Sequence[Element], budget: Budget = DEFAULT_BUDGET) -> Element | None:
    if not xs:
        raise ValueError("gcd of an empty set")
    g = m.validate(xs[0])
    for x in xs[1:]:
        g = m.gcd(g, m.validate(x), budget)
        if g is None:
            return None
    return g


def lcm_of_set(m: Monoid, xs: Sequence[Element]) -> Element | None:
    if not m.has_gcd:
        raise Unsupported(f"{m.spec} does not provide least common multiples")
    if not xs:
        return m.identity
    result = m.validate(xs[0])
    for x in xs[1:]:
        result = m.lcm(result, m.validate(x))
        if result is None:
            return None
    return result


def divides_some_power(m: Monoid, a: Element, c: Element,
                       budget: Budget = DEFAULT_BUDGET) -> tuple[Ternary, int | None]:
    a, c = _checked(m, a, c)
    if m.is_unit(a):
        return Ternary.YES, 1
    return m.power_index(a, c, budget)
