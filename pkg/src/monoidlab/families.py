"""Concrete monoid families.

All families are written additively where that is the natural notation:
``mul`` is addition for numerical monoids, exponent vectors and rationals.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import (
    DEFAULT_BUDGET,
    Budget,
    BudgetExhausted,
    DivisorSetInfinite,
    Element,
    InvalidElement,
    InvalidSpec,
    Monoid,
    MonoidClass,
    Ternary,
    Unsupported,
)

ALL_CLASSES = frozenset(MonoidClass)
GCD_CLASSES = frozenset({MonoidClass.GCD, MonoidClass.PRE_SCHREIER, MonoidClass.SR})


def _box(bounds: Sequence[int], budget: Budget) -> Iterable[tuple[int, ...]]:
    size = math.prod(b + 1 for b in bounds)
    if size > budget.max_divisor_enumeration:
        raise BudgetExhausted(f"divisor box of size {size} exceeds max_divisor_enumeration")
    return itertools.product(*(range(b + 1) for b in bounds))


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _vector_power_index(a: Sequence[int], c: Sequence[int]) -> tuple[Ternary, int | None]:
    # a | n*c is monotone in n, so the least n is the max coordinate ratio
    n = 1
    for ai, ci in zip(a, c):
        if ai == 0:
            continue
        if ci == 0:
            return Ternary.NO, None
        n = max(n, _ceil_div(ai, ci))
    return Ternary.YES, n


def _parse_int(text: str) -> int:
    text = text.strip()
    if not re.fullmatch(r"\d+", text):
        raise InvalidElement(f"not a nonnegative integer: {text!r}")
    return int(text)


# -- numerical monoids ------------------------------------------------------

class Numerical(Monoid):
    """``N_{>=k} ∪ {0}`` under addition."""

    def __init__(self, k: int):
        if not isinstance(k, int) or k < 1:
            raise InvalidSpec("numerical monoid needs k >= 1")
        self.k = k
        self.identity = 0
        self.has_gcd = k == 1
        if k == 1:
            self.declared_classes = ALL_CLASSES
        else:
            # finitely generated, hence atomic and ACCP
            self.declared_classes = frozenset({MonoidClass.GENERAL, MonoidClass.ATOMIC, MonoidClass.ACCP})
        self.paper_classes = frozenset({MonoidClass.GCD})

    @property
    def name(self) -> str:
        return f"numerical:{self.k}"

    def member(self, v: int) -> bool:
        return v == 0 or v >= self.k

    def validate(self, a: Element) -> int:
        if isinstance(a, bool) or not isinstance(a, int):
            raise InvalidElement(f"{a!r} is not an integer")
        if not self.member(a):
            raise InvalidElement(f"{a} is not in N>={self.k} ∪ {{0}}")
        return a

    def mul(self, a: int, b: int) -> int:
        return a + b

    def divides(self, a: int, b: int) -> bool:
        return b >= a and self.member(b - a)

    def quotient(self, b: int, a: int) -> int:
        if not self.divides(a, b):
            raise ValueError(f"{a} does not divide {b}")
        return b - a

    def divisors(self, a: int, budget: Budget = DEFAULT_BUDGET) -> list[int]:
        if a + 1 > budget.max_divisor_enumeration:
            raise BudgetExhausted("value too large to scan")
        return [d for d in range(a + 1) if self.member(d) and self.member(a - d)]

    def parse(self, text: str) -> int:
        return self.validate(_parse_int(text))

    def format(self, a: int) -> str:
        return str(a)

    def sort_key(self, a: int) -> int:
        return a

    def lcm(self, a: int, b: int) -> int | None:
        if self.k != 1:
            raise Unsupported(f"{self.spec} is not a GCD-monoid")
        return max(a, b)

    def power_index(self, a: int, c: int, budget: Budget = DEFAULT_BUDGET) -> tuple[Ternary, int | None]:
        if c == 0:
            return (Ternary.YES, 1) if a == 0 else (Ternary.NO, None)
        n = 1
        # n*c - a lands in H once n*c >= a + k, so this loop is bounded
        while not self.divides(a, n * c):
            n += 1
        return Ternary.YES, n

    def sqrt(self, a: int, budget: Budget = DEFAULT_BUDGET) -> int | None:
        if a % 2 == 0 and self.member(a // 2):
            return a // 2
        return None

    def elements(self, bound: int) -> list[int]:
        return [0] + list(range(self.k, bound + 1))

    def analytic_square_free(self, a: int) -> bool:
        return self._square_split(a) is None

    def _square_split(self, a: int) -> tuple[int, int] | None:
        for b in range(self.k, a // 2 + 1):
            if self.member(a - 2 * b):
                return b, a - 2 * b
        return None

    def square_witness(self, a: int, budget: Budget = DEFAULT_BUDGET) -> tuple[int, int] | None:
        return self._square_split(a)

    def _radical_breaker(self, a: int) -> int | None:
        # every positive b has a | n*b for large n, so a is radical iff a | b
        # for all positive b; failures can only occur below a + k
        if a == 0:
            return None
        for b in range(self.k, a + self.k):
            if not self.divides(a, b):
                return b
        return None

    def analytic_radical(self, a: int) -> bool:
        return self._radical_breaker(a) is None

    def radical_witness(self, a: int, budget: Budget = DEFAULT_BUDGET) -> tuple[int, int] | None:
        b = self._radical_breaker(a)
        if b is None:
            return None
        _, n = self.power_index(a, b)
        return b, n

    def analytic_atom(self, a: int) -> bool:
        if a == 0:
            return False
        return not any(self.member(a - b) and a - b != 0 for b in range(self.k, a))


# -- exponent vectors ---------------------------------------------------------

class FreeCommutative(Monoid):
    """``N_0^d`` under componentwise addition."""

    def __init__(self, d: int):
        if not isinstance(d, int) or d < 1:
            raise InvalidSpec("free commutative monoid needs d >= 1")
        self.d = d
        self.identity = (0,) * d
        self.has_gcd = True
        self.declared_classes = ALL_CLASSES
        if d == 1:
            self.paper_classes = frozenset({MonoidClass.GCD})
        elif d == 2:
            self.paper_classes = frozenset({MonoidClass.ACCP})

    @property
    def name(self) -> str:
        return f"free:{self.d}"

    def validate(self, a: Element) -> tuple[int, ...]:
        if not isinstance(a, tuple) or len(a) != self.d:
            raise InvalidElement(f"{a!r} is not a vector of length {self.d}")
        if any(isinstance(x, bool) or not isinstance(x, int) or x < 0 for x in a):
            raise InvalidElement(f"{a!r} has a negative or non-integer coordinate")
        return a

    def _align(self, a: tuple, b: tuple) -> tuple[tuple, tuple]:
        return a, b

    def _make(self, v: Iterable[int]) -> tuple[int, ...]:
        return tuple(v)

    def mul(self, a, b):
        a, b = self._align(a, b)
        return self._make(x + y for x, y in zip(a, b))

    def divides(self, a, b) -> bool:
        a, b = self._align(a, b)
        return all(x <= y for x, y in zip(a, b))

    def quotient(self, b, a):
        a2, b2 = self._align(a, b)
        if not all(x <= y for x, y in zip(a2, b2)):
            raise ValueError(f"{a} does not divide {b}")
        return self._make(y - x for x, y in zip(a2, b2))

    def divisors(self, a, budget: Budget = DEFAULT_BUDGET):
        return [self._make(v) for v in _box(a, budget)]

    def power(self, a, n: int):
        return self._make(n * x for x in a)

    def parse(self, text: str):
        body = text.strip().strip("()")
        parts = [p for p in body.split(",")]
        return self.validate(tuple(_parse_int(p) for p in parts))

    def format(self, a) -> str:
        return ",".join(str(x) for x in a)

    def sort_key(self, a):
        return a

    def gcd(self, a, b, budget: Budget = DEFAULT_BUDGET):
        a, b = self._align(a, b)
        return self._make(min(x, y) for x, y in zip(a, b))

    def lcm(self, a, b):
        a, b = self._align(a, b)
        return self._make(max(x, y) for x, y in zip(a, b))

    def coprime(self, a, b, budget: Budget = DEFAULT_BUDGET) -> Ternary:
        return Ternary.of(self.is_unit(self.gcd(a, b)))

    def power_index(self, a, c, budget: Budget = DEFAULT_BUDGET):
        a, c = self._align(a, c)
        return _vector_power_index(a, c)

    def sqrt(self, a, budget: Budget = DEFAULT_BUDGET):
        if any(x % 2 for x in a):
            return None
        return self._make(x // 2 for x in a)

    def elements(self, bound: int):
        return [self._make(v) for v in itertools.product(range(bound + 1), repeat=self.d)]

    def analytic_square_free(self, a) -> bool:
        return all(x <= 1 for x in a)

    def analytic_radical(self, a) -> bool:
        # a | n*b for some n iff supp(a) ⊆ supp(b); then a | b for all such b
        # exactly when every coordinate of a is at most 1
        return all(x <= 1 for x in a)

    def analytic_atom(self, a) -> bool:
        return sum(a) == 1

    def radical_witness(self, a, budget: Budget = DEFAULT_BUDGET):
        if all(x <= 1 for x in a):
            return None
        return self._make(1 if x else 0 for x in a), max(a)


class DoubleChain(FreeCommutative):
    """``<x_i, y_i, z_i | x_{i+1} = x_i^2 y_i, y_{i+1} = y_i z_i>``.

    The relations define every later ``x``, ``y`` from earlier generators, so
    the monoid is free on ``x_1, y_1, z_1, z_2, ...``. Elements are exponent
    tuples over that basis with trailing zeros stripped.
    """

    def __init__(self):
        self.d = 0
        self.identity = ()
        self.has_gcd = True
        self.declared_classes = ALL_CLASSES
        self.paper_classes = frozenset()

    @property
    def name(self) -> str:
        return "doublechain"

    def validate(self, a: Element) -> tuple[int, ...]:
        if not isinstance(a, tuple):
            raise InvalidElement(f"{a!r} is not an exponent tuple")
        if any(isinstance(x, bool) or not isinstance(x, int) or x < 0 for x in a):
            raise InvalidElement(f"{a!r} has a negative or non-integer coordinate")
        return self._make(a)

    def _align(self, a, b):
        n = max(len(a), len(b))
        return a + (0,) * (n - len(a)), b + (0,) * (n - len(b))

    def _make(self, v):
        v = list(v)
        while v and v[-1] == 0:
            v.pop()
        return tuple(v)

    @staticmethod
    def basis_name(i: int) -> str:
        return {0: "x1", 1: "y1"}.get(i, f"z{i - 1}")

    def generator(self, letter: str, i: int) -> tuple[int, ...]:
        if i < 1:
            raise InvalidElement("generator index must be >= 1")
        if letter == "z":
            return self._make((0,) * (i + 1) + (1,))
        x, y = (1,), (0, 1)
        for j in range(1, i):
            x, y = self.mul(self.mul(x, x), y), self.mul(y, self.generator("z", j))
        return x if letter == "x" else y

    def parse(self, text: str):
        return _parse_word(text, "xyz", self.generator, self.mul, self.power, self.identity)

    def format(self, a) -> str:
        terms = [_term(self.basis_name(i), e) for i, e in enumerate(a) if e]
        return "*".join(terms) or "1"

    def sort_key(self, a):
        return (len(a), a)

    def elements(self, bound: int):
        width = 2 + min(bound, 2)
        top = min(bound, 2)
        return self.sorted(self._make(v) for v in itertools.product(range(top + 1), repeat=width))


def _term(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


_TOKEN = re.compile(r"([a-z])(\d+)(?:\^(\d+))?")


def _parse_word(text, letters, generator, mul, power, identity):
    text = text.strip()
    if text in ("1", "e"):
        return identity
    result = identity
    for token in text.split("*"):
        m = _TOKEN.fullmatch(token.strip())
        if not m or m.group(1) not in letters:
            raise InvalidElement(f"malformed generator term {token!r}")
        exp = int(m.group(3)) if m.group(3) is not None else 1
        result = mul(result, power(generator(m.group(1), int(m.group(2))), exp))
    return result


# -- rationals ------------------------------------------------------------------

class Rationals(Monoid):
    """``Q_{>=0}`` under addition: every element is a square, the only unit is 0."""

    has_finite_divisor_sets = False
    enumerable = False
    has_gcd = True

    def __init__(self):
        self.identity = Fraction(0)
        # totally ordered, so gcd = min exists for pairs
        self.declared_classes = GCD_CLASSES | {MonoidClass.GENERAL}

    @property
    def name(self) -> str:
        return "rationals"

    def _check(self, q: Fraction) -> None:
        return None

    def validate(self, a: Element) -> Fraction:
        if isinstance(a, bool) or not isinstance(a, (int, Fraction)):
            raise InvalidElement(f"{a!r} is not an exact rational")
        q = Fraction(a)
        if q < 0:
            raise InvalidElement(f"{a} is negative")
        self._check(q)
        return q

    def mul(self, a, b):
        return a + b

    def divides(self, a, b) -> bool:
        return b >= a

    def quotient(self, b, a):
        if b < a:
            raise ValueError(f"{a} does not divide {b}")
        return b - a

    def divisors(self, a, budget: Budget = DEFAULT_BUDGET):
        if a == 0:
            return [a]
        raise DivisorSetInfinite(f"every rational in [0, {a}] divides {a}")

    def divisors_complete(self, a) -> bool:
        return a == 0

    def power(self, a, n: int):
        return a * n

    def parse(self, text: str):
        text = text.strip()
        m = re.fullmatch(r"(\d+)(?:/(\d+))?", text)
        if not m:
            raise InvalidElement(f"malformed rational {text!r}")
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise InvalidElement("zero denominator")
        return self.validate(Fraction(int(m.group(1)), den))

    def format(self, a) -> str:
        return str(a)

    def sort_key(self, a):
        return a

    def gcd(self, a, b, budget: Budget = DEFAULT_BUDGET):
        return min(a, b)

    def lcm(self, a, b):
        return max(a, b)

    def coprime(self, a, b, budget: Budget = DEFAULT_BUDGET) -> Ternary:
        return Ternary.of(min(a, b) == 0)

    def power_index(self, a, c, budget: Budget = DEFAULT_BUDGET):
        if c == 0:
            return (Ternary.YES, 1) if a == 0 else (Ternary.NO, None)
        return Ternary.YES, max(1, math.ceil(a / c))

    def sqrt(self, a, budget: Budget = DEFAULT_BUDGET):
        return a / 2

    def samples(self):
        return [Fraction(x) for x in ("0", "1/4", "1/3", "1/2", "1", "3/2", "2", "7/3")]

    # a = 2*(a/4) + a/2 with a/4 a non-unit, so only 0 is square-free; Gpr ⊆ Sqf
    def analytic_square_free(self, a) -> bool:
        return a == 0

    def analytic_radical(self, a) -> bool:
        return a == 0

    def analytic_atom(self, a) -> bool:
        return False

    def square_witness(self, a, budget: Budget = DEFAULT_BUDGET):
        return (a / 4, a / 2) if a > 0 else None

    def radical_witness(self, a, budget: Budget = DEFAULT_BUDGET):
        return (a / 2, 2) if a > 0 else None

    def special_class_divisors(self, a, kind: str):
        return [self.identity], True

    def refute(self, a, condition: str) -> str | None:
        if a > 0 and condition[:-1] in ("0", "1", "2", "3"):
            return "0 is the only square-free element, so every such product is 0"
        return None


class Dyadic(Rationals):
    """``<1/2^n | n in N>``: nonnegative rationals with power-of-two denominators."""

    @property
    def name(self) -> str:
        return "dyadic"

    def _check(self, q: Fraction) -> None:
        den = q.denominator
        if den & (den - 1):
            raise InvalidElement(f"{q} has a denominator that is not a power of two")

    def samples(self):
        return [Fraction(x) for x in ("0", "1/8", "1/4", "1/2", "1", "3/2", "2", "5/4")]


# -- chain-presented monoids ----------------------------------------------------

@dataclass(frozen=True, order=True)
class ChainElement:
    """Normal form at ``depth`` N: exponents of ``x_1..x_N`` and of ``y_N``."""

    depth: int
    xs: tuple[int, ...]
    y: int

    def __post_init__(self):
        if self.depth < 1 or len(self.xs) != self.depth:
            raise InvalidElement(f"bad chain normal form {self!r}")
        if self.y < 0 or any(x < 0 for x in self.xs):
            raise InvalidElement(f"negative exponent in {self!r}")


class Chain(Monoid):
    """``<x_i, y_i | y_i = x_{i+1}^p y_{i+1}^q>``.

    Deepening one step replaces ``y_N^m`` by ``x_{N+1}^{pm} y_{N+1}^{qm}``.
    That map is an injective homomorphism between free monoids, so divisibility
    is decided componentwise at the common depth: a negative difference never
    becomes non-negative further down.
    """

    has_finite_divisor_sets = False
    has_gcd = True

    def __init__(self, p: int, q: int):
        if not (isinstance(p, int) and isinstance(q, int)) or p < 1 or q < 1:
            raise InvalidSpec("chain monoid needs p, q >= 1")
        self.p, self.q = p, q
        self.identity = ChainElement(1, (0,), 0)
        self.declared_classes = GCD_CLASSES | {MonoidClass.GENERAL}
        self.paper_classes = frozenset({MonoidClass.GCD})

    @property
    def name(self) -> str:
        return f"chain:{self.p},{self.q}"

    @property
    def unit_steps(self) -> bool:
        return self.p == 1 and self.q == 1

    # normal forms
    def lift(self, e: ChainElement, depth: int) -> ChainElement:
        if depth < e.depth:
            raise ValueError(f"cannot normalize depth {e.depth} element to depth {depth}")
        xs, y = list(e.xs), e.y
        for _ in range(depth - e.depth):
            xs.append(self.p * y)
            y *= self.q
        return ChainElement(depth, tuple(xs), y)

    def canonical(self, e: ChainElement) -> ChainElement:
        xs, y = list(e.xs), e.y
        while len(xs) > 1 and y % self.q == 0 and xs[-1] == self.p * (y // self.q):
            xs.pop()
            y //= self.q
        return ChainElement(len(xs), tuple(xs), y)

    def vector(self, e: ChainElement, depth: int) -> tuple[int, ...]:
        lifted = self.lift(e, depth)
        return lifted.xs + (lifted.y,)

    def from_vector(self, v: Sequence[int]) -> ChainElement:
        return self.canonical(ChainElement(len(v) - 1, tuple(v[:-1]), v[-1]))

    def _pair(self, a: ChainElement, b: ChainElement):
        depth = max(a.depth, b.depth)
        return self.vector(a, depth), self.vector(b, depth)

    def validate(self, a: Element) -> ChainElement:
        if not isinstance(a, ChainElement):
            raise InvalidElement(f"{a!r} is not a chain normal form")
        return self.canonical(a)

    def generator(self, letter: str, i: int) -> ChainElement:
        if i < 1:
            raise InvalidElement("generator index must be >= 1")
        if letter == "y":
            return ChainElement(i, (0,) * i, 1)
        return self.canonical(ChainElement(i, (0,) * (i - 1) + (1,), 0))

    def mul(self, a, b):
        va, vb = self._pair(a, b)
        return self.from_vector([x + y for x, y in zip(va, vb)])

    def power(self, a, n: int):
        return self.from_vector([n * x for x in a.xs + (a.y,)])

    def divides(self, a, b) -> bool:
        va, vb = self._pair(a, b)
        return all(x <= y for x, y in zip(va, vb))

    def quotient(self, b, a):
        va, vb = self._pair(a, b)
        if not all(x <= y for x, y in zip(va, vb)):
            raise ValueError("not divisible")
        return self.from_vector([y - x for x, y in zip(va, vb)])

    def divisors(self, a, budget: Budget = DEFAULT_BUDGET):
        # y-free elements have all divisors at their own depth; otherwise
        # report the slice one level down
        depth = a.depth if a.y == 0 else a.depth + 1
        if depth > budget.max_depth:
            raise BudgetExhausted(f"normal form depth {depth} exceeds max_depth {budget.max_depth}")
        v = self.vector(a, depth)
        return self.sorted(self.from_vector(w) for w in _box(v, budget))

    def divisors_complete(self, a) -> bool:
        return a.y == 0

    def gcd(self, a, b, budget: Budget = DEFAULT_BUDGET):
        # min commutes with deepening, so the componentwise min is the gcd
        va, vb = self._pair(a, b)
        return self.from_vector([min(x, y) for x, y in zip(va, vb)])

    def lcm(self, a, b):
        va, vb = self._pair(a, b)
        return self.from_vector([max(x, y) for x, y in zip(va, vb)])

    def coprime(self, a, b, budget: Budget = DEFAULT_BUDGET) -> Ternary:
        return Ternary.of(self.is_unit(self.gcd(a, b)))

    def power_index(self, a, c, budget: Budget = DEFAULT_BUDGET):
        va, vc = self._pair(a, c)
        return _vector_power_index(va, vc)

    def sqrt(self, a, budget: Budget = DEFAULT_BUDGET):
        # squaring preserves canonical depth, so a root lives at a's depth
        v = a.xs + (a.y,)
        if any(x % 2 for x in v):
            return None
        return self.from_vector([x // 2 for x in v])

    def parse(self, text: str):
        return _parse_word(text, "xy", self.generator, self.mul, self.power, self.identity)

    def format(self, a) -> str:
        terms = [_term(f"x{i + 1}", e) for i, e in enumerate(a.xs) if e]
        if a.y:
            terms.append(_term(f"y{a.depth}", a.y))
        return "*".join(terms) or "1"

    def sort_key(self, a):
        return (a.depth, a.xs, a.y)

    def elements(self, bound: int):
        top_depth, top_exp = min(bound, 3), min(bound, 2)
        seen = set()
        for depth in range(1, top_depth + 1):
            for v in itertools.product(range(top_exp + 1), repeat=depth + 1):
                seen.add(self.from_vector(v))
        return self.sorted(seen)

    def analytic_square_free(self, a) -> bool:
        if self.unit_steps:
            # y_N = x_{N+1} y_{N+1} keeps 0/1 vectors 0/1 under deepening
            return all(x <= 1 for x in a.xs) and a.y <= 1
        # otherwise y_N^m = x_{N+1}^{pm} y_{N+1}^{qm} always contains a square
        return a.y == 0 and all(x <= 1 for x in a.xs)

    def analytic_radical(self, a) -> bool:
        # a GCD-monoid is pre-Schreier, where radical = square-free; directly:
        # a 0/1 vector divides n*b at the common depth only if it divides b
        return self.analytic_square_free(a)

    def analytic_atom(self, a) -> bool:
        return a.y == 0 and sum(a.xs) == 1

    def radical_witness(self, a, budget: Budget = DEFAULT_BUDGET):
        if self.analytic_radical(a):
            return None
        depth = a.depth + 1
        v = self.vector(a, depth)
        b = self.from_vector([1 if x else 0 for x in v])
        if self.divides(a, b):
            return super().radical_witness(a, budget)
        return b, max(v)

    def _square_full_support(self, a) -> bool:
        ok = lambda e: e == 0 or e >= 2  # noqa: E731
        if self.unit_steps:
            return all(ok(x) for x in a.xs) and ok(a.y)
        return all(ok(x) for x in a.xs) and (a.y == 0 or self.p * a.y >= 2)

    def class_divisors_divide(self, x, y, kind: str) -> bool:
        # Sqf = Gpr here; its members dividing x are exactly the 0/1 vectors
        # under supp(x) at every depth, and support inclusion is stable
        # under deepening
        vx, vy = self._pair(x, y)
        return all(b > 0 for a, b in zip(vx, vy) if a > 0)

    def class_divisors_square_divide(self, x, kind: str) -> bool:
        return self._square_full_support(x)

    def refute(self, a, condition: str) -> str | None:
        if self.unit_steps or a.y == 0:
            return None
        number = condition[:-1]
        if number in ("0", "1", "2", "3", "4", "5", "5'"):
            return ("square-free elements are y-free and products, powers and divisors of "
                    "powers of y-free elements stay y-free, but the element carries a y exponent")
        if number == "6" and self.q % 2 == 1 and a.y % 2 == 1:
            return "the y exponent stays odd at every depth, so a/c is never a square for y-free c"
        return None

    def search_is_exhaustive(self, a, condition: str) -> bool:
        # for 4', a square-free c using some x_j below depth+1 shares x_j with
        # the cofactor, so the splits at depth+1 are all that can work
        return condition[:-1] == "4'" and not self.unit_steps


# -- specs ------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}:{','.join(map(str, self.params))}"


_SPEC_PATTERNS = {
    "numerical": re.compile(r"numerical:(\d+)"),
    "free": re.compile(r"free:(\d+)"),
    "rationals": re.compile(r"rationals"),
    "dyadic": re.compile(r"dyadic"),
    "chain": re.compile(r"chain:(\d+),(\d+)"),
    "doublechain": re.compile(r"doublechain"),
}


def parse_spec(text: str) -> FamilySpec:
    text = text.strip()
    for kind, pattern in _SPEC_PATTERNS.items():
        m = pattern.fullmatch(text)
        if m:
            return FamilySpec(kind, tuple(int(g) for g in m.groups()))
    raise InvalidSpec(f"unrecognised monoid spec {text!r}")


def build(spec: FamilySpec | str) -> Monoid:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    kind, params = spec.kind, spec.params
    if kind == "numerical":
        return Numerical(*params)
    if kind == "free":
        return FreeCommutative(*params)
    if kind == "rationals":
        return Rationals()
    if kind == "dyadic":
        return Dyadic()
    if kind == "chain":
        return Chain(*params)
    if kind == "doublechain":
        return DoubleChain()
    raise InvalidSpec(f"unknown family {kind!r}")


def normalize_to_depth(m: Chain, e: ChainElement, depth: int) -> ChainElement:
    """Rewrite ``e`` over ``x_1..x_depth, y_depth`` (not canonicalised)."""
    return m.lift(e, depth)


def chain_divides(m: Chain, a: ChainElement, b: ChainElement) -> bool:
    return m.divides(a, b)
