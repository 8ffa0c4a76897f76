"""Class-level classification: consistent truth assignments to the eighteen conditions.

A profile assigns true/false to every condition.  Each monoid class comes
with a hard-coded set of implications, merges and forced truths; the
consistent profiles of a class are found by scanning every assignment.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .conditions import CONDITIONS, NUMBERS, ConditionId
from .core import MonoidClass

BIT_ORDER: tuple[str, ...] = tuple(c.value for c in CONDITIONS)
INDEX: dict[ConditionId, int] = {c: i for i, c in enumerate(CONDITIONS)}
PAIRED = ("0", "1", "2", "3", "4", "5", "6")
# primed conditions carry no pair value; they ride along next to the pairs
PRIMED = (ConditionId.S4P, ConditionId.R4P, ConditionId.S5P, ConditionId.R5P)
WIDTH = len(CONDITIONS)


def _c(text: str) -> ConditionId:
    return ConditionId(text)


@dataclass(frozen=True, order=True)
class Profile:
    """Bit ``i`` of ``bits`` is the truth value of ``CONDITIONS[i]``."""

    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < 1 << WIDTH:
            raise ValueError(f"profile needs {WIDTH} bits")

    def __getitem__(self, cond: ConditionId | str) -> bool:
        if isinstance(cond, str):
            cond = ConditionId.parse(cond)
        return bool(self.bits >> INDEX[cond] & 1)

    @classmethod
    def from_conditions(cls, true: object) -> Profile:
        bits = 0
        for c in true:
            c = c if isinstance(c, ConditionId) else ConditionId.parse(c)
            bits |= 1 << INDEX[c]
        return cls(bits)

    @classmethod
    def from_string(cls, text: str) -> Profile:
        if len(text) != WIDTH or set(text) - {"0", "1"}:
            raise ValueError(f"expected {WIDTH} characters of 0/1, got {text!r}")
        return cls(sum(1 << i for i, ch in enumerate(text) if ch == "1"))

    def to_string(self) -> str:
        """Character ``i`` is the value of the ``i``-th condition in canonical order."""
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(WIDTH))

    @property
    def true_conditions(self) -> list[ConditionId]:
        return [c for c in CONDITIONS if self[c]]

    def pair(self, number: str) -> tuple[bool, bool]:
        return self[_c(number + "s")], self[_c(number + "r")]


ALL_TRUE = Profile((1 << WIDTH) - 1)
ALL_FALSE = Profile(0)


@dataclass(frozen=True)
class PairValue:
    """v(Asr) = v(As) + v(Ar) for A = 0..6, plus the four primed bits."""

    values: tuple[int, ...]
    primed: tuple[bool, ...] = (False,) * 4

    def __getitem__(self, number: str) -> int:
        return self.values[PAIRED.index(number)]


def pair_values(p: Profile) -> PairValue:
    values = []
    for number in PAIRED:
        s, r = p.pair(number)
        if r and not s:
            raise ValueError(f"{number}r holds without {number}s; no pair value exists")
        values.append(int(s) + int(r))
    return PairValue(tuple(values), tuple(p[c] for c in PRIMED))


encode = pair_values


def decode(v: PairValue) -> Profile:
    true: list[ConditionId] = []
    for number, value in zip(PAIRED, v.values):
        if value not in (0, 1, 2):
            raise ValueError(f"pair value must be 0, 1 or 2, got {value}")
        if value >= 1:
            true.append(_c(number + "s"))
        if value == 2:
            true.append(_c(number + "r"))
    true.extend(c for c, flag in zip(PRIMED, v.primed) if flag)
    return Profile.from_conditions(true)


# -- constraint sets ------------------------------------------------------------

@dataclass(frozen=True)
class ConstraintSet:
    implications: tuple[tuple[ConditionId, ConditionId], ...]
    merges: tuple[frozenset[ConditionId], ...]
    forced: frozenset[ConditionId]

    def implies(self, a: ConditionId | str, b: ConditionId | str) -> bool:
        """Whether ``a -> b`` is one of the listed implications (no closure)."""
        key = (_as_id(a), _as_id(b))
        return key in self.implications

    @property
    def merges_all_pairs(self) -> bool:
        pairs = {frozenset({_c(n + "s"), _c(n + "r")}) for n in NUMBERS}
        return all(any(p <= m for m in self.merges) for p in pairs)


def _as_id(c: ConditionId | str) -> ConditionId:
    return c if isinstance(c, ConditionId) else ConditionId.parse(c)


def _arrows(text: str, sides: str = "") -> list[tuple[ConditionId, ConditionId]]:
    """``"2->1, 2->3"`` with ``sides="sr"`` yields 2s->1s, 2r->1r, 2s->3s, 2r->3r."""
    out = []
    for item in text.split(","):
        a, b = (x.strip() for x in item.split("->"))
        if sides:
            out.extend((_c(a + k), _c(b + k)) for k in sides)
        else:
            out.append((_c(a), _c(b)))
    return out


_GENERAL = tuple(
    _arrows("2s->1s, 2s->3s, 1s->0s, 3s->0s, 2s->5s, 3s->6s")
    + _arrows("2r->1r, 2r->3r, 1r->0r, 3r->0r, 2r->5r, 3r->6r, 5r->4r, 4r->4'r, 5r->5'r")
    + [(_c(n + "r"), _c(n + "s")) for n in PAIRED]
)
_SR_ARROWS = tuple(_arrows("2->1, 2->3, 1->0, 3->0, 2->0, 2->5, 3->6, 5->4, 4->4', 5->5'", "sr"))
_SR_MERGES = tuple(frozenset({_c(n + "s"), _c(n + "r")}) for n in NUMBERS)


def _merged(*numbers: str) -> frozenset[ConditionId]:
    return frozenset(_c(n + k) for n in numbers for k in "sr")


def constraint_set(cls: MonoidClass | str) -> ConstraintSet:
    cls = cls if isinstance(cls, MonoidClass) else MonoidClass.parse(cls)
    imps = list(_GENERAL)
    merges: list[frozenset[ConditionId]] = []
    forced: set[ConditionId] = set()
    if cls is MonoidClass.ATOMIC:
        forced.add(ConditionId.S0)
    elif cls is MonoidClass.ACCP:
        forced |= {ConditionId.S0, ConditionId.S3, ConditionId.S6}
        imps += _arrows("5's->2s, 6s->3s, 5r->4r")
        merges.append(frozenset(map(_c, ("2r", "3r", "5r", "6r"))))
    elif cls is not MonoidClass.GENERAL:
        imps += _SR_ARROWS
        merges += _SR_MERGES
        if cls in (MonoidClass.PRE_SCHREIER, MonoidClass.GCD, MonoidClass.GCDS):
            merges.append(_merged("1", "2"))
            imps += _arrows("4->5, 5->4, 1->4", "sr")
        if cls in (MonoidClass.GCD, MonoidClass.GCDS):
            merges.append(_merged("0", "1", "2", "3"))
        if cls is MonoidClass.GCDS:
            forced |= {ConditionId.S5P, ConditionId.R5P}
    seen: set = set()
    ordered = tuple(x for x in imps if not (x in seen or seen.add(x)))
    return ConstraintSet(ordered, tuple(merges), frozenset(forced))


def is_consistent(p: Profile, c: ConstraintSet) -> bool:
    if not all(p[x] for x in c.forced):
        return False
    if any(p[a] and not p[b] for a, b in c.implications):
        return False
    return all(len({p[x] for x in group}) == 1 for group in c.merges)


def _mask(bits: np.ndarray, c: ConstraintSet) -> np.ndarray:
    """Vectorised ``is_consistent`` over an array of profile integers."""
    bit = lambda cond: (bits >> INDEX[cond]) & 1  # noqa: E731
    ok = np.ones(bits.shape, dtype=bool)
    for x in c.forced:
        ok &= bit(x) == 1
    for a, b in c.implications:
        ok &= bit(a) <= bit(b)
    for group in c.merges:
        first, *rest = sorted(group, key=INDEX.get)
        for x in rest:
            ok &= bit(x) == bit(first)
    return ok


def _candidates(c: ConstraintSet) -> np.ndarray:
    if not c.merges_all_pairs:
        return np.arange(1 << WIDTH, dtype=np.int64)
    # one bit per merged s/r pair, spread to both positions
    merged = np.arange(1 << len(NUMBERS), dtype=np.int64)
    out = np.zeros_like(merged)
    for j in range(len(NUMBERS)):
        b = (merged >> j) & 1
        out |= (b << (2 * j)) | (b << (2 * j + 1))
    return np.sort(out)


@dataclass(frozen=True)
class Enumeration:
    cls: MonoidClass
    profiles: tuple[Profile, ...]

    @property
    def count(self) -> int:
        return len(self.profiles)

    def to_json(self) -> dict:
        return {
            "class": self.cls.value,
            "count": self.count,
            "bit_order": list(BIT_ORDER),
            "profiles": [p.to_string() for p in self.profiles],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(list(BIT_ORDER) + [f"v({n}sr)" for n in PAIRED])
        for p in self.profiles:
            writer.writerow([int(p[c]) for c in CONDITIONS] + list(pair_values(p).values))
        return buf.getvalue()


def enumerate_profiles(cls: MonoidClass | str) -> Enumeration:
    cls = cls if isinstance(cls, MonoidClass) else MonoidClass.parse(cls)
    c = constraint_set(cls)
    bits = _candidates(c)
    kept = bits[_mask(bits, c)]
    return Enumeration(cls, tuple(Profile(int(b)) for b in kept))


# -- tables -----------------------------------------------------------------------

# published row counts, keyed by the grouping values; compared, never asserted
PAPER_TABLES: dict[MonoidClass, dict[tuple[int, int], int]] = {
    MonoidClass.GENERAL: {(2, 2): 4, (2, 1): 264, (2, 0): 1512, (1, 1): 88, (1, 0): 840, (0, 0): 252},
    MonoidClass.ATOMIC: {(2, 2): 4, (2, 1): 264, (2, 0): 1512, (1, 1): 88, (1, 0): 840},
    MonoidClass.ACCP: {(2, 2): 4, (2, 1): 80, (2, 0): 120, (1, 1): 40, (1, 0): 80},
    MonoidClass.SR: {(1, 1): 1, (1, 0): 42, (0, 0): 14},
    MonoidClass.PRE_SCHREIER: {(1, 1): 1, (1, 0): 15, (0, 0): 10},
    MonoidClass.GCD: {(1, 1): 1, (0, 0): 10},
    MonoidClass.GCDS: {(1, 1): 1, (0, 0): 6},
}


@dataclass(frozen=True)
class TableRow:
    key: tuple[int, int]
    count: int
    paper: int | None

    @property
    def matches(self) -> bool | None:
        return None if self.paper is None else self.paper == self.count


@dataclass(frozen=True)
class Breakdown:
    cls: MonoidClass
    columns: tuple[str, str]
    rows: tuple[TableRow, ...]

    @property
    def total(self) -> int:
        return sum(r.count for r in self.rows)

    @property
    def mismatches(self) -> list[TableRow]:
        return [r for r in self.rows if r.matches is False]

    def to_json(self) -> dict:
        return {
            "class": self.cls.value,
            "columns": list(self.columns),
            "rows": [{self.columns[0]: r.key[0], self.columns[1]: r.key[1], "L3": r.count,
                      "paper_L3": r.paper} for r in self.rows],
            "total": self.total,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([*self.columns, "L3", "paper_L3", "match"])
        for r in self.rows:
            published = "" if r.paper is None else r.paper
            match = "" if r.matches is None else str(r.matches).lower()
            writer.writerow([*r.key, r.count, published, match])
        return buf.getvalue()


def table_breakdown(cls: MonoidClass | str) -> Breakdown:
    """Counts grouped by the values of 0 and 2, rows in descending order."""
    enum_ = enumerate_profiles(cls)
    cls = enum_.cls
    merged = constraint_set(cls).merges_all_pairs
    counts: dict[tuple[int, int], int] = {}
    for p in enum_.profiles:
        if merged:
            key = (int(p["0s"]), int(p["2s"]))
        else:
            pv = pair_values(p)
            key = (pv["0"], pv["2"])
        counts[key] = counts.get(key, 0) + 1
    published = PAPER_TABLES.get(cls, {})
    keys = sorted(set(counts) | set(published), reverse=True)
    rows = tuple(TableRow(k, counts.get(k, 0), published.get(k)) for k in keys)
    columns = ("v(0s)", "v(2s)") if merged else ("v(0sr)", "v(2sr)")
    return Breakdown(cls, columns, rows)


# -- pair lemma ---------------------------------------------------------------------

def pair_lemma_violations(profiles: object) -> list[tuple[Profile, str, str]]:
    """Profiles and (A, B) where the four implications disagree with v(Asr) <= v(Bsr)."""
    out = []
    for p in profiles:
        pv = pair_values(p)
        for a, b in (pair for x in combinations(PAIRED, 2) for pair in (x, x[::-1])):
            (as_, ar), (bs, br) = p.pair(a), p.pair(b)
            four = (not ar or br) and (not as_ or bs) and (not ar or as_) and (not br or bs)
            if four != (pv[a] <= pv[b]):
                out.append((p, a, b))
    return out


def verify_pair_lemma(profiles: object) -> bool:
    return not pair_lemma_violations(profiles)
