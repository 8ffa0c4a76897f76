import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from monoidlab.conditions import CONDITIONS, survey
from monoidlab.core import MonoidClass
from monoidlab.families import build
from monoidlab.profiles import (
    ALL_FALSE,
    ALL_TRUE,
    BIT_ORDER,
    PairValue,
    Profile,
    _mask,
    constraint_set,
    decode,
    encode,
    enumerate_profiles,
    is_consistent,
    pair_lemma_violations,
    pair_values,
    table_breakdown,
    verify_pair_lemma,
)

COUNTS = {"general": 2960, "atomic": 2708, "accp": 324, "sr": 57, "preschreier": 26, "gcd": 11, "gcds": 7}


@pytest.mark.parametrize("cls, count", COUNTS.items())
def test_counts(cls, count):
    assert enumerate_profiles(cls).count == count


def _independent_general_count():
    """Plain-loop scan written from the implication list, without the package's encoding."""
    names = [c.value for c in CONDITIONS]
    idx = {n: i for i, n in enumerate(names)}
    rules = ["2s 1s", "2s 3s", "1s 0s", "3s 0s", "2s 5s", "3s 6s",
             "2r 1r", "2r 3r", "1r 0r", "3r 0r", "2r 5r", "3r 6r", "5r 4r", "4r 4'r", "5r 5'r"]
    rules += [f"{a}r {a}s" for a in "0123456"]
    pairs = [tuple(idx[x] for x in r.split()) for r in rules]
    total = 0
    for v in range(1 << 18):
        if all(not (v >> a & 1) or (v >> b & 1) for a, b in pairs):
            total += 1
    return total


def test_general_count_independent_scan():
    assert _independent_general_count() == 2960


def test_constraint_examples():
    general = constraint_set("general")
    assert general.implies("4r", "4'r")
    assert not general.implies("4'r", "4's")
    assert not any("4's" in (a.value, b.value) or "5's" in (a.value, b.value)
                   for a, b in general.implications)
    assert {c.value for c in constraint_set("gcds").forced} >= {"5's"}
    assert {c.value for c in constraint_set("accp").forced} == {"0s", "3s", "6s"}


def test_cross_rule_everywhere():
    for cls in MonoidClass:
        c = constraint_set(cls)
        for n in "0123456":
            assert c.implies(n + "r", n + "s"), (cls, n)


def test_consistency_examples():
    for cls in MonoidClass:
        assert is_consistent(ALL_TRUE, constraint_set(cls))
    assert is_consistent(ALL_FALSE, constraint_set("general"))
    assert not is_consistent(ALL_FALSE, constraint_set("atomic"))
    p = Profile.from_conditions(["5r", "5s", "5'r", "5's"])
    assert not is_consistent(p, constraint_set("general"))


@given(st.integers(0, (1 << 18) - 1))
def test_vectorised_mask_agrees(bits):
    for cls in MonoidClass:
        c = constraint_set(cls)
        assert bool(_mask(np.array([bits]), c)[0]) == is_consistent(Profile(bits), c)


def test_pair_values():
    assert pair_values(ALL_TRUE).values == (2,) * 7
    assert pair_values(ALL_FALSE).values == (0,) * 7
    p = Profile.from_conditions(["0s", "1s", "3s", "6s"])
    assert pair_values(p).values == (1, 1, 0, 1, 0, 0, 1)
    with pytest.raises(ValueError):
        pair_values(Profile.from_conditions(["2r"]))


def test_pair_round_trip():
    for p in enumerate_profiles("general").profiles:
        assert decode(encode(p)) == p
    with pytest.raises(ValueError):
        decode(PairValue((3, 0, 0, 0, 0, 0, 0)))


def test_profile_strings():
    p = Profile.from_conditions(["0s", "6r"])
    assert p.to_string() == "1" + "0" * 16 + "1"
    assert Profile.from_string(p.to_string()) == p
    with pytest.raises(ValueError):
        Profile.from_string("01")


def test_order_is_little_endian_ascending():
    bits = [p.bits for p in enumerate_profiles("gcd").profiles]
    assert bits == sorted(bits)


def _chains():
    return [["general", "atomic", "accp"], ["general", "sr", "preschreier", "gcd", "gcds"]]


@pytest.mark.parametrize("chain", _chains())
def test_monotone(chain):
    sets = [set(enumerate_profiles(c).profiles) for c in chain]
    for small, big in zip(sets[1:], sets):
        assert small <= big


def test_table_reconstruction():
    b = table_breakdown("general")
    assert [r.key for r in b.rows] == [(2, 2), (2, 1), (2, 0), (1, 1), (1, 0), (0, 0)]
    assert [r.count for r in b.rows] == [4, 264, 1512, 88, 840, 252]
    assert b.total == 2960


def test_atomic_drops_last_row():
    b = table_breakdown("atomic")
    assert b.total == 2960 - 252
    assert (0, 0) not in [r.key for r in b.rows]


@pytest.mark.parametrize("cls", list(MonoidClass))
def test_tables_against_published(cls):
    b = table_breakdown(cls)
    assert b.total == COUNTS[cls.value]
    assert not b.mismatches


def test_pair_lemma():
    profiles = enumerate_profiles("general").profiles
    assert verify_pair_lemma(profiles)
    assert pair_lemma_violations([ALL_TRUE, ALL_FALSE]) == []


def test_json_and_csv():
    e = enumerate_profiles("gcds")
    data = e.to_json()
    assert data["count"] == 7 and data["bit_order"] == list(BIT_ORDER)
    assert all(len(s) == 18 for s in data["profiles"])
    json.dumps(data)
    lines = e.to_csv().splitlines()
    assert lines[0].split(",")[:2] == ["0s", "0r"] and lines[0].endswith("v(6sr)")
    assert len(lines) == 8
    csv = table_breakdown("general").to_csv().splitlines()
    assert csv[0] == "v(0sr),v(2sr),L3,paper_L3,match" and len(csv) == 7


def test_survey_vectors_are_consistent():
    # discrepancy-free example surveys must land on consistent profiles
    for spec, cls in [("chain:1,1", "gcd"), ("rationals", "gcd"), ("dyadic", "gcd"), ("free:1", "gcds")]:
        report = survey(build(spec), 2)
        assert not report.discrepancies
        p = Profile.from_conditions(report.conjecture)
        assert is_consistent(p, constraint_set(cls)), spec
