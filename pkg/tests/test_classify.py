from fractions import Fraction

import pytest

from monoidlab.classify import (
    classify,
    gpr_set,
    in_class,
    irr_set,
    is_atom,
    is_radical_generator,
    is_square_free,
    sqf_set,
)
from monoidlab.core import Ternary, Unsupported
from monoidlab.families import build
import oracles

YES, NO, UNKNOWN = Ternary.YES, Ternary.NO, Ternary.UNKNOWN


def test_free2_examples(free2):
    assert is_square_free(free2, (0, 1)).answer is YES
    assert is_radical_generator(free2, (1, 1)).answer is YES
    assert is_atom(free2, (1, 0)).answer is YES
    assert is_atom(free2, (1, 1)).answer is NO


def test_numerical2_examples(num2):
    v = is_square_free(num2, 7)
    assert v.answer is NO
    b, c = v.witness
    assert 2 * b + c == 7 and b != 0 and num2.validate(c) == c
    r = is_radical_generator(num2, 3)
    assert r.answer is NO
    b, n = r.witness
    assert num2.divides(3, n * b) and not num2.divides(3, b)
    assert is_atom(num2, 2).answer is YES
    assert is_atom(num2, 4).answer is NO


@pytest.mark.parametrize("spec", ["numerical:3", "free:2", "rationals", "chain:1,2", "doublechain"])
def test_units(spec):
    m = build(spec)
    assert is_square_free(m, m.identity).answer is YES
    assert is_radical_generator(m, m.identity).answer is YES
    assert is_atom(m, m.identity).answer is NO


def test_rationals(rationals):
    one = Fraction(1)
    assert is_square_free(rationals, one).answer is NO
    assert is_radical_generator(rationals, one).answer is NO
    v = is_atom(rationals, one)
    assert v.answer is NO
    b, c = v.witness
    assert b + c == one and b > 0 and c > 0


def test_sets():
    assert sqf_set(build("numerical:2"), 8) == [0, 2, 3, 5]
    assert gpr_set(build("numerical:2"), 8) == [0]
    assert gpr_set(build("free:2"), 3) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert irr_set(build("free:1"), 5) == [(1,)]
    assert irr_set(build("numerical:3"), 9) == [3, 4, 5]


def test_sets_need_a_window(rationals):
    with pytest.raises(Unsupported):
        sqf_set(rationals, 3)


def test_in_class_kind(free2):
    assert in_class(free2, (1, 1), "s") is YES
    with pytest.raises(ValueError):
        in_class(free2, (1, 1), "x")


def test_no_answers_carry_checkable_witnesses():
    for spec, bound in [("numerical:2", 12), ("free:2", 4), ("chain:1,2", 3), ("chain:2,3", 2)]:
        m = build(spec)
        for a in m.elements(bound):
            s = is_square_free(m, a)
            if s.answer is NO:
                b, c = s.witness
                assert not m.is_unit(b) and m.mul(m.mul(b, b), c) == a
            r = is_radical_generator(m, a)
            if r.answer is NO:
                b, n = r.witness
                assert m.divides(a, m.power(b, n)) and not m.divides(a, b)


def test_report_json(free2):
    data = classify(free2, (2, 1)).to_json()
    assert data["element"] == "2,1"
    assert (data["unit"], data["sqf"], data["gpr"], data["atom"]) == (False, "no", "no", "no")
    assert set(data["witnesses"]) == {"sqf", "gpr", "atom"}


def test_rationals_zero_report(rationals):
    data = classify(rationals, rationals.parse("0")).to_json()
    assert data["unit"] is True and data["sqf"] == "yes"


# brute-force agreement on small windows; the full windows run in the acceptance suite

@pytest.mark.parametrize("k", [2, 3, 5])
def test_numerical_matches_oracle(k):
    m = build(f"numerical:{k}")
    for a in m.elements(14):
        assert (is_square_free(m, a).answer is YES) == oracles.num_sqf(k, a), a
        assert (is_radical_generator(m, a).answer is YES) == oracles.num_gpr(k, a), a
        assert (is_atom(m, a).answer is YES) == oracles.num_atom(k, a), a


@pytest.mark.parametrize("d", [1, 2, 3])
def test_free_matches_oracle(d):
    m = build(f"free:{d}")
    for a in m.elements(3):
        assert (is_square_free(m, a).answer is YES) == oracles.free_sqf(a)
        assert (is_radical_generator(m, a).answer is YES) == oracles.free_gpr(a, box=4, top_n=4)


@pytest.mark.parametrize("p, q", [(1, 1), (1, 2), (2, 1), (2, 3)])
def test_chain_matches_oracle(p, q):
    m = build(f"chain:{p},{q}")
    for a in m.elements(2):
        assert (is_square_free(m, a).answer is YES) == oracles.chain_sqf(a.xs, a.y, p, q), a
        assert (is_radical_generator(m, a).answer is YES) == oracles.chain_gpr(a.xs, a.y, p, q), a


def test_unknown_when_no_certificate(num2):
    # a numerical monoid without the analytic radical rule falls back to search,
    # which never certifies a universal statement
    class Plain(type(num2)):
        def analytic_radical(self, a):
            return None

        def radical_witness(self, a, budget=None):
            return None

    m = Plain(2)
    assert is_radical_generator(m, 5).answer is UNKNOWN
    assert is_radical_generator(m, 0).answer is YES
