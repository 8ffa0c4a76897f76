from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from monoidlab.core import DivisorSetInfinite, InvalidElement, InvalidSpec
from monoidlab.families import ChainElement, build, normalize_to_depth, parse_spec
from oracles import chain_vector


@pytest.mark.parametrize("text", ["numerical:2", "free:3", "rationals", "dyadic", "chain:1,2", "doublechain"])
def test_spec_round_trip(text):
    assert str(parse_spec(text)) == text
    assert build(text).spec == text


@pytest.mark.parametrize("text", ["numerical", "free:x", "chain:1", "chain:0,2", "integers", "free:0"])
def test_bad_specs(text):
    with pytest.raises(InvalidSpec):
        build(text)


def test_numerical_elements(num2):
    assert num2.elements(6) == [0, 2, 3, 4, 5, 6]
    assert num2.divisors(7) == [0, 2, 3, 4, 5, 7]
    with pytest.raises(InvalidElement):
        num2.validate(1)


def test_numerical_one_is_free():
    m = build("numerical:1")
    assert m.lcm(3, 5) == 5
    assert m.elements(3) == [0, 1, 2, 3]


def test_free_parse_format(free2):
    assert free2.parse("(2, 1)") == (2, 1)
    assert free2.format((2, 1)) == "2,1"
    with pytest.raises(InvalidElement):
        free2.parse("1,2,3")
    with pytest.raises(InvalidElement):
        free2.parse("1,-1")


def test_free_divisors(free2):
    assert free2.divisors((1, 1)) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert free2.gcd((3, 1), (1, 2)) == (1, 1)
    assert free2.coprime((2, 0), (0, 5)).is_yes


def test_rationals_parse(rationals):
    assert rationals.parse("3/6") == Fraction(1, 2)
    with pytest.raises(InvalidElement):
        rationals.validate(0.5)
    with pytest.raises(InvalidElement):
        rationals.parse("-1")


def test_rationals_divisors_infinite(rationals):
    assert rationals.divisors(Fraction(0)) == [Fraction(0)]
    with pytest.raises(DivisorSetInfinite):
        rationals.divisors(Fraction(1))


def test_dyadic_denominators():
    m = build("dyadic")
    assert m.parse("3/8") == Fraction(3, 8)
    with pytest.raises(InvalidElement):
        m.parse("1/3")


def test_chain_relation(chain12):
    # y1 = x2 * y2^2 in chain(1, 2)
    assert chain12.parse("y1") == chain12.parse("x2*y2^2")
    assert chain12.format(chain12.parse("x2*y2^2")) == "y1"


def test_chain_normalize(chain12):
    y1 = chain12.parse("y1")
    assert normalize_to_depth(chain12, y1, 3) == ChainElement(3, (0, 1, 2), 4)
    with pytest.raises(ValueError):
        normalize_to_depth(chain12, chain12.parse("x3"), 1)


def test_chain_divisors_are_a_slice(chain12):
    y1 = chain12.parse("y1")
    assert not chain12.divisors_complete(y1)
    assert chain12.parse("x2") in chain12.divisors(y1)
    assert chain12.divisors_complete(chain12.parse("x1^2*x2"))


def test_chain_parse_rejects_garbage(chain12):
    for bad in ("z1", "x0", "y1^", "x1**2"):
        with pytest.raises(InvalidElement):
            chain12.parse(bad)


def test_doublechain_is_free_on_x1_y1_z():
    m = build("doublechain")
    # x2 = x1^2 y1 and y2 = y1 z1
    assert m.parse("x2") == (2, 1)
    assert m.parse("y2") == (0, 1, 1)
    assert m.format(m.parse("x3")) == "x1^4*y1^3*z1"


chain_words = st.lists(st.tuples(st.sampled_from("xy"), st.integers(1, 3), st.integers(1, 3)), max_size=4)


@given(chain_words)
def test_chain_format_parse(word):
    m = build("chain:2,3")
    a = m.identity
    for letter, i, e in word:
        a = m.mul(a, m.power(m.generator(letter, i), e))
    assert m.parse(m.format(a)) == a


@given(chain_words, chain_words)
def test_chain_divides_matches_deep_vectors(w1, w2):
    p, q = 1, 2
    m = build(f"chain:{p},{q}")

    def word(w):
        a = m.identity
        for letter, i, e in w:
            a = m.mul(a, m.power(m.generator(letter, i), e))
        return a

    a, b = word(w1), word(w2)
    depth = 6
    va = chain_vector(a.xs, a.y, p, q, depth)
    vb = chain_vector(b.xs, b.y, p, q, depth)
    assert m.divides(a, b) == all(x <= y for x, y in zip(va, vb))


def test_windows():
    assert len(build("free:2").elements(3)) == 16
    assert len(build("chain:1,1").elements(6)) == 81
    assert all(e.depth <= 3 for e in build("chain:1,2").elements(6))
    with pytest.raises(Exception):
        build("rationals").elements(3)
