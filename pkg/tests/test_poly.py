import pytest
from hypothesis import given
from hypothesis import strategies as st

from knotbounds.poly import DegreeSummary, LaurentPoly2, ZeroPolynomialError, degrees

terms = st.dictionaries(
    st.tuples(st.integers(-4, 4), st.integers(-3, 3)), st.integers(-5, 5), max_size=5
)


def P(d):
    return LaurentPoly2(d)


def test_zero_coefficients_are_dropped():
    p = P({(1, 0): 0, (0, 2): 3})
    assert p.terms == {(0, 2): 3}
    assert (p - p).is_zero()


def test_degrees_of_one():
    assert degrees(LaurentPoly2.one()) == DegreeSummary(0, 0, 0, 0)


def test_degrees_of_zero_raises():
    with pytest.raises(ZeroPolynomialError):
        degrees(LaurentPoly2.zero())


def test_text_form_is_sorted_and_signed():
    p = P({(2, 0): 2, (4, 0): -1, (2, 2): 1})
    assert p.to_text() == "2 v^2 z^0 + 1 v^2 z^2 + -1 v^4 z^0"
    assert LaurentPoly2.from_text(p.to_text()) == p
    assert LaurentPoly2.zero().to_text() == "0"


def test_reduce_mod_two():
    p = P({(0, 0): 3, (1, 1): -2, (2, 0): -1})
    assert p.reduce_mod(2) == P({(0, 0): 1, (2, 0): 1})


@given(terms, terms)
def test_multiplication_adds_degrees(a, b):
    p, q = P(a), P(b)
    if p.is_zero() or q.is_zero():
        assert (p * q).is_zero()
        return
    dp, dq, dpq = degrees(p), degrees(q), degrees(p * q)
    assert (dpq.e, dpq.E, dpq.m, dpq.M) == (dp.e + dq.e, dp.E + dq.E, dp.m + dq.m, dp.M + dq.M)


@given(terms, terms, terms)
def test_ring_axioms(a, b, c):
    p, q, r = P(a), P(b), P(c)
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p


@given(terms)
def test_text_roundtrip(a):
    p = P(a)
    assert LaurentPoly2.from_text(p.to_text()) == p


@given(terms)
def test_swap_x_inverse_is_an_involution(a):
    p = P(a)
    assert p.swap_x_inverse(-1).swap_x_inverse(-1) == p
