import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from moyweb.qpoly import (
    ONE,
    ZERO,
    DivisionFailure,
    LaurentPoly,
    Q,
    RatQ,
    eval_at_one,
    exact_div,
    grassmann_poincare,
    grassmann_recurrence,
    qbinom,
    qfact,
    qint,
)

polys = st.dictionaries(st.integers(-8, 8), st.integers(-50, 50), max_size=6).map(LaurentPoly)
nonzero = polys.filter(lambda p: not p.is_zero())


def P(text):
    return LaurentPoly.parse(text)


def test_qint_small():
    assert qint(0) == ZERO
    assert qint(1) == ONE
    assert qint(2) == Q + Q.shift(-2)
    assert str(qint(3)) == "q^2 + 1 + q^-2"


def test_qfact():
    assert qfact(0) == ONE and qfact(1) == ONE
    assert qfact(2) == qint(2)
    assert str(qfact(3)) == "q^3 + 2*q + 2*q^-1 + q^-3"


def test_qbinom_examples():
    assert str(qbinom(4, 2)) == "q^4 + q^2 + 2 + q^-2 + q^-4"
    assert all(qbinom(n, 0) == ONE for n in range(9))
    assert qbinom(5, 7) == ZERO
    assert qbinom(3, -1) == ZERO


def test_palindromic():
    for n in range(11):
        assert qint(n).is_palindromic() and qfact(n).is_palindromic()
        for k in range(n + 1):
            assert qbinom(n, k).is_palindromic()


def test_pascal():
    for n in range(2, 9):
        for k in range(1, n):
            assert qbinom(n, k) == qbinom(n - 1, k).shift(k) + qbinom(n - 1, k - 1).shift(k - n)


def test_binomials_at_one():
    for n in range(13):
        for k in range(n + 1):
            assert eval_at_one(qbinom(n, k)) == math.comb(n, k)
    assert [eval_at_one(qint(k)) for k in range(11)] == list(range(11))
    assert eval_at_one(ZERO) == 0


def test_big_coefficients_exact():
    p = qbinom(60, 30)
    assert eval_at_one(p) == math.comb(60, 30)
    assert max(p.terms.values()) > 2**40


def test_exact_div_examples():
    assert exact_div(P("q^2 - q^-2"), qint(2)) == P("q - q^-1")
    with pytest.raises(DivisionFailure):
        exact_div(Q + 1, qint(2))
    with pytest.raises(ZeroDivisionError):
        exact_div(Q, ZERO)


def test_exact_div_random_pairs():
    rng = random.Random(1)
    for _ in range(1000):
        a = LaurentPoly({rng.randint(-6, 6): rng.randint(-9, 9) for _ in range(rng.randint(0, 4))})
        b = LaurentPoly({rng.randint(-6, 6): rng.randint(-9, 9) for _ in range(rng.randint(1, 4))})
        if b.is_zero():
            continue
        assert exact_div(a * b, b) == a


@given(polys)
def test_render_parse_roundtrip(p):
    assert LaurentPoly.parse(str(p)) == p


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a).is_zero()


@given(polys, polys)
def test_at_one_is_a_ring_map(a, b):
    assert (a * b).at_one() == a.at_one() * b.at_one()
    assert (a + b).at_one() == a.at_one() + b.at_one()


def test_render_format():
    assert str(ZERO) == "0"
    assert str(P("-q^2 + 3 - 2*q^-1")) == "-q^2 + 3 - 2*q^-1"
    assert str(Q) == "q"


def test_ratq():
    one = RatQ(ONE)
    x = one.div_poly(qint(2)).scale(qint(2))
    assert x.is_integral and x == one
    p, r = qint(3), qfact(3)
    assert RatQ(p) + RatQ(r) == RatQ(p + r)
    y = RatQ(P("q^2 - q^-2")).div_poly(qint(2))
    assert y.is_integral and y == RatQ(P("q - q^-1"))
    with pytest.raises(ZeroDivisionError):
        one.div_poly(ZERO)


def test_grassmann():
    assert grassmann_poincare(1, 4) == P("q^6 + q^4 + q^2 + 1")
    assert eval_at_one(grassmann_poincare(2, 4)) == 6
    for n in range(1, 9):
        for k in range(1, n + 1):
            g = grassmann_poincare(k, n)
            assert all(e >= 0 and e % 2 == 0 for e in g.terms)
            lhs, rhs = grassmann_recurrence(k, n)
            assert lhs == rhs
    with pytest.raises(ValueError):
        grassmann_poincare(0, 3)
