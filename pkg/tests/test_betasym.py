import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from geospec.algebra import PisotQuadraticUnit
from geospec.betasym import (HALF, boundary_expansions, decode, digit_alphabet, digits_prefix,
                             encode, extended_domain, extended_domain_inequality, is_admissible,
                             random_admissible, sym_T, upper_limit_expansion)
from geospec.surd import QuadraticSurd
from geospec.words import EPWord

CASES = [(b, "plus") for b in range(3, 13)] + [(b, "minus") for b in range(1, 13)]


@pytest.mark.parametrize("b,sign", CASES)
def test_boundary_closed_forms(b, sign):
    u = PisotQuadraticUnit(b, sign)
    top, bottom = boundary_expansions(u, None)
    assert digits_prefix(u, HALF, 50) == list(top.prefix(50))
    assert digits_prefix(u, -HALF, 50) == list(bottom.prefix(50))
    assert encode(u, HALF).digits.canonical() == top.canonical()
    assert decode(u, top) == HALF and decode(u, bottom) == -HALF


@pytest.mark.parametrize("b,sign", CASES)
def test_quasi_greedy_limit(b, sign):
    u = PisotQuadraticUnit(b, sign)
    star = upper_limit_expansion(u)
    assert decode(u, star) == HALF
    assert not is_admissible(u, star)


@given(st.sampled_from(CASES), st.integers(-10 ** 6, 10 ** 6), st.integers(-10 ** 6, 10 ** 6),
       st.integers(1, 10 ** 4))
def test_encode_decode_roundtrip(case, p, q, r):
    u = PisotQuadraticUnit(*case)
    x = QuadraticSurd(p, q, r, u.alpha.d)
    x = x - (x + HALF).__floor__()           # bring into [-1/2, 1/2)
    e = encode(u, x)
    assert decode(u, e.digits) == x
    assert is_admissible(u, e.digits)
    assert all(d in digit_alphabet(u) for d in e.preperiod + e.period)


@given(st.sampled_from(CASES), st.integers(0, 2 ** 32))
def test_random_admissible_words_are_expansions(case, seed):
    u = PisotQuadraticUnit(*case)
    d = random_admissible(u, random.Random(seed))
    x = decode(u, d)
    assert -HALF <= x < HALF
    assert encode(u, x).digits.canonical() == d.canonical()


def test_inadmissible_example():
    u = PisotQuadraticUnit(5, "plus")
    assert not is_admissible(u, EPWord((), (2, -1, 2)))


def test_map_and_domain():
    u = PisotQuadraticUnit(4, "plus")
    x = Fraction(1, 7)
    y = sym_T(u, x)
    assert -HALF <= y < HALF and y == u.alpha * x - round(float(u.alpha * x))
    lo, hi = extended_domain(u)
    assert lo == -hi and hi > HALF
    for b in range(1, 13):
        assert extended_domain_inequality(PisotQuadraticUnit(b, "minus"))
