import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from geospec.algebra import GeneralPisot, PisotQuadraticUnit
from geospec.limsup import (DecimalInput, eps_via_tau, exact_limsup, int_digits,
                            limsup_estimate, limsup_word_extract, norm_sequence, parse_real,
                            power_sums)
from geospec.spectrum_integer import rational_orbit_limsup
from geospec.surd import QuadraticSurd



def test_one_third_base_two():
    seq = norm_sequence(Fraction(1, 3), 2, 1001)
    assert seq.exact and set(seq.values) == {Fraction(1, 3)}
    assert exact_limsup(Fraction(2, 5), 2) == Fraction(2, 5)


@given(st.integers(1, 300), st.integers(2, 300), st.integers(2, 9))
def test_exact_limsup_two_routes_integer(p, q, a):
    xi = Fraction(p, q)
    assert exact_limsup(xi, a) == rational_orbit_limsup(xi, a)[0]


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 30))
def test_quadratic_sequence_against_mpmath(p, q, r):
    u = PisotQuadraticUnit(4, "plus")
    xi = QuadraticSurd(p, q, r, 3)
    seq = norm_sequence(xi, u, 60)
    x = (mpmath.mpf(p) + q * mpmath.sqrt(3)) / r
    al = 2 + mpmath.sqrt(3)
    for n in (0, 7, 59):
        v = x * al ** n
        ref = abs(v - mpmath.floor(v + mpmath.mpf(1) / 2))
        got = seq.values[n]
        got = (mpmath.mpf(got.p) + got.q * mpmath.sqrt(got.d or 3)) / got.r
        assert abs(ref - got) < mpmath.mpf(10) ** -60


def test_plastic_ball_sequence():
    g = GeneralPisot([-1, -1, 0, 1])
    seq = norm_sequence(Fraction(3, 7), g, 80)
    assert not seq.exact
    with mpmath.workdps(200):
        rho = max(mpmath.polyroots([1, 0, -1, -1], maxsteps=200, extraprec=600), key=abs).real
        for n in (0, 40, 79):
            v = mpmath.mpf(3) / 7 * rho ** n
            ref = abs(v - mpmath.floor(v + 0.5))
            c = seq.values[n]
            assert c.lo - Fraction(1, 10 ** 30) <= Fraction(str(mpmath.nstr(ref, 60))) <= c.hi + Fraction(1, 10 ** 30)


def test_exact_limsup_rational_pisot():
    g = GeneralPisot([-1, -1, 0, 1])
    ls = exact_limsup(Fraction(1, 2), g)
    seq = norm_sequence(Fraction(1, 2), g, 200)
    late = max(v.mid for v in seq.values[150:])
    assert abs(late - ls) < Fraction(1, 10 ** 6)


def test_power_sums_fibonacci():
    assert power_sums([-1, -1, 1], 8) == [2, 1, 3, 4, 7, 11, 18, 29]


@pytest.mark.parametrize("coeffs", [[-1, -1, 0, 1], [-1, -1, 1]])
def test_tau_reconstruction(coeffs):
    g = GeneralPisot(coeffs)
    rng = random.Random(11)
    for _ in range(8):
        xi = Fraction(rng.randint(-500, 500), rng.randint(501, 2000))
        a, b = eps_via_tau(g, xi, rng.randint(0, 15))
        assert abs(a.mid - b.mid) <= a.rad + b.rad


def test_digits_from_integer_base():
    digits, seq = int_digits(Fraction(2, 7), 2, 30)
    assert all(abs(d) <= 1 for d in digits)
    assert max(seq.values) == Fraction(3, 7)


def test_word_extract_finds_period():
    u = PisotQuadraticUnit(4, "plus")
    xi = (u.alpha - 1) / 12
    digits, seq = int_digits(xi, u, 200)
    top = limsup_word_extract(digits, seq.values[1:], w=1, top_m=3)
    assert top


def test_parse_real_kinds():
    assert parse_real("2/5") == Fraction(2, 5)
    assert isinstance(parse_real("0.37"), DecimalInput)
    assert parse_real("(1+sqrt(3))/12") == QuadraticSurd(1, 1, 12, 3)
    with pytest.raises(ValueError):
        parse_real("pi")


def test_estimate_report():
    u = PisotQuadraticUnit(4, "plus")
    est = limsup_estimate((u.alpha - 1) / 12, u, 200, tail_from=100)
    assert est.exact == Fraction(1, 6)
    assert abs(est.running_max - Fraction(1, 6)) < Fraction(1, 10 ** 20)
