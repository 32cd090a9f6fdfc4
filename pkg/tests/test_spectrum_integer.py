from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from geospec import spectrum_integer as si
from geospec.words import A_word



def brute_orbit_limsup(xi, a):
    """Max of ||xi a^n|| over the eventual cycle, found by plain iteration."""
    seen, xs = {}, []
    x = xi % 1
    while x not in seen:
        seen[x] = len(xs)
        xs.append(x)
        x = (x * a) % 1
    return max(min(v, 1 - v) for v in xs[seen[x]:])


def test_first_values_base_2():
    assert [si.spectrum_point(2, k) for k in range(3)] == [Fraction(1, 3), Fraction(2, 5), Fraction(7, 17)]


@pytest.mark.parametrize("a", range(2, 11))
def test_f_identity(a):
    for k in range(13):
        assert si.f_eval(si.A_periodic(k), Fraction(1, a)) == si.E_k(Fraction(1, a), k)


@pytest.mark.parametrize("a", [2, 3, 7])
def test_E_k_against_product_formula(a):
    X = mpmath.mpf(1) / a
    for k in range(6):
        prod = mpmath.fprod(1 - X ** (2 ** m) for m in range(k))
        t = X ** (2 ** k)
        ref = (1 + t - (1 - X) * prod) / (2 * X * (1 + t))
        assert abs(mpmath.mpf(si.E_k(Fraction(1, a), k).numerator) / si.E_k(Fraction(1, a), k).denominator - ref) < mpmath.mpf(10) ** -50


def test_values_increase_to_the_limit():
    lim = si.spectrum_limit(2)
    vals = [si.spectrum_point(2, k) for k in range(12)]
    assert vals == sorted(vals)
    assert vals[-1] < lim.hi
    assert abs(lim.mid - Fraction("0.4124540")) < Fraction(5, 10 ** 8)
    lim3 = si.spectrum_limit(3)
    assert lim3.lo > si.spectrum_point(3, 5)


@pytest.mark.parametrize("a", [2, 3, 4, 5])
def test_orbit_of_spectrum_points(a):
    for k in range(5):
        eta = si.spectrum_point(a, k)
        m, pre, cyc = si.rational_orbit_limsup(eta, a)
        assert m == eta == brute_orbit_limsup(eta, a)


@given(st.integers(1, 500), st.integers(2, 500), st.integers(2, 9))
def test_rational_orbit_limsup_matches_iteration(p, q, a):
    xi = Fraction(p, q)
    assert si.rational_orbit_limsup(xi, a)[0] == brute_orbit_limsup(xi, a)


def test_signed_base_evaluation():
    from geospec.words import EPWord
    # (0.(1)^inf)_2 = 1, (0.1(-1)^inf)_3 = 1/3 - 1/6
    assert si.eval_signed_base(EPWord((), (1,)), 2) == 1
    assert si.eval_signed_base(EPWord((1,), (-1,)), 3) == Fraction(1, 3) - Fraction(1, 6)


def test_tau_fixed_point():
    assert A_word(0) == "1" and A_word(1) == "2" and A_word(2) == "211"
    p = si.tau_fixed_point_prefix(20)
    assert len(p) == 20 and p.startswith("2112")


def test_enumerate_rows():
    rows = si.enumerate_spectrum(3, 4)
    assert all(r.f_identity for r in rows)
    assert rows[0].to_json()["value"] == "1/4"
