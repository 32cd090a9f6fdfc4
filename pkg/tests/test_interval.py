from fractions import Fraction

import pytest

from geospec.algebra import PisotQuadraticUnit
from geospec.interval import (HALF, build_biword, check_grid, construct, eta_grid, folded_max,
                              folded_xi, kappa_and_keys, split_digits)
from geospec.spectrum_quadratic import g_eval, g_shifts
from geospec.words import BiEPWord

PLUS = [(b, "plus") for b in range(4, 13)]
MINUS = [(b, "minus") for b in range(3, 13)]


@pytest.mark.parametrize("b,sign", PLUS + MINUS)
def test_kappa_below_half(b, sign):
    assert kappa_and_keys(b, sign).kappa < HALF


@pytest.mark.parametrize("b,sign", [c for c in PLUS + MINUS if c not in [(3, "minus"), (5, "minus")]])
def test_key_inequalities(b, sign):
    assert kappa_and_keys(b, sign).holds


def test_key_selection():
    assert kappa_and_keys(7, "plus").key == "Key2"
    assert kappa_and_keys(4, "plus").split == "alternating"
    assert kappa_and_keys(3, "minus").split == "alternating"
    with pytest.raises(ValueError):
        kappa_and_keys(3, "plus")


def test_key_fails_for_b7_but_key2_holds():
    u = PisotQuadraticUnit(7, "plus")
    case = kappa_and_keys(7, "plus")
    lhs = case.lhs
    assert lhs > u.c - u.c / u.alpha      # the generic inequality fails here
    assert case.holds


@pytest.mark.parametrize("b,sign", [(3, "minus"), (5, "minus")])
def test_key5_fails_but_construction_still_works(b, sign):
    case = kappa_and_keys(b, sign)
    assert not case.holds
    assert all(r.centre_ok and r.bounded for r in check_grid(b, sign, 5, 100))


def test_split_reassembles_digits():
    for b, sign in [(5, "plus"), (4, "minus")]:
        u = PisotQuadraticUnit(b, sign)
        for y in range(-5, 6):
            for n in range(1, 5):
                for split in ("plain", "alternating"):
                    hi, lo = split_digits(u, y, n, split)
                    assert hi + u.conj_sign ** n * lo == y
                    assert abs(hi - lo * u.conj_sign ** n) <= 1


@pytest.mark.parametrize("b,sign", [(4, "plus"), (8, "plus"), (3, "minus"), (7, "minus")])
def test_construction_hits_eta(b, sign):
    for eta in eta_grid(b, sign, 5):
        word, centre, others = construct(b, sign, eta, 100)
        assert centre == eta
        assert others <= eta


def test_folding_approximates_eta():
    u = PisotQuadraticUnit(8, "plus")
    eta = Fraction(23, 50)
    word, _ = build_biword(u, eta, "plain")
    assert g_eval(u, word, 0) == eta
    xi, x = folded_xi(u, word, 3, 400)
    vals = g_shifts(u, BiEPWord((0,), (0,) + x, (0,), 0), 1, 360)
    # block centres approach eta from above; every other shift stays below it
    late = [abs(v) for v in vals[100:]]
    assert abs(max(late) - eta) < Fraction(1, 10 ** 9)
    early = max(abs(v) for v in vals)
    assert eta <= early < eta + Fraction(1, 10 ** 4)
    best, bound, _ = folded_max(u, word, 3, 400, eta)
    assert best == early and bound < Fraction(1, 10 ** 10)
