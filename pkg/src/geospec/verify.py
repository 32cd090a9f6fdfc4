"""Acceptance checks, grouped into suites for the `verify` command."""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
import random
import time

from flint import ctx

from . import spectrum_integer as si
from . import spectrum_quadratic as sq
from .algebra import GeneralPisot, PisotQuadraticUnit, complete_homogeneous
from .betasym import (boundary_expansions, digits_prefix, encode, decode, random_admissible,
                      HALF)
from .dimension import integer_bound, integer_threshold_ell, quadratic_t0
from .interval import kappa_and_keys, check_grid
from .limsup import exact_limsup, norm_sequence, eps_via_tau
from .words import (christoffel, is_balanced, balance_witness, forbidden_scan, iota,
                    iota_attaining, periodic, thue_morse)


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self):
        return "[%s] %2d %s: %s (%.2fs)" % ("PASS" if self.passed else "FAIL", self.number,
                                           self.name, self.detail, self.seconds)


def _timed(number, name, fn):
    t = time.time()
    ok, detail = fn()
    return CheckResult(number, name, bool(ok), detail, time.time() - t)


# ---------------------------------------------------------------- 1-3: integer bases

def check_f_identity():
    bad = [(a, k) for a in range(2, 11) for k in range(13)
           if si.f_eval(si.A_periodic(k), Fraction(1, a)) != si.E_k(Fraction(1, a), k)]
    return not bad, "f(A_k^inf; 1/a) = E^(k)(1/a) for a in 2..10, k <= 12; failures %s" % bad


def check_xi2():
    first = [si.spectrum_point(2, k) for k in range(3)]
    lim = si.spectrum_limit(2)
    target = Fraction("0.4124540")
    close = abs(lim.mid - target) <= Fraction(5, 10 ** 8) + lim.rad
    ok = first == [Fraction(1, 3), Fraction(2, 5), Fraction(7, 17)] and lim.rad <= Fraction(1, 10 ** 6) and close
    return ok, "first values %s, limit %.10f +/- %.1e" % ([str(x) for x in first], float(lim.mid), float(lim.rad))


def check_rational_orbits():
    seq = norm_sequence(Fraction(1, 3), 2, 1001)
    all_third = seq.exact and all(v == Fraction(1, 3) for v in seq.values)
    ls = exact_limsup(Fraction(2, 5), 2)
    orbit, _, _ = si.rational_orbit_limsup(Fraction(2, 5), 2)
    return all_third and ls == orbit == Fraction(2, 5), \
        "||2^n/3|| = 1/3 for n <= 1000: %s; limsup for 2/5: %s" % (all_third, ls)


# ---------------------------------------------------------------- 4-5: quadratic units

def check_quadratic_tables():
    plus = sq.spectrum_values(4, "plus", 40)
    minus = sq.spectrum_values(3, "minus", 40)
    u = PisotQuadraticUnit(4, "plus")
    z_ok = all(sq.z_value(u, n) == plus[n] for n in range(1, 41))
    lp = sq.spectrum_limit(4, "plus")
    lm = sq.spectrum_limit(3, "minus")
    tol = Fraction(1, 10 ** 12)
    ok = (plus[:5] == [0, Fraction(1, 6), Fraction(1, 5), Fraction(5, 24), Fraction(4, 19)]
          and minus[:5] == [0, Fraction(3, 13), Fraction(1, 4), Fraction(36, 143), Fraction(33, 131)]
          and z_ok and abs(plus[40] - lp) < tol and abs(minus[40] - lm) < tol)
    return ok, "tables match, z_n = p_n/q_n for n <= 40: %s, |p_40/q_40 - limit| = %.1e / %.1e" % (
        z_ok, float(abs(plus[40] - lp)), float(abs(minus[40] - lm)))


def check_witnesses():
    bad = []
    count = 0
    for sign, bs in (("plus", range(4, 9)), ("minus", range(3, 9))):
        for b in bs:
            u = PisotQuadraticUnit(b, sign)
            vals = sq.spectrum_values(b, sign, 8)
            for n in range(9):
                for nu in sq.witness_nus(n):
                    w = sq.xn_witness(u, None, n, nu)
                    count += 1
                    if not (w.limsup == vals[n] == w.limsup_trace):
                        bad.append((sign, b, n, nu))
    u4 = PisotQuadraticUnit(4, "plus")
    w1 = sq.xn_witness(u4, None, 1)
    a1 = u4.in_x0(w1.xi - (u4.alpha - 1) / 12) and exact_limsup((u4.alpha - 1) / 12, u4) == Fraction(1, 6)
    u3 = PisotQuadraticUnit(3, "minus")
    w3 = sq.xn_witness(u3, None, 1)
    a3 = u3.in_x0(w3.xi - u3.alpha / 13) and exact_limsup(u3.alpha / 13, u3) == Fraction(3, 13)
    return not bad and a1 and a3, "%d witnesses, mismatches %s, anchors %s/%s" % (count, bad, a1, a3)


# ---------------------------------------------------------------- 6-7: words

def check_balance():
    bad = []
    for bits in range(2 ** 14):
        w = format(bits, "014b")
        if not is_balanced(w) and balance_witness(w) is None:
            bad.append(w)
    fbad = []
    for n in range(9):
        for bits in range(2 ** n):
            v = format(bits, "0%db" % n) if n else ""
            for u in ("0" + v + "01" + v[::-1] + "1", "1" + v[::-1] + "10" + v + "0"):
                if is_balanced(u):
                    fbad.append(u)
    special = not is_balanced("1010010001") and not forbidden_scan("1010010001")
    return not bad and not fbad and special, \
        "length-14 words without witness: %d, balanced F-members: %d, 1010010001 unbalanced and F-free: %s" % (
            len(bad), len(fbad), special)


def check_christoffel():
    bad = []
    for q in range(2, 51):
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            lo, up = christoffel(p, q), christoffel(p, q, upper=True)
            v = lo[1:-1]
            if not (lo == "0" + v + "1" and up == "1" + v + "0" and v == v[::-1]):
                bad.append(("shape", p, q))
            if q <= 30:
                r = iota(periodic(lo))
                if not (r.exact and r.value == q - 2 and len(iota_attaining(lo)) == 2):
                    bad.append(("iota", p, q))
    tm = iota(thue_morse(64))
    return not bad and tm.value == 6, "failures %s, Thue-Morse window 64: %s" % (bad[:5], tm)


# ---------------------------------------------------------------- 8: symmetric beta expansions

def check_beta():
    bad = []
    for sign, bs in (("plus", range(3, 13)), ("minus", range(1, 13))):
        for b in bs:
            u = PisotQuadraticUnit(b, sign)
            top, bottom = boundary_expansions(u, None)
            if digits_prefix(u, HALF, 50) != list(top.prefix(50)) or \
                    digits_prefix(u, -HALF, 50) != list(bottom.prefix(50)):
                bad.append((sign, b))
    rng = random.Random(20240611)
    rt_bad = 0
    cases = [(b, "plus") for b in range(3, 13)] + [(b, "minus") for b in range(1, 13)]
    for i in range(100):
        b, sign = cases[i % len(cases)]
        u = PisotQuadraticUnit(b, sign)
        d = random_admissible(u, rng)
        x = decode(u, d)
        if not (-HALF <= x < HALF and encode(u, x).digits == d):
            rt_bad += 1
    return not bad and rt_bad == 0, "boundary mismatches %s, admissible round-trip failures %d/100" % (bad, rt_bad)


# ---------------------------------------------------------------- 9: the interval construction

def check_interval():
    key_fail, kappa_fail, grid_fail = [], [], []
    for sign, bs in (("plus", range(4, 13)), ("minus", range(3, 13))):
        for b in bs:
            case = kappa_and_keys(b, sign)
            if not case.holds:
                key_fail.append("%s b=%d %s: %.4f > %.4f" % (sign, b, case.key, float(case.lhs), float(case.rhs)))
            if not case.kappa < HALF:
                kappa_fail.append((sign, b))
            for r in check_grid(b, sign, 11, 200):
                if not (r.centre_ok and r.bounded):
                    grid_fail.append((sign, b, str(r.eta)))
    ok = not key_fail and not kappa_fail and not grid_fail
    return ok, "Key inequality failures %s; kappa >= 1/2: %s; grid failures: %s" % (
        key_fail, kappa_fail, grid_fail)


# ---------------------------------------------------------------- 10: general Pisot weights

def check_plastic():
    g = GeneralPisot([-1, -1, 0, 1])
    with ctx.workprec(200):
        rs = g.roots()
        h_ok = all(float(abs(complete_homogeneous(m, rs)).upper()) < 1e-9 for m in (-1, -2))
        r_ok = True
        for q in range(-10, 1):
            r = g.r_weight(q)
            n = round(float(r.mid()))
            r_ok &= float(abs(r - n).upper()) < 1e-9
    rng = random.Random(7)
    rec_ok = True
    for _ in range(20):
        xi = Fraction(rng.randint(-999, 999), rng.randint(1000, 5000))
        n = rng.randint(0, 20)
        a, b = eps_via_tau(g, xi, n)
        rec_ok &= abs(a.mid - b.mid) <= a.rad + b.rad
    return h_ok and r_ok and rec_ok, "h_-1, h_-2 vanish: %s; R_q integral for -10 <= q <= 0: %s; tau reconstruction: %s" % (
        h_ok, r_ok, rec_ok)


# ---------------------------------------------------------------- 11: dimension

def check_dimension():
    bad = []
    for a in range(2, 11):
        for t100 in range(10, 50, 5):
            t = Fraction(t100, 100)
            ell = integer_threshold_ell(a, t)
            if not integer_bound(a, t, ell).below_one:
                bad.append((a, str(t)))
    t0 = quadratic_t0(4)
    return not bad and t0 < Fraction(1, 4), "bound >= 1 at threshold ell: %s; t0 = %s < 1/4: %s" % (
        bad, t0, t0 < Fraction(1, 4))


CHECKS = [
    (1, "f-identity", check_f_identity),
    (2, "integer spectrum for a=2", check_xi2),
    (3, "rational orbits", check_rational_orbits),
    (4, "quadratic tables", check_quadratic_tables),
    (5, "Xn witnesses", check_witnesses),
    (6, "balance and F", check_balance),
    (7, "Christoffel and iota", check_christoffel),
    (8, "symmetric beta expansions", check_beta),
    (9, "interval construction", check_interval),
    (10, "general Pisot weights", check_plastic),
    (11, "dimension bounds", check_dimension),
]

SUITES = {
    "integer": [1, 2, 3],
    "quadratic": [4, 5],
    "words": [6, 7],
    "betasym": [8],
    "interval": [9],
    "pisot": [10],
    "dimension": [11],
}


def run(suite="all"):
    if suite == "all":
        wanted = [c[0] for c in CHECKS]
    elif suite in SUITES:
        wanted = SUITES[suite]
    else:
        raise KeyError("unknown suite %r; choose from %s or all" % (suite, sorted(SUITES)))
    return [_timed(n, name, fn) for n, name, fn in CHECKS if n in wanted]
