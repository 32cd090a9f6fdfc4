"""Symmetric beta-expansions T(x) = alpha x - u(alpha x) on [-1/2, 1/2)."""
from dataclasses import dataclass
from fractions import Fraction

from .algebra import PisotQuadraticUnit
from .surd import QuadraticSurd, nearest_integer
from .words import EPWord, ep_compare
from .spectrum_quadratic import ep_power_sum

HALF = Fraction(1, 2)


def _unit(b, sign=None):
    return b if isinstance(b, PisotQuadraticUnit) else PisotQuadraticUnit(b, sign)


def sym_T(unit, x):
    y = unit.alpha * x
    return y - nearest_integer(y)


def extended_domain(unit):
    """[-(c + 1/2)/alpha, (c + 1/2)/alpha)."""
    r = (unit.c + HALF) / unit.alpha
    return -r, r


@dataclass
class SymBetaExpansion:
    x: QuadraticSurd
    digits: EPWord
    orbit: list

    @property
    def preperiod(self):
        return self.digits.preperiod

    @property
    def period(self):
        return self.digits.period


def encode(unit, x, max_steps=10**6):
    """Exact symmetric expansion x = sum d_i alpha^-i of x in Q(alpha).

    The orbit is followed until a state repeats, which gives the preperiod
    and the period of the digit sequence.
    """
    x = QuadraticSurd._coerce(x)
    lo, hi = extended_domain(unit)
    if not lo <= x < hi:
        raise ValueError("x lies outside the extended domain")
    seen = {}
    orbit, digits = [], []
    cur = x
    while cur not in seen:
        if len(orbit) > max_steps:
            raise RuntimeError("no period within %d steps" % max_steps)
        seen[cur] = len(orbit)
        orbit.append(cur)
        y = unit.alpha * cur
        d = nearest_integer(y)
        digits.append(d)
        cur = y - d
    k = seen[cur]
    return SymBetaExpansion(x, EPWord(tuple(digits[:k]), tuple(digits[k:])), orbit)


def digits_prefix(unit, x, n):
    """First n digits by iterating T exactly (no period detection)."""
    out = []
    cur = QuadraticSurd._coerce(x)
    for _ in range(n):
        y = unit.alpha * cur
        d = nearest_integer(y)
        out.append(d)
        cur = y - d
    return out


def decode(unit, digits):
    """sum_{i>=1} d_i alpha^-i for an EPWord d_1 d_2 ... ."""
    return ep_power_sum(digits, unit.alpha.inverse(), 1)


def boundary_expansions(b, sign):
    """Closed forms (d(1/2), d(-1/2)) as EP words."""
    unit = _unit(b, sign)
    c = unit.c
    if unit.sign == "plus":
        if unit.b % 2 == 0:
            return EPWord((c, 0), (-c, 1)), EPWord((), (-c, 1))
        return EPWord((c, c, 0), (-c, -c, 1)), EPWord((), (-c, -c, 1))
    if unit.b % 2 == 0:
        return EPWord((c, 1), (-c, 0)), EPWord((), (-c, 0))
    return EPWord((c, -(c - 1), 0), (-c, c - 1, 1)), EPWord((), (-c, c - 1, 1))


def upper_limit_expansion(unit):
    """d*(1/2) = lim of d(x) as x increases to 1/2.

    The orbit of 1/2 meets -1/2 after j steps; just below 1/2 the j-th digit
    drops by one and the orbit comes back next to 1/2, so d*(1/2) is purely
    periodic.
    """
    e = encode(unit, HALF)
    for j, state in enumerate(e.orbit[1:], start=1):
        if state == -HALF:
            head = e.digits.prefix(j)
            return EPWord((), tuple(head[:-1]) + (head[-1] - 1,))
    return e.digits


def is_admissible(unit, d):
    """d(-1/2) <= sigma^k(d) < d*(1/2) for all k (lexicographic)."""
    _, bottom = boundary_expansions(unit, None)
    top = upper_limit_expansion(unit)
    n = len(d.preperiod) + len(d.period)
    for k in range(n):
        t = d.shift(k)
        if ep_compare(bottom, t) > 0 or ep_compare(t, top) >= 0:
            return False
    return True


def digit_alphabet(unit):
    """Integers in (-(alpha+1)/2, (alpha+1)/2)."""
    return list(range(-unit.c, unit.c + 1))


def random_admissible(unit, rng, pre_len=4, per_len=5, tries=10000):
    """A random admissible EP word, found by rejection."""
    A = digit_alphabet(unit)
    for _ in range(tries):
        d = EPWord(tuple(rng.choice(A) for _ in range(rng.randint(0, pre_len))),
                   tuple(rng.choice(A) for _ in range(rng.randint(1, per_len))))
        if is_admissible(unit, d):
            return d
    raise RuntimeError("no admissible word found")


def extended_domain_inequality(unit):
    """(alpha - alpha2)/2 <= c + 1/2, needed for the minus construction."""
    return unit.gap / 2 <= unit.c + HALF
