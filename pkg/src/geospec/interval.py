"""Every eta in [kappa, 1/2] is a limit point of ||xi alpha^n||.

Given eta, the symmetric expansion y of eta (alpha - alpha2)/alpha is split
into a two-sided digit word s with g(s) = eta and every other shift bounded
by kappa.  Folding s into a one-sided word gives xi.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .algebra import PisotQuadraticUnit
from .betasym import encode
from .spectrum_quadratic import g_shifts, g_eval
from .surd import QuadraticSurd
from .words import BiEPWord, EPWord

HALF = Fraction(1, 2)


def _unit(b, sign=None):
    return b if isinstance(b, PisotQuadraticUnit) else PisotQuadraticUnit(b, sign)


@dataclass
class KeyCase:
    key: str
    split: str          # 'plain' or 'alternating'
    lhs: QuadraticSurd
    rhs: QuadraticSurd
    kappa: QuadraticSurd

    @property
    def holds(self):
        return self.lhs <= self.rhs

    def to_json(self):
        return {"key": self.key, "split": self.split, "lhs": str(self.lhs), "rhs": str(self.rhs),
                "lhs_approx": float(self.lhs), "rhs_approx": float(self.rhs),
                "holds": self.holds, "kappa": str(self.kappa), "kappa_approx": float(self.kappa)}


def kappa_and_keys(b, sign):
    """The inequality used for (b, sign), its two sides, and kappa = rhs/(alpha - alpha2)."""
    unit = _unit(b, sign)
    al, c, b = unit.alpha, unit.c, unit.b
    h = (c + 1) // 2
    sq = h * (1 + 2 / (al * al - 1) + 2 / al)       # lhs shared by Key3 and Key5
    lin = h * (1 + 2 / (al - 1) + 1 / al)           # lhs shared by Key, Key2, Key4
    if unit.sign == "plus":
        if b < 4:
            raise ValueError("the interval construction needs b >= 4 in the plus case")
        if b >= 8:
            key, split, lhs, rhs = "Key", "plain", lin, c - c / al
        elif b in (5, 7):
            key, split, lhs, rhs = "Key2", "plain", lin, QuadraticSurd(c)
        elif b == 6:
            key, split, lhs, rhs = "Key3", "plain", sq, c - Fraction(10, 9) / al
        else:
            key, split, lhs, rhs = "Key3", "alternating", sq, c - Fraction(10, 9) / al
    else:
        if b < 3:
            raise ValueError("the interval construction needs b >= 3 in the minus case")
        if b >= 7:
            key, split, lhs, rhs = "Key", "plain", lin, c - c / al
        elif b in (4, 6):
            key, split, lhs, rhs = "Key4", "plain", lin, c + Fraction(2, 3) / al
        elif b == 5:
            key, split, lhs, rhs = "Key5", "plain", sq, c - (c - 1) / al
        else:
            key, split, lhs, rhs = "Key5", "alternating", sq, c - (c - 1) / al
    return KeyCase(key, split, lhs, rhs, rhs / unit.gap)


def split_digits(unit, y, n, split):
    """(s_n, s_{-n}) from y_n, n >= 1."""
    hi, lo = -((-y) // 2), y // 2
    if split == "alternating" and n % 2 == 0:
        hi, lo = lo, hi
    sgn = unit.conj_sign ** n
    # s_n + sgn * s_{-n} must equal y_n
    return hi, sgn * lo


@dataclass
class Construction:
    eta: object
    kappa: object
    case: KeyCase
    y: EPWord
    word: BiEPWord
    value: object

    def shift_values(self, K=200):
        unit = self.unit
        return g_shifts(unit, self.word, -K, K + 1)


def build_biword(unit, eta, split="plain"):
    """Two-sided digit word s with g(s) = eta."""
    x = eta * unit.gap / unit.alpha
    y = encode(unit, x).digits          # y_0 y_1 y_2 ...
    pre, per = y.preperiod, y.period
    # one period of the right and left tails, with parity handled
    p = len(per)
    if split == "alternating" or unit.sign == "minus":
        if p % 2:
            per = per + per
            p *= 2
    start = len(pre)
    # adjust so the repeating block starts at an index >= 1
    if start == 0:
        pre, per = per[:1], per[1:] + per[:1]
        start = 1
    right_pre, left_pre = [], []
    for n in range(1, start):
        a, b_ = split_digits(unit, pre[n], n, split)
        right_pre.append(a)
        left_pre.append(b_)
    right_per, left_per = [], []
    for j in range(p):
        n = start + j
        a, b_ = split_digits(unit, per[j], n, split)
        right_per.append(a)
        left_per.append(b_)
    y0 = pre[0]
    # middle: s_{-(start-1)} .. s_{start-1}, tails continue from index +-start
    middle = tuple(reversed(left_pre)) + (y0,) + tuple(right_pre)
    return BiEPWord(tuple(reversed(left_per)), middle, tuple(right_per), start - 1), y


def construct(b, sign, eta, K=200):
    """Build the word for eta and return (word, g(s), max_{0<|k|<=K} |g(sigma^k s)|)."""
    unit = _unit(b, sign)
    case = kappa_and_keys(unit, None)
    eta = QuadraticSurd._coerce(eta)
    word, y = build_biword(unit, eta, case.split)
    vals = g_shifts(unit, word, -K, K + 1)
    centre = vals[K]
    others = max(abs(v) for i, v in enumerate(vals) if i != K)
    return word, centre, others


def eta_grid(b, sign, points=11, denom=256):
    """Grid on [kappa, 1/2]: both ends exact, interior points rounded up to multiples of 1/denom."""
    kappa = kappa_and_keys(b, sign).kappa
    grid = [kappa]
    for j in range(1, points - 1):
        t = kappa + (HALF - kappa) * Fraction(j, points - 1)
        grid.append(QuadraticSurd(ceil(t * denom), 0, denom))
    grid.append(QuadraticSurd(1, 0, 2))
    return grid


@dataclass
class GridCheck:
    eta: object
    centre_ok: bool
    max_other: object
    bounded: bool


def check_grid(b, sign, points=11, K=200):
    out = []
    for eta in eta_grid(b, sign, points):
        word, centre, others = construct(b, sign, eta, K)
        out.append(GridCheck(eta, centre == eta, others, others <= eta))
    return out


def fold_to_one_sided(word, ell, length):
    """x_1 x_2 ... = t(ell) t(ell+1) ... with t(n) = s_{-n} ... s_n, truncated to `length` letters."""
    out = []
    n = ell
    while len(out) < length:
        out.extend(word.window(-n, n + 1))
        n += 1
    return tuple(out[:length])


def folded_xi(unit, word, ell, length):
    """xi = g of 0^inf . x_1 x_2 ... x_length 0^inf (exact, truncated)."""
    x = fold_to_one_sided(word, ell, length)
    w = BiEPWord((0,), (0,) + x, (0,), 0)
    return g_eval(unit, w, 0), x


def folded_max(unit, word, ell, length, eta):
    """Running max of ||xi alpha^k|| for the folded xi, with the truncation error bound.

    Values are taken at shifts k where the word has been read far enough that
    the truncation error stays below alpha^-(length - k)-type bounds.
    """
    xi, x = folded_xi(unit, word, ell, length)
    w = BiEPWord((0,), (0,) + x, (0,), 0)
    usable = length - 40
    vals = g_shifts(unit, w, 1, usable)
    best = max(abs(v) for v in vals)
    bound = max(abs(d) for d in x) * unit.alpha ** -40 / (1 - unit.alpha.inverse()) / unit.gap
    return best, bound, xi
