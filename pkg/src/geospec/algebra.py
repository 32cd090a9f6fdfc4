"""Units, continued fractions and the weights attached to a Pisot number."""
from dataclasses import dataclass
from fractions import Fraction
from math import floor, ceil
import os

from flint import arb, acb, fmpz_poly, ctx

from .surd import QuadraticSurd, squarefree_split

DEFAULT_BITS = 128


def default_precision():
    """Working precision in bits, taken from GEOSPEC_PRECISION when set."""
    try:
        return int(os.environ.get("GEOSPEC_PRECISION", DEFAULT_BITS))
    except ValueError:
        return DEFAULT_BITS


# ---------------------------------------------------------------- certified reals

@dataclass(frozen=True)
class CertifiedReal:
    """A real number known to lie in [mid - rad, mid + rad]."""
    mid: Fraction
    rad: Fraction
    bits: int

    @classmethod
    def from_arb(cls, x, bits=None):
        m, e = x.mid().man_exp()
        rm, re_ = x.rad().man_exp()
        mid = Fraction(int(m)) * Fraction(2) ** int(e)
        rad = Fraction(int(rm)) * Fraction(2) ** int(re_)
        return cls(mid, rad, bits or ctx.prec)

    @classmethod
    def exact(cls, x):
        return cls(Fraction(x), Fraction(0), 0)

    @property
    def lo(self):
        return self.mid - self.rad

    @property
    def hi(self):
        return self.mid + self.rad

    def contains(self, x):
        return self.lo <= x <= self.hi

    def __float__(self):
        return float(self.mid)

    def to_json(self):
        return {"mid": str(self.mid), "rad": str(self.rad), "bits": self.bits,
                "approx": float(self.mid)}


def to_arb(x):
    """Enclose an exact number (int, Fraction, QuadraticSurd) in an arb."""
    if isinstance(x, arb):
        return x
    if isinstance(x, QuadraticSurd):
        return (arb(x.p) + arb(x.q) * arb(x.d).sqrt()) / x.r
    x = Fraction(x)
    return arb(x.numerator) / x.denominator


# ---------------------------------------------------------------- quadratic units

class PisotQuadraticUnit:
    """Root alpha > 1 of x^2 - b x + 1 (sign 'plus') or x^2 - b x - 1 ('minus')."""

    def __init__(self, b, sign):
        if sign not in ("plus", "minus"):
            raise ValueError("sign must be 'plus' or 'minus'")
        if sign == "plus" and b < 3:
            raise ValueError("x^2 - bx + 1 needs b >= 3")
        if sign == "minus" and b < 1:
            raise ValueError("x^2 - bx - 1 needs b >= 1")
        self.b = b
        self.sign = sign
        disc = b * b - 4 if sign == "plus" else b * b + 4
        f, d = squarefree_split(disc)
        self.disc = disc
        self.alpha = QuadraticSurd(b, f, 2, d)
        self.alpha2 = self.alpha.conjugate()
        self.c = floor((self.alpha + 1) / 2)

    @property
    def a0(self):
        """Constant term of the minimal polynomial."""
        return 1 if self.sign == "plus" else -1

    @property
    def conj_sign(self):
        """Sign of the conjugate root."""
        return 1 if self.sign == "plus" else -1

    @property
    def gap(self):
        """alpha - alpha2 = sqrt(disc)."""
        return self.alpha - self.alpha2

    def in_z_alpha(self, x):
        """Whether x lies in Z[alpha]."""
        x = QuadraticSurd._coerce(x)
        if x.q == 0:
            return x.r == 1
        n = x.b / self.alpha.b
        if n.denominator != 1:
            return False
        m = x - self.alpha * int(n)
        return m.q == 0 and m.r == 1

    def in_x0(self, x):
        """Whether x lies in (1/(alpha - alpha2)) Z[alpha]."""
        return self.in_z_alpha(x * self.gap)

    def __repr__(self):
        return "PisotQuadraticUnit(b=%d, sign=%r)" % (self.b, self.sign)


# ---------------------------------------------------------------- continued fractions

def negative_cf(x, n):
    """Digits of x = a0 + 1/(a1 - 1/(a2 - ...)); stops early when x is rational."""
    a0 = floor(x)
    digits = [a0]
    y = x - a0
    while len(digits) < n and y != 0:
        y = 1 / y
        a = ceil(y)
        digits.append(a)
        y = a - y
    return digits


def negative_cf_convergents(digits):
    """Convergents P_k/Q_k for [a0; a1, a2, ...] in the mixed-sign convention."""
    a0 = digits[0]
    out = [Fraction(a0)]
    # the tail 1/(a1 - 1/(a2 - ...)) uses P_k = a_k P_{k-1} - P_{k-2}
    p_prev, p = -1, 0
    q_prev, q = 0, 1
    for a in digits[1:]:
        p_prev, p = p, a * p - p_prev
        q_prev, q = q, a * q - q_prev
        out.append(a0 + Fraction(p, q))
    return out


def regular_cf(x, n):
    """Digits of the ordinary continued fraction of x."""
    digits = []
    while len(digits) < n:
        a = floor(x)
        digits.append(a)
        x = x - a
        if x == 0:
            break
        x = 1 / x
    return digits


# ---------------------------------------------------------------- general Pisot numbers

class GeneralPisot:
    """A Pisot number given by a monic integer polynomial, coefficients low to high."""

    def __init__(self, coeffs, bits=None):
        coeffs = [int(c) for c in coeffs]
        if coeffs[-1] != 1:
            raise ValueError("polynomial must be monic")
        self.coeffs = coeffs
        self.degree = len(coeffs) - 1
        self.bits = bits or default_precision()
        self._roots = None

    def roots(self):
        """Certified roots, the dominant real root first."""
        if self._roots is None or self._roots[0] != ctx.prec:
            rs = [r for r, mult in fmpz_poly(self.coeffs).complex_roots() for _ in range(mult)]
            rs.sort(key=lambda r: -float(abs(r).mid()))
            self._roots = (ctx.prec, rs)
        return self._roots[1]

    def alpha(self):
        return self.roots()[0].real

    def check_pisot(self):
        rs = self.roots()
        if not rs[0].imag.contains(0) or not rs[0].real > 1:
            return False
        return all(abs(r) < 1 for r in rs[1:])

    def _coef(self, j):
        rs = self.roots()
        out = acb(1)
        for k in range(1, len(rs)):
            if k != j:
                out *= rs[j] / (rs[j] - rs[k])
        return out

    def tau(self, q):
        """Weight of s_{n+q} in the expansion of eps(xi alpha^n)."""
        rs = self.roots()
        al = rs[0]
        tot = acb(0)
        for j in range(1, len(rs)):
            base = rs[j] if q <= 0 else al
            tot += self._coef(j) * base ** (-q) / (al - rs[j])
        return tot.real

    def r_weight(self, q):
        """Difference of the two tau formulas at the same index q."""
        rs = self.roots()
        al = rs[0]
        tot = acb(0)
        for j in range(1, len(rs)):
            tot += self._coef(j) * (al ** (-q) - rs[j] ** (-q)) / (al - rs[j])
        return tot.real

    def digit_bound(self):
        """Bound on |s_m|: (1 + sum of |coefficients|)/2."""
        return Fraction(sum(abs(c) for c in self.coeffs), 2)

    def __repr__(self):
        return "GeneralPisot(%r)" % (self.coeffs,)


def complete_homogeneous(m, xs):
    """h_m(x_1..x_k) for any integer m, as a certified complex ball."""
    xs = [x if isinstance(x, acb) else acb(x) for x in xs]
    if m >= 0:
        # h_m(x_1..x_j) = h_m(x_1..x_{j-1}) + x_j h_{m-1}(x_1..x_j)
        h = [acb(1)] + [acb(0)] * m
        for x in xs:
            for i in range(1, m + 1):
                h[i] = h[i] + x * h[i - 1]
        return h[m]
    tot = acb(0)
    for j, xj in enumerate(xs):
        w = acb(1)
        for k, xk in enumerate(xs):
            if k != j:
                w *= xj / (xj - xk)
        tot += w * xj ** m
    return tot


def parse_alpha(spec):
    """'int:A', 'quad:B:plus|minus' or 'poly:c0,c1,...,1'."""
    kind, _, rest = spec.partition(":")
    if kind == "int":
        a = int(rest)
        if a < 2:
            raise ValueError("integer base must be >= 2")
        return a
    if kind == "quad":
        b, _, sign = rest.partition(":")
        return PisotQuadraticUnit(int(b), sign)
    if kind == "poly":
        return GeneralPisot([int(c) for c in rest.split(",")])
    raise ValueError("unknown alpha spec %r" % spec)
