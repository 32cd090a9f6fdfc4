"""Exact arithmetic in real quadratic fields.

A QuadraticSurd stores (p + q*sqrt(d)) / r with integers p, q, r > 0 and a
squarefree d > 1.  Rationals are surds with q == 0.
"""
from fractions import Fraction
from math import gcd, isqrt
import re


def squarefree_split(n):
    """Return (f, d) with n == f*f*d and d squarefree."""
    if n <= 0:
        raise ValueError("need a positive integer")
    f, d, k = 1, n, 2
    while k * k <= d:
        while d % (k * k) == 0:
            d //= k * k
            f *= k
        k += 1
    return f, d


class QuadraticSurd:
    __slots__ = ("p", "q", "r", "d")

    def __init__(self, p, q=0, r=1, d=0):
        p, q, r = int(p), int(q), int(r)
        if r == 0:
            raise ZeroDivisionError("zero denominator")
        if r < 0:
            p, q, r = -p, -q, -r
        if q == 0:
            d = 0
        elif d <= 1:
            raise ValueError("irrational part needs a squarefree d > 1")
        g = gcd(gcd(p, q), r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        self.p, self.q, self.r, self.d = p, q, r, d

    # construction helpers
    @classmethod
    def from_rational(cls, x):
        x = Fraction(x)
        return cls(x.numerator, 0, x.denominator)

    @classmethod
    def sqrt(cls, n):
        """Exact square root of a positive rational n."""
        n = Fraction(n)
        num = n.numerator * n.denominator
        f, d = squarefree_split(num)
        if d == 1:
            return cls(f, 0, n.denominator)
        return cls(0, f, n.denominator, d)

    @property
    def a(self):
        return Fraction(self.p, self.r)

    @property
    def b(self):
        return Fraction(self.q, self.r)

    def is_rational(self):
        return self.q == 0

    def to_fraction(self):
        if self.q:
            raise ValueError("value is irrational")
        return Fraction(self.p, self.r)

    # coercion
    @staticmethod
    def _coerce(x):
        if isinstance(x, QuadraticSurd):
            return x
        if isinstance(x, (int, Fraction)):
            x = Fraction(x)
            return QuadraticSurd(x.numerator, 0, x.denominator)
        return NotImplemented

    def _field(self, other):
        if self.q and other.q and self.d != other.d:
            raise ValueError("surds from different fields: sqrt(%d), sqrt(%d)" % (self.d, other.d))
        return self.d or other.d

    # arithmetic
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self._field(o)
        return QuadraticSurd(self.p * o.r + o.p * self.r, self.q * o.r + o.q * self.r, self.r * o.r, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.p, -self.q, self.r, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self._field(o)
        p = self.p * o.p + self.q * o.q * d
        q = self.p * o.q + self.q * o.p
        return QuadraticSurd(p, q, self.r * o.r, d)

    __rmul__ = __mul__

    def conjugate(self):
        return QuadraticSurd(self.p, -self.q, self.r, self.d)

    def norm(self):
        return Fraction(self.p * self.p - self.q * self.q * self.d, self.r * self.r)

    def trace(self):
        return Fraction(2 * self.p, self.r)

    def inverse(self):
        n = self.p * self.p - self.q * self.q * self.d
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        # 1/x = r * conj / (p^2 - q^2 d)
        return QuadraticSurd(self.r * self.p, -self.r * self.q, n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadraticSurd(1, 0, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # order
    def sign(self):
        p, q = self.p, self.q
        if q == 0:
            return (p > 0) - (p < 0)
        sq = (q > 0) - (q < 0)
        if p == 0 or (p > 0) == (q > 0):
            return sq
        # opposite signs: compare p^2 with q^2 d
        lhs, rhs = p * p, q * q * self.d
        return ((p > 0) - (p < 0)) if lhs > rhs else sq

    def _cmp(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return (self - o).sign()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.p == o.p and self.q == o.q and self.r == o.r

    def __hash__(self):
        if self.q == 0:
            return hash(Fraction(self.p, self.r))
        return hash((self.p, self.q, self.r, self.d))

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __bool__(self):
        return self.p != 0 or self.q != 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # rounding
    def __floor__(self):
        if self.q == 0:
            return self.p // self.r
        m = isqrt(self.q * self.q * self.d)
        f = self.p + (m if self.q > 0 else -m - 1)
        return f // self.r

    def __ceil__(self):
        return -(-self).__floor__()

    def __float__(self):
        if self.q == 0:
            return self.p / self.r
        # p and q sqrt(d) can cancel almost completely, so raise the absolute
        # accuracy until the value carries about 60 significant bits
        bits = 64 + self.r.bit_length()
        while True:
            a = self.approx(bits)
            if abs(a) >= Fraction(1, 1 << max(bits - 60, 0)):
                return float(a)
            bits *= 2

    def approx(self, bits=64):
        """Fraction within 2**-bits of the value."""
        scale = 1 << (bits + 2)
        t = QuadraticSurd(self.p * scale, self.q * scale, self.r, self.d)
        return Fraction(t.__floor__(), scale)

    def __repr__(self):
        return "QuadraticSurd(%s)" % format_surd(self)

    def __str__(self):
        return format_surd(self)


def nearest_integer(x):
    """u(x) = floor(x + 1/2)."""
    if isinstance(x, QuadraticSurd):
        return (x + Fraction(1, 2)).__floor__()
    x = Fraction(x)
    return (2 * x.numerator + x.denominator) // (2 * x.denominator)


def eps(x):
    """Signed distance x - u(x), lying in [-1/2, 1/2)."""
    return x - nearest_integer(x)


def dist_to_int(x):
    """||x||, the distance to the nearest integer."""
    return abs(eps(x))


def format_surd(x):
    if isinstance(x, Fraction):
        return str(x)
    if x.q == 0:
        return str(Fraction(x.p, x.r))
    coef = {1: "", -1: "-"}.get(x.q, "%d*" % x.q)
    rad = "%ssqrt(%d)" % (coef, x.d)
    if x.p == 0:
        core = rad
    else:
        core = "%d%s%s" % (x.p, "" if rad.startswith("-") else "+", rad)
    if x.r == 1:
        return "(%s)" % core
    return "(%s)/%d" % (core, x.r)


_SURD = re.compile(
    r"^\(?\s*([+-]?\d+)?\s*(?:([+-])\s*(\d*)\s*\*?\s*sqrt\((\d+)\))?\s*\)?\s*(?:/\s*(\d+))?$"
)


def parse_exact(text):
    """Parse 'p/q', an integer, or '(p+q*sqrt(D))/r' into a Fraction or surd."""
    text = text.strip().replace(" ", "")
    if "sqrt" not in text:
        return Fraction(text)
    m = _SURD.match(text)
    if not m:
        # forms such as 'sqrt(3)' or '(-sqrt(3))/2'
        m2 = re.match(r"^\(?([+-]?)(\d*)\*?sqrt\((\d+)\)\)?(?:/(\d+))?$", text)
        if not m2:
            raise ValueError("cannot parse %r" % text)
        sgn, q, D, r = m2.groups()
        q = int(q or 1) * (-1 if sgn == "-" else 1)
        return QuadraticSurd.sqrt(D) * q / int(r or 1)
    p, sgn, q, D, r = m.groups()
    root = QuadraticSurd.sqrt(int(D))
    q = int(q or 1) * (-1 if sgn == "-" else 1)
    val = root * q + int(p or 0)
    return val / int(r or 1)
