"""Limit points of ||xi a^n|| for an integer base a >= 2.

The spectrum is the set of values (1/a) E^(k)(1/a), k = 0, 1, 2, ..., together
with its limit point (1/a) E(1/a).
"""
from dataclasses import dataclass
from fractions import Fraction

from .algebra import CertifiedReal, default_precision
from .surd import dist_to_int
from .words import EPWord, A_word, alt_compare


def eval_signed_base(s, a, n=0):
    """(s_{n+1} s_{n+2} ...)_a for an EPWord s = s_1 s_2 ... (s[0] is s_1)."""
    s = s.shift(n)
    a = Fraction(a)
    val = Fraction(0)
    w = Fraction(1)
    for d in s.preperiod:
        w /= a
        val += d * w
    per = Fraction(0)
    pw = Fraction(1)
    for d in s.period:
        pw /= a
        per += d * pw
    return val + w * per / (1 - pw)


def E_k(X, k):
    """E^(k)(X), exact for rational X."""
    X = Fraction(X)
    prod = Fraction(1)
    for m in range(k):
        prod *= 1 - X ** (2 ** m)
    t = X ** (2 ** k)
    return (1 + t - (1 - X) * prod) / (2 * X * (1 + t))


def E_limit(X, bits=None):
    """Rational enclosure (lo, hi) of E(X) = (1 - (1-X) prod_{n>=0} (1 - X^(2^n)))/(2X)."""
    X = Fraction(X)
    if not 0 < X < 1:
        raise ValueError("need 0 < X < 1")
    bits = bits or default_precision()
    prod = Fraction(1)
    K = 0
    tail = X / (1 - X)
    while tail > Fraction(1, 2 ** bits):
        prod *= 1 - X ** (2 ** K)
        K += 1
        tail = X ** (2 ** K) / (1 - X)
        # keep denominators small by rounding the partial product outward later
        if K > 64:
            break
    # the remaining factors lie in [1 - tail, 1]
    p_lo, p_hi = prod * (1 - tail), prod
    lo = (1 - (1 - X) * p_hi) / (2 * X)
    hi = (1 - (1 - X) * p_lo) / (2 * X)
    return lo, hi


def spectrum_point(a, k):
    """(1/a) E^(k)(1/a)."""
    X = Fraction(1, a)
    return X * E_k(X, k)


def spectrum_limit(a, bits=None):
    """Certified value of (1/a) E(1/a)."""
    X = Fraction(1, a)
    lo, hi = E_limit(X, bits)
    lo, hi = X * lo, X * hi
    return CertifiedReal((lo + hi) / 2, (hi - lo) / 2, bits or default_precision())


def f_eval(y, X):
    """f(y; X) = sum_{i>=0} (-1)^i X^{y_1 + ... + y_i} for an EP word y over positive ints."""
    if isinstance(y, str):
        y = EPWord((), tuple(int(c) for c in y))
    X = Fraction(X)

    def partial(word):
        tot, sgn, e = Fraction(0), 1, 0
        for d in word:
            tot += sgn * X ** e
            sgn, e = -sgn, e + d
        return tot, sgn, e

    head, sgn, e = partial(y.preperiod)
    body, psgn, pe = partial(y.period)
    return head + sgn * X ** e * body / (1 - psgn * X ** pe)


def A_periodic(k):
    """A_k^infinity as an EPWord over {1, 2}."""
    return EPWord((), tuple(int(c) for c in A_word(k)))


def limsup_rotation(y):
    """The largest rotation of the period of y in the alternating order."""
    per = y.period
    best = None
    for r in range(len(per)):
        cand = EPWord((), per[r:] + per[:r])
        if best is None or alt_compare(cand, best) > 0:
            best = cand
    return best


def phi_digits(y, length):
    """First `length` digits of Phi(y) = 1 0^{y1-1} (-1) 0^{y2-1} 1 ..."""
    out = []
    sgn, i = 1, 0
    while len(out) < length:
        out.append(sgn)
        out.extend([0] * (y[i] - 1))
        sgn, i = -sgn, i + 1
    return out[:length]


def phi_periodic(y):
    """Phi(y) for a purely periodic EP word y, returned as an EPWord of digits."""
    per = y.period
    reps = 1 if len(per) % 2 == 0 else 2
    digits = phi_digits(EPWord((), per * reps), sum(per) * reps)
    return EPWord((), tuple(digits))


def rational_orbit_limsup(xi, a):
    """Exact limsup of ||xi a^n|| for rational xi: the max over the eventual cycle."""
    x = Fraction(xi) % 1
    seen = {}
    orbit = []
    while x not in seen:
        seen[x] = len(orbit)
        orbit.append(x)
        x = (x * a) % 1
    cycle = orbit[seen[x]:]
    return max(dist_to_int(v) for v in cycle), len(orbit) - len(cycle), len(cycle)


@dataclass
class SpectrumRow:
    k: int
    value: Fraction
    witness: str
    f_identity: bool

    def to_json(self):
        return {"k": self.k, "value": str(self.value), "approx": float(self.value),
                "witness": "(%s)^inf" % self.witness, "f_identity": self.f_identity}


def enumerate_spectrum(a, k_max):
    """Rows for k = 0..k_max; each value is checked against f(A_k^inf; 1/a)."""
    X = Fraction(1, a)
    rows = []
    for k in range(k_max + 1):
        val = spectrum_point(a, k)
        ok = f_eval(A_periodic(k), X) == E_k(X, k)
        rows.append(SpectrumRow(k, val, A_word(k), ok))
    return rows


def tau_fixed_point_prefix(n):
    """Prefix of length n of the fixed point 2112... of tau."""
    k = 0
    while len(A_word(k)) < n:
        k += 1
    return A_word(k)[:n]
