"""Numerical and exact study of ||xi alpha^n||.

Exact mode covers rational xi with an integer base, xi in Q(alpha) with a
quadratic unit, and the exact limsup of rational xi for any Pisot alpha.
Everything else runs on certified balls (python-flint arb).
"""
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, log2
import re

from flint import arb, ctx

from .algebra import (CertifiedReal, GeneralPisot, PisotQuadraticUnit, default_precision,
                      to_arb)
from .spectrum_quadratic import trace_limsup
from .surd import QuadraticSurd, eps, nearest_integer, parse_exact

GUARD_BITS = 64


@dataclass(frozen=True)
class DecimalInput:
    """A decimal literal, enclosed in a ball at the working precision."""
    text: str

    def to_arb(self):
        return arb(self.text)


def parse_real(text):
    """'p/q' or an integer -> Fraction; '(p+q*sqrt(D))/r' -> QuadraticSurd; decimals -> DecimalInput."""
    text = text.strip()
    if "sqrt" in text:
        return parse_exact(text)
    if re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        return Fraction(text)
    if re.fullmatch(r"[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?", text):
        return DecimalInput(text)
    raise ValueError("cannot parse real %r" % text)


def _alpha_bits(alpha):
    if isinstance(alpha, int):
        return log2(alpha)
    if isinstance(alpha, PisotQuadraticUnit):
        return log2(float(alpha.alpha))
    return log2(float(alpha.alpha().mid())) if isinstance(alpha, GeneralPisot) else 1.0


def _coeffs(alpha):
    """Monic polynomial coefficients, low to high."""
    if isinstance(alpha, int):
        return [-alpha, 1]
    if isinstance(alpha, PisotQuadraticUnit):
        return [alpha.a0, -alpha.b, 1]
    return alpha.coeffs


def is_exact_case(xi, alpha):
    if isinstance(xi, DecimalInput):
        return False
    if isinstance(alpha, int):
        return isinstance(xi, (int, Fraction)) or (isinstance(xi, QuadraticSurd) and xi.q == 0)
    if isinstance(alpha, PisotQuadraticUnit):
        if isinstance(xi, QuadraticSurd) and xi.q:
            return xi.d == alpha.alpha.d
        return True
    return False


@dataclass
class NormSequence:
    values: list          # exact numbers or CertifiedReal
    eps: list             # signed versions eps(xi alpha^n)
    exact: bool
    bits: int = 0

    def lower(self, n):
        v = self.values[n]
        return v.lo if isinstance(v, CertifiedReal) else v

    def upper(self, n):
        v = self.values[n]
        return v.hi if isinstance(v, CertifiedReal) else v


def norm_sequence(xi, alpha, N, precision=None):
    """||xi alpha^n|| for 0 <= n < N."""
    if is_exact_case(xi, alpha):
        return _exact_sequence(xi, alpha, N)
    bits = precision or max(default_precision(), ceil(N * _alpha_bits(alpha)) + GUARD_BITS)
    with ctx.workprec(bits + 16):
        if isinstance(alpha, int):
            al = arb(alpha)
        elif isinstance(alpha, PisotQuadraticUnit):
            al = to_arb(alpha.alpha)
        else:
            al = alpha.alpha()
        x = xi.to_arb() if isinstance(xi, DecimalInput) else to_arb(xi)
        vals, es = [], []
        for _ in range(N):
            m = (x + arb(0.5)).mid().floor()
            e = x - m
            es.append(CertifiedReal.from_arb(e, bits))
            vals.append(CertifiedReal.from_arb(abs(e), bits))
            x = x * al
    return NormSequence(vals, es, False, bits)


def _exact_sequence(xi, alpha, N):
    es = []
    if isinstance(alpha, int):
        e = eps(Fraction(xi) if not isinstance(xi, QuadraticSurd) else xi.to_fraction())
        for _ in range(N):
            es.append(e)
            e = eps(alpha * e)
    else:
        xi = QuadraticSurd._coerce(xi)
        e0, e1 = eps(xi), eps(xi * alpha.alpha)
        for _ in range(N):
            es.append(e0)
            # xi a^{n+1} = b xi a^n - a0 xi a^{n-1}, so the fractional parts obey the same rule mod 1
            e0, e1 = e1, eps(alpha.b * e1 - alpha.a0 * e0)
    return NormSequence([abs(e) for e in es], es, True)


def power_sums(coeffs, n):
    """Power sums P_0..P_{n-1} of the roots of a monic integer polynomial."""
    d = len(coeffs) - 1
    c = coeffs
    P = [d]
    for k in range(1, n):
        if k <= d:
            s = k * c[d - k] + sum(c[d - i] * P[k - i] for i in range(1, k))
        else:
            s = sum(c[d - i] * P[k - i] for i in range(1, d + 1))
        P.append(-s)
    return P


def exact_limsup(xi, alpha):
    """Exact limsup ||xi alpha^n||, or None if no exact route applies.

    Rational xi = p/q: xi alpha^n = p P_n / q - xi sum_{j>=2} alpha_j^n, with P_n
    the integer power sums, so the limsup is the max of ||p P_n / q|| over the
    cycle of P_n mod q.  xi in Q(alpha), alpha quadratic: see trace_limsup.
    """
    if isinstance(xi, DecimalInput):
        return None
    if isinstance(xi, QuadraticSurd) and xi.q:
        if isinstance(alpha, PisotQuadraticUnit) and xi.d == alpha.alpha.d:
            return trace_limsup(alpha, xi)
        return None
    xi = Fraction(xi) if not isinstance(xi, QuadraticSurd) else xi.to_fraction()
    c = _coeffs(alpha)
    d = len(c) - 1
    q = xi.denominator
    p = xi.numerator
    state = tuple(x % q for x in power_sums(c, d))
    seen, order = {}, []
    while state not in seen:
        seen[state] = len(order)
        order.append(state[0])
        nxt = -sum(c[i] * state[i] for i in range(d)) % q
        state = state[1:] + (nxt,)
    # only the cycle counts, not the preperiod
    return max(abs(eps(Fraction(p * t, q))) for t in order[seen[state]:])


@dataclass
class LimsupEstimate:
    running_max: object
    argmax: int
    last_improvement: int
    exact: object = None
    certified: bool = False
    window: int = 0

    def to_json(self):
        rm = self.running_max
        return {"running_max": rm.to_json() if isinstance(rm, CertifiedReal) else str(rm),
                "running_max_approx": float(rm.mid if isinstance(rm, CertifiedReal) else rm),
                "argmax": self.argmax, "last_improvement": self.last_improvement,
                "exact_limsup": None if self.exact is None else str(self.exact),
                "certified": self.certified, "window": self.window}


def limsup_estimate(xi, alpha, N, precision=None, tail_from=0):
    """Running max of ||xi alpha^n|| over tail_from <= n < N, plus the exact limsup when known."""
    seq = norm_sequence(xi, alpha, N, precision)
    best, arg, last = None, -1, -1
    for n in range(tail_from, N):
        v = seq.lower(n)
        if best is None or v > best:
            best, arg, last = v, n, n
    rm = seq.values[arg]
    ex = exact_limsup(xi, alpha)
    return LimsupEstimate(rm, arg, last, ex, seq.exact, N)


def digits_from_eps(coeffs, es):
    """s_m = -(eps_{m+1} + sum_{i<d} c_i eps_{m+1-d+i}) for the indices the window allows."""
    d = len(coeffs) - 1
    out = []
    for m in range(d - 1, len(es) - 1):
        tot = es[m + 1]
        for i in range(d):
            tot = tot + coeffs[i] * es[m + 1 - d + i]
        out.append(-tot)
    return out


def int_digits(xi, alpha, N, precision=None):
    """Integer digit sequence s_{d-1}, s_d, ... from a norm sequence."""
    seq = norm_sequence(xi, alpha, N, precision)
    c = _coeffs(alpha)
    raw = digits_from_eps(c, [e if not isinstance(e, CertifiedReal) else e.mid for e in seq.eps])
    return [nearest_integer(x) for x in raw], seq


def limsup_word_extract(digits, values, w=3, top_m=5, rel_tol=Fraction(1, 1000)):
    """Most frequent digit blocks of radius w around near-maximal positions.

    Heuristic: positions whose value is within rel_tol of the running max are
    collected and their surrounding blocks counted.
    """
    vals = [float(v.mid) if isinstance(v, CertifiedReal) else float(v) for v in values]
    n = min(len(digits), len(vals))
    top = max(vals[:n])
    cut = top * (1 - float(rel_tol))
    blocks = Counter()
    for i in range(w, n - w):
        if vals[i] >= cut:
            blocks[tuple(digits[i - w:i + w + 1])] += 1
    return blocks.most_common(top_m)


def eps_via_tau(alpha, xi, n, Q=200, bits=None):
    """eps(xi alpha^n) rebuilt as sum_q s_{n+q} tau_q, as a certified ball.

    alpha is a GeneralPisot, xi a Fraction.  Digits come from u(xi alpha^k),
    which vanish far to the left; the right tail is bounded by
    B |K| alpha^-Q/(alpha - 1) with tau_q = K alpha^-q for q > 0.
    """
    bits = bits or (default_precision() + ceil((n + Q) * _alpha_bits(alpha)))
    # xi alpha^j can sit within |alpha_2|^j of a half-integer, so retry with more bits
    for _ in range(4):
        try:
            return _eps_via_tau(alpha, xi, n, Q, bits)
        except ArithmeticError:
            bits *= 2
    raise ArithmeticError("rounding not certified at %d bits" % bits)


def _eps_via_tau(alpha, xi, n, Q, bits):
    with ctx.workprec(bits):
        al = alpha.alpha()
        c = alpha.coeffs
        d = alpha.degree
        x = to_arb(xi)
        # lowest index k with |xi alpha^j| < 1/2 for all j <= k
        k = 0
        while not abs(x * al ** k) < 0.5:
            k -= 1
        lo = k - d
        us = {}
        for j in range(lo, n + Q + 2):
            f = (x * al ** j + arb(0.5)).floor().unique_fmpz()
            if f is None:
                raise ArithmeticError("rounding not certified at index %d" % j)
            us[j] = int(f)
        def s(m):
            tot = us.get(m + 1, 0)
            for i in range(d):
                tot += c[i] * us.get(m + 1 - d + i, 0)
            return tot
        total = arb(0)
        for q in range(lo - n, Q + 1):
            sm = s(n + q)
            if sm:
                total += sm * alpha.tau(q)
        K = alpha.tau(1) * al
        B = alpha.digit_bound()
        tail = abs(K) * to_arb(B) * al ** (-Q) / (al - 1)
        total = total + arb(0, tail.upper())
        direct = x * al ** n
        direct = direct - (direct + arb(0.5)).floor()
        return CertifiedReal.from_arb(total, bits), CertifiedReal.from_arb(direct, bits)
