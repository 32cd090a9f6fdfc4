"""Limit points of ||xi alpha^n|| for a quadratic Pisot unit alpha.

Digit words s are indexed by Z and evaluated with

    g(s) = (1/(alpha - alpha2)) (... + s_{-1} alpha2 + s_0 + s_1/alpha + ...)

so that eps(xi alpha^n) = g(sigma^n s) when s is the digit word of xi.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .algebra import PisotQuadraticUnit, negative_cf, negative_cf_convergents
from .surd import QuadraticSurd, nearest_integer, dist_to_int
from .words import BiEPWord, christoffel, periodic, _lcm


def _unit(b, sign=None):
    return b if isinstance(b, PisotQuadraticUnit) else PisotQuadraticUnit(b, sign)


# ---------------------------------------------------------------- evaluation

def ep_power_sum(w, beta, offset=0):
    """sum_i w_i beta^(i + offset) for an EPWord w."""
    one = QuadraticSurd(1)
    head = QuadraticSurd(0)
    pw = beta ** offset if offset else one
    for d in w.preperiod:
        if d:
            head = head + pw * d
        pw = pw * beta
    body = QuadraticSurd(0)
    for d in reversed(w.period):
        body = body * beta + d
    return head + pw * body / (one - beta ** len(w.period))


def g_eval(unit, s, k=0):
    """g(sigma^k s) for a BiEPWord s of integer digits."""
    left, right = _sides(unit, s, k)
    return (left + right) / unit.gap


def _sides(unit, s, k):
    a_inv = unit.alpha.inverse()
    left = ep_power_sum(s.left_part(k), unit.alpha2)
    right = ep_power_sum(s.right_part(k + 1), a_inv, 1)
    return left, right


def g_shifts(unit, s, lo, hi):
    """[g(sigma^k s) for lo <= k < hi], computed by exact shift recurrences."""
    left, right = _sides(unit, s, lo)
    al, al2 = unit.alpha, unit.alpha2
    out = []
    for k in range(lo, hi):
        out.append((left + right) / unit.gap)
        d = s[k + 1]
        left = al2 * left + d
        right = al * right - d
    return out


def periodic_limsup(unit, period):
    """max over shifts of |g| on period^Z, with the shifts attaining it."""
    x = periodic(tuple(period))
    vals = [abs(v) for v in g_shifts(unit, x, 0, len(period))]
    m = max(vals)
    return m, [k for k, v in enumerate(vals) if v == m]


def word_limsup(unit, s):
    """limsup_{k -> +inf} |g(sigma^k s)| for an EP bi-word: only the right tail matters."""
    return periodic_limsup(unit, s.right_period)[0]


# ---------------------------------------------------------------- digits of xi

def s_sequence(unit, xi, lo, hi):
    """s_n = u(xi a^{n+1}) - b u(xi a^n) + a0 u(xi a^{n-1}) for lo <= n < hi."""
    al = unit.alpha
    xi = QuadraticSurd._coerce(xi)
    us = {}
    p = xi * al ** (lo - 1)
    for m in range(lo - 1, hi + 1):
        us[m] = nearest_integer(p)
        p = p * al
    return [us[n + 1] - unit.b * us[n] + unit.a0 * us[n - 1] for n in range(lo, hi)]


def digit_word(unit, xi, horizon=400):
    """The EP digit word of xi in Q(alpha), found from its eventually periodic tail.

    Returns a BiEPWord with zero left tail, or None if no period shows up
    within `horizon` digits.
    """
    xi = QuadraticSurd._coerce(xi)
    lo = 0
    while abs(xi * unit.alpha ** (lo)) >= Fraction(1, 2) or abs(xi * unit.alpha ** (lo - 1)) >= Fraction(1, 2):
        lo -= 1
    lo -= 2
    s = s_sequence(unit, xi, lo, horizon)
    # find the shortest (preperiod, period) with the second half repeating
    n = len(s)
    for per in range(1, n // 4):
        start = n // 2
        if all(s[i] == s[i + per] for i in range(start, n - per)):
            pre_end = start
            while pre_end > 0 and s[pre_end - 1] == s[pre_end - 1 + per]:
                pre_end -= 1
            mid = tuple(s[:pre_end])
            if not mid:
                mid = tuple(s[pre_end:pre_end + per])
                pre_end += per
            return BiEPWord((0,), mid, tuple(s[pre_end:pre_end + per]), -lo)
    return None


def trace_limsup(unit, xi):
    """Exact limsup of ||xi alpha^n|| for xi in Q(alpha).

    With r xi in Z[alpha], xi alpha^n = T_n / r - xi' alpha2^n where T_n is the
    integer trace of r xi alpha^n.  The second term dies out, so the limsup is
    the maximum of ||T_n / r|| over the cycle of T_n mod r.
    """
    xi = QuadraticSurd._coerce(xi)
    f = unit.alpha.q  # alpha = (b + f sqrt(D))/2
    r = xi.r * (f if f else 1)
    assert unit.in_z_alpha(xi * r)
    y = xi * r
    t0 = y.trace()
    t1 = (y * unit.alpha).trace()
    t0, t1 = int(t0) % r, int(t1) % r
    seen, order = {}, []
    while (t0, t1) not in seen:
        seen[(t0, t1)] = len(order)
        order.append(t0)
        t0, t1 = t1, (unit.b * t1 - unit.a0 * t0) % r
    # a0 = +-1 makes the recurrence invertible mod r, so the cycle starts at 0
    return max(dist_to_int(Fraction(t, r)) for t in order[seen[(t0, t1)]:])


# ---------------------------------------------------------------- the spectrum below the first gap

def pq_spectrum(b, sign, n_max):
    """[(p_n, q_n)] for n = 0..n_max."""
    step = b if sign == "plus" else b * b + 2
    p2, q2 = (1, 1 + b) if sign == "plus" else (b, b * b + 3)
    pe, qe = [0, p2], [1, q2]
    while 2 * (len(pe) - 1) < n_max + 2:
        pe.append(step * pe[-1] - pe[-2])
        qe.append(step * qe[-1] - qe[-2])
    out = []
    for n in range(n_max + 1):
        if n % 2 == 0:
            out.append((pe[n // 2], qe[n // 2]))
        else:
            m = (n + 1) // 2
            out.append((pe[m - 1] + pe[m], qe[m - 1] + qe[m]))
    return out


def spectrum_values(b, sign, n_max):
    return [Fraction(p, q) for p, q in pq_spectrum(b, sign, n_max)]


def spectrum_limit(b, sign):
    """1/(1+alpha) for 'plus', b/(1+alpha^2) for 'minus'."""
    return threshold(_unit(b, sign))


def z_value(unit, n):
    """z_n from its closed form (plus case, n >= 1); a rational number."""
    al = unit.alpha
    t = (al ** (n + 2) - 1) / (al * (al ** n - 1))
    return 1 / (1 + t)


def check_negative_cf(b, sign, n_max):
    """Compare p_{2n}/q_{2n} with the convergents of the limit's negative continued fraction."""
    unit = _unit(b, sign)
    x = 1 / (1 + unit.alpha) if sign == "plus" else 1 / (1 + unit.alpha ** 2)
    digits = negative_cf(x, n_max + 1)
    conv = negative_cf_convergents(digits)
    pq = pq_spectrum(b, sign, 2 * n_max)
    for n in range(n_max + 1):
        p, q = pq[2 * n]
        target = Fraction(p, q) if sign == "plus" else Fraction(p, q) / b
        if conv[n] != target:
            return False
    return True


# ---------------------------------------------------------------- witnesses

def gamma(x):
    """gamma(1) = 1 -1, gamma(0) = 0 applied to a string over '01'."""
    out = []
    for c in x:
        out.extend((1, -1) if c == "1" else (0,))
    return tuple(out)


def gamma_biword(x):
    """gamma on a BiEPWord over '01'; the origin moves to the image of the old origin."""
    return BiEPWord(gamma(x.left_period), gamma(x.middle), gamma(x.right_period),
                    len(gamma(x.middle[:x.origin])))


def interleave_zero(word):
    """d_0 d_1 ... -> d_0 0 d_1 0 ..."""
    out = []
    for d in word:
        out.extend((d, 0))
    return tuple(out)


def witness_nus(n):
    """Words nu with |gamma(nu)| = n + 1 whose periodization gives the n-th value."""
    if n == 0:
        return ["0"]
    if n == 1:
        return ["1"]
    out = []
    for p in range(1, n + 1):
        q = n + 1 - p
        if p < q and gcd(p, q) == 1:
            out.append(christoffel(p, q, upper=True))
    return out


@dataclass
class XnWitness:
    n: int
    nu: str
    word: BiEPWord
    xi: QuadraticSurd
    limsup: Fraction
    attaining: list
    limsup_trace: Fraction = None

    def to_json(self):
        return {"n": self.n, "nu": self.nu, "xi": str(self.xi), "limsup": str(self.limsup),
                "attaining_shifts": self.attaining,
                "limsup_trace": None if self.limsup_trace is None else str(self.limsup_trace)}


def xn_witness(b, sign, n, nu=None):
    """Witness xi whose limsup ||xi alpha^n|| is the n-th spectrum value.

    The digit word is 0^inf . gamma(nu)^inf (the right tail begins at index
    0); in the minus case its digits are interleaved with zeros.
    """
    unit = _unit(b, sign)
    nu = nu if nu is not None else witness_nus(n)[0]
    per = gamma(nu)
    if unit.sign == "minus":
        per = interleave_zero(per)
    word = BiEPWord((0,), per, per, 0)
    xi = g_eval(unit, word, 0)
    m, att = periodic_limsup(unit, per)
    return XnWitness(n, nu, word, xi, m, att, trace_limsup(unit, xi))


def xn_representatives(b, sign, n, nu=None):
    """The coset representatives +-g(sigma^k x), 0 <= k <= n, of the witness set."""
    unit = _unit(b, sign)
    w = xn_witness(unit, None, n, nu)
    reps = []
    for k in range(n + 1):
        v = g_eval(unit, w.word, k)
        reps.extend([v, -v])
    return reps


# ---------------------------------------------------------------- dominance and forbidden patterns

def psi(unit, s, n):
    if n == 0:
        return s[0]
    return s[n] + unit.conj_sign ** n * s[-n]


def dominates(unit, y, z, horizon=None):
    """y >> z: psi agree below l, psi_l(y) > psi_l(z), |psi_n(y) - psi_n(z)| <= 2 for n > l.

    Returns (flag, l).  The comparison is exact for EP bi-words.
    """
    if horizon is None:
        per = _lcm(_lcm(len(y.left_period), len(y.right_period)),
                   _lcm(len(z.left_period), len(z.right_period)))
        horizon = max(y.reach(), z.reach()) + 2 * per + 2
    l = None
    for n in range(horizon + 1):
        d = psi(unit, y, n) - psi(unit, z, n)
        if l is None:
            if d < 0:
                return False, n
            if d > 0:
                l = n
        elif abs(d) > 2:
            return False, l
    return l is not None, l


def reference_word(unit):
    """0^inf 1 . -1 0^inf (plus) or 0^inf 1 . 0 -1 0^inf (minus)."""
    mid = (1, -1) if unit.sign == "plus" else (1, 0, -1)
    return BiEPWord((0,), mid, (0,), 0)


def threshold(unit):
    """Limit of the spectrum below the first gap."""
    return 1 / (1 + unit.alpha) if unit.sign == "plus" else unit.b / (1 + unit.alpha ** 2)


class _Certifier:
    """Decides whether a finite digit block forces some |g| above a threshold,
    whatever the digits in {-1, 0, 1} around it."""

    def __init__(self, unit, thr):
        self.unit = unit
        self.thr = thr * unit.gap
        al_inv = unit.alpha.inverse()
        a2 = abs(unit.alpha2)
        self.pw_r = [QuadraticSurd(1)]
        self.pw_l = [QuadraticSurd(1)]
        for _ in range(200):
            self.pw_r.append(self.pw_r[-1] * al_inv)
            self.pw_l.append(self.pw_l[-1] * unit.alpha2)
        self.tail_r = lambda t: al_inv ** t / (1 - al_inv)   # sum_{i>=t} alpha^-i
        self.tail_l = lambda t: a2 ** t / (1 - a2)
        self.cache_r = {}
        self.cache_l = {}

    def _tr(self, t):
        if t not in self.cache_r:
            self.cache_r[t] = self.tail_r(t)
        return self.cache_r[t]

    def _tl(self, t):
        if t not in self.cache_l:
            self.cache_l[t] = self.tail_l(t)
        return self.cache_l[t]

    def certified(self, W):
        m = len(W)
        for j in range(m):
            val = QuadraticSurd(0)
            for i, d in enumerate(W):
                if d:
                    val = val + d * (self.pw_r[i - j] if i > j else self.pw_l[j - i])
            slack = self._tr(m - j) + self._tl(j + 1)
            if abs(val) - slack > self.thr:
                return True
        return False


def _contains(W, pats):
    for p in pats:
        n = len(p)
        for i in range(len(W) - n + 1):
            if W[i:i + n] == p:
                return True
    return False


def forbid_certify(unit, pattern, known=(), depth=None, thr=None):
    """Check that every {-1,0,1} extension of `pattern` either contains a known
    forbidden word or forces some shift value |g| > thr.

    Returns (status, nodes) with status 'certified' or 'inconclusive'.
    """
    thr = threshold(unit) if thr is None else thr
    cert = _Certifier(unit, thr)
    pattern = tuple(pattern)
    if depth is None:
        depth = len(pattern) + 10
    nodes = 0

    def search(W, level):
        nonlocal nodes
        nodes += 1
        if _contains(W, known):
            return True
        if cert.certified(W):
            return True
        if level >= depth:
            return False
        for d in (-1, 0, 1):
            V = W + (d,) if level % 2 == 0 else (d,) + W
            if not search(V, level + 1):
                return False
        return True

    ok = search(pattern, 0)
    return ("certified" if ok else "inconclusive"), nodes


def _neg(p):
    return tuple(-d for d in p)


def plus_patterns(kmax=4):
    """Families forbidden in limsup words below 1/(1+alpha), in proof order."""
    fam = [("010", (0, 1, 0)), ("11", (1, 1))]
    for k in range(kmax + 1):
        fam.append(("10^%d1" % k, (1,) + (0,) * k + (1,)))
    for k in range(kmax + 1):
        fam.append(("0(1-1)^%d10" % k, (0,) + (1, -1) * k + (1, 0)))
    out = []
    for name, p in fam:
        out.append((name, p))
        out.append(("-" + name, _neg(p)))
    # images under gamma of the unbalanced patterns 0v01~v1 and 1~v10v0
    for n in range(3):
        for bits in range(2 ** n):
            v = format(bits, "0%db" % n) if n else ""
            for u in ("0" + v + "01" + v[::-1] + "1", "1" + v[::-1] + "10" + v + "0"):
                out.append(("gamma(%s)" % u, gamma(u)))
    return out


def minus_patterns(kmax=3):
    """Families forbidden in limsup words below b/(1+alpha^2), in proof order."""
    S1 = [(-1, 1, 1), (0, 1, 1), (-1, 1, 0), (1, -1, -1), (0, -1, -1), (1, -1, 0)]
    S2 = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    S3 = [(1, 0, 1), (-1, 0, -1), (0, 0, 1, 0, 0), (0, 0, -1, 0, 0)]
    S4 = [(1, 0, 0, 1), (1, 0, 0, -1), (-1, 0, 0, 1), (-1, 0, 0, -1)]
    out = [("S1", p) for p in S1] + [("S2", p) for p in S2] + [("S3", p) for p in S3] + \
        [("S4", p) for p in S4]
    for k in range(kmax + 1):
        out.append(("0(010-1)^%d0100" % k, (0,) + (0, 1, 0, -1) * k + (0, 1, 0, 0)))
        out.append(("0(0-101)^%d0-100" % k, (0,) + (0, -1, 0, 1) * k + (0, -1, 0, 0)))
    for k in range(2 * kmax + 2):
        out.append(("10^%d1" % k, (1,) + (0,) * k + (1,)))
        out.append(("-10^%d-1" % k, (-1,) + (0,) * k + (-1,)))
        if k % 2 == 0:
            out.append(("-10^%d1" % k, (-1,) + (0,) * k + (1,)))
            out.append(("10^%d-1" % k, (1,) + (0,) * k + (-1,)))
    return out


@dataclass
class PatternReport:
    name: str
    pattern: tuple
    status: str
    nodes: int


def forbidden_set_verify(b, sign, kmax=3, depth=None):
    """Certify the forbidden families one by one, each using the earlier ones."""
    unit = _unit(b, sign)
    pats = plus_patterns(kmax) if unit.sign == "plus" else minus_patterns(kmax)
    known = []
    reports = []
    for name, p in pats:
        status, nodes = forbid_certify(unit, p, known, depth)
        reports.append(PatternReport(name, p, status, nodes))
        if status == "certified":
            known.append(p)
    return reports
