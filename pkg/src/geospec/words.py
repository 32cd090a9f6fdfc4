"""Finite, eventually periodic and bi-infinite words.

Binary words are plain strings over '01'.  Signed digit words are tuples of
ints.  Both kinds work with EPWord and BiEPWord.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, floor, ceil


def _lcm(a, b):
    return a * b // gcd(a, b)


def mirror(w):
    return w[::-1]


def swap01(w):
    return w.translate(str.maketrans("01", "10"))


# ---------------------------------------------------------------- EP words

@dataclass(frozen=True)
class EPWord:
    """One-sided word preperiod + period^infinity, indexed from 0."""
    preperiod: tuple
    period: tuple

    def __post_init__(self):
        if len(self.period) == 0:
            raise ValueError("period must be nonempty")

    def __getitem__(self, n):
        if n < len(self.preperiod):
            return self.preperiod[n]
        return self.period[(n - len(self.preperiod)) % len(self.period)]

    def prefix(self, n):
        return type(self.period)(self[i] for i in range(n)) if not isinstance(self.period, str) \
            else "".join(self[i] for i in range(n))

    def shift(self, k):
        """sigma^k."""
        if k <= len(self.preperiod):
            return EPWord(self.preperiod[k:], self.period)
        r = (k - len(self.preperiod)) % len(self.period)
        return EPWord(self.preperiod[:0], self.period[r:] + self.period[:r])

    def map(self, f):
        return EPWord(tuple(f(x) for x in self.preperiod), tuple(f(x) for x in self.period))

    def horizon(self, other=None):
        """Length after which two EP words that agree so far agree forever."""
        if other is None:
            return len(self.preperiod) + len(self.period)
        return max(len(self.preperiod), len(other.preperiod)) + _lcm(len(self.period), len(other.period))

    def __eq__(self, other):
        if not isinstance(other, EPWord):
            return NotImplemented
        n = self.horizon(other)
        return all(self[i] == other[i] for i in range(n))

    def canonical(self):
        """Shortest preperiod and primitive period describing the same word."""
        per = primitive_root(self.period)
        pre = self.preperiod
        while pre and pre[-1] == per[-1]:
            pre, per = pre[:-1], per[-1:] + per[:-1]
        return EPWord(pre, per)

    def __hash__(self):
        c = self.canonical()
        return hash((tuple(c.preperiod), tuple(c.period)))

    def __repr__(self):
        return "EPWord(%r, %r)" % (self.preperiod, self.period)


def ep_compare(u, v, key=None):
    """Lexicographic comparison of EP words: -1, 0 or 1."""
    n = u.horizon(v)
    for i in range(n):
        a, b = u[i], v[i]
        if a != b:
            return -1 if a < b else 1
    return 0


@dataclass(frozen=True)
class BiEPWord:
    """Bi-infinite word ...L L middle R R... with middle[origin] at index 0."""
    left_period: tuple
    middle: tuple
    right_period: tuple
    origin: int = 0

    def __post_init__(self):
        if not self.left_period or not self.right_period:
            raise ValueError("periods must be nonempty")

    @classmethod
    def periodic(cls, period, origin=0):
        """period^Z with period[origin] at index 0."""
        return cls(period, period, period, origin % len(period))

    def __getitem__(self, n):
        i = n + self.origin
        if i < 0:
            L = self.left_period
            return L[i % len(L)]
        if i >= len(self.middle):
            R = self.right_period
            return R[(i - len(self.middle)) % len(R)]
        return self.middle[i]

    @property
    def start(self):
        """Index of the first letter of the middle block."""
        return -self.origin

    @property
    def stop(self):
        return len(self.middle) - self.origin

    def window(self, i, j):
        """Letters with indices i..j-1."""
        letters = [self[n] for n in range(i, j)]
        if isinstance(self.middle, str):
            return "".join(letters)
        return tuple(letters)

    def shift(self, k):
        """sigma^k, so that the new letter 0 is the old letter k."""
        mid = self.middle
        o = self.origin + k
        L, R = self.left_period, self.right_period
        while o < 0:
            mid = L + mid
            o += len(L)
        while o >= len(mid):
            mid = mid + R
        return BiEPWord(L, mid, R, o)

    def map(self, f):
        conv = (lambda w: "".join(f(x) for x in w)) if isinstance(self.middle, str) \
            else (lambda w: tuple(f(x) for x in w))
        return BiEPWord(conv(self.left_period), conv(self.middle), conv(self.right_period), self.origin)

    def right_part(self, k=1):
        """One-sided word w_k w_{k+1} ... as an EPWord."""
        pre = self.window(k, max(k, self.stop))
        R = self.right_period
        if k > self.stop:
            r = (k - self.stop) % len(R)
            R = R[r:] + R[:r]
        return EPWord(pre, R)

    def left_part(self, k=-1):
        """One-sided word w_k w_{k-1} w_{k-2} ... as an EPWord."""
        pre = mirror(self.window(min(k + 1, self.start), k + 1))
        L = mirror(self.left_period)
        if k < self.start - 1:
            r = (self.start - 1 - k) % len(L)
            L = L[r:] + L[:r]
        return EPWord(pre, L)

    def reach(self):
        """Radius past which the word is periodic on both sides."""
        return max(abs(self.start), abs(self.stop)) + len(self.left_period) + len(self.right_period)

    def is_periodic(self):
        """True for u^Z words (same tail on both sides)."""
        p = _lcm(len(self.left_period), len(self.right_period))
        lo, hi = self.start - p, self.stop + p
        return all(self[n] == self[n + p] for n in range(lo - p, hi + p))

    def min_period(self):
        """Smallest period of a purely periodic bi-word, else None."""
        if not self.is_periodic():
            return None
        n = _lcm(len(self.left_period), len(self.right_period))
        for p in range(1, n + 1):
            if n % p == 0 and all(self[i] == self[i + p] for i in range(self.start - n, self.start + n)):
                return p
        return n


def periodic(word, origin=0):
    return BiEPWord.periodic(word, origin)


# ---------------------------------------------------------------- Christoffel and mechanical words

def christoffel(p, q, upper=False):
    """Christoffel word of slope p/q, lower by default."""
    if q < 1 or p < 0 or p > q:
        raise ValueError("need 0 <= p <= q, q >= 1")
    if gcd(p, q) != 1:
        raise ValueError("p and q must be coprime")
    if (p == 0 or p == q) and q != 1:
        raise ValueError("p = 0 or p = q only for q = 1")
    if upper:
        return "".join(str(-((-p * (i + 1)) // q) + ((-p * i) // q)) for i in range(q))
    return "".join(str(p * (i + 1) // q - p * i // q) for i in range(q))


def central_word(p, q):
    """The palindrome v with christoffel(p, q) = 0v1."""
    w = christoffel(p, q)
    if q < 2:
        raise ValueError("central words need q >= 2")
    return w[1:-1]


def mechanical_word(slope, intercept, start, stop, upper=False):
    """Letters floor(slope(n+1)+intercept) - floor(slope n + intercept) for start <= n < stop."""
    rnd = ceil if upper else floor
    return "".join(str(rnd(slope * (n + 1) + intercept) - rnd(slope * n + intercept))
                   for n in range(start, stop))


def characteristic_word(directive, length):
    """Prefix of the characteristic Sturmian word of slope [0; 1+d1, d2, d3, ...].

    Built with standard words s_n = s_{n-1}^{d_n} s_{n-2}, starting from
    s_{-1} = '1', s_0 = '0'.  The directive sequence is cycled if it runs out.
    """
    directive = list(directive)
    if not directive or min(directive) < 1:
        raise ValueError("directive digits must be positive")
    prev, cur = "1", "0"
    i = 0
    while len(cur) < length + 2:
        prev, cur = cur, cur * directive[i % len(directive)] + prev
        i += 1
    return cur[:length]


def thue_morse(n):
    return "".join(str(bin(i).count("1") & 1) for i in range(n))


def fibonacci_word(n):
    """Fixed point of 0 -> 01, 1 -> 0."""
    w = "0"
    while len(w) < n:
        w = "".join("01" if c == "0" else "0" for c in w)
    return w[:n]


def is_conjugate(u, v):
    return len(u) == len(v) and u in v + v


def primitive_root(w):
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w[:p] * (n // p) == w:
            return w[:p]
    return w


def is_christoffel_rotation(w):
    """Whether w is a rotation of a Christoffel word."""
    n = len(w)
    p = w.count("1")
    if gcd(p, n) != 1 or ((p == 0 or p == n) and n != 1):
        return False
    return is_conjugate(w, christoffel(p, n))


# ---------------------------------------------------------------- balance

def factors(w, n):
    return {w[i:i + n] for i in range(len(w) - n + 1)}


def factor_complexity(w, n):
    return len(factors(w, n))


def is_balanced(w):
    """Whether all equal-length factors of w differ by at most one in their count of 1s."""
    pre = [0]
    for c in w:
        pre.append(pre[-1] + (c == "1"))
    N = len(w)
    for n in range(1, N + 1):
        counts = [pre[i + n] - pre[i] for i in range(N - n + 1)]
        if max(counts) - min(counts) > 1:
            return False
    return True


def balance_witness(w):
    """Shortest palindrome v with 0v0 and 1v1 both factors of w, or None."""
    N = len(w)
    for n in range(0, N - 1):
        fs = factors(w, n + 2)
        for f in fs:
            if f[0] == "0" and f[-1] == "0":
                v = f[1:-1]
                if v == v[::-1] and "1" + v + "1" in fs:
                    return v
    return None


# ---------------------------------------------------------------- F-patterns and the index iota

F_TEMPLATES = ("0v01~v1", "1~v10v0")


def _center_radius(w, c):
    """Symmetric radius around the pair w[c]w[c+1]; (radius, closed) where closed means a mismatch was seen."""
    j = 0
    while c - 1 - j >= 0 and c + 2 + j < len(w):
        if w[c - 1 - j] != w[c + 2 + j]:
            return j, True
        j += 1
    return j, False


def forbidden_scan(w):
    """Occurrences of 0v01~v1 or 1~v10v0 in w: list of (start, v, template)."""
    hits = []
    for c in range(len(w) - 1):
        a, b = w[c], w[c + 1]
        if a == b:
            continue
        j, closed = _center_radius(w, c)
        if closed and w[c - 1 - j] == a and w[c + 2 + j] == b:
            left = w[c - j:c]
            if a == "0":
                hits.append((c - 1 - j, left, F_TEMPLATES[0]))
            else:
                hits.append((c - 1 - j, left[::-1], F_TEMPLATES[1]))
    return hits


def in_F(u):
    """Whether u itself is a member of F."""
    n = len(u)
    if n < 4 or n % 2:
        return False
    v = u[1:(n - 2) // 2]
    return u in ("0" + v + "01" + v[::-1] + "1", "1" + v + "10" + v[::-1] + "0")


@dataclass(frozen=True)
class IotaResult:
    value: int
    exact: bool
    window: int
    note: str = ""

    def __str__(self):
        if self.note:
            return "%d (%s)" % (self.value, self.note)
        return ("%d" if self.exact else ">= %d") % self.value


def iota(x, window=None):
    """sup |v| over factors v01~v, v10~v of x.

    x may be a finite string (a window of some word) or a BiEPWord.  For a
    purely periodic word the value is exact; otherwise it is a lower bound
    read off the window.
    """
    if isinstance(x, BiEPWord):
        p = x.min_period()
        if p is not None:
            w = x.window(0, 3 * p + 2)
            best = -1
            for c in range(p, 2 * p):
                if w[c] == w[c + 1]:
                    continue
                j = 0
                while j < p and x[c - 1 - j] == x[c + 2 + j]:
                    j += 1
                if j >= p:
                    return IotaResult(0, False, window or 0, "infinite: symmetric word")
                best = max(best, j)
            if best < 0:
                return IotaResult(0, True, p, "constant word, no 01 or 10 factor")
            return IotaResult(best, True, p)
        window = window or 4 * x.reach()
        w = x.window(-window // 2, window - window // 2)
    else:
        w = x
        window = len(w)
    best, seen = 0, False
    for c in range(len(w) - 1):
        if w[c] != w[c + 1]:
            seen = True
            j, _ = _center_radius(w, c)
            best = max(best, j)
    if not seen:
        return IotaResult(0, False, window, "constant word, no 01 or 10 factor")
    return IotaResult(best, False, window)


def iota_attaining(period):
    """Shifts c mod |period| whose centre w[c]w[c+1] attains iota of period^Z."""
    x = periodic(period)
    p = len(period)
    res = iota(x)
    out = []
    for c in range(p):
        if x[c] == x[c + 1]:
            continue
        j = 0
        while j < p and x[c - 1 - j] == x[c + 2 + j]:
            j += 1
        if j == res.value:
            out.append(c)
    return out


# ---------------------------------------------------------------- the recoding map phi

class NotParsable(ValueError):
    pass


def _blocks(w):
    """Exponents e of the blocks 1 0^e of a word starting with '1'."""
    if not w.startswith("1"):
        raise NotParsable("block sequence must start with 1")
    return [len(b) for b in w.split("1")[1:]]


def phi(x):
    """Run-length recoding of a bi-infinite word in (1(0^a + 0^{a+1}))^Z.

    Blocks 1 0^a map to '0' and 1 0^{a+1} to '1'.  Words in
    (0(1^a + 1^{a+1}))^Z are swapped first.  The new origin is the block
    holding the old origin.  Returns (word, a).
    """
    if not isinstance(x, BiEPWord):
        raise TypeError("phi expects a BiEPWord over '01'")
    span = x.window(x.start - 2 * len(x.left_period), x.stop + 2 * len(x.right_period))
    has00, has11 = "00" in span, "11" in span
    if has00 and has11:
        raise NotParsable("both 00 and 11 occur")
    if has11:
        x = x.map(lambda c: "1" if c == "0" else "0")
    L, mid, R, o = x.left_period, x.middle, x.right_period, x.origin
    if "1" not in L or "1" not in R:
        raise NotParsable("a tail has no 1 (word in K)")
    j = R.index("1")
    mid, R = mid + R[:j], R[j:] + R[:j]
    i = L.index("1")
    mid, o, L = L[i:] + mid, o + len(L) - i, L[i:] + L[:i]
    eL, eM, eR = _blocks(L), _blocks(mid), _blocks(R)
    es = set(eL) | set(eM) | set(eR)
    a = min(es)
    if max(es) > a + 1:
        raise NotParsable("block exponents %s are not of the form {a, a+1}" % sorted(es))
    code = lambda e: "".join("0" if k == a else "1" for k in e)
    # block containing the origin
    pos, new_origin = 0, 0
    for idx, e in enumerate(eM):
        if pos <= o < pos + e + 1:
            new_origin = idx
            break
        pos += e + 1
    return BiEPWord(code(eL), code(eM), code(eR), new_origin), a


def slope_gauss(p, q):
    """Slope of phi(x) for x a periodic Christoffel word of slope p/q with 2p < q."""
    return Fraction(q % p, p)


# ---------------------------------------------------------------- integer-spectrum words

def tau_morphism(w):
    return "".join("2" if c == "1" else "211" for c in w)


def A_word(k):
    """A_0 = 1, A_n = tau(A_{n-1})."""
    w = "1"
    for _ in range(k):
        w = tau_morphism(w)
    return w


def alt_compare(y, z, n=None):
    """Alternating order on EP words over positive ints: -1, 0 or 1.

    y > z when (-1)^(h+1) (y_h - z_h) > 0 at the first difference h
    (counting from 1).  Finite strings are compared on their common length.
    """
    if isinstance(y, str):
        y = tuple(int(c) for c in y)
    if isinstance(z, str):
        z = tuple(int(c) for c in z)
    if isinstance(y, EPWord) and isinstance(z, EPWord):
        n = y.horizon(z)
    elif n is None:
        n = min(len(y) if not isinstance(y, EPWord) else 10**9,
                len(z) if not isinstance(z, EPWord) else 10**9)
    for i in range(n):
        a, b = y[i], z[i]
        if a != b:
            s = (a - b) if i % 2 == 0 else (b - a)
            return 1 if s > 0 else -1
    return 0
