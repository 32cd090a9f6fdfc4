"""Upper bounds for the Hausdorff dimension of {xi : limsup ||xi alpha^n|| <= t}."""
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from flint import arb, ctx

from .algebra import CertifiedReal, PisotQuadraticUnit, default_precision, to_arb


@dataclass
class DimensionBound:
    value: CertifiedReal
    parameter: int        # ell for integer bases, m for quadratic units
    below_one: bool

    def to_json(self):
        return {"bound": self.value.to_json(), "parameter": self.parameter,
                "below_one": self.below_one}


def integer_bound_at(a, t, ell, bits=None):
    """log(2 ceil(a^ell t)) / log(a^ell)."""
    t = Fraction(t)
    k = ceil(a ** ell * t)
    with ctx.workprec(bits or default_precision()):
        v = arb(2 * k).log() / (ell * arb(a).log()) if k > 0 else arb(0)
        return CertifiedReal.from_arb(v), v < 1


def integer_threshold_ell(a, t):
    """Smallest ell with a^ell (1 - 2t) > 2, which forces the bound below 1."""
    t = Fraction(t)
    if not 0 <= t < Fraction(1, 2):
        raise ValueError("need 0 <= t < 1/2")
    ell = 1
    while a ** ell * (1 - 2 * t) <= 2:
        ell += 1
    return ell


def integer_bound(a, t, ell=None, ell_max=None):
    """Bound for integer base a: at a given ell, or the best over 1..ell_max (default: threshold)."""
    if ell is not None:
        v, below = integer_bound_at(a, t, ell)
        return DimensionBound(v, ell, bool(below))
    ell_max = ell_max or integer_threshold_ell(a, t)
    best = None
    for l in range(1, ell_max + 1):
        v, below = integer_bound_at(a, t, l)
        if best is None or v.mid < best.value.mid:
            best = DimensionBound(v, l, bool(below))
    return best


def quadratic_m(b, t):
    return floor((2 + b) * Fraction(t))


def quadratic_bound(b, t, sign="plus"):
    """log(4m + 1)/log(alpha) with m = floor((2+b) t)."""
    unit = PisotQuadraticUnit(b, sign)
    m = quadratic_m(b, t)
    with ctx.workprec(default_precision()):
        v = arb(4 * m + 1).log() / to_arb(unit.alpha).log()
        return DimensionBound(CertifiedReal.from_arb(v), m, bool(v < 1))


def quadratic_t0(b, sign="plus"):
    """t0 = (alpha - 1)/(4(b + 2)), exact."""
    unit = PisotQuadraticUnit(b, sign)
    return (unit.alpha - 1) / (4 * (b + 2))
