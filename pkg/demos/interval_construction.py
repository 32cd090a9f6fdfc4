"""Every eta between kappa and 1/2 is a limsup of ||xi alpha^n||.

The expansion of eta (alpha - alpha2)/alpha is split into a two-sided digit
word s with g(s) = eta exactly.  A Key inequality keeps every other shift
below kappa.  For x^2 - 3x - 1 and x^2 - 5x - 1 that inequality is false,
yet the construction still works on every grid point we tried.
"""
from fractions import Fraction

from geospec.interval import check_grid, construct, kappa_and_keys

for b, sign in [(8, "plus"), (7, "plus"), (4, "plus"), (7, "minus"), (3, "minus"), (5, "minus")]:
    case = kappa_and_keys(b, sign)
    print("%-5s b=%d  %-4s %-11s lhs %.4f rhs %.4f %-5s kappa %.5f" % (
        sign, b, case.key, case.split, float(case.lhs), float(case.rhs),
        "ok" if case.holds else "FAIL", float(case.kappa)))

eta = Fraction(23, 50)
word, centre, others = construct(8, "plus", eta, 200)
print("b=8: g(s) = %s, largest other shift %.6f" % (centre, float(others)))

for b in (3, 5):
    grid = check_grid(b, "minus", 6, 200)
    print("minus b=%d grid:" % b, all(r.centre_ok and r.bounded for r in grid),
          ["%.3f" % float(r.eta) for r in grid])
