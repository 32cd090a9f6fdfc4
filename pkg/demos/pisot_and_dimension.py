"""Beyond quadratic units: the plastic number, and dimension bounds.

For the plastic number the error eps(xi alpha^n) can be rebuilt from the
digits s_m with weights tau_q.  The two formulas for tau agree on integer
indices up to an integer, which is what makes the rebuilt value exact mod 1.
"""
from fractions import Fraction

from flint import ctx

from geospec.algebra import GeneralPisot
from geospec.dimension import integer_bound, integer_threshold_ell, quadratic_bound, quadratic_t0
from geospec.limsup import eps_via_tau, exact_limsup

g = GeneralPisot([-1, -1, 0, 1])
with ctx.workprec(200):
    print("plastic number", g.alpha().str(20))
    print("R_q for q = 0..-5:", [g.r_weight(q).str(10) for q in range(0, -6, -1)])
for xi, n in [(Fraction(3, 7), 5), (Fraction(-11, 40), 12)]:
    rebuilt, direct = eps_via_tau(g, xi, n)
    print("  xi=%s n=%d  rebuilt %.15f  direct %.15f" % (xi, n, float(rebuilt.mid), float(direct.mid)))
print("exact limsup for xi = 1/2:", exact_limsup(Fraction(1, 2), g))

# Upper bounds on the Hausdorff dimension of {xi : limsup <= t}.
for a, t in [(2, Fraction(2, 5)), (3, Fraction(9, 20)), (10, Fraction(1, 10))]:
    ell = integer_threshold_ell(a, t)
    r = integer_bound(a, t, ell)
    print("a=%-2d t=%-5s ell=%d  bound %.6f" % (a, t, ell, float(r.value)))
print("t0 for b = 4:", quadratic_t0(4), "; b=4, t=1/25 bound", float(quadratic_bound(4, Fraction(1, 25)).value))
