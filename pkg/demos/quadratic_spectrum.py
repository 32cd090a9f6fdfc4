"""alpha = 2 + sqrt(3): the spectrum below its first gap, with witnesses.

The values p_n/q_n come from a two-term recurrence.  For each one a digit
word 0^inf . gamma(nu)^inf gives an explicit xi in Q(sqrt 3), and the limsup
is confirmed twice: by maximising g over the period, and by the trace cycle.
"""
from geospec import spectrum_quadratic as sq
from geospec.algebra import PisotQuadraticUnit

u = PisotQuadraticUnit(4, "plus")
print("alpha =", u.alpha)
for n in range(6):
    w = sq.xn_witness(u, None, n)
    print("  n=%d  value %-8s nu=%-6s xi=%-24s trace route %s" % (
        n, w.limsup, w.nu, w.xi, w.limsup_trace))
lim = sq.spectrum_limit(4, "plus")
print("limit 1/(1+alpha) = %s ~ %.12f" % (lim, float(lim)))

# The same table for x^2 - 3x - 1 is 3 times the plus table at b = 11.
print("minus case, b = 3:", [str(v) for v in sq.spectrum_values(3, "minus", 5)])

# Any xi above the first gap must avoid some digit patterns.  Each family is
# certified by a finite search over contexts.
for r in sq.forbidden_set_verify(4, "plus", kmax=2):
    print("  pattern %-14s %s (%d nodes)" % (r.name, r.status, r.nodes))
