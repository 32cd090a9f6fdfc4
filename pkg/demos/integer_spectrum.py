"""Base 2: the discrete part of the spectrum and where it accumulates.

Each value (1/a) E^(k)(1/a) is attained by a rational xi, so the limsup of
||xi 2^n|| is a maximum over a finite cycle and can be read off exactly.
"""
from fractions import Fraction

from geospec import spectrum_integer as si
from geospec.limsup import exact_limsup, norm_sequence

a = 2
print("first values of the spectrum for a = %d" % a)
for row in si.enumerate_spectrum(a, 6):
    print("  k=%d  %-12s %.12f  word (%s)^inf" % (row.k, row.value, float(row.value), row.witness))

lim = si.spectrum_limit(a)
print("accumulation point ~ %.12f (radius %.1e)" % (float(lim.mid), float(lim.rad)))

# The values are themselves good witnesses: their orbit under x -> 2x mod 1
# never gets further from an integer than the starting point.
for k in range(4):
    eta = si.spectrum_point(a, k)
    m, pre, cyc = si.rational_orbit_limsup(eta, a)
    print("  xi = %-8s cycle length %2d, limsup = %s" % (eta, cyc, m))

# 1/3 is the first value; every term of the orbit sits at distance exactly 1/3.
seq = norm_sequence(Fraction(1, 3), 2, 12)
print("||2^n / 3||:", [str(v) for v in seq.values])
print("limsup for 2/5:", exact_limsup(Fraction(2, 5), 2))
