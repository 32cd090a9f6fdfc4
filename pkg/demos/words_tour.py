"""Balanced words, Christoffel words and the index iota.

A word is unbalanced exactly when some palindrome v has both 0v0 and 1v1 as
factors.  The family F of words 0v01~v1 is a sharper test for bi-infinite
words, but a finite window can be unbalanced without containing any of them.
"""
from geospec.words import (balance_witness, christoffel, forbidden_scan, iota, iota_attaining,
                           is_balanced, periodic, phi, thue_morse)

w = "1010010001"
print(w, "balanced:", is_balanced(w), "witness:", repr(balance_witness(w)),
      "F-factors:", forbidden_scan(w))
print("000101 F-factors:", forbidden_scan("000101"))

for p, q in [(1, 3), (2, 5), (3, 8), (5, 13)]:
    c = christoffel(p, q)
    print("  christoffel(%d,%d) = %-14s iota = %s  attained at %s" % (
        p, q, c, iota(periodic(c)), iota_attaining(c)))

print("Thue-Morse, window 64: iota", iota(thue_morse(64)))

# Recoding by run lengths sends Christoffel words to Christoffel words of a
# smaller slope, which drives the induction on balanced words.
x = periodic(christoffel(3, 11))
y, a = phi(x)
print("phi(%s) = %s with a = %d" % (christoffel(3, 11), "".join(y.right_period), a))
