"""
Three roots, one tail
=====================

The roots of x^3 + 6x^2 + 9x + 1 have continued fractions that agree after a
few terms.  This script shows the agreement numerically and then proves it.
"""

from tailforge import classify_cubic, isolate_real_roots, cf_expand, parse_polynomial
from tailforge.cfengine import common_tail_prefix

##############################################################################
# Isolating the roots
# -------------------
#
# Every real root is held exactly, as a polynomial plus a rational interval.

p = parse_polynomial("x^3+6x^2+9x+1")
roots = isolate_real_roots(p)
for r in roots:
    print(f"{float(r):+.7f}  in  ({r.lo}, {r.hi})")

##############################################################################
# Expansions
# ----------
#
# The partial quotients are computed by exact shifts and reversals of the
# defining polynomial, never by floating point.

expansions = [cf_expand(r, 16) for r in roots]
for e in expansions:
    print(e)

for i in range(3):
    for j in range(i + 1, 3):
        print(i, j, common_tail_prefix(expansions[i], expansions[j], window=6))

##############################################################################
# The proof
# ---------
#
# The discriminant is 81 = 9^2, so one root is a linear fractional image of
# another.  The relating matrix is found from the coefficients alone, and its
# determinant is -1, which settles the question for every term, not just the
# sixteen printed above.

report = classify_cubic(p)
print("matrix:", report.relating_matrix, " ad:", report.ad_value, " common tails:", report.common_tails)
