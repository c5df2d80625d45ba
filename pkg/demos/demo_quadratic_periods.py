"""
Quadratics whose roots differ in the tail
=========================================

Both roots of a real quadratic have eventually periodic expansions.  They
share a tail exactly when one period is a rotation of the other.
"""

from tailforge import IntPoly, detect_period, isolate_real_roots, quadratic_equivalent

for coeffs in [(14, 3, -7), (1, -1, -1), (1, 0, -2), (3, -5, 1)]:
    p = IntPoly(coeffs)
    periods = [detect_period(r) for r in isolate_real_roots(p)]
    print(f"{str(p):>12}  ", "  ".join(str(q) for q in periods), "  same tail:", quadratic_equivalent(p))

##############################################################################
# For 14x^2 + 3x - 7 the blocks (1,1,1,4,2) and (1,1,1,2,4) hold the same
# multiset of terms, but neither is a rotation of the other, so the tails
# never line up.
