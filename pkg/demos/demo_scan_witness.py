"""
Square discriminant is not enough
=================================

A square discriminant makes one root a rational linear fractional image of
another, but the image can have a determinant other than +-1.  A small scan
finds such cubics.
"""

from collections import Counter

from tailforge import IntPoly, ScanConfig, run_scan, numeric_common_tails

cfg = ScanConfig((1, 1), (-12, 12), (-12, 12), (-12, 12), prefix_depth=0, workers=4)
records = [r for r in run_scan(cfg) if r.report.irreducible]
print("irreducible cubics with square discriminant:", len(records))
print("ad values:", sorted(Counter(r.report.ad_value for r in records).items()))

witness = next(r for r in records if r.report.common_tails is False)
print("first without common tails:", IntPoly(witness.coeffs), witness.report.relating_matrix, "ad =", witness.report.ad_value)

##############################################################################
# The expansions agree nowhere, as expected.

print(numeric_common_tails(IntPoly(witness.coeffs)).to_json())
