"""
Building cubics with common tails
=================================

A map of order three that permutes the roots of a cubic gives common tails
when its determinant is +-1.  Writing the map as a word in x+k, -x and 1/x
turns the search into linear algebra on coefficient vectors.
"""

from tailforge import classify_cubic, family_from_word, parse_word, word_to_action, irreducible_over_rationals
from tailforge.families import enumerate_order3, simplify_by_conjugation

word = parse_word("n p-1 r")  # x -> -(1/x - 1), read right to left
print("action on coefficients:")
for row in word_to_action(word, 3).rows():
    print("   ", row)

family = family_from_word(word)
print("fixed family:", family.description)

##############################################################################
# Every irreducible member of the family is certified exactly.

for a, c in [(1, 0), (1, 1), (1, 3), (2, 1), (3, -4)]:
    p = family.member(a, c)
    if irreducible_over_rationals(p):
        rep = classify_cubic(p, 0)
        print(f"{str(p):>22}  disc={rep.discriminant:<6} matrix={rep.relating_matrix}  common tails={rep.common_tails}")

##############################################################################
# Other order-three maps reduce to the same one by conjugation, so they
# give nothing new up to basic operations.

for m in enumerate_order3((2, 3))[:6]:
    reduced, steps, reached = simplify_by_conjugation(m)
    print(m, "->", reduced, "via", " ".join(map(str, steps)) or "-", "" if reached else "(stuck)")
