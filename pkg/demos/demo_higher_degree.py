"""
Quartics, sextics and forbidden degrees
=======================================

All roots of an irreducible polynomial can share a tail only when the degree
is 2^k 3^m.  Degrees 4 and 6 have explicit examples.
"""

from tailforge import IntPoly, degree_obstruction, numeric_common_tails, sextic_constraints, sextic_family, verify_klein4

for n in [4, 5, 6, 7, 9, 10, 12, 20]:
    print(degree_obstruction(n))

##############################################################################
# Degree 4: closure under -x and 1/x.

quartic = IntPoly([1, 0, -4, 0, 1])
print(quartic, "closed:", verify_klein4(quartic))
print(numeric_common_tails(quartic).to_json())

##############################################################################
# Degree 6: roots closed under 1/x and x -> -1/(x-1).  Solving both
# conditions exactly leaves a two-parameter family.

cons = sextic_constraints()
print("family:", cons.description)
sextic = sextic_family(1, -4)
table = numeric_common_tails(sextic)
print(sextic)
for i, j, m, n, length in table.pairs:
    print(f"  roots {i},{j}: offsets {m},{n}  agree for {length} terms")
