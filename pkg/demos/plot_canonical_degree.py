"""
Which degrees can the canonical map have?
=========================================

For a surface with chi = 13, q = 0 and K^2 = 117 whose canonical map
factors through a triple cover, the inequality chain

    9 chi >= K^2 >= d deg(image) >= n d (p_g - 2)

bounds the degree d.  Two extra facts prune the list: the quotient by the
triple cover has K^2 = 39 < 4 chi - 10, so its canonical map is not
composed with a pencil, and it has no involution, so degree 6 is out.
"""
from canon import covers

bounds = covers.canonical_degree_candidates(13, 0, 117, divides=3)
for line in bounds.trace:
    print(line)

###############################################################################
# The pencil test on the quotient
# -------------------------------

print(covers.pencil_test(13, 39))

###############################################################################
# Before and after removing degree 6
# ----------------------------------

print("without group input:", covers.eliminate_involution_degrees(bounds, False))
print("no involution:     ", covers.eliminate_involution_degrees(bounds, True))

###############################################################################
# A surface with chi = 4, K^2 = 12 leaves far more room.

wide = covers.canonical_degree_candidates(4, 0, 12, divides=4)
print("chi = 4, K^2 = 12, multiples of 4:", wide.non_ruled, wide.ruled)
