"""
Forms singular at the cusps of a bidouble plane
===============================================

The bidouble plane w^2 = q1, t^2 = q2 sits in P(1,1,1,2,2).  Its 12 cusps
lie over the cusps of the two quartics.  We ask whether some form of
weighted degree 3 is singular at all 12 points; the answer is no.

The pair of quartics is not unique, so this demo also shows how the
committed pair was chosen: small integer transforms of the standard
tricuspidal quartic, tried until the configuration check passes.
"""
import time
from itertools import product

from canon.linalg import det
from canon.weighted import (
    configuration_check,
    cusps_of_bidouble,
    monomials,
    multiplicity_system_dimension,
    tricuspidal_quartic,
)

q1 = tricuspidal_quartic()
print("Q1 =", q1.poly.to_sympy(__import__("sympy").symbols("x y z")))
print("cusps of Q1:", q1.cusps)

###############################################################################
# Searching for a partner
# -----------------------
# Matrices with entries in {-1, 0, 1, 2, 3}, invertible, first hit wins.
# The order is fixed, so the search is reproducible; stop after a few
# candidates to keep the demo quick.

tried = 0
found = None
for entries in product((0, 1, -1, 2, 3), repeat=9):
    t = [list(entries[0:3]), list(entries[3:6]), list(entries[6:9])]
    if det(t) == 0 or sum(map(abs, entries)) < 5:
        continue
    tried += 1
    verdict = configuration_check(q1, tricuspidal_quartic(t))
    if verdict:
        found = t
        break
    if tried >= 40:
        break
print(f"tried {tried} transforms; first passing: {found}")

###############################################################################
# The committed pair
# ------------------

T = [[2, 1, 0], [1, -1, 1], [0, 1, 3]]
q2 = tricuspidal_quartic(T)
verdict = configuration_check(q1, q2)
for line in verdict.checks:
    print("  ", line)

points = cusps_of_bidouble(q1, q2)
for p in points:
    print(f"  over {p.side} at {tuple(int(x) for x in p.base)}: w = {p.w}, t = {p.t}")

###############################################################################
# The linear system
# -----------------
# 16 monomials of weighted degree 3.  Each point contributes its value and
# five partials; irrational rows are split into two rational ones.

print(len(monomials((1, 1, 1, 2, 2), 3)), "monomials")
start = time.perf_counter()
dim, kernel, system = multiplicity_system_dimension(3, points)
print(f"condition matrix {len(system.condition_matrix)} x 16, rank {system.rank}, "
      f"dimension {dim} ({time.perf_counter() - start:.2f}s)")
