"""
Invariants of covers
====================

Double, bidouble and cyclic triple covers of the plane, and the triple
cover branched over a 3-divisible set of cusps.  Each result is checked
against the topological Euler number through Noether's formula.
"""
from canon import covers
from canon.covers import P2, BidoubleClass, TripleCoverData

###############################################################################
# Double planes
# -------------
# Branched on a quartic we get the surface with three cusps from the
# previous demo; branched on an octic, a surface with p_g = 3.

for deg in (4, 8):
    k = deg // 2
    y = covers.double_cover_invariants(P2, k * k, -3 * k, h0_KL=(k - 1) * (k - 2) // 2)
    genus = (deg - 1) * (deg - 2) // 2
    e = 2 * 3 - (2 - 2 * genus)
    print(f"branch degree {deg}: chi={y.chi} p_g={y.pg} K^2={y.k2}; 12 chi - K^2 = {12 * y.chi - y.k2}, e = {e}")

###############################################################################
# A cyclic triple plane
# ---------------------
# L = O(4), M = O(2): the branch is a smooth sextic.

y = covers.triple_cover_invariants(P2, TripleCoverData.plane(4, 2))
print(f"triple plane: chi={y.chi} K^2={y.k2}, Euler number {y.euler_number()} = 3*3 - 2*(-18)")

###############################################################################
# The bidouble plane over two quartics
# ------------------------------------
# J1 and J2 have degree 2, J3 has degree 4.

v = covers.bidouble_invariants(P2, [BidoubleClass.plane(d) for d in (2, 2, 4)], (64, -24))
print(f"bidouble plane: p_g={v.pg} chi={v.chi} K^2={v.k2}")

###############################################################################
# Triple cover branched on the cusps
# ----------------------------------
# The bidouble plane has 12 cusps.  The short formula and the long route
# (blow up each cusp, take the triple cover, contract three curves per cusp)
# agree.

short = covers.cusp_triple_cover(4, 4, 12)
blown, minimal = covers.cusp_cover_via_blowup(4, 4, 12)
print(f"short route: chi={short.chi} K^2={short.k2}")
print(f"long route: K^2 {blown.k2} on the blow-up, {minimal.k2} after contracting "
      f"{covers.contract_minus_one_curves(covers.cusp_local_preimage())} curves per cusp")

###############################################################################
# The same formula on a surface with chi = 13, K^2 = 39 and 39 cusps lands
# on the line K^2 = 9 chi.

y = covers.cusp_triple_cover(13, 39, 39)
print(f"chi={y.chi} K^2={y.k2} (9 chi = {9 * y.chi})")
