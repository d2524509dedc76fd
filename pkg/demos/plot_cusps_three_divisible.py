"""
Three cusps on a double plane
=============================

A double cover of the plane branched on a quartic with three cusps has
three A2 singularities.  Resolving them gives six (-2)-curves; together
with two (-1)-curves lying over lines through pairs of cusps they span a
lattice whose Gram matrix is degenerate.  The integer kernel of that
matrix, read mod 3, decides whether the cusps are 3-divisible.
"""
import json

from canon import lattice
from canon.cli import fixture_path
from canon.linalg import det, smith_normal_form

config = lattice.CurveConfig.from_dict(
    json.loads(fixture_path("lemma.json").read_text(encoding="utf-8")))

###############################################################################
# The intersection matrix
# -----------------------
# Rows and columns follow the labels A1, A1', A2, A2', A3, A3', E1, E2.

for label, row in zip(config.labels, config.gram):
    print(f"{label:>4} {list(row)}")
print("det =", det(config.gram))

###############################################################################
# How many independent classes are there?
# ---------------------------------------
# Noether's formula gives b2 of the resolved surface (chi = 1, K^2 = 2,
# q = 0).  Eight curves in a space of rank 8 with a degenerate Gram matrix
# must satisfy a numerical relation, and every such relation lies in the
# kernel.

b2 = lattice.second_betti(1, 2, 0)
dep = lattice.dependency_check(config, b2)
print(f"b2 = {b2}, rank of the Gram matrix = {dep.rank}")
print("integral kernel:", dep.kernel)
print("invariant factors:", smith_normal_form(config.gram).invariant_factors)

###############################################################################
# Reading the relation mod 3
# --------------------------
# On each cusp pair the relation is (2, 1) or (1, 2) mod 3, and it is 0 mod 3
# on E1 and E2.  Swapping the labels of a pair turns (1, 2) into (2, 1).

cert = lattice.three_divisibility(config)
print("verdict:", cert.verdict)
print("pairs relabelled:", [config.labels[a] for (a, _), s in zip(config.cusp_pairs, cert.swaps) if s])
print(cert.relation_text)

###############################################################################
# Without the torsion assumption
# ------------------------------
# A numerical relation becomes a linear equivalence only if NS has no
# torsion.  Drop that flag and the answer degrades honestly.

loose = lattice.CurveConfig(config.labels, config.gram, config.cusp_pairs,
                            config.auxiliary, torsion_free_ns=False)
print("without torsion-freeness:", lattice.three_divisibility(loose).verdict)
