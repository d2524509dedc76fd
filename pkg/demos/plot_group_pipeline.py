"""
Coset enumeration and a subgroup's first homology
=================================================

A group H has a normal subgroup P of index 3 and a subgroup G of index 13.
We build the intersection, write down its presentation with
Reidemeister-Schreier, and read b1 off the abelianization.

H here is Z/39 times the (2,3,7) triangle group: infinite, so its regular
representation cannot be enumerated, but every subgroup we need has
finite index.
"""
import json

from canon.cli import fixture_path
from canon.groups import (
    CosetLimitExceeded,
    abelian_invariants,
    coset_enumerate,
    has_involution,
    parse_presentation,
    presentation_from_dict,
    reidemeister_schreier,
    subgroup_intersection,
)

pres, subs = presentation_from_dict(
    json.loads(fixture_path("group_analogue.json").read_text(encoding="utf-8")))
print("H = <", pres, ">")
print("H^ab =", abelian_invariants(pres))

###############################################################################
# Indices
# -------

for name, gens in subs.items():
    t = coset_enumerate(pres, gens)
    print(f"[H : {name}] = {t.index}")

try:
    coset_enumerate(pres, (), limit=2000)
except CosetLimitExceeded as exc:
    print("regular representation:", exc)

###############################################################################
# The intersection and its presentation
# -------------------------------------

inter = subgroup_intersection(pres, subs["P"], subs["G"])
print(f"[H : P meet G] = {inter.index}, {len(inter.generators)} Schreier generators")
table = coset_enumerate(pres, inter.generators)
sub = reidemeister_schreier(pres, table)
print(f"presentation: {sub.ngens} generators, {len(sub.relators)} relators")
ab = abelian_invariants(sub)
print("abelianization:", ab, "-> b1 =", ab.free_rank)

###############################################################################
# Involutions in a group of order 39
# ----------------------------------
# The nonabelian group of order 39 has odd order, so no involution; the
# symmetric group S3 has three.

for text in ("a,b | a^13, b^3, b^-1*a*b*a^-3", "a,b | a^2, b^3, (a*b)^2"):
    v = has_involution(parse_presentation(text))
    print(f"order {v.order}: {v.reason}")
