"""``canon``: run the verification pipelines on JSON descriptions.

Exit codes: 0 pass, 1 checked and false, 2 input error, 3 resource limit.
"""
from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import covers, lattice
from .groups import (
    DEFAULT_LIMIT,
    CosetLimitExceeded,
    abelian_invariants,
    coset_enumerate,
    has_involution,
    presentation_from_dict,
    reidemeister_schreier,
    subgroup_intersection,
)
from .groups.words import PresentationSyntaxError
from .linalg import det
from .report import VerificationReport, digest
from .weighted import (
    PlaneQuartic,
    configuration_check,
    cusps_of_bidouble,
    monomials,
    multiplicity_system_dimension,
)

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3

DEFAULT_FIXTURES = {
    "divisibility": "lemma.json",
    "invariants": "bidouble.json",
    "linsys": "quartic_pair.json",
    "group": "group_analogue.json",
    "bounds": "bounds.json",
}


class InputError(Exception):
    pass


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("canon") / "fixtures" / name))


def _load(path: str | Path) -> dict:
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from None
    if not isinstance(obj, dict):
        raise InputError(f"{path}: expected a JSON object")
    return obj


def _inputs(obj: dict) -> dict:
    """The input document minus human-only annotations."""
    return {k: v for k, v in obj.items() if k != "description"}


# ---------------------------------------------------------------------------

def cmd_divisibility(obj: dict) -> VerificationReport:
    expect = obj.get("expect", {})
    config = lattice.CurveConfig.from_dict(obj)
    rep = VerificationReport("divisibility", digest(_inputs(obj)))
    n = len(config.labels)
    if "surface" in obj:
        s = obj["surface"]
        b2 = lattice.second_betti(s["chi"], s["k2"], s.get("q", 0))
        rep.note(f"b2 = 12 chi - K^2 + 4q - 2 = 12*{s['chi']} - {s['k2']} + 4*{s.get('q', 0)} - 2 = {b2}")
        rep.check("b2 of the ambient surface", b2, expect.get("b2"))
    else:
        b2 = int(obj.get("ambient_b2", n))
    dep = lattice.dependency_check(config, b2)
    rep.check("det(gram)", det(config.gram), expect.get("det"))
    rep.check("rank(gram)", dep.rank, expect.get("rank"))
    rep.check("kernel basis", [list(v) for v in dep.kernel], expect.get("kernel"))
    rep.note(f"{n} curves, rank {dep.rank}: "
             + ("dependent" if dep.dependent else "independent")
             + (f"; {n} >= b2 = {b2}, so the Gram kernel holds every numerical relation"
                if dep.spans else f"; only {n} < b2 = {b2} curves"))
    cert = lattice.three_divisibility(config)
    for line in cert.notes:
        rep.note(line)
    if cert.relation:
        rep.note(f"relation in Num: {_linear_combination(cert.relation, config.labels)} = 0")
        rep.note("relabelled pairs: " + (", ".join(
            f"{config.labels[a]}<->{config.labels[b]}"
            for s, (a, b) in zip(cert.swaps, config.cusp_pairs) if s) or "none"))
        rep.check("divisor relation", cert.relation_text, expect.get("relation_text"))
    rep.check("cusps are 3-divisible", cert.verdict, lattice.YES)
    return rep


def _linear_combination(coeffs, labels) -> str:
    out = ""
    for c, lab in zip(coeffs, labels):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else str(abs(c))
        out += (f"{'-' if c < 0 else ''}{mag}{lab}" if not out else f" {sign} {mag}{lab}")
    return out or "0"


def _surface(d: dict) -> covers.SurfaceInvariants:
    return covers.SurfaceInvariants(chi=d["chi"], q=d.get("q"), pg=d.get("pg"), k2=d.get("k2"))


def cmd_invariants(obj: dict) -> VerificationReport:
    formula = obj.get("formula")
    expect = obj.get("expect", {})
    rep = VerificationReport(f"invariants:{formula}", digest(_inputs(obj)))
    if formula == "triple":
        base = _surface(obj["base"])
        data = covers.TripleCoverData(**obj["data"])
        out = covers.triple_cover_invariants(base, data)
        a, b = data.L2 + data.KL, data.M2 + data.KM
        rep.note(f"chi = 3*{base.chi} + ({a})/2 + ({b})/2 = {out.chi}")
        rep.note(f"K^2 = 3*{base.k2} + 4*({a}) + 4*({b}) - 4*({data.LM}) = {out.k2}")
        if not data.smooth_branch:
            rep.note("warning: branch locus not declared smooth")
    elif formula == "double":
        base = _surface(obj["base"])
        out = covers.double_cover_invariants(base, obj["L2"], obj["KL"], obj.get("h0_KL"))
        rep.note(f"chi = 2*{base.chi} + ({obj['L2']} + {obj['KL']})/2 = {out.chi}")
        rep.note(f"K^2 = 2*({base.k2} + 2*{obj['KL']} + {obj['L2']}) = {out.k2}")
    elif formula == "bidouble":
        base = _surface(obj["base"])
        classes = [covers.BidoubleClass(**j) for j in obj["J"]]
        branch = obj.get("branch")
        out = covers.bidouble_invariants(base, classes,
                                         None if branch is None else (branch["D2"], branch["KD"]))
        terms = " + ".join(f"{j.h0_K_plus_J}" for j in classes)
        rep.note(f"p_g = {base.pg} + {terms} = {out.pg}")
        halves = " + ".join(f"({j.J2 + j.KJ})" for j in classes)
        rep.note(f"chi = 4*{base.chi} + ({halves})/2 = {out.chi}")
        if out.k2 is not None:
            rep.note(f"K^2 = 4*{base.k2} + 4*({branch['KD']}) + {branch['D2']} = {out.k2}")
    elif formula == "cusp_triple_cover":
        chi_x, k2_x, n = obj["chi_X"], obj["k2_Xprime"], obj["n"]
        out = covers.cusp_triple_cover(chi_x, k2_x, n)
        rep.note(f"chi = 3*{chi_x} - 2*{n}/3 = {out.chi}; K^2 = 3*{k2_x} = {out.k2}")
        if obj.get("long_route"):
            blown, minimal = covers.cusp_cover_via_blowup(chi_x, k2_x, n)
            d = covers.blown_up_cusp_data(n)
            rep.note(f"blow-up: K^2 = {k2_x} - {n} = {k2_x - n}; "
                     f"L^2 = {d.L2}, KL = {d.KL}, LM = {d.LM}")
            rep.note(f"cover of the blow-up: chi = {blown.chi}, K^2 = {blown.k2}")
            per = covers.contract_minus_one_curves(covers.cusp_local_preimage())
            rep.note(f"contract {per} curves over each cusp: K^2 = {blown.k2} + {per}*{n} = {minimal.k2}")
            rep.check("long route chi", minimal.chi, out.chi)
            rep.check("long route K^2", minimal.k2, out.k2)
    else:
        raise InputError(f"unknown formula {formula!r}")
    for key in ("chi", "q", "pg", "k2"):
        val = getattr(out, key)
        if val is not None or key in expect:
            rep.check(key, val, expect.get(key))
    if "euler_number" in obj:
        rep.check("Noether: 12 chi - K^2 = e", 12 * out.chi - out.k2, obj["euler_number"])
    return rep


def cmd_linsys(obj: dict) -> VerificationReport:
    expect = obj.get("expect", {})
    rep = VerificationReport("linsys", digest(_inputs(obj)))
    q1 = PlaneQuartic.from_dict(obj["q1"])
    q2 = PlaneQuartic.from_dict(obj["q2"])
    weights = tuple(obj.get("weights", (1, 1, 1, 2, 2)))
    degree = int(obj.get("degree", 3))
    verdict = configuration_check(q1, q2)
    for line in verdict.checks:
        rep.note(line)
    rep.check("configuration check", verdict.failure or "passed", "passed")
    if not verdict.passed:
        return rep
    monos = monomials(weights, degree)
    rep.check(f"monomials of weighted degree {degree} in P{weights}", len(monos),
              expect.get("monomials"))
    if obj.get("points", "cusps") == "cusps":
        points = cusps_of_bidouble(q1, q2)
        for p in points:
            rep.note(f"cusp over {p.side}: ({':'.join(str(x) for x in p.base)}), w = {p.w}, t = {p.t}")
        rep.check("cusp points", len(points), 12)
    else:
        points = [tuple(x) for x in obj["points"]]
    dim, _, system = multiplicity_system_dimension(degree, points, weights)
    rep.note(f"condition matrix {len(system.condition_matrix)} x {len(monos)}, rank {system.rank}")
    rep.check("forms of degree 3 singular at every point (dimension)", dim, 0)
    return rep


def cmd_group(obj: dict, action: str, limit: int) -> VerificationReport:
    expect = obj.get("expect", {})
    pres, subgroups = presentation_from_dict(obj)
    rep = VerificationReport(f"group:{action}", digest({**_inputs(obj), "limit": limit}))
    rep.note(f"presentation < {pres} >")
    if action == "index":
        for name, gens in (subgroups or {"1": []}).items():
            table = coset_enumerate(pres, gens, limit)
            rep.check(f"index of {name}", table.index, expect.get(f"index_{name}"))
            rep.check(f"coset table of {name} is a valid action",
                      table.check(pres.relators, gens), True)
    elif action == "abelian":
        inv = abelian_invariants(pres)
        rep.note(f"abelianization: {inv}")
        rep.check("abelian invariants", list(inv.invariant_factors), expect.get("abelian"))
    elif action in ("intersect", "pipeline"):
        if len(subgroups) < 2:
            raise InputError("intersect needs two named subgroups")
        (hn, hg), (kn, kg) = list(subgroups.items())[:2]
        inter = subgroup_intersection(pres, hg, kg, limit)
        rep.note(f"[{hn}] = {inter.index_h}, [{kn}] = {inter.index_k}")
        rep.check(f"index of {hn} meet {kn}", inter.index, expect.get("intersection_index"))
        rep.check("index bounded by the product", inter.index <= inter.index_h * inter.index_k, True)
        if action == "pipeline":
            table = coset_enumerate(pres, inter.generators, limit)
            rep.check("enumerated index of the intersection", table.index, inter.index)
            sub = reidemeister_schreier(pres, table)
            rep.note(f"subgroup presentation: {sub.ngens} generators, {len(sub.relators)} relators")
            inv = abelian_invariants(sub)
            rep.note(f"abelianization of the intersection: {inv}")
            rep.check("b1 = free rank of H1", inv.free_rank, 0)
            rep.note("b1 = 2q, so q = 0" if inv.free_rank == 0
                     else f"b1 = {inv.free_rank}: q = {inv.free_rank // 2}")
    elif action == "involution":
        v = has_involution(pres, limit)
        rep.note(v.reason)
        rep.check("group order", v.order, expect.get("order"))
        rep.check("group has an involution", v.has_involution, expect.get("has_involution", False))
    else:
        raise InputError(f"unknown group action {action!r}")
    return rep


def cmd_bounds(chi: int, q: int, k2: int, divides: int, no_involution: bool,
               quotient: tuple[int, int] | None = None,
               expect: dict | None = None) -> VerificationReport:
    expect = expect or {}
    args = {"chi": chi, "q": q, "k2": k2, "divides": divides,
            "no_involution": no_involution, "quotient": quotient}
    rep = VerificationReport("bounds", digest(args))
    b = covers.canonical_degree_candidates(chi, q, k2, divides)
    for line in b.trace:
        rep.note(line)
    if quotient is not None:
        pencil = covers.pencil_test(*quotient)
        rep.note(f"quotient surface: a pencil would need {pencil.k2} >= {pencil.bound}")
        rep.check("canonical map not composed with a pencil", pencil.not_composed, True)
    kept = covers.eliminate_involution_degrees(b, no_involution)
    if no_involution:
        dropped = sorted(set(b.degrees) - set(kept))
        rep.note(f"no involution on the quotient: drop {dropped}")
    rep.check("candidate degrees", {str(d): img for d, img in kept.items()}, expect.get("degrees"))
    return rep


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="canon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", help="JSON input (defaults to the bundled fixture)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--coset-limit", type=int, default=DEFAULT_LIMIT)

    common(sub.add_parser("divisibility", help="3-divisibility of a cusp configuration"))
    common(sub.add_parser("invariants", help="cover invariant formulas"))
    common(sub.add_parser("linsys", help="double-point conditions at the bidouble cusps"))
    g = sub.add_parser("group", help="finitely presented group computations")
    g.add_argument("action", choices=("index", "abelian", "intersect", "involution", "pipeline"))
    common(g)
    b = sub.add_parser("bounds", help="canonical degree candidates")
    common(b)
    for name in ("chi", "q", "k2", "divides", "quotient-chi", "quotient-k2"):
        b.add_argument(f"--{name}", type=int)
    b.add_argument("--no-involution", action="store_true")
    return parser


def run(argv=None) -> tuple[int, str]:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "bounds" and args.chi is not None:
            quotient = None
            if args.quotient_chi is not None and args.quotient_k2 is not None:
                quotient = (args.quotient_chi, args.quotient_k2)
            report = cmd_bounds(args.chi, args.q or 0, args.k2, args.divides or 1,
                                args.no_involution, quotient)
        else:
            path = args.input or fixture_path(DEFAULT_FIXTURES[args.command])
            obj = _load(path)
            if args.command == "divisibility":
                report = cmd_divisibility(obj)
            elif args.command == "invariants":
                report = cmd_invariants(obj)
            elif args.command == "linsys":
                report = cmd_linsys(obj)
            elif args.command == "group":
                report = cmd_group(obj, args.action, args.coset_limit)
            else:
                quotient = obj.get("quotient")
                report = cmd_bounds(obj["chi"], obj.get("q", 0), obj["k2"], obj.get("divides", 1),
                                    bool(obj.get("no_involution", False)),
                                    None if quotient is None else (quotient["chi"], quotient["k2"]),
                                    obj.get("expect"))
    except CosetLimitExceeded as exc:
        return EXIT_LIMIT, f"error: {exc}"
    except (InputError, PresentationSyntaxError, covers.ParityError) as exc:
        return EXIT_INPUT, f"error: {exc}"
    except (KeyError, TypeError, ValueError) as exc:
        return EXIT_INPUT, f"error: invalid input: {exc}"
    text = report.to_json() if args.format == "json" else report.to_text()
    return (EXIT_PASS if report.verdict == "pass" else EXIT_FAIL), text


def main(argv=None) -> int:
    code, text = run(argv)
    stream = sys.stderr if code in (EXIT_INPUT, EXIT_LIMIT) else sys.stdout
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
