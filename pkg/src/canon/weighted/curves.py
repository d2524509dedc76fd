"""Tricuspidal plane quartics and the 12 cusps of the bidouble plane
``w^2 = q1, t^2 = q2``."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

import sympy

from ..linalg import det
from .polynomials import Poly
from .scalars import QuadExt

COORDINATE_POINTS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def standard_tricuspidal() -> Poly:
    """``x^2 y^2 + y^2 z^2 + z^2 x^2 - 2xyz(x + y + z)``, cusps at the
    coordinate points."""
    t = {
        (2, 2, 0): 1, (0, 2, 2): 1, (2, 0, 2): 1,
        (2, 1, 1): -2, (1, 2, 1): -2, (1, 1, 2): -2,
    }
    return Poly(3, t)


def _integral_point(v: Sequence) -> tuple[int, ...]:
    """Scale a rational projective point to coprime integers, first nonzero
    coordinate positive."""
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    if next(x for x in ints if x) < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def _solve(matrix, rhs) -> list[Fraction]:
    """Solve the invertible square system ``matrix @ x = rhs``."""
    n = len(matrix)
    aug = [[Fraction(a) for a in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c] / aug[c][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [aug[i][n] / aug[i][i] for i in range(n)]


@dataclass(frozen=True)
class PlaneQuartic:
    """A plane quartic together with its (claimed) cusps."""

    poly: Poly
    cusps: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {**self.poly.to_dict(("x", "y", "z")), "cusps": [list(p) for p in self.cusps]}

    @classmethod
    def from_dict(cls, obj) -> "PlaneQuartic":
        if "transform" in obj:
            q = tricuspidal_quartic(obj["transform"])
            if "terms" in obj and Poly.from_dict(obj).primitive() != q.poly.primitive():
                raise ValueError("stored terms disagree with the stated transform")
            return q
        poly = Poly.from_dict(obj)
        if poly.nvars != 3:
            raise ValueError("a plane curve needs three variables")
        return cls(poly, tuple(tuple(int(x) for x in p) for p in obj.get("cusps", ())))


def tricuspidal_quartic(transform: Sequence[Sequence] | None = None) -> PlaneQuartic:
    """The standard tricuspidal quartic pulled back along ``transform``.

    With ``g(v) = f(T v)`` the cusps of ``g`` are ``T^{-1} e_i``.  Every
    returned point is checked to be an A2 singularity.
    """
    f = standard_tricuspidal()
    if transform is None:
        quartic = PlaneQuartic(f, COORDINATE_POINTS)
    else:
        T = [[Fraction(x) for x in row] for row in transform]
        if len(T) != 3 or any(len(r) != 3 for r in T):
            raise ValueError("transform must be 3x3")
        den = 1
        for row in T:
            for x in row:
                den = lcm(den, x.denominator)
        if det([[int(x * den) for x in row] for row in T]) == 0:
            raise ValueError("singular transform")
        g = f.linear_transform(T).primitive()
        cusps = tuple(_integral_point(_solve(T, e)) for e in COORDINATE_POINTS)
        quartic = PlaneQuartic(g, cusps)
    for p in quartic.cusps:
        if not is_ordinary_cusp(quartic.poly, p):
            raise AssertionError(f"{p} is not an ordinary cusp")  # cannot happen
    return quartic


def local_expansion(f: Poly, point: Sequence[int]) -> tuple[Poly, tuple[int, int]]:
    """Affine expansion ``h(s, t) = f(p + s e_a + t e_b)`` around ``p`` in a
    chart where ``p`` has a nonzero coordinate; returns ``h`` and ``(a, b)``."""
    k = next(i for i, x in enumerate(point) if x)
    a, b = (i for i in range(3) if i != k)
    subs = []
    for i in range(3):
        terms = {(0, 0): point[i]}
        if i == a:
            terms[(1, 0)] = 1
        if i == b:
            terms[(0, 1)] = 1
        subs.append(Poly(2, terms))
    return f.compose(subs), (a, b)


def is_ordinary_cusp(f: Poly, point: Sequence[int]) -> bool:
    """A2 test: ``f`` vanishes to order exactly 2 at ``point``, the quadratic
    part is a nonzero square ``l^2`` and the cubic part is not divisible by
    ``l``."""
    h, _ = local_expansion(f, point)
    if h.homogeneous_part(0) or h.homogeneous_part(1):
        return False
    q = h.homogeneous_part(2)
    A = q.terms.get((2, 0), Fraction(0))
    B = q.terms.get((1, 1), Fraction(0))
    C = q.terms.get((0, 2), Fraction(0))
    if not q or B * B - 4 * A * C != 0:
        return False
    direction = (-B, 2 * A) if A else (1, 0)
    return h.homogeneous_part(3)(*direction) != 0


# ---------------------------------------------------------------------------
# configuration of two quartics

@dataclass(frozen=True)
class ConfigurationVerdict:
    passed: bool
    failure: str = ""
    projection: tuple[int, int] | None = None
    checks: tuple[str, ...] = ()

    def __bool__(self):
        return self.passed


_X, _Y, _Z = sympy.symbols("x y z")

# shears (x, y, z) -> (x + a z, y + b z, z), tried in order until the
# projection from (0:0:1) separates the intersection points
_PROJECTIONS = sorted(itertools.product(range(-3, 4), repeat=2),
                      key=lambda p: (abs(p[0]) + abs(p[1]), p))


def _binary_squarefree(r: sympy.Poly) -> bool:
    """Is the binary form ``r(x, y)`` (homogeneous) squarefree?"""
    total = r.total_degree()
    u = sympy.Poly(r.as_expr().subs(_Y, 1), _X)
    at_infinity = total - u.degree()
    if at_infinity > 1:
        return False
    return sympy.degree(sympy.gcd(u, u.diff(_X)), _X) == 0


def configuration_check(q1: PlaneQuartic, q2: PlaneQuartic) -> ConfigurationVerdict:
    """Necessary conditions for ``Q1 + Q2`` to have 6 cusps and 16 nodes.

    Each curve must be irreducible with its listed points ordinary cusps;
    no cusp of one curve may lie on the other; and the resultant of the two
    equations, taken after a shear that puts the projection centre off both
    curves, must be a nonzero squarefree binary form of degree 16 (so the
    curves meet in 16 distinct points, transversally).
    """
    checks = []
    for name, q in (("Q1", q1), ("Q2", q2)):
        if q.poly.degree() != 4 or not q.poly.is_homogeneous():
            return ConfigurationVerdict(False, f"{name} is not a homogeneous quartic")
        if len(set(q.cusps)) != 3 or not all(is_ordinary_cusp(q.poly, p) for p in q.cusps):
            return ConfigurationVerdict(False, f"{name} does not have 3 ordinary cusps")
        factors = sympy.factor_list(q.poly.to_sympy((_X, _Y, _Z)))[1]
        if len(factors) != 1 or factors[0][1] != 1:
            return ConfigurationVerdict(False, f"{name} is reducible")
    checks.append("both curves irreducible quartics with 3 ordinary cusps")

    resultants = _projected_resultants(q1.poly, q2.poly)
    shear, res = next(resultants)
    if res.is_zero:
        return ConfigurationVerdict(False, "resultant vanishes: common component",
                                    shear, tuple(checks))
    checks.append("resultant is nonzero: no common component")
    for (na, a), (nb, b) in ((("Q1", q1), ("Q2", q2)), (("Q2", q2), ("Q1", q1))):
        for p in a.cusps:
            if b.poly(*p) == 0:
                return ConfigurationVerdict(False, f"cusp {p} of {na} lies on {nb}",
                                            None, tuple(checks))
    checks.append("no cusp of either curve lies on the other")
    while True:
        if res.total_degree() != 16:
            return ConfigurationVerdict(False, "resultant does not have degree 16",
                                        shear, tuple(checks))
        if _binary_squarefree(res):
            checks.append(f"resultant after shear {shear} has degree 16 and is squarefree")
            return ConfigurationVerdict(True, "", shear, tuple(checks))
        nxt = next(resultants, None)
        if nxt is None:
            return ConfigurationVerdict(False, "intersection is not 16 distinct transverse points",
                                        None, tuple(checks))
        shear, res = nxt


def _projected_resultants(f: Poly, g: Poly):
    """Yield ``(shear, res_z)`` for each shear whose projection centre
    ``(0:0:1)`` lies on neither curve."""
    syms = (_X, _Y, _Z)
    for sa, sb in _PROJECTIONS:
        m = [[1, 0, sa], [0, 1, sb], [0, 0, 1]]
        fs, gs = f.linear_transform(m), g.linear_transform(m)
        if fs(0, 0, 1) == 0 or gs(0, 0, 1) == 0:
            continue
        res = sympy.resultant(fs.to_sympy(syms), gs.to_sympy(syms), _Z)
        yield (sa, sb), sympy.Poly(sympy.expand(res), _X, _Y)


# ---------------------------------------------------------------------------
# the bidouble plane

@dataclass(frozen=True)
class CuspPoint:
    """A point ``(x:y:z, w, t)`` of ``w^2 = q1, t^2 = q2``."""

    base: tuple[Fraction, Fraction, Fraction]
    w: QuadExt
    t: QuadExt
    side: str

    def coordinates(self) -> tuple:
        return (*self.base, self.w, self.t)


def cusps_of_bidouble(q1: PlaneQuartic, q2: PlaneQuartic) -> list[CuspPoint]:
    """The 12 points over the cusps of ``Q1`` and ``Q2``.

    Over a cusp ``p`` of ``Q1``: ``w = 0``, ``t = +-sqrt(q2(p))``; over a
    cusp of ``Q2`` symmetrically.  Each conjugate pair lives in its own
    quadratic field.
    """
    points = []
    for side, own, other in (("Q1", q1, q2), ("Q2", q2, q1)):
        for p in own.cusps:
            val = other.poly(*p)
            if val == 0:
                raise ValueError(f"cusp {p} of {side} lies on the other curve")
            root = QuadExt.sqrt(val)
            base = tuple(Fraction(x) for x in p)
            for r in (root, -root):
                w, t = (QuadExt(0), r) if side == "Q1" else (r, QuadExt(0))
                pt = CuspPoint(base, w, t, side)
                assert pt.w * pt.w == q1.poly(*base) and pt.t * pt.t == q2.poly(*base)
                points.append(pt)
    return points

