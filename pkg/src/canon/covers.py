"""Numerical invariants of double, bidouble and Galois triple covers of
surfaces, and the inequalities that bound the degree of a canonical map.

Cohomology ranks such as ``h0(K + L)`` are always inputs; nothing here
computes sheaf cohomology.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence


class ParityError(ValueError):
    """Intersection data would give a half-integral Euler characteristic."""


@dataclass(frozen=True)
class SurfaceInvariants:
    """``chi(O)``, ``q``, ``p_g`` and ``K^2`` of a smooth surface.

    Any of ``q``/``pg``/``k2`` may be unknown (``None``).  When ``chi``,
    ``q`` and ``pg`` are all set they must satisfy ``chi = 1 - q + pg``.
    """

    chi: int
    q: int | None = None
    pg: int | None = None
    k2: int | None = None
    minimal: bool = True

    def __post_init__(self):
        if self.q is not None and self.pg is not None:
            if self.chi != 1 - self.q + self.pg:
                raise ValueError(
                    f"inconsistent invariants: chi={self.chi}, q={self.q}, pg={self.pg}")
        elif self.q is not None and self.pg is None:
            object.__setattr__(self, "pg", self.chi - 1 + self.q)
        elif self.pg is not None and self.q is None:
            object.__setattr__(self, "q", 1 - self.chi + self.pg)

    def euler_number(self) -> int | None:
        """Topological Euler number from Noether's formula."""
        return None if self.k2 is None else 12 * self.chi - self.k2

    def as_dict(self) -> dict:
        return {"chi": self.chi, "q": self.q, "pg": self.pg, "k2": self.k2}


P2 = SurfaceInvariants(chi=1, q=0, pg=0, k2=9)


def _half(numerator: int, what: str) -> int:
    if numerator % 2:
        raise ParityError(f"{what} is odd ({numerator}); intersection data inconsistent")
    return numerator // 2


@dataclass(frozen=True)
class TripleCoverData:
    """Intersection numbers on the base of the divisors ``L``, ``M`` defining
    a Galois triple cover (branch ``B in |2L - M|``, ``C in |2M - L|``)."""

    L2: int
    KL: int
    M2: int
    KM: int
    LM: int
    h0_KL: int | None = None
    h0_KM: int | None = None
    h1_KL: int | None = None
    h1_KM: int | None = None
    smooth_branch: bool = True

    @classmethod
    def plane(cls, deg_l: int, deg_m: int, **kw) -> "TripleCoverData":
        """Data for ``L = O(deg_l)``, ``M = O(deg_m)`` on the projective plane."""
        return cls(L2=deg_l ** 2, KL=-3 * deg_l, M2=deg_m ** 2, KM=-3 * deg_m,
                   LM=deg_l * deg_m, **kw)


def triple_cover_invariants(base: SurfaceInvariants, data: TripleCoverData) -> SurfaceInvariants:
    """Invariants of a Galois triple cover with smooth branch locus.

    ``q`` and ``p_g`` of the cover are filled in only when the matching
    ``h1``/``h0`` values are supplied.
    """
    a = data.L2 + data.KL
    b = data.M2 + data.KM
    chi = 3 * base.chi + _half(a, "L^2 + KL") + _half(b, "M^2 + KM")
    k2 = None
    if base.k2 is not None:
        k2 = 3 * base.k2 + 4 * a + 4 * b - 4 * data.LM
    q = pg = None
    if None not in (base.q, data.h1_KL, data.h1_KM):
        q = base.q + data.h1_KL + data.h1_KM
    if None not in (base.pg, data.h0_KL, data.h0_KM):
        pg = base.pg + data.h0_KL + data.h0_KM
    return SurfaceInvariants(chi=chi, q=q, pg=pg, k2=k2, minimal=False)


def double_cover_invariants(base: SurfaceInvariants, L2: int, KL: int,
                            h0_KL: int | None = None) -> SurfaceInvariants:
    """Smooth double cover branched on a smooth curve in ``|2L|``."""
    chi = 2 * base.chi + _half(L2 + KL, "L(K + L)")
    k2 = None if base.k2 is None else 2 * (base.k2 + 2 * KL + L2)
    pg = None if base.pg is None or h0_KL is None else base.pg + h0_KL
    return SurfaceInvariants(chi=chi, pg=pg, k2=k2, minimal=False)


@dataclass(frozen=True)
class BidoubleClass:
    """One of the three classes ``J_i`` with ``2 J_i = D_j + D_k``."""

    J2: int
    KJ: int
    h0_K_plus_J: int = 0

    @classmethod
    def plane(cls, degree: int, h0_K_plus_J: int | None = None) -> "BidoubleClass":
        if h0_K_plus_J is None:
            # h0(O(degree - 3)) on the plane
            e = degree - 3
            h0_K_plus_J = (e + 1) * (e + 2) // 2 if e >= 0 else 0
        return cls(J2=degree ** 2, KJ=-3 * degree, h0_K_plus_J=h0_K_plus_J)


def bidouble_invariants(base: SurfaceInvariants, classes: Sequence[BidoubleClass],
                        branch: tuple[int, int] | None = None) -> SurfaceInvariants:
    """Invariants of a smooth bidouble cover.

    ``branch`` optionally gives ``(D^2, K.D)`` for the total branch divisor
    ``D``, from which ``K^2 = 4 (K + D/2)^2`` is computed.
    """
    if len(classes) != 3:
        raise ValueError("a bidouble cover needs exactly three classes J_1, J_2, J_3")
    chi = 4 * base.chi + _half(sum(j.J2 + j.KJ for j in classes), "sum J(K + J)")
    pg = None if base.pg is None else base.pg + sum(j.h0_K_plus_J for j in classes)
    k2 = None
    if branch is not None and base.k2 is not None:
        d2, kd = branch
        k2 = 4 * base.k2 + 4 * kd + d2
    return SurfaceInvariants(chi=chi, pg=pg, k2=k2, minimal=False)


# ---------------------------------------------------------------------------
# triple covers branched on 3-divisible cusps

def cusp_triple_cover(chi_X: int, k2_Xprime: int, n: int) -> SurfaceInvariants:
    """Minimal model of the triple cover branched on ``n`` 3-divisible cusps.

    ``k2_Xprime`` is ``K^2`` of the surface with the cusps (equal to that of
    its minimal resolution).  Returns ``chi = 3 chi_X - 2n/3`` and
    ``K^2 = 3 K^2_X``.
    """
    if n < 0 or n % 3:
        raise ValueError(f"number of cusps must be a nonnegative multiple of 3, got {n}")
    chi = 3 * chi_X - 2 * n // 3
    if n == 3 * chi_X:
        assert chi == chi_X
    return SurfaceInvariants(chi=chi, k2=3 * k2_Xprime)


def blown_up_cusp_data(n: int) -> TripleCoverData:
    """Triple-cover data on the blow-up of the ``n`` intersection points
    ``A_i . A_i'``.

    The strict transforms are disjoint (-3)-curves; with ``B = sum A_i``,
    ``C = sum A_i'`` one has ``B^2 = C^2 = -3n``, ``KB = KC = n``,
    ``BC = 0`` and ``3L = 2B + C``, ``3M = B + 2C``.
    """
    if n % 3:
        raise ValueError("n must be divisible by 3")
    b2 = c2 = -3 * n
    kb = kc = n
    return TripleCoverData(
        L2=(4 * b2 + c2) // 9, KL=(2 * kb + kc) // 3,
        M2=(b2 + 4 * c2) // 9, KM=(kb + 2 * kc) // 3,
        LM=(2 * b2 + 2 * c2) // 9,
    )


def contract_minus_one_curves(gram: Sequence[Sequence[int]], genus: Sequence[int] | None = None) -> int:
    """Repeatedly blow down smooth rational (-1)-curves in a configuration.

    Contracting ``E`` changes every other pairing by ``C.D += (C.E)(D.E)``.
    Returns the number of contractions, i.e. the increase of ``K^2``.
    """
    g = [list(r) for r in gram]
    alive = list(range(len(g)))
    genus = list(genus) if genus is not None else [0] * len(g)
    count = 0
    while True:
        e = next((i for i in alive if g[i][i] == -1 and genus[i] == 0), None)
        if e is None:
            return count
        alive.remove(e)
        snapshot = {(c, d): g[c][d] for c in alive for d in alive}
        for c in alive:
            for d in alive:
                g[c][d] = snapshot[c, d] + g[c][e] * g[d][e]
        count += 1


def cusp_local_preimage() -> list[list[int]]:
    """Curves over one blown-up cusp, upstairs in the triple cover.

    The branch curves pull back to ``3R`` with ``R^2 = -1``; the exceptional
    (-1)-curve, totally ramified at its two branch points, lifts to a
    rational (-3)-curve meeting both.
    """
    return [[-1, 0, 1],
            [0, -1, 1],
            [1, 1, -3]]


def cusp_cover_via_blowup(chi_X: int, k2_X: int, n: int):
    """Long route to :func:`cusp_triple_cover`.

    Blow up the ``n`` points, apply the smooth-branch triple-cover formulas,
    then blow down the local configuration over every cusp.  Returns
    ``(cover_of_blowup, minimal_model)``.
    """
    blown = SurfaceInvariants(chi=chi_X, k2=k2_X - n)
    cover = triple_cover_invariants(blown, blown_up_cusp_data(n))
    per_cusp = contract_minus_one_curves(cusp_local_preimage())
    return cover, replace(cover, k2=cover.k2 + n * per_cusp, minimal=True)


# ---------------------------------------------------------------------------
# degree of the canonical map

BEAUVILLE_CAP_PG0 = 36
BEAUVILLE_CAP_CANONICAL = 9


@dataclass(frozen=True)
class DegreeCandidate:
    degree: int
    branch: str  # "non-ruled" or "ruled"
    image: str


@dataclass(frozen=True)
class DegreeBounds:
    chi: int
    q: int
    pg: int
    k2: int
    divides: int
    non_ruled: tuple[int, ...]
    ruled: tuple[int, ...]
    candidates: tuple[DegreeCandidate, ...]
    trace: tuple[str, ...]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.non_ruled) | set(self.ruled)))


def canonical_degree_candidates(chi: int, q: int, k2: int, divides: int = 1) -> DegreeBounds:
    """Degrees ``d`` of a canonical map onto a surface compatible with

        9 chi >= K^2 >= d deg(image) >= n d (p_g - 2),

    with ``n = 2`` for a non-ruled image and ``n = 1`` for a ruled one, and
    Beauville's caps (``d <= 36`` if the image has ``p_g = 0``, ``d <= 9``
    for a canonical image).  Only multiples of ``divides`` are kept.
    """
    pg = chi - 1 + q
    if pg < 3:
        raise ValueError(f"p_g = {pg} < 3: the canonical image is not a surface")
    if divides < 1:
        raise ValueError("divides must be positive")
    if k2 > 9 * chi:
        raise ValueError(f"K^2 = {k2} exceeds 9 chi = {9 * chi}")
    trace = [f"p_g = chi - 1 + q = {chi} - 1 + {q} = {pg}",
             f"9 chi = {9 * chi} >= K^2 = {k2} >= d deg(image) >= n d (p_g - 2) = {pg - 2} n d"]
    branches = {}
    for n, name in ((2, "non-ruled"), (1, "ruled")):
        bound = k2 // (n * (pg - 2))
        cap = BEAUVILLE_CAP_PG0
        top = min(bound, cap)
        ds = tuple(d for d in range(divides, top + 1, divides))
        branches[name] = ds
        trace.append(f"{name} image (n = {n}): {n * (pg - 2)} d <= {k2}, so d <= {bound}; "
                     f"multiples of {divides}: {list(ds)}")
    image_ruled = "rational" if q == 0 else "ruled"
    cands = []
    for d in branches["non-ruled"]:
        kind = "any" if d <= BEAUVILLE_CAP_CANONICAL else "p_g = 0"
        cands.append(DegreeCandidate(d, "non-ruled", kind))
    for d in branches["ruled"]:
        cands.append(DegreeCandidate(d, "ruled", image_ruled))
    return DegreeBounds(chi, q, pg, k2, divides, branches["non-ruled"], branches["ruled"],
                        tuple(cands), tuple(trace))


@dataclass(frozen=True)
class PencilVerdict:
    chi: int
    k2: int
    bound: int

    @property
    def not_composed(self) -> bool:
        """True when ``K^2 < 4 chi - 10``, which rules out a pencil."""
        return self.k2 < self.bound

    def __str__(self):
        rel = "<" if self.not_composed else ">="
        return f"K^2 = {self.k2} {rel} 4 chi - 10 = {self.bound}"


def pencil_test(chi: int, k2: int) -> PencilVerdict:
    """A canonical map composed with a pencil forces ``K^2 >= 4 chi - 10``."""
    return PencilVerdict(chi, k2, 4 * chi - 10)


def eliminate_involution_degrees(bounds: DegreeBounds, no_involution: bool) -> dict[int, str]:
    """Combine the two branches into ``{degree: image class}``.

    When the quotient by the triple cover is known to carry no involution, a
    candidate whose induced degree ``d / divides`` equals 2 is dropped: a
    degree-2 canonical map would supply one.
    """
    out: dict[int, str] = {}
    for c in bounds.candidates:
        if no_involution and c.degree // bounds.divides == 2 and c.degree % bounds.divides == 0:
            continue
        if c.degree in out and out[c.degree] != c.image:
            out[c.degree] = "any"
        else:
            out.setdefault(c.degree, c.image)
    return dict(sorted(out.items()))

