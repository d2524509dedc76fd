"""Linear systems of weighted-homogeneous forms with double-point conditions."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..linalg import rank, rational_kernel
from .polynomials import Poly
from .scalars import QuadExt

P11122 = (1, 1, 1, 2, 2)


def monomials(weights: Sequence[int], degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of weighted degree exactly ``degree``, in descending
    lexicographic order (``x^3`` before ``x^2 y`` before ...)."""
    weights = tuple(weights)
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    out: list[tuple[int, ...]] = []

    def rec(i, left, prefix):
        if i == len(weights) - 1:
            if left % weights[i] == 0:
                out.append(prefix + (left // weights[i],))
            return
        for k in range(left // weights[i], -1, -1):
            rec(i + 1, left - k * weights[i], prefix + (k,))

    if degree >= 0 and weights:
        rec(0, degree, ())
    return out


def _as_scalar(x):
    return x if isinstance(x, QuadExt) else QuadExt(x)


def _monomial_value(e: Sequence[int], point: Sequence[QuadExt]) -> QuadExt:
    v = QuadExt(1)
    for k, x in zip(e, point):
        if k:
            v = v * x ** k
    return v


def condition_rows(monos: Sequence[tuple[int, ...]], point: Sequence) -> list[list[QuadExt]]:
    """Rows ``[m(P) for m]`` and ``[d m / d x_i (P) for m]`` for every
    variable: the conditions for ``f`` to lie in the square of the maximal
    ideal of ``P`` in the ambient polynomial ring."""
    pt = [_as_scalar(x) for x in point]
    rows = [[_monomial_value(e, pt) for e in monos]]
    for i in range(len(pt)):
        row = []
        for e in monos:
            if e[i] == 0:
                row.append(QuadExt(0))
            else:
                e2 = list(e)
                e2[i] -= 1
                row.append(e[i] * _monomial_value(e2, pt))
        rows.append(row)
    return rows


def split_rational(rows: Sequence[Sequence[QuadExt]]) -> list[list[Fraction]]:
    """Replace each row over ``Q(sqrt m)`` by its rational and irrational
    coefficient rows; a rational solution kills both, hence vanishes at the
    point and at its conjugate.  Zero rows are dropped."""
    out = []
    for row in rows:
        re = [x.u for x in row]
        im = [x.v for x in row]
        for r in (re, im):
            if any(r):
                out.append(r)
    return out


@dataclass(frozen=True)
class WeightedLinearSystem:
    weights: tuple[int, ...]
    degree: int
    monomials: tuple[tuple[int, ...], ...]
    condition_matrix: tuple[tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return rank(self.condition_matrix)

    @property
    def dimension(self) -> int:
        """Vector-space dimension of the forms satisfying every condition."""
        return len(self.monomials) - self.rank

    def kernel(self) -> list[Poly]:
        basis = rational_kernel(self.condition_matrix, len(self.monomials))
        return [Poly(len(self.weights), dict(zip(self.monomials, v))) for v in basis]


def double_point_system(degree: int, points: Sequence[Sequence],
                        weights: Sequence[int] = P11122) -> WeightedLinearSystem:
    monos = monomials(weights, degree)
    mat = []
    for p in points:
        coords = p.coordinates() if hasattr(p, "coordinates") else p
        if len(coords) != len(weights):
            raise ValueError(f"point {coords} has the wrong number of coordinates")
        mat.extend(split_rational(condition_rows(monos, coords)))
    return WeightedLinearSystem(tuple(weights), degree, tuple(monos),
                                tuple(tuple(r) for r in mat))


def multiplicity_system_dimension(degree: int, points: Sequence[Sequence],
                                  weights: Sequence[int] = P11122):
    """Dimension and kernel of the forms of weighted degree ``degree`` whose
    value and all first partials vanish at every point.

    Returns ``(dimension, kernel_polys, system)``.
    """
    system = double_point_system(degree, points, weights)
    kernel = system.kernel()
    assert len(kernel) == system.dimension
    return system.dimension, kernel, system
