"""Exact dense linear algebra over the integers and the rationals.

Matrices are plain lists of rows.  Integer routines never leave ``int``;
rational routines use :class:`fractions.Fraction`.  Nothing here ever rounds.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


def as_matrix(data: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    """Copy ``data`` into a fresh list-of-lists, checking it is rectangular.

    ``ncols`` fixes the width of an empty matrix (zero rows).
    """
    rows = [list(r) for r in data]
    if rows:
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        if ncols is not None and ncols != width:
            raise ValueError(f"expected {ncols} columns, got {width}")
    return rows


def _check_integral(m: Matrix) -> None:
    for row in m:
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise TypeError(f"integer matrix expected, found {x!r}")


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def load_matrix(text: str) -> Matrix:
    """Parse the ``{"rows": [[...], ...]}`` JSON matrix format."""
    obj = json.loads(text)
    if not isinstance(obj, dict) or "rows" not in obj:
        raise ValueError('matrix JSON must be an object with a "rows" key')
    m = as_matrix(obj["rows"])
    _check_integral(m)
    return m


def dump_matrix(m: Sequence[Sequence[int]]) -> str:
    return json.dumps({"rows": [list(r) for r in m]})


# ---------------------------------------------------------------------------
# determinant and rank

def det(m: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    a = as_matrix(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    _check_integral(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def rank(m: Sequence[Sequence]) -> int:
    """Rank over the rationals; accepts ``int`` or ``Fraction`` entries."""
    a = [[Fraction(x) for x in row] for row in m]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        for i in range(r + 1, nrows):
            if a[i][c] != 0:
                f = a[i][c] * inv
                ai, ar = a[i], a[r]
                for j in range(c, ncols):
                    ai[j] -= f * ar[j]
        r += 1
        if r == nrows:
            break
    return r


def rational_kernel(m: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of the rational right kernel, from the reduced row echelon form."""
    a = [[Fraction(x) for x in row] for row in m]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][fc]
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# Smith and Hermite normal forms

@dataclass(frozen=True)
class SmithForm:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular and ``D`` diagonal."""

    D: tuple[tuple[int, ...], ...]
    U: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]
    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d != 0)


def _freeze(m: Matrix) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(r) for r in m)


def _smallest_pivot(a: Matrix, t: int):
    best = None
    for i in range(t, len(a)):
        row = a[i]
        for j in range(t, len(row)):
            x = row[j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
                if best[0] == 1:
                    return i, j
    return None if best is None else best[1:]


def smith_normal_form(m: Sequence[Sequence[int]], ncols: int | None = None) -> SmithForm:
    """Smith normal form with unimodular multipliers.

    Pivoting always takes the nonzero entry of least absolute value in the
    remaining block, ties going to the lowest (row, col), so the output is a
    deterministic function of the input.  ``ncols`` is only needed when ``m``
    has no rows.
    """
    a = as_matrix(m, ncols)
    _check_integral(a)
    nr = len(a)
    nc = len(a[0]) if a else (ncols or 0)
    U = identity(nr)
    V = identity(nc)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row[dst] += q * row[src]
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(nr, nc)):
        while True:
            piv = _smallest_pivot(a, t)
            if piv is None:
                break
            pi, pj = piv
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = a[t][t]
            clean = True
            for i in range(t + 1, nr):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, nc):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    clean = clean and a[t][j] == 0
            if not clean:
                continue
            bad = next((i for i in range(t + 1, nr)
                        if any(a[i][j] % p for j in range(t + 1, nc))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
        if a[t][t] == 0:
            break

    factors = tuple(a[i][i] for i in range(min(nr, nc)))
    return SmithForm(_freeze(a), _freeze(U), _freeze(V), factors)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return x0, y0, a


def hermite_normal_form(m: Sequence[Sequence[int]], ncols: int | None = None):
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U @ M == H``, ``U`` unimodular, ``H`` in row
    echelon form with positive pivots and entries above each pivot reduced
    into ``[0, pivot)``.  Zero rows are kept at the bottom.
    """
    a = as_matrix(m, ncols)
    _check_integral(a)
    nr = len(a)
    nc = len(a[0]) if a else (ncols or 0)
    U = identity(nr)
    r = 0
    for c in range(nc):
        if r == nr:
            break
        for i in range(r + 1, nr):
            if a[i][c] == 0:
                continue
            x, y, g = _xgcd(a[r][c], a[i][c])
            p, q = a[r][c] // g, a[i][c] // g
            # [[x, y], [-q, p]] has determinant 1
            a[r], a[i] = ([x * s + y * t for s, t in zip(a[r], a[i])],
                          [-q * s + p * t for s, t in zip(a[r], a[i])])
            U[r], U[i] = ([x * s + y * t for s, t in zip(U[r], U[i])],
                          [-q * s + p * t for s, t in zip(U[r], U[i])])
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-s for s in a[r]]
            U[r] = [-s for s in U[r]]
        p = a[r][c]
        for i in range(r):
            q = a[i][c] // p
            if q:
                a[i] = [s - q * t for s, t in zip(a[i], a[r])]
                U[i] = [s - q * t for s, t in zip(U[i], U[r])]
        r += 1
    return a, U


# ---------------------------------------------------------------------------
# integer kernels

def _primitive(v: list[int]) -> list[int]:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        v = [x // g for x in v]
    lead = next((x for x in v if x), 0)
    return [-x for x in v] if lead < 0 else v


def kernel_basis(m: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Basis of the saturated integer kernel ``{v in Z^n : M v = 0}``.

    The lattice is read off the Smith multiplier ``V``; the basis returned is
    the Hermite normal form of that lattice, so it does not depend on how the
    Smith form was reached.  Each vector is primitive with its first nonzero
    entry positive.
    """
    a = as_matrix(m, ncols)
    n = len(a[0]) if a else (ncols or 0)
    snf = smith_normal_form(a, n)
    r = snf.rank
    cols = [[snf.V[i][j] for i in range(n)] for j in range(r, n)]
    if not cols:
        return ()
    h, _ = hermite_normal_form(cols)
    return tuple(tuple(_primitive(row)) for row in h if any(row))
