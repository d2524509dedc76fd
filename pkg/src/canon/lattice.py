"""3-divisibility of cusp configurations from intersection data.

A cusp (A2 point) on a surface is resolved by two (-2)-curves ``A``, ``A'``
meeting once.  A set of cusps is 3-divisible when the curves can be labelled
so that ``sum(2 A_i + A_i')`` is three times a divisor class.  Numerically,
this asks for an integer relation among the curves whose coordinates are
``(2, 1)`` mod 3 on every cusp pair (after choosing the labelling) and
``0`` mod 3 on the auxiliary curves.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Sequence

from .linalg import as_matrix, kernel_basis, matvec, rank

A2_BLOCK = ((-2, 1), (1, -2))
BLOWN_UP_BLOCK = ((-3, 0), (0, -3))

YES, NO, INCONCLUSIVE = "yes", "no", "inconclusive"


@dataclass(frozen=True)
class CurveConfig:
    """Labelled curves with their intersection (Gram) matrix.

    ``cusp_pairs`` index the two exceptional curves over each cusp;
    ``auxiliary`` lists every other curve.  ``torsion_free_ns`` records the
    assumption that lets a numerical relation be read as a linear
    equivalence.
    """

    labels: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]
    cusp_pairs: tuple[tuple[int, int], ...]
    auxiliary: tuple[int, ...] = ()
    torsion_free_ns: bool = True
    allow_blown_up: bool = False

    def __post_init__(self):
        n = len(self.labels)
        g = as_matrix(self.gram)
        if len(g) != n or any(len(r) != n for r in g):
            raise ValueError(f"gram must be {n}x{n} to match the labels")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(i)):
            raise ValueError("gram matrix is not symmetric")
        if len(set(self.labels)) != n:
            raise ValueError("duplicate curve labels")
        used = [i for p in self.cusp_pairs for i in p] + list(self.auxiliary)
        if any(not 0 <= i < n for i in used):
            raise ValueError("curve index out of range")
        if len(set(used)) != len(used):
            raise ValueError("cusp pairs and auxiliary curves must be disjoint")
        allowed = {A2_BLOCK, BLOWN_UP_BLOCK} if self.allow_blown_up else {A2_BLOCK}
        for i, j in self.cusp_pairs:
            block = ((g[i][i], g[i][j]), (g[j][i], g[j][j]))
            if block not in allowed:
                raise ValueError(
                    f"pair ({self.labels[i]}, {self.labels[j]}) has block {block}, "
                    "not an A2 configuration")

    @classmethod
    def from_dict(cls, obj: dict) -> "CurveConfig":
        try:
            labels = obj["labels"]
            gram = obj["gram"]
            pairs = obj["cusp_pairs"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"config is missing field {exc}") from None
        return cls(
            labels=tuple(str(s) for s in labels),
            gram=tuple(tuple(int(x) for x in row) for row in gram),
            cusp_pairs=tuple((int(i), int(j)) for i, j in pairs),
            auxiliary=tuple(int(k) for k in obj.get("auxiliary", ())),
            torsion_free_ns=bool(obj.get("torsion_free_ns", True)),
            allow_blown_up=bool(obj.get("allow_blown_up", False)),
        )

    @classmethod
    def from_json(cls, text: str) -> "CurveConfig":
        return cls.from_dict(json.loads(text))

    def to_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "gram": [list(r) for r in self.gram],
            "cusp_pairs": [list(p) for p in self.cusp_pairs],
            "auxiliary": list(self.auxiliary),
            "torsion_free_ns": self.torsion_free_ns,
        }


def second_betti(chi: int, k2: int, q: int) -> int:
    """b2 from Noether's formula: ``12 chi - K^2 + 4 q - 2``."""
    return 12 * chi - k2 + 4 * q - 2


@dataclass(frozen=True)
class DependencyReport:
    n_curves: int
    rank: int
    ambient_b2: int
    kernel: tuple[tuple[int, ...], ...]

    @property
    def dependent(self) -> bool:
        """The Gram matrix is degenerate, so the curves cannot be independent
        in a lattice where the pairing restricted to them is nondegenerate."""
        return self.rank < self.n_curves

    @property
    def spans(self) -> bool:
        """At least b2 curves: were they independent they would span Num up
        to finite index, so the Gram kernel is exactly their numerical
        relations."""
        return self.n_curves >= self.ambient_b2


def dependency_check(config: CurveConfig, ambient_b2: int) -> DependencyReport:
    return DependencyReport(
        n_curves=len(config.labels),
        rank=rank(config.gram),
        ambient_b2=ambient_b2,
        kernel=kernel_basis(config.gram, len(config.labels)),
    )


@dataclass(frozen=True)
class DivisibilityCertificate:
    """Outcome of :func:`three_divisibility`.

    ``swaps[i]`` is true when pair ``i`` has to be read as ``(A', A)`` for
    the relation to have the ``(2, 1)`` pattern.  ``relation`` is an exact
    kernel vector of the Gram matrix (empty when no witness exists).
    """

    verdict: str
    swaps: tuple[bool, ...] = ()
    relation: tuple[int, ...] = ()
    relation_text: str = ""
    notes: tuple[str, ...] = field(default=())

    @property
    def divisible(self) -> bool:
        return self.verdict == YES


# --- arithmetic over F_3 ---------------------------------------------------

def _nullspace_mod3(rows: list[list[int]], n: int) -> list[list[int]]:
    """Basis of ``{x in F_3^n : rows . x = 0}``."""
    a = [[x % 3 for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c]  # 1 and 2 are self-inverse mod 3
        a[r] = [(x * inv) % 3 for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % 3 for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    basis = []
    for fc in (c for c in range(n) if c not in pivots):
        v = [0] * n
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-a[i][fc]) % 3
        basis.append(v)
    return basis


def _span_mod3(basis: list[list[int]], n: int):
    """All vectors of the F_3-span inside F_3^n, coefficient tuples in
    product order."""
    for coeffs in itertools.product(range(3), repeat=len(basis)):
        v = [0] * n
        for c, b in zip(coeffs, basis):
            if c:
                v = [(x + c * y) % 3 for x, y in zip(v, b)]
        yield coeffs, v


def _pattern_solutions(config: CurveConfig, kernel):
    """Yield ``(coeffs, signs)`` with ``sum(coeffs * kernel)`` matching the
    signed pattern ``signs[i] * (2, 1)`` mod 3 on each pair and 0 on the
    auxiliary curves.  Signs may be zero here; callers filter."""
    k, p = len(kernel), len(config.cusp_pairs)
    # unknowns: k kernel coefficients then p signs
    rows = []
    for i, (a, a2) in enumerate(config.cusp_pairs):
        for idx, want in ((a, 2), (a2, 1)):
            row = [b[idx] for b in kernel] + [0] * p
            row[k + i] = -want
            rows.append(row)
    for idx in config.auxiliary:
        rows.append([b[idx] for b in kernel] + [0] * p)
    null = _nullspace_mod3(rows, k + p)
    for _, sol in _span_mod3(null, k + p):
        yield sol[:k], sol[k:]


def _render(config: CurveConfig, relation: Sequence[int]) -> str:
    terms = []
    for a, a2 in config.cusp_pairs:
        for idx in (a, a2):
            c = relation[idx] % 3
            if c:
                terms.append(("" if c == 1 else "2") + config.labels[idx])
    return "+".join(terms) + " ≡ 3L"


def three_divisibility(config: CurveConfig) -> DivisibilityCertificate:
    """Decide whether the cusps of ``config`` are 3-divisible.

    The kernel lattice of the Gram matrix is reduced mod 3 and the labelling
    of each pair enters as an unknown sign (swapping ``A`` and ``A'`` turns
    the pattern ``(2, 1)`` into ``(1, 2) = -(2, 1)``).  The resulting linear
    system over F_3 is solved and its solutions are scanned for one with
    every sign nonzero.
    """
    if not config.cusp_pairs:
        raise ValueError("configuration has no cusp pairs")
    kernel = kernel_basis(config.gram, len(config.labels))
    witness = None
    if kernel:
        for coeffs, signs in _pattern_solutions(config, kernel):
            if all(signs):
                witness = coeffs, signs
                break

    notes = ()
    if not config.torsion_free_ns:
        notes = ("numerical relations lift to linear equivalence only when "
                 "NS is torsion free; flag not set",)
    if witness is None:
        return DivisibilityCertificate(
            INCONCLUSIVE if not config.torsion_free_ns else NO, notes=notes)

    coeffs, signs = witness
    if next(c for c in coeffs if c) == 2:
        # solutions come in +- pairs; keep the one leading with coefficient 1
        coeffs = [(2 * c) % 3 for c in coeffs]
        signs = [(2 * s) % 3 for s in signs]
    n = len(config.labels)
    relation = [0] * n
    for c, b in zip(coeffs, kernel):
        relation = [x + c * y for x, y in zip(relation, b)]
    assert not any(matvec(config.gram, relation))
    verdict = YES if config.torsion_free_ns else INCONCLUSIVE
    return DivisibilityCertificate(
        verdict=verdict,
        swaps=tuple(s == 2 for s in signs),
        relation=tuple(relation),
        relation_text=_render(config, relation),
        notes=notes,
    )

