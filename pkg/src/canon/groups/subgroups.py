"""Subgroup computations on top of coset enumeration."""
from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Sequence

from ..linalg import smith_normal_form
from .cosets import DEFAULT_LIMIT, CosetTable, coset_enumerate
from .words import Presentation, Word, exponent_sums, invert, reduce_word


@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant factors of the abelianization; ``0`` is a copy of Z."""

    invariant_factors: tuple[int, ...]

    @property
    def free_rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d == 0)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        return prod(self.invariant_factors) if self.is_finite else None

    def __str__(self):
        if not self.invariant_factors:
            return "trivial"
        return " x ".join("Z" if d == 0 else f"Z/{d}" for d in self.invariant_factors)


def abelian_invariants(pres: Presentation) -> AbelianInvariants:
    """Smith normal form of the relator exponent-sum matrix."""
    k = pres.ngens
    rows = [exponent_sums(r, k) for r in pres.relators]
    snf = smith_normal_form(rows, k)
    torsion = tuple(d for d in snf.invariant_factors if d > 1)
    return AbelianInvariants(torsion + (0,) * (k - snf.rank))


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Intersection:
    generators: tuple[Word, ...]
    index: int
    index_h: int
    index_k: int


def subgroup_intersection(pres: Presentation, h_gens: Sequence[Word], k_gens: Sequence[Word],
                          limit: int = DEFAULT_LIMIT) -> Intersection:
    """``H`` meet ``K`` as the stabilizer of ``(0, 0)`` under the product
    action on cosets of ``H`` times cosets of ``K``.

    The index is the orbit length of ``(0, 0)``; generators are the
    Schreier generators read off a breadth-first tree of that orbit.
    """
    th = coset_enumerate(pres, h_gens, limit)
    tk = coset_enumerate(pres, k_gens, limit)
    k = pres.ngens
    reps: dict[tuple[int, int], Word] = {(0, 0): ()}
    queue = [(0, 0)]
    for pt in queue:
        for g in range(k):
            for letter in (g + 1, -(g + 1)):
                nxt = (th.act(pt[0], (letter,)), tk.act(pt[1], (letter,)))
                if nxt not in reps:
                    reps[nxt] = reps[pt] + (letter,)
                    queue.append(nxt)
    gens: list[Word] = []
    seen = set()
    for pt in queue:
        for g in range(1, k + 1):
            nxt = (th.act(pt[0], (g,)), tk.act(pt[1], (g,)))
            w = reduce_word(reps[pt] + (g,) + invert(reps[nxt]))
            if w and w not in seen and invert(w) not in seen:
                seen.add(w)
                gens.append(w)
    return Intersection(tuple(gens), len(queue), th.index, tk.index)


# ---------------------------------------------------------------------------

def reidemeister_schreier(pres: Presentation, table: CosetTable) -> Presentation:
    """Presentation of the subgroup whose coset table is ``table``.

    Generators are the Schreier generators ``u_c g u_{cg}^{-1}`` not on the
    breadth-first transversal tree, named ``<gen>_<coset>``; relators are
    every relator rewritten from every coset.
    """
    if not table.complete:
        raise ValueError("Reidemeister-Schreier needs a complete coset table")
    if table.ngens != pres.ngens:
        raise ValueError("coset table does not belong to this presentation")
    reps = table.transversal()
    tree = set()
    for d, u in enumerate(reps):
        if not u:
            continue
        letter = u[-1]
        parent = table.act(d, (-letter,))
        tree.add((parent, letter) if letter > 0 else (d, -letter))
    index: dict[tuple[int, int], int] = {}
    names = []
    for c in range(table.index):
        for g in range(1, pres.ngens + 1):
            if (c, g) not in tree:
                index[c, g] = len(names) + 1
                names.append(f"{pres.generators[g - 1]}_{c}")

    def rewrite(c: int, word: Sequence[int]) -> Word:
        out = []
        for x in word:
            if x > 0:
                s = index.get((c, x))
                if s:
                    out.append(s)
                c = table.act(c, (x,))
            else:
                c = table.act(c, (x,))
                s = index.get((c, -x))
                if s:
                    out.append(-s)
        return reduce_word(out)

    relators = []
    seen = set()
    for c in range(table.index):
        for r in pres.relators:
            w = _cyclic_reduce(rewrite(c, r))
            if w and w not in seen:
                seen.add(w)
                relators.append(w)
    return Presentation(tuple(names), tuple(relators))


def _cyclic_reduce(w: Word) -> Word:
    while len(w) > 1 and w[0] == -w[-1]:
        w = w[1:-1]
    return w


# ---------------------------------------------------------------------------

def group_order(pres: Presentation, limit: int = DEFAULT_LIMIT) -> int:
    return coset_enumerate(pres, (), limit).index


def element_orders(table: CosetTable) -> list[int]:
    """Orders of the elements of a finite group, given its regular table
    (cosets of the trivial subgroup); entry ``c`` is the order of the
    element whose coset is ``c``."""
    reps = table.transversal()
    orders = []
    for u in reps:
        k, c = 1, table.act(0, u)
        while c != 0:
            c = table.act(c, u)
            k += 1
        orders.append(k)
    return orders


@dataclass(frozen=True)
class InvolutionVerdict:
    order: int
    has_involution: bool
    witness: Word | None
    reason: str


def has_involution(pres: Presentation, limit: int = DEFAULT_LIMIT) -> InvolutionVerdict:
    """Does the finite group ``pres`` contain an element of order 2?

    The regular representation is enumerated (which certifies finiteness);
    an odd order answers no by Lagrange, otherwise every element is
    squared.
    """
    table = coset_enumerate(pres, (), limit)
    n = table.index
    if n % 2:
        return InvolutionVerdict(n, False, None, f"group order {n} is odd (Lagrange)")
    for u in table.transversal()[1:]:
        if table.act(0, u + u) == 0:
            return InvolutionVerdict(n, True, u, f"element {pres.format_word(u)} squares to 1")
    raise AssertionError("even order group without an involution")  # Cauchy
