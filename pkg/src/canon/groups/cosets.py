"""Todd-Coxeter coset enumeration (HLT strategy with lookahead).

Columns of a table are ordered ``g0, g0^-1, g1, g1^-1, ...``; cosets are
numbered from 0 and coset 0 is the subgroup itself.  A finished table is
standardized (cosets renumbered in order of first appearance when the
table is read row by row), so it depends only on the group, the subgroup
and nothing else.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .words import Presentation, Word

DEFAULT_LIMIT = 100_000


class CosetLimitExceeded(RuntimeError):
    """The enumeration needed more live cosets than allowed.  This is never
    evidence of infinite index."""


def column(letter: int) -> int:
    return 2 * (letter - 1) if letter > 0 else 2 * (-letter - 1) + 1


def inverse_column(c: int) -> int:
    return c ^ 1


@dataclass(frozen=True)
class CosetTable:
    """Permutation action of the generators on the cosets of a subgroup."""

    ngens: int
    rows: tuple[tuple[int, ...], ...]
    complete: bool = True

    @property
    def index(self) -> int:
        return len(self.rows)

    def act(self, coset: int, word: Sequence[int]) -> int:
        for x in word:
            coset = self.rows[coset][column(x)]
        return coset

    def permutation(self, gen: int) -> tuple[int, ...]:
        """Image of each coset under generator ``gen`` (0-based)."""
        return tuple(r[2 * gen] for r in self.rows)

    def transversal(self) -> list[Word]:
        """Shortest-first (breadth-first) coset representatives."""
        reps: list[Word | None] = [None] * self.index
        reps[0] = ()
        queue = [0]
        for c in queue:
            for col in range(2 * self.ngens):
                d = self.rows[c][col]
                if reps[d] is None:
                    letter = col // 2 + 1
                    reps[d] = reps[c] + ((letter if col % 2 == 0 else -letter),)
                    queue.append(d)
        return reps  # type: ignore[return-value]

    def check(self, relators: Sequence[Word], subgens: Sequence[Word] = ()) -> bool:
        """Verify that the table is a genuine action: columns are mutually
        inverse bijections, every relator fixes every coset, and the subgroup
        generators fix coset 0."""
        n = self.index
        for col in range(2 * self.ngens):
            image = [r[col] for r in self.rows]
            if sorted(image) != list(range(n)):
                return False
            inv = inverse_column(col)
            if any(self.rows[image[c]][inv] != c for c in range(n)):
                return False
        if any(self.act(c, r) != c for r in relators for c in range(n)):
            return False
        return all(self.act(0, w) == 0 for w in subgens)


class _Enumerator:
    def __init__(self, pres: Presentation, subgens: Sequence[Word], limit: int):
        self.ncols = 2 * pres.ngens
        self.relators = [tuple(column(x) for x in r) for r in pres.relators]
        self.subgens = [tuple(column(x) for x in w) for w in subgens]
        self.limit = limit
        self.table: list[list[int | None]] = [[None] * self.ncols]
        self.parent = [0]
        self.live = 1
        self.queue: list[int] = []

    # -- coset bookkeeping ----------------------------------------------------
    def is_live(self, c: int) -> bool:
        return self.parent[c] == c

    def define(self, c: int, x: int) -> None:
        if self.live >= self.limit:
            raise _Full
        d = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(d)
        self.live += 1
        self.table[c][x] = d
        self.table[d][inverse_column(x)] = c

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def merge(self, a: int, b: int) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        a, b = min(a, b), max(a, b)
        self.parent[b] = a
        self.live -= 1
        self.queue.append(b)

    def coincidence(self, a: int, b: int) -> None:
        self.queue = []
        self.merge(a, b)
        i = 0
        while i < len(self.queue):
            e = self.queue[i]
            i += 1
            row = self.table[e]
            for x in range(self.ncols):
                f = row[x]
                if f is None:
                    continue
                xi = inverse_column(x)
                if self.table[f][xi] == e:
                    self.table[f][xi] = None
                e1, f1 = self.rep(e), self.rep(f)
                if self.table[e1][x] is not None:
                    self.merge(f1, self.table[e1][x])
                elif self.table[f1][xi] is not None:
                    self.merge(e1, self.table[f1][xi])
                else:
                    self.table[e1][x] = f1
                    self.table[f1][xi] = e1

    # -- scanning -------------------------------------------------------------
    def scan(self, a: int, w: Sequence[int], fill: bool) -> None:
        t = self.table
        n = len(w)
        f, i = a, 0
        b, j = a, n - 1
        while True:
            while i <= j and t[f][w[i]] is not None:
                f = t[f][w[i]]
                i += 1
            if i > j:
                if f != a:
                    self.coincidence(f, a)
                return
            while j >= i and t[b][inverse_column(w[j])] is not None:
                b = t[b][inverse_column(w[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][w[i]] = b
                t[b][inverse_column(w[i])] = f
                return
            if not fill:
                return
            self.define(f, w[i])

    def lookahead(self) -> None:
        for c in range(len(self.table)):
            if not self.is_live(c):
                continue
            for r in self.relators:
                self.scan(c, r, fill=False)
                if not self.is_live(c):
                    break

    def compact(self) -> int:
        """Drop dead cosets, renumbering live ones in order; returns the
        number of live cosets."""
        alive = [c for c in range(len(self.table)) if self.is_live(c)]
        new = {c: i for i, c in enumerate(alive)}
        self.table = [[None if v is None else new[v] for v in self.table[c]] for c in alive]
        self.parent = list(range(len(alive)))
        return len(alive)

    def _process(self, a: int) -> None:
        for r in self.relators:
            self.scan(a, r, fill=True)
            if not self.is_live(a):
                return
        for x in range(self.ncols):
            if self.table[a][x] is None:
                self.define(a, x)


class _Full(Exception):
    pass


def coset_enumerate(pres: Presentation, subgens: Sequence[Word] = (),
                    limit: int = DEFAULT_LIMIT) -> CosetTable:
    """Enumerate the cosets of ``<subgens>`` in the group ``pres``.

    Raises :class:`CosetLimitExceeded` if more than ``limit`` live cosets
    are ever needed.
    """
    if limit < 1:
        raise ValueError("limit must be positive")
    en = _Enumerator(pres, subgens, limit)
    _run_with_restarts(en)
    en.compact()
    return _standardize(pres.ngens, en.table)


def _run_with_restarts(en: _Enumerator) -> None:
    # subgroup generators first, then HLT over cosets in order; after a
    # compaction the sweep resumes from the renumbered position.
    pending = list(en.subgens)
    while pending:
        try:
            en.scan(0, pending[0], fill=True)
            pending.pop(0)
        except _Full:
            _relieve(en)
    a = 0
    while a < len(en.table):
        if not en.is_live(a):
            a += 1
            continue
        try:
            en._process(a)
            a += 1
        except _Full:
            mapping = _relieve(en)
            a = next((mapping[c] for c in sorted(mapping) if c >= a), len(en.table))


def _relieve(en: _Enumerator) -> dict[int, int]:
    before = en.live
    en.lookahead()
    if en.live >= before and en.live >= en.limit:
        raise CosetLimitExceeded(
            f"coset enumeration exceeded the limit of {en.limit} live cosets")
    alive = [c for c in range(len(en.table)) if en.is_live(c)]
    mapping = {c: i for i, c in enumerate(alive)}
    en.compact()
    return mapping


def _standardize(ngens: int, table: list[list[int | None]]) -> CosetTable:
    if any(v is None for row in table for v in row):
        raise AssertionError("enumeration finished with an incomplete table")
    order = [0]
    seen = {0: 0}
    for c in order:
        for v in table[c]:
            if v not in seen:
                seen[v] = len(order)
                order.append(v)
    rows = tuple(tuple(seen[v] for v in table[c]) for c in order)
    return CosetTable(ngens, rows)
