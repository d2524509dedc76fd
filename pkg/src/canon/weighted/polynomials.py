"""Sparse multivariate polynomials with rational coefficients."""
from __future__ import annotations

import json
from fractions import Fraction
from math import gcd, lcm
from typing import Mapping, Sequence

import sympy


class Poly:
    """A polynomial as a map from exponent tuples to nonzero ``Fraction``s."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], object] | None = None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have {nvars} entries")
            c = Fraction(c)
            if c:
                self.terms[e] = self.terms.get(e, Fraction(0)) + c
                if not self.terms[e]:
                    del self.terms[e]

    @classmethod
    def constant(cls, nvars: int, c) -> "Poly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def linear_form(cls, coeffs: Sequence) -> "Poly":
        n = len(coeffs)
        return cls(n, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)})

    # -- ring operations ----------------------------------------------------
    def _check(self, other: "Poly"):
        if other.nvars != self.nvars:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = Fraction(other)
            return Poly(self.nvars, {e: c * v for e, v in self.terms.items()})
        self._check(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- structure ----------------------------------------------------------
    def degree(self, weights: Sequence[int] | None = None) -> int:
        w = weights or (1,) * self.nvars
        return max((sum(a * b for a, b in zip(e, w)) for e in self.terms), default=-1)

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        w = weights or (1,) * self.nvars
        return len({sum(a * b for a, b in zip(e, w)) for e in self.terms}) <= 1

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def diff(self, i: int) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        return Poly(self.nvars, out)

    def __call__(self, *point):
        """Evaluate at ``point``; entries may be any ring elements that
        multiply with ``Fraction`` (ints, Fractions, :class:`QuadExt`)."""
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = tuple(point[0])
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinates")
        powers = [dict() for _ in point]
        total = 0
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    pw = powers[i].get(k)
                    if pw is None:
                        pw = powers[i][k] = point[i] ** k
                    term = term * pw
            total = total + term
        return total

    def compose(self, subs: Sequence["Poly"]) -> "Poly":
        """Substitute polynomial ``subs[i]`` for variable ``i``."""
        if len(subs) != self.nvars:
            raise ValueError("need one substitution per variable")
        nv = subs[0].nvars
        out = Poly(nv)
        cache: list[dict[int, Poly]] = [dict() for _ in subs]
        for e, c in self.terms.items():
            term = Poly.constant(nv, c)
            for i, k in enumerate(e):
                if k:
                    if k not in cache[i]:
                        cache[i][k] = subs[i] ** k
                    term = term * cache[i][k]
            out = out + term
        return out

    def linear_transform(self, matrix: Sequence[Sequence]) -> "Poly":
        """``f(M v)``: variable ``i`` becomes ``sum_j M[i][j] v_j``."""
        return self.compose([Poly.linear_form(row) for row in matrix])

    def primitive(self) -> "Poly":
        """Scale to coprime integer coefficients, leading term positive."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = lcm(den, c.denominator)
        ints = {e: int(c * den) for e, c in self.terms.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        lead = ints[max(ints)]
        g = g if lead > 0 else -g
        return Poly(self.nvars, {e: Fraction(v, g) for e, v in ints.items()})

    # -- conversion ---------------------------------------------------------
    def to_sympy(self, symbols: Sequence[sympy.Symbol]) -> sympy.Expr:
        return sympy.Add(*[sympy.Rational(c.numerator, c.denominator)
                           * sympy.Mul(*[s ** k for s, k in zip(symbols, e)])
                           for e, c in sorted(self.terms.items())])

    @classmethod
    def from_sympy(cls, expr, symbols: Sequence[sympy.Symbol]) -> "Poly":
        p = sympy.Poly(expr, *symbols)
        return cls(len(symbols), {m: Fraction(int(c.p), int(c.q)) for m, c in p.terms()})

    def to_dict(self, names: Sequence[str]) -> dict:
        return {"vars": list(names),
                "terms": [{"coeff": str(c), "exps": list(e)}
                          for e, c in sorted(self.terms.items(), reverse=True)]}

    @classmethod
    def from_dict(cls, obj: Mapping) -> "Poly":
        try:
            names = obj["vars"]
            terms = obj["terms"]
        except (KeyError, TypeError):
            raise ValueError('polynomial JSON needs "vars" and "terms"') from None
        out: dict[tuple[int, ...], Fraction] = {}
        for t in terms:
            e = tuple(int(k) for k in t["exps"])
            if len(e) != len(names) or min(e, default=0) < 0:
                raise ValueError(f"bad exponent vector {t['exps']}")
            out[e] = out.get(e, Fraction(0)) + Fraction(str(t["coeff"]))
        return cls(len(names), out)

    @classmethod
    def from_json(cls, text: str) -> "Poly":
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        names = "xyzwtuvs"[: self.nvars] if self.nvars <= 8 else None
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"{names[i]}^{k}" if k > 1 else names[i]
                            for i, k in enumerate(e) if k) if names else str(e)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)

