"""Exact scalars in a quadratic extension ``Q(sqrt(m))``."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from sympy import factorint


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Write ``n = s**2 * m`` with ``m`` squarefree (sign kept in ``m``)."""
    if n == 0:
        return 0, 1
    s, m = 1, -1 if n < 0 else 1
    for p, e in factorint(abs(n)).items():
        s *= p ** (e // 2)
        if e % 2:
            m *= p
    return s, m


class QuadExt:
    """``u + v * sqrt(m)`` with ``u``, ``v`` rational and ``m`` a squarefree
    integer other than 1.  ``m == 1`` is folded into the rational part so
    that a perfect square never produces a spurious irrational coordinate.
    """

    __slots__ = ("u", "v", "m")

    def __init__(self, u=0, v=0, m: int = 1):
        u, v = Fraction(u), Fraction(v)
        if m == 1:
            u, v = u + v, Fraction(0)
        if v == 0:
            m = 1
        self.u, self.v, self.m = u, v, m

    @classmethod
    def sqrt(cls, x) -> "QuadExt":
        """A square root of the rational ``x`` (the one with ``v >= 0``)."""
        x = Fraction(x)
        s, m = squarefree_decomposition(x.numerator * x.denominator)
        return cls(0, Fraction(s, x.denominator), m)

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.m != self.m and 1 not in (self.m, other.m):
                raise ValueError(f"mixing sqrt({self.m}) and sqrt({other.m})")
            return other
        if isinstance(other, (int, Rational)):
            return QuadExt(other)
        return NotImplemented

    @staticmethod
    def _field(a: "QuadExt", b: "QuadExt") -> int:
        return a.m if a.m != 1 else b.m

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.u + o.u, self.v + o.v, self._field(self, o))

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.u, -self.v, self.m)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        m = self._field(self, o)
        return QuadExt(self.u * o.u + self.v * o.v * m,
                       self.u * o.v + self.v * o.u, m)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out, base = QuadExt(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.u, -self.v, self.m)

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.u == o.u and self.v == o.v

    def __hash__(self):
        return hash((self.u, self.v, self.m))

    def __bool__(self):
        return bool(self.u) or bool(self.v)

    @property
    def is_rational(self) -> bool:
        return self.v == 0

    def parts(self) -> tuple[Fraction, Fraction]:
        return self.u, self.v

    def __repr__(self):
        if self.v == 0:
            return f"QuadExt({self.u})"
        return f"QuadExt({self.u} + {self.v}*sqrt({self.m}))"

    def __str__(self):
        if self.v == 0:
            return str(self.u)
        coeff = {1: "", -1: "-"}.get(self.v, f"{self.v}*")
        irr = f"{coeff}sqrt({self.m})"
        if self.u == 0:
            return irr
        return f"{self.u} - {irr[1:]}" if irr.startswith("-") else f"{self.u} + {irr}"
