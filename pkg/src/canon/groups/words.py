"""Words and finite presentations.

A word is a tuple of nonzero integers: ``k`` stands for generator ``k - 1``
and ``-k`` for its inverse.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

Word = tuple[int, ...]


class PresentationSyntaxError(ValueError):
    pass


def reduce_word(word: Iterable[int]) -> Word:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def power(word: Sequence[int], k: int) -> Word:
    base = tuple(word) if k >= 0 else invert(word)
    return reduce_word(base * abs(k))


def exponent_sums(word: Sequence[int], ngens: int) -> list[int]:
    v = [0] * ngens
    for x in word:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return v


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>-?\d+)|(?P<op>[*^()=]))")


class _WordParser:
    def __init__(self, text: str, index: Mapping[str, int]):
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise PresentationSyntaxError(f"unexpected character at {text[pos:]!r}")
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind)))
            pos = m.end()
            while pos < len(text) and text[pos].isspace():
                pos += 1
        self.i = 0
        self.index = index
        self.text = text

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind or "token"
            raise PresentationSyntaxError(f"expected {want} in {self.text!r}")
        self.i += 1
        return tok

    def relator(self) -> Word:
        lhs = self.product()
        if self.peek() == ("op", "="):
            self.take()
            lhs = reduce_word(lhs + invert(self.product()))
        if self.peek()[0] is not None:
            raise PresentationSyntaxError(f"trailing input in {self.text!r}")
        return lhs

    def product(self) -> Word:
        w = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            w = reduce_word(w + self.factor())
        return w

    def factor(self) -> Word:
        kind, val = self.peek()
        if kind == "op" and val == "(":
            self.take()
            w = self.product()
            self.take("op", ")")
        elif kind == "name":
            self.take()
            if val not in self.index:
                raise PresentationSyntaxError(f"unknown generator {val!r}")
            w = (self.index[val] + 1,)
        elif kind == "int" and val == "1":
            self.take()
            w = ()
        else:
            raise PresentationSyntaxError(f"unexpected {val!r} in {self.text!r}")
        while self.peek() == ("op", "^"):
            self.take()
            _, exp = self.take("int")
            w = power(w, int(exp))
        return w


def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be unique")
        k = len(self.generators)
        rels = []
        for r in self.relators:
            if any(x == 0 or abs(x) > k for x in r):
                raise ValueError(f"relator {r} uses an unknown generator")
            r = reduce_word(r)
            if r:
                rels.append(r)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def parse_word(self, text: str) -> Word:
        index = {g: i for i, g in enumerate(self.generators)}
        return _WordParser(text, index).relator()

    def format_word(self, word: Sequence[int]) -> str:
        if not word:
            return "1"
        out = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            name = self.generators[abs(word[i]) - 1]
            e = (j - i) * (1 if word[i] > 0 else -1)
            out.append(name if e == 1 else f"{name}^{e}")
            i = j
        return "*".join(out)

    def __str__(self):
        return f"{','.join(self.generators)} | {', '.join(self.format_word(r) for r in self.relators)}"

    def to_dict(self) -> dict:
        return {"generators": list(self.generators),
                "relators": [self.format_word(r) for r in self.relators]}


def parse_presentation(text: str) -> Presentation:
    """Parse ``"a,b | a^13, b^3, b^-1*a*b*a^-3"``.

    Relators use ``*``, integer exponents ``^k`` (negative for inverses),
    parentheses, ``1`` for the identity and ``lhs = rhs`` for relations.
    """
    if "|" not in text:
        raise PresentationSyntaxError("missing '|' between generators and relators")
    gens_text, rels_text = text.split("|", 1)
    gens = tuple(g.strip() for g in gens_text.split(",") if g.strip())
    for g in gens:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", g):
            raise PresentationSyntaxError(f"bad generator name {g!r}")
    if len(set(gens)) != len(gens):
        raise PresentationSyntaxError("duplicate generator names")
    index = {g: i for i, g in enumerate(gens)}
    rels = [_WordParser(r, index).relator() for r in _split_top(rels_text) if r]
    return Presentation(gens, tuple(rels))


def presentation_from_dict(obj: Mapping) -> tuple[Presentation, dict[str, list[Word]]]:
    """Read the JSON presentation format; returns the presentation and its
    named subgroups (each a list of generating words)."""
    try:
        gens = obj["generators"]
        rels = obj.get("relators", [])
    except (KeyError, TypeError):
        raise ValueError('presentation JSON needs a "generators" list') from None
    p = parse_presentation(",".join(gens) + " | " + ", ".join(rels))
    subgroups = {name: [p.parse_word(w) for w in words]
                 for name, words in obj.get("subgroups", {}).items()}
    return p, subgroups


def load_presentation(text: str):
    return presentation_from_dict(json.loads(text))
