"""Verification reports: a list of checked claims plus a derivation trace."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction

PASS, FAIL = "pass", "fail"


def _plain(x):
    """Make ``x`` JSON-serializable in a stable way."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_plain(v) for v in x]
        return sorted(items, key=json.dumps) if isinstance(x, (set, frozenset)) else items
    return x


def digest(obj) -> str:
    text = json.dumps(_plain(obj), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()


@dataclass
class Step:
    claim: str
    computed: object
    expected: object = None

    @property
    def match(self) -> bool | None:
        if self.expected is None:
            return None
        return _plain(self.computed) == _plain(self.expected)


@dataclass
class VerificationReport:
    command: str
    inputs_digest: str
    steps: list[Step] = field(default_factory=list)
    trace: list[str] = field(default_factory=list)

    def check(self, claim: str, computed, expected=None) -> Step:
        step = Step(claim, computed, expected)
        self.steps.append(step)
        return step

    def note(self, line: str) -> None:
        self.trace.append(line)

    @property
    def verdict(self) -> str:
        return PASS if all(s.match is not False for s in self.steps) else FAIL

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "steps": [{"claim": s.claim, "computed": _plain(s.computed),
                       "expected": _plain(s.expected), "match": s.match}
                      for s in self.steps],
            "trace": list(self.trace),
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [f"== {self.command}  (input {self.inputs_digest[:12]})"]
        lines += [f"   {t}" for t in self.trace]
        for s in self.steps:
            mark = {True: "ok", False: "MISMATCH", None: "--"}[s.match]
            exp = "" if s.expected is None else f"  (expected {_fmt(s.expected)})"
            lines.append(f"[{mark:>8}] {s.claim}: {_fmt(s.computed)}{exp}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


def _fmt(x) -> str:
    x = _plain(x)
    if isinstance(x, (list, dict)):
        return json.dumps(x, ensure_ascii=False)
    return str(x)
