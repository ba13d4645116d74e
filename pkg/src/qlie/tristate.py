"""Three-valued verdicts with machine-checkable evidence.

A ProvenFalse always carries a witness that re-verifies independently; a
ProvenTrue always names the certifying rule.  Unknown records why the
question was left open instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

TRUE = "ProvenTrue"
FALSE = "ProvenFalse"
UNKNOWN = "Unknown"


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (str, int, bool)) or x is None:
        return x
    return repr(x)


@dataclass(frozen=True)
class TriState:
    verdict: str
    rule: str
    witness: object = None
    detail: str = ""

    @property
    def is_true(self):
        return self.verdict == TRUE

    @property
    def is_false(self):
        return self.verdict == FALSE

    @property
    def is_unknown(self):
        return self.verdict == UNKNOWN

    @property
    def decided(self):
        return self.verdict != UNKNOWN

    def to_json(self):
        out = {"verdict": self.verdict, "rule": self.rule}
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        if self.detail:
            out["detail"] = self.detail
        return out

    def __bool__(self):
        raise TypeError("TriState is three-valued; use .is_true / .is_false")


def proven_true(rule, witness=None, detail=""):
    return TriState(TRUE, rule, witness, detail)


def proven_false(rule, witness=None, detail=""):
    if witness is None:
        raise ValueError("ProvenFalse requires a witness")
    return TriState(FALSE, rule, witness, detail)


def unknown(rule, detail=""):
    return TriState(UNKNOWN, rule, detail=detail)
