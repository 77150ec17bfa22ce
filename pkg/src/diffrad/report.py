"""Uniform result type for theorem checks.

Failed hypotheses never raise; they come back marked in the report and the
verdict stays undefined (holds is None).  A False verdict with all hypotheses
passing means a proved inequality failed on exact data, which is a bug signal,
and the CLI maps it to its own exit code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Union


class Statement(str, Enum):
    MASON_TRIPLE = "Mason3"
    MASON_MULTI = "MasonM"
    ORD_INEQUALITY = "OrdInequality"
    TRUNCATION = "Truncation"
    FERMAT_XYZ = "FermatXYZ"
    FERMAT_SUM_ONE = "FermatSum1"
    FERMAT_SUM_MULTI = "FermatSumM"


@dataclass(frozen=True)
class Hypothesis:
    name: str
    passed: bool
    detail: str = ""


Bound = Union[int, Fraction, None]


@dataclass
class CheckReport:
    statement: Statement
    hypotheses: tuple[Hypothesis, ...]
    lhs: Bound = None
    rhs: Bound = None
    holds: Optional[bool] = None
    artifacts: dict = field(default_factory=dict)

    @property
    def hypotheses_ok(self) -> bool:
        return all(h.passed for h in self.hypotheses)

    @property
    def sharp(self) -> Optional[bool]:
        if self.lhs is None or self.rhs is None:
            return None
        return self.lhs == self.rhs

    def exit_code(self) -> int:
        """CLI contract: 0 verified, 1 violated, 2 hypotheses unmet."""
        if not self.hypotheses_ok or self.holds is None:
            return 2
        return 0 if self.holds else 1

    def to_json_dict(self) -> dict:
        def num(v):
            if isinstance(v, Fraction):
                return str(v) if v.denominator != 1 else int(v)
            return v

        return {
            "statement": self.statement.value,
            "hypotheses": [
                {"name": h.name, "pass": h.passed, "detail": h.detail}
                for h in self.hypotheses
            ],
            "lhs": num(self.lhs),
            "rhs": num(self.rhs),
            "holds": self.holds,
            "artifacts": _jsonable(self.artifacts),
        }


def _jsonable(value):
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else int(value)
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)
