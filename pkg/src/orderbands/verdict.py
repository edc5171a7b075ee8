"""Three-valued predicate verdicts carrying machine-checkable evidence."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class PredicateResult:
    """Verdict of a decision procedure.

    `yes`/`no` verdicts always carry a witness or certificate that can be
    re-checked through public operations; `unknown` records the exhausted
    search budget.  `justification` lists the rules the verdict rests on.
    """

    verdict: str
    witness: Any = None
    justification: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.verdict not in (YES, NO, UNKNOWN):
            raise ValueError(f"bad verdict {self.verdict!r}")

    def __bool__(self) -> bool:
        return self.verdict == YES

    @property
    def is_yes(self) -> bool:
        return self.verdict == YES

    @property
    def is_no(self) -> bool:
        return self.verdict == NO

    @property
    def is_unknown(self) -> bool:
        return self.verdict == UNKNOWN


def yes(witness: Any = None, *why: str) -> PredicateResult:
    return PredicateResult(YES, witness, tuple(why))


def no(witness: Any = None, *why: str) -> PredicateResult:
    return PredicateResult(NO, witness, tuple(why))


def unknown(witness: Any = None, *why: str) -> PredicateResult:
    return PredicateResult(UNKNOWN, witness, tuple(why))
