"""Counterexample records shared by the verification passes."""

from __future__ import annotations

from dataclasses import dataclass

EQUIVALENCE = "EQUIVALENCE"
MONOTONICITY = "MONOTONICITY"
ONE_HOT = "ONE_HOT"
RAIL = "RAIL"


@dataclass(frozen=True)
class CounterexampleReport:
    """A self-certifying verification failure.

    ``witness`` holds one or more input assignments (a pair or chain for
    monotonicity violations, a single assignment otherwise); re-evaluating
    the subject on the witness reproduces ``observed`` against ``expected``.
    """

    kind: str
    witness: tuple[tuple[int, ...], ...]
    expected: tuple[int, ...]
    observed: tuple[int, ...]
    detail: str = ""

    def to_line(self) -> str:
        w = "<=".join("".join(str(b) for b in a) for a in self.witness)
        e = ",".join(str(v) for v in self.expected)
        o = ",".join(str(v) for v in self.observed)
        line = f"kind={self.kind} witness={w} expected={e} observed={o}"
        if self.detail:
            line += f" detail={self.detail}"
        return line
