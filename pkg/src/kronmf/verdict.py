"""Verdict record shared by the multiplicity-free predicates."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class MfVerdict:
    """Outcome of a multiplicity-free test.

    ``clause`` names the matched condition and is present exactly when
    the verdict is positive.  ``normalization`` records the conjugations
    or reductions applied to the operands before the clause matched.
    """

    multiplicity_free: bool
    clause: str | None = None
    normalization: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.multiplicity_free and self.clause is None:
            raise ValueError("positive verdict requires a clause tag")
        if not self.multiplicity_free and self.clause is not None:
            raise ValueError("negative verdict must not carry a clause tag")

    def __bool__(self) -> bool:
        return self.multiplicity_free


MF_NO = MfVerdict(False)
