"""Parameter validation and parity classification for the integral family."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class DomainError(ValueError):
    """Raised when parameters fall outside the evaluable family.

    ``constraint`` holds a short machine-readable statement of the violated
    rule (for example ``"a >= b"``) so callers can report it verbatim.
    """

    def __init__(self, constraint: str, message: str | None = None):
        self.constraint = constraint
        super().__init__(message or f"constraint violated: {constraint}")


class ParityCase(Enum):
    SAME = "same"
    OPPOSITE = "opposite"


@dataclass(frozen=True)
class IntegralParams:
    """The five integer parameters of  sin^a(p x) cos^c(q x) / x^b  on (0, inf).

    a is the sine exponent, b the power of x, c the cosine exponent, p and q
    the sine and cosine frequencies (either sign).  Construction enforces the
    structural constraints a >= b >= 1 and c >= 0; the stricter b >= 2 rule
    (with its flagged b = 1 exception) is applied at evaluation time.
    """

    a: int
    b: int
    c: int
    p: int
    q: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "p", "q"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise DomainError(
                    f"{name} is an integer",
                    f"{name} must be an integer, got {value!r}",
                )
        if self.b < 1:
            raise DomainError("b >= 1")
        if self.a < self.b:
            raise DomainError("a >= b")
        if self.c < 0:
            raise DomainError("c >= 0")

    @property
    def s(self) -> int:
        """Parity of the sine exponent: a mod 2."""
        return self.a % 2

    @property
    def t(self) -> int:
        """Parity of the cosine exponent: c mod 2."""
        return self.c % 2

    @property
    def parity_case(self) -> ParityCase:
        """SAME when a and b agree mod 2 (pi-valued case), else OPPOSITE."""
        return ParityCase.SAME if (self.a - self.b) % 2 == 0 else ParityCase.OPPOSITE


def validate_for_evaluation(params: IntegralParams, *, allow_b1: bool = False) -> None:
    """Reject parameters the closed forms do not cover.

    b = 1 is accepted only behind ``allow_b1`` and only for odd a (even a
    with b = 1 diverges).
    """
    if params.b >= 2:
        return
    if not allow_b1:
        raise DomainError(
            "b >= 2",
            "b = 1 is only supported with the extension flag (allow_b1)",
        )
    if params.a % 2 == 0:
        raise DomainError(
            "odd a when b = 1",
            "b = 1 requires odd a (the even-a integral diverges)",
        )
