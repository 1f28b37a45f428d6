"""Exact combinatorial certificates that d^h/dx^h [sin^a(px) cos^c(qx)] = 0 at x = pi.

Because sin^(a-h)(px) survives h-fold differentiation, the h-th derivative
vanishes at pi whenever h <= a - 2.  Evaluating the same-parity derivative
expansion at pi with cos(k*pi) = (-1)^k turns that fact into a pure
combinatorial zero-sum over binomials and integer powers, which this module
evaluates exactly in big-integer arithmetic.  It deliberately does not reuse
the TrigPoly machinery: the standalone sum is an independent certificate of
the cancellation that the log-valued closed form relies on.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .params import DomainError

__all__ = ["SweepRecord", "SweepReport", "boundary_identity_sum", "identity_sweep"]


def boundary_identity_sum(
    a: int,
    c: int,
    p: int,
    q: int,
    h: int,
    *,
    flip_ap_sign: bool = False,
    flip_cq_sign: bool = False,
) -> Fraction:
    """Exact value of the vanishing boundary sum; 0 on every valid input.

    Valid inputs: a >= 2, c >= 0, p, q >= 0, 0 <= h <= a - 2 with h and a of
    the same parity.  Integer powers use 0^0 = 1, matching cos(0*x) = 1 in
    the underlying expansion; at h = 0 the expansion's global constant term
    (which differentiates away for h >= 1) is restored so the sum equals the
    derivative value at pi exactly.

    The (-1)^(a p) and (-1)^(c q) factors can be flipped individually to
    confirm the parity cases that are genuinely independent of them; the
    flips are self-check knobs, not part of the identity.
    """
    if a < 2:
        raise DomainError("a >= 2")
    if c < 0:
        raise DomainError("c >= 0")
    if p < 0 or q < 0:
        raise DomainError("p >= 0 and q >= 0")
    if h < 0 or h > a - 2:
        raise DomainError("0 <= h <= a - 2")
    if (h - a) % 2 != 0:
        raise DomainError("h = a (mod 2)", "the boundary sum requires h and a of the same parity")

    s, t = a % 2, c % 2
    sign_ap = -1 if (a * p) % 2 else 1
    if flip_ap_sign:
        sign_ap = -sign_ap
    sign_cq = -1 if (c * q) % 2 else 1
    if flip_cq_sign:
        sign_cq = -sign_cq
    lead = sign_ap * (-1 if (a // 2) % 2 else 1)

    first = 0
    if t == 0:
        cc = math.comb(c, c // 2)
        first = cc * sum(
            (-1 if i % 2 else 1) * math.comb(a, i) * ((a - 2 * i) * p) ** h
            for i in range((a - 1) // 2 + 1)
        )

    double = 0
    for i in range((a - 1) // 2 + 1):
        fi = (a - 2 * i) * p
        base = (-1 if i % 2 else 1) * math.comb(a, i)
        for j in range((c - 1) // 2 + 1):
            gj = (c - 2 * j) * q
            double += base * math.comb(c, j) * ((fi + gj) ** h + (fi - gj) ** h)

    third = 0
    if s == 0:
        third = math.comb(a, a // 2) * sum(
            math.comb(c, i) * ((c - 2 * i) * q) ** h
            for i in range((c - 1) // 2 + 1)
        )

    total = Fraction(lead * (first + sign_cq * double) + sign_cq * third)
    if h == 0 and s == 0 and t == 0:
        total += Fraction(math.comb(a, a // 2) * math.comb(c, c // 2), 2)
    return total


@dataclass(frozen=True)
class SweepRecord:
    a: int
    c: int
    p: int
    q: int
    h: int
    value_is_zero: bool


@dataclass(frozen=True)
class SweepReport:
    """Outcome of an exhaustive boundary-identity sweep."""

    records: tuple[SweepRecord, ...]

    @property
    def checked(self) -> int:
        return len(self.records)

    @property
    def failures(self) -> tuple[SweepRecord, ...]:
        return tuple(r for r in self.records if not r.value_is_zero)

    @property
    def all_zero(self) -> bool:
        return not self.failures

    def to_json_lines(self) -> str:
        """One JSON object per checked tuple, newline separated."""
        return "\n".join(
            json.dumps(
                {"a": r.a, "c": r.c, "p": r.p, "q": r.q, "h": r.h,
                 "value_is_zero": r.value_is_zero}
            )
            for r in self.records
        )


def _sweep_tuples(max_a: int, max_c: int, max_p: int, max_q: int) -> Iterator[tuple[int, int, int, int, int]]:
    for a in range(2, max_a + 1):
        for h in range(a % 2, a - 1, 2):
            for c in range(0, max_c + 1):
                for p in range(0, max_p + 1):
                    for q in range(0, max_q + 1):
                        yield a, c, p, q, h


def identity_sweep(max_a: int, max_c: int, max_p: int, max_q: int) -> SweepReport:
    """Check the boundary sum on every valid tuple within inclusive bounds.

    Ranges: 2 <= a <= max_a, 0 <= c <= max_c, 0 <= p <= max_p,
    0 <= q <= max_q, and h over {h : 0 <= h <= a - 2, h = a (mod 2)}.
    p = q = 0 tuples are included; they exercise the fully degenerate path.
    """
    if max_a < 2 or max_c < 0 or max_p < 0 or max_q < 0:
        raise ValueError("sweep bounds must cover at least one valid tuple")
    records = tuple(
        SweepRecord(a, c, p, q, h, boundary_identity_sum(a, c, p, q, h) == 0)
        for a, c, p, q, h in _sweep_tuples(max_a, max_c, max_p, max_q)
    )
    return SweepReport(records)
