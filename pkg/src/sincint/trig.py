"""Finite trigonometric polynomials with exact rational coefficients.

Powers and products of sin(px), cos(qx) expand into sums of const, sin(kx)
and cos(kx) terms with integer frequencies; this module implements those
power-reduction expansions, exact product-to-sum multiplication, and exact
term-wise differentiation, plus a direct closed-form instantiation of the
n-th derivative of sin^a(px) cos^c(qx).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator

from .exact import RationalLike
from .params import DomainError

__all__ = [
    "TermKind",
    "TrigTerm",
    "TrigPoly",
    "sin_power_expand",
    "cos_power_expand",
    "trig_product",
    "product_expansion",
    "derivative_expansion",
]


class TermKind(Enum):
    CONST = 0
    SIN = 1
    COS = 2


@dataclass(frozen=True)
class TrigTerm:
    """One summand: coeff * {1 | sin(frequency*x) | cos(frequency*x)}.

    CONST terms carry frequency 0; SIN and COS terms carry frequency >= 1
    (zero-frequency sines vanish, zero-frequency cosines fold into CONST).
    """

    kind: TermKind
    frequency: int
    coeff: Fraction


class TrigPoly:
    """Immutable finite sum of TrigTerms, at most one per (kind, frequency)."""

    __slots__ = ("_coeffs",)

    def __init__(self, terms: Iterable[tuple[TermKind, int, RationalLike]] = ()):
        coeffs: dict[tuple[TermKind, int], Fraction] = {}
        for kind, frequency, coeff in terms:
            c = Fraction(coeff)
            if c == 0:
                continue
            if kind is TermKind.SIN:
                if frequency == 0:
                    continue
                if frequency < 0:
                    frequency, c = -frequency, -c
            elif kind is TermKind.COS:
                if frequency < 0:
                    frequency = -frequency
                if frequency == 0:
                    kind = TermKind.CONST
            elif frequency != 0:
                raise ValueError("CONST terms must have frequency 0")
            key = (kind, frequency)
            total = coeffs.get(key, Fraction(0)) + c
            if total == 0:
                coeffs.pop(key, None)
            else:
                coeffs[key] = total
        self._coeffs = coeffs

    @classmethod
    def zero(cls) -> "TrigPoly":
        return cls()

    @classmethod
    def constant(cls, coeff: RationalLike) -> "TrigPoly":
        return cls([(TermKind.CONST, 0, coeff)])

    @property
    def terms(self) -> tuple[TrigTerm, ...]:
        keys = sorted(self._coeffs, key=lambda k: (k[0].value, k[1]))
        return tuple(TrigTerm(kind, freq, self._coeffs[(kind, freq)]) for kind, freq in keys)

    def coeff(self, kind: TermKind, frequency: int = 0) -> Fraction:
        return self._coeffs.get((kind, frequency), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def kinds(self) -> set[TermKind]:
        return {kind for kind, _ in self._coeffs}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __iter__(self) -> Iterator[TrigTerm]:
        return iter(self.terms)

    def __repr__(self) -> str:
        body = ", ".join(
            f"{t.kind.name.lower()}({t.frequency})*{t.coeff}" if t.kind is not TermKind.CONST
            else f"const*{t.coeff}"
            for t in self.terms
        )
        return f"TrigPoly({body or '0'})"

    def __add__(self, other: "TrigPoly") -> "TrigPoly":
        if not isinstance(other, TrigPoly):
            return NotImplemented
        items = [(k, f, c) for (k, f), c in self._coeffs.items()]
        items += [(k, f, c) for (k, f), c in other._coeffs.items()]
        return TrigPoly(items)

    def scale(self, factor: RationalLike) -> "TrigPoly":
        r = Fraction(factor)
        return TrigPoly([(k, f, c * r) for (k, f), c in self._coeffs.items()])

    def __mul__(self, other: "TrigPoly") -> "TrigPoly":
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return trig_product(self, other)

    def derivative(self) -> "TrigPoly":
        """Exact d/dx: sin(fx) -> f cos(fx), cos(fx) -> -f sin(fx)."""
        items: list[tuple[TermKind, int, Fraction]] = []
        for (kind, freq), coeff in self._coeffs.items():
            if kind is TermKind.SIN:
                items.append((TermKind.COS, freq, coeff * freq))
            elif kind is TermKind.COS:
                items.append((TermKind.SIN, freq, -coeff * freq))
        return TrigPoly(items)

    def evaluate(self, x: float) -> float:
        """Numeric value at x in double precision."""
        total = 0.0
        for (kind, freq), coeff in self._coeffs.items():
            w = float(coeff)
            if kind is TermKind.CONST:
                total += w
            elif kind is TermKind.SIN:
                total += w * math.sin(freq * x)
            else:
                total += w * math.cos(freq * x)
        return total

    def value_at_zero(self) -> Fraction:
        """Exact value at x = 0: const plus the sum of cosine coefficients."""
        total = Fraction(0)
        for (kind, freq), coeff in self._coeffs.items():
            if kind is not TermKind.SIN:
                total += coeff
        return total

    def value_at_pi(self) -> Fraction:
        """Exact value at x = pi, using cos(k*pi) = (-1)^k."""
        total = Fraction(0)
        for (kind, freq), coeff in self._coeffs.items():
            if kind is TermKind.CONST:
                total += coeff
            elif kind is TermKind.COS:
                total += -coeff if freq % 2 else coeff
        return total


def sin_power_expand(a: int, p: int) -> TrigPoly:
    """Expand sin^a(px) into multiple-angle form.

    Odd a gives pure sine terms, even a a constant plus cosines, with
    frequencies (a-2i)p.  p = 0 collapses every frequency to zero and the
    folded constant cancels to the exact value sin^a(0) = 0.
    """
    if a < 1:
        raise DomainError("a >= 1", f"sin power expansion needs a >= 1, got {a}")
    if p < 0:
        raise DomainError("p >= 0", "expansion frequencies must be non-negative")
    s = a % 2
    items: list[tuple[TermKind, int, Fraction]] = []
    if s == 0:
        items.append((TermKind.CONST, 0, Fraction(math.comb(a, a // 2), 2**a)))
    kind = TermKind.SIN if s else TermKind.COS
    half = (a // 2) % 2
    for i in range((a - 1) // 2 + 1):
        sign = -1 if (half + i) % 2 else 1  # (-1)^(floor(a/2) - i)
        coeff = Fraction(2 * sign * math.comb(a, i), 2**a)
        items.append((kind, (a - 2 * i) * p, coeff))
    return TrigPoly(items)


def cos_power_expand(c: int, q: int) -> TrigPoly:
    """Expand cos^c(qx) into multiple-angle form; c = 0 is the constant 1."""
    if c < 0:
        raise DomainError("c >= 0", f"cos power expansion needs c >= 0, got {c}")
    if q < 0:
        raise DomainError("q >= 0", "expansion frequencies must be non-negative")
    t = c % 2
    items: list[tuple[TermKind, int, Fraction]] = []
    if t == 0:
        items.append((TermKind.CONST, 0, Fraction(math.comb(c, c // 2), 2**c)))
    for i in range((c - 1) // 2 + 1):
        items.append((TermKind.COS, (c - 2 * i) * q, Fraction(2 * math.comb(c, i), 2**c)))
    return TrigPoly(items)


def trig_product(u: TrigPoly, v: TrigPoly) -> TrigPoly:
    """Pointwise product, re-expressed in sum form.

    Uses the product-to-sum identities; negative intermediate frequencies
    are normalized by sin(-u) = -sin(u), cos(-u) = cos(u).
    """
    items: list[tuple[TermKind, int, Fraction]] = []
    for (k1, f1), c1 in u._coeffs.items():
        for (k2, f2), c2 in v._coeffs.items():
            c = c1 * c2
            if k1 is TermKind.CONST:
                items.append((k2, f2, c))
            elif k2 is TermKind.CONST:
                items.append((k1, f1, c))
            elif k1 is TermKind.SIN and k2 is TermKind.SIN:
                half = c / 2
                items.append((TermKind.COS, f1 - f2, half))
                items.append((TermKind.COS, f1 + f2, -half))
            elif k1 is TermKind.COS and k2 is TermKind.COS:
                half = c / 2
                items.append((TermKind.COS, f1 - f2, half))
                items.append((TermKind.COS, f1 + f2, half))
            elif k1 is TermKind.SIN:  # sin * cos
                half = c / 2
                items.append((TermKind.SIN, f1 + f2, half))
                items.append((TermKind.SIN, f1 - f2, half))
            else:  # cos * sin
                half = c / 2
                items.append((TermKind.SIN, f1 + f2, half))
                items.append((TermKind.SIN, f2 - f1, half))
    return TrigPoly(items)


def product_expansion(a: int, c: int, p: int, q: int) -> TrigPoly:
    """sin^a(px) cos^c(qx) as a single expanded trigonometric polynomial."""
    return trig_product(sin_power_expand(a, p), cos_power_expand(c, q))


def derivative_expansion(a: int, c: int, p: int, q: int, h: int) -> TrigPoly:
    """h-th derivative of sin^a(px) cos^c(qx), instantiated in closed form.

    When a and h have opposite parity the result is a pure sine polynomial;
    with same parity it is constant plus cosines.  The closed form's sums
    omit the product's global constant, which only matters at h = 0 (it
    differentiates away for h >= 1); that constant is restored explicitly so
    the h = 0 result equals the plain product expansion.  Term-wise
    differentiation of the product expansion must agree with this function
    at every h, which the test suite checks coefficient-exactly.
    """
    if a < 1:
        raise DomainError("a >= 1", f"derivative expansion needs a >= 1, got {a}")
    if c < 0:
        raise DomainError("c >= 0")
    if p < 0 or q < 0:
        raise DomainError("p >= 0 and q >= 0")
    if h < 0:
        raise DomainError("h >= 0")
    s, t = a % 2, c % 2
    same_parity = (h % 2) == s
    half_exp = h // 2 if same_parity else (h + 1) // 2
    prefactor = Fraction(-1 if half_exp % 2 else 1, 2 ** (a + c - 1))
    kind = TermKind.COS if same_parity else TermKind.SIN
    sign_a = -1 if (a // 2) % 2 else 1

    items: list[tuple[TermKind, int, Fraction]] = []
    if t == 0:
        cc = math.comb(c, c // 2)
        for i in range((a - 1) // 2 + 1):
            freq = (a - 2 * i) * p
            alt = -1 if i % 2 else 1
            items.append((kind, freq, prefactor * (sign_a * alt * math.comb(a, i) * cc * freq**h)))
    for i in range((a - 1) // 2 + 1):
        fi = (a - 2 * i) * p
        alt = -1 if i % 2 else 1
        base = sign_a * alt * math.comb(a, i)
        for j in range((c - 1) // 2 + 1):
            gj = (c - 2 * j) * q
            w = base * math.comb(c, j)
            items.append((kind, fi + gj, prefactor * (w * (fi + gj) ** h)))
            items.append((kind, fi - gj, prefactor * (w * (fi - gj) ** h)))
    if s == 0:
        ca = math.comb(a, a // 2)
        for i in range((c - 1) // 2 + 1):
            freq = (c - 2 * i) * q
            items.append((kind, freq, prefactor * (ca * math.comb(c, i) * freq**h)))
    if h == 0 and s == 0 and t == 0:
        # Global constant of the product; absent from the sums above.
        items.append(
            (TermKind.CONST, 0,
             Fraction(math.comb(a, a // 2) * math.comb(c, c // 2), 2 ** (a + c)))
        )
    return TrigPoly(items)
