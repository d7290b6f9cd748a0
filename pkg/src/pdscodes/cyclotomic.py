"""Exact arithmetic in Z[zeta_p] for a prime p-th root of unity.

Values of additive character sums live in this ring; eigenvalue tests
need exact equality, so no floating point anywhere.  An element is kept
in the canonical form c_0 + c_1*zeta + ... + c_{p-2}*zeta^(p-2): the
zeta^(p-1) coefficient is always eliminated through
1 + zeta + ... + zeta^(p-1) = 0, which makes equality coefficient-wise.
"""
from __future__ import annotations

from typing import Sequence


def canonicalize(raw: Sequence[int], p: int) -> tuple[int, ...]:
    """Reduce a length-p coefficient vector to the canonical length p-1."""
    if len(raw) != p:
        raise ValueError(f"expected {p} raw coefficients, got {len(raw)}")
    top = raw[p - 1]
    return tuple(int(c - top) for c in raw[: p - 1])


class CyclotomicInteger:
    """An element of Z[zeta_p], canonically reduced."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Sequence[int]):
        if p < 2:
            raise ValueError("p must be a prime >= 2")
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) == p:
            coeffs = canonicalize(coeffs, p)
        elif len(coeffs) != p - 1:
            raise ValueError(f"need {p - 1} canonical or {p} raw coefficients")
        self.p = p
        self.coeffs = coeffs

    # -- constructors ----------------------------------------------------

    @classmethod
    def integer(cls, p: int, n: int) -> "CyclotomicInteger":
        return cls(p, (int(n),) + (0,) * (p - 2))

    @classmethod
    def zeta_power(cls, p: int, t: int) -> "CyclotomicInteger":
        raw = [0] * p
        raw[t % p] = 1
        return cls(p, raw)

    @classmethod
    def from_counts(cls, p: int, counts: Sequence[int]) -> "CyclotomicInteger":
        """sum(counts[t] * zeta^t) from a length-p count vector."""
        return cls(p, list(counts))

    # -- ring operations --------------------------------------------------

    def _check(self, other: "CyclotomicInteger"):
        if not isinstance(other, CyclotomicInteger) or other.p != self.p:
            raise TypeError("operands must share the same root of unity")

    def __add__(self, other):
        if isinstance(other, int):
            other = CyclotomicInteger.integer(self.p, other)
        self._check(other)
        return CyclotomicInteger(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = CyclotomicInteger.integer(self.p, other)
        self._check(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInteger(self.p, tuple(a * other for a in self.coeffs))
        self._check(other)
        p = self.p
        raw = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        raw[(i + j) % p] += a * b
        return CyclotomicInteger(p, raw)

    __rmul__ = __mul__

    def conjugate(self) -> "CyclotomicInteger":
        """Complex conjugate: zeta -> zeta^(-1)."""
        p = self.p
        raw = [0] * p
        for i, a in enumerate(self.coeffs):
            raw[(-i) % p] = a
        return CyclotomicInteger(p, raw)

    def norm_squared(self) -> int:
        """|z|^2 = z * conj(z); always a rational integer here only if real-rational."""
        prod = self * self.conjugate()
        if not prod.is_rational():
            raise ValueError("|z|^2 is not rational; z*conj(z) left the integers")
        return prod.rational_value()

    # -- predicates --------------------------------------------------------

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        if self.is_rational():
            return f"CyclotomicInteger(p={self.p}, {self.coeffs[0]})"
        return f"CyclotomicInteger(p={self.p}, coeffs={self.coeffs})"
