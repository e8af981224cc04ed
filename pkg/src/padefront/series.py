"""Truncated power-series arithmetic over float coefficients.

A series is a finite coefficient vector c0..cN in one indeterminate.
Sums, products, and quotients truncate to the shorter operand, so callers
can never read high-order coefficients that were not actually computed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class SeriesDivisionError(ZeroDivisionError):
    """Raised when dividing by a series whose constant term is zero."""


@dataclass(frozen=True)
class TruncatedSeries:
    """Truncation c0 + c1*x + ... + cN*x^N of a power series."""

    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise ValueError("series needs at least a constant term")
        coeffs = tuple(float(c) for c in self.coeffs)
        for c in coeffs:
            if not math.isfinite(c):
                raise ValueError(f"non-finite coefficient {c!r}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: TruncatedSeries | float) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return TruncatedSeries(
                tuple(self.coeffs[k] + other.coeffs[k] for k in range(n + 1))
            )
        if isinstance(other, (int, float)):
            return TruncatedSeries((self.coeffs[0] + other,) + self.coeffs[1:])
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other: TruncatedSeries | float) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return self.__add__(-other)
        if isinstance(other, (int, float)):
            return self.__add__(-other)
        return NotImplemented

    def __rsub__(self, other: float) -> TruncatedSeries:
        return (-self).__add__(other)

    def __mul__(self, other: TruncatedSeries | float) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            a, b = self.coeffs, other.coeffs
            out = [0.0] * (n + 1)
            for k in range(n + 1):
                out[k] = sum(a[i] * b[k - i] for i in range(k + 1))
            return TruncatedSeries(tuple(out))
        if isinstance(other, (int, float)):
            return TruncatedSeries(tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: TruncatedSeries | float) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            if other.coeffs[0] == 0.0:
                raise SeriesDivisionError("denominator has zero constant term")
            n = min(self.order, other.order)
            a, b = self.coeffs, other.coeffs
            q = [0.0] * (n + 1)
            for k in range(n + 1):
                acc = a[k]
                for j in range(1, k + 1):
                    acc -= b[j] * q[k - j]
                q[k] = acc / b[0]
            return TruncatedSeries(tuple(q))
        if isinstance(other, (int, float)):
            return TruncatedSeries(tuple(c / other for c in self.coeffs))
        return NotImplemented

    def differentiate(self) -> TruncatedSeries:
        """Term-wise derivative; the order drops by one (constants map to 0)."""
        if self.order == 0:
            return TruncatedSeries((0.0,))
        return TruncatedSeries(
            tuple(k * self.coeffs[k] for k in range(1, self.order + 1))
        )

    def evaluate(self, x: float) -> float:
        """Horner evaluation of the truncated polynomial at x."""
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def pad(self, order: int) -> TruncatedSeries:
        """Zero-extend to a higher order (asserts the tail really is zero)."""
        if order < self.order:
            raise ValueError("pad cannot reduce the order; use truncate")
        return TruncatedSeries(self.coeffs + (0.0,) * (order - self.order))

    def truncate(self, order: int) -> TruncatedSeries:
        """Drop coefficients above the given order."""
        if order > self.order:
            raise ValueError("truncate cannot extend the order; use pad")
        return TruncatedSeries(self.coeffs[: order + 1])
