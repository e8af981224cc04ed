"""[M/M] rational approximants carrying an explicit decay factor.

The rational part matches a given Taylor expansion through degree 2M once
the decay factor's own Maclaurin expansion is accounted for, so the result
is simultaneously correct near zero and integrable on [0, inf).  Two decay
factors are supported: exp(-xi^2) for diffusive fronts and exp(H*xi), H < 0,
for wave fronts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numerics import expint_ei, expint_ei_scaled, quad_adaptive
from .series import TruncatedSeries


class DegenerateTableError(ArithmeticError):
    """The coefficient-matching linear system is singular."""


class PoleRejectionError(ValueError):
    """The denominator has a real root on [0, inf); approximant rejected."""


@dataclass(frozen=True)
class GaussianFactor:
    """Decay factor exp(-xi^2)."""

    def series_coeffs(self, order: int) -> tuple[float, ...]:
        out = [0.0] * (order + 1)
        for n in range(0, order // 2 + 1):
            out[2 * n] = (-1.0) ** n / math.factorial(n)
        return tuple(out)

    def value(self, xi):
        return np.exp(-np.square(xi))

    @property
    def slope_at_zero(self) -> float:
        return 0.0

    def tail_length(self) -> float:
        # exp(-64) at the cutoff; far below any tolerance used here.
        return 8.0


@dataclass(frozen=True)
class ExponentialFactor:
    """Decay factor exp(rate*xi) with strictly negative rate."""

    rate: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.rate) and self.rate < 0.0):
            raise ValueError("exponential factor needs a strictly negative rate")

    def series_coeffs(self, order: int) -> tuple[float, ...]:
        out = [1.0]
        for n in range(1, order + 1):
            out.append(out[-1] * self.rate / n)
        return tuple(out)

    def value(self, xi):
        return np.exp(self.rate * np.asarray(xi, dtype=float))

    @property
    def slope_at_zero(self) -> float:
        return self.rate

    def tail_length(self) -> float:
        # exp(-28) ~ 7e-13 of the rational part's limiting value.
        return 28.0 / abs(self.rate)


AsymptoticFactor = GaussianFactor | ExponentialFactor


def _denominator_has_nonneg_root(den: tuple[float, ...]) -> bool:
    # Trim trailing coefficients that are negligible next to the largest one;
    # they would inflate the root bound without moving any relevant root.
    scale = max(abs(c) for c in den)
    coeffs = list(den)
    while len(coeffs) > 1 and abs(coeffs[-1]) <= 1e-14 * scale:
        coeffs.pop()
    if len(coeffs) == 1:
        return coeffs[0] <= 0.0
    if all(c >= 0.0 for c in coeffs):
        return False
    # Cauchy bound on root magnitude, then a dense sign scan below it.
    bound = 1.0 + max(abs(c) for c in coeffs[:-1]) / abs(coeffs[-1])
    poly = np.array(coeffs[::-1])
    xs = np.linspace(0.0, min(bound, 64.0), 4001)
    if bound > 64.0:
        xs = np.concatenate([xs, np.geomspace(64.0, bound, 2001)])
    return bool(np.any(np.polyval(poly, xs) <= 0.0))


@dataclass(frozen=True)
class QuasiPade:
    """Rational [M/M] function times a decay factor.

    Normalization: den[0] == 1, so num[0] is the value at xi = 0.  The
    denominator must be strictly positive on [0, inf); construction rejects
    anything else, which keeps evaluation and integration pole-free.
    """

    num: tuple[float, ...]
    den: tuple[float, ...]
    factor: AsymptoticFactor

    def __post_init__(self) -> None:
        num = tuple(float(c) for c in self.num)
        den = tuple(float(c) for c in self.den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        if len(num) == 0 or len(num) != len(den):
            raise ValueError("numerator and denominator need equal length >= 1")
        if not all(math.isfinite(c) for c in num + den):
            raise ValueError("non-finite approximant coefficient")
        if den[0] != 1.0:
            raise ValueError("denominator must be normalized to den[0] == 1")
        if _denominator_has_nonneg_root(den):
            raise PoleRejectionError("denominator has a root on [0, inf)")

    @property
    def order(self) -> int:
        return len(self.num) - 1

    def value(self, xi):
        """Evaluate at scalar or array xi >= 0."""
        xi = np.asarray(xi, dtype=float)
        top = np.polyval(self.num[::-1], xi)
        bottom = np.polyval(self.den[::-1], xi)
        out = top / bottom * self.factor.value(xi)
        return float(out) if out.ndim == 0 else out

    __call__ = value

    def derivative_at_zero(self) -> float:
        """Slope at xi = 0: num1 - num0*den1 plus the factor's own slope."""
        a1 = self.num[1] if self.order >= 1 else 0.0
        b1 = self.den[1] if self.order >= 1 else 0.0
        return a1 - self.num[0] * b1 + self.num[0] * self.factor.slope_at_zero

    def maclaurin(self, order: int) -> TruncatedSeries:
        """Series expansion of the approximant through the given order."""
        num = TruncatedSeries(self.num).pad(max(order, self.order))
        den = TruncatedSeries(self.den).pad(max(order, self.order))
        fac = TruncatedSeries(self.factor.series_coeffs(order))
        return ((num * fac) / den).truncate(order)

    def integral(self, method: str = "auto", upper: float | None = None) -> float:
        """Integral over [0, inf), or over [0, upper] if upper is given.

        method "auto" uses the exponential-integral closed form for
        exponential factors at order 1 and adaptive quadrature otherwise;
        "closed_form" and "quadrature" force one path.
        """
        if method not in ("auto", "closed_form", "quadrature"):
            raise ValueError(f"unknown integration method {method!r}")
        closed_ok = (
            isinstance(self.factor, ExponentialFactor)
            and self.order == 1
            and upper is None
        )
        if method == "closed_form":
            if not closed_ok:
                raise ValueError("closed form applies to exponential order-1 only")
            return self._integral_closed_form()
        if method == "auto" and closed_ok:
            return self._integral_closed_form()
        cutoff = self.factor.tail_length() if upper is None else float(upper)
        return quad_adaptive(lambda x: float(self.value(x)), 0.0, cutoff, 1e-12)

    def _integral_closed_form(self) -> float:
        a0, a1 = self.num
        h = self.factor.rate
        b1 = self.den[1]
        if b1 <= 1e-12:
            # Denominator is effectively constant; plain exponential moments.
            return -a0 / h + a1 / (h * h)
        z = h / b1
        # int_0^inf e^{h x} (a0 + a1 x)/(1 + b1 x) dx
        #   = -a1/(b1 h) + (a1 - a0 b1)/b1^2 * e^{-z} Ei(z)
        if z > -30.0:
            scaled = math.exp(-z) * expint_ei(z)
        else:
            scaled = expint_ei_scaled(z)
        return -a1 / (b1 * h) + (a1 - a0 * b1) / (b1 * b1) * scaled


def build_quasi_pade(
    p: TruncatedSeries, m: int, factor: AsymptoticFactor
) -> QuasiPade:
    """Fit an order-m QuasiPade to the first 2m+1 series coefficients.

    Matching condition: factor_series * num - p * den vanishes through degree
    2m, with den[0] = 1 and num[0] = p(0).  The 2m unknowns (num[1..m],
    den[1..m]) solve one dense linear system.
    """
    if m < 1:
        raise ValueError("approximant order must be >= 1")
    if p.order < 2 * m:
        raise ValueError(f"need a series of order >= {2 * m} for order {m}")
    r = p.coeffs
    e = factor.series_coeffs(2 * m)
    a0 = r[0]
    size = 2 * m
    mat = np.zeros((size, size))
    rhs = np.zeros(size)
    for n in range(1, size + 1):
        row = n - 1
        for i in range(1, min(m, n) + 1):
            mat[row, i - 1] = e[n - i]
        for j in range(1, min(m, n) + 1):
            mat[row, m + j - 1] = -r[n - j]
        rhs[row] = r[n] - e[n] * a0
    try:
        sol = np.linalg.solve(mat, rhs)
    except np.linalg.LinAlgError as exc:
        raise DegenerateTableError("coefficient-matching system is singular") from exc
    if not np.all(np.isfinite(sol)):
        raise DegenerateTableError("coefficient-matching system is singular")
    num = (a0, *(float(v) for v in sol[:m]))
    den = (1.0, *(float(v) for v in sol[m:]))
    return QuasiPade(num, den, factor)
