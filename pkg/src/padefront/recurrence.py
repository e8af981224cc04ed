"""Taylor-coefficient recurrences for the two front ODEs.

Both model equations leave P(0) and P'(0) free; every higher coefficient is
pinned by forcing the ODE residual series to vanish order by order.  The
residual coefficient at degree k-2 is affine in the unknown coefficient r_k,
so two residual evaluations (trial values 0 and 1) determine r_k exactly.
No symbolic algebra is involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .series import SeriesDivisionError, TruncatedSeries


class OdeKind(Enum):
    """Which semi-infinite front problem is being solved."""

    SELF_SIMILAR = "self_similar"
    TRAVELING_WAVE = "traveling_wave"


class SingularRecurrenceError(ArithmeticError):
    """The recurrence cannot proceed (degenerate conductivity at P(0))."""


@dataclass(frozen=True)
class ModelParams:
    """Dimensionless coefficients of the conductivity ratio.

    G(P) = (1 + beta1*P) / (1 + 2*beta3*P + beta2*P^2); the quadratic must
    stay positive on the solution range [0, 1] and 1 + beta1 must not vanish.
    """

    beta1: float
    beta2: float
    beta3: float

    def __post_init__(self) -> None:
        for name in ("beta1", "beta2", "beta3"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v)):
                raise ValueError(f"{name} must be a finite real number")
        if 1.0 + self.beta1 == 0.0:
            raise ValueError("1 + beta1 must be nonzero")
        # Positivity of 1 + 2*b3*P + b2*P^2 on [0, 1]: endpoints, plus the
        # interior vertex when the parabola opens upward.
        end = 1.0 + 2.0 * self.beta3 + self.beta2
        if end <= 0.0:
            raise ValueError("conductivity denominator vanishes on [0, 1]")
        if self.beta2 > 0.0:
            vertex = -self.beta3 / self.beta2
            if 0.0 < vertex < 1.0 and 1.0 - self.beta3**2 / self.beta2 <= 0.0:
                raise ValueError("conductivity denominator vanishes inside [0, 1]")

    def quadratic(self, p: float) -> float:
        return 1.0 + 2.0 * self.beta3 * p + self.beta2 * p * p

    def conductivity(self, p: float) -> float:
        """Pointwise G(P)."""
        return (1.0 + self.beta1 * p) / self.quadratic(p)

    def conductivity_slope(self, p: float) -> float:
        """Pointwise dG/dP."""
        q = self.quadratic(p)
        dq = 2.0 * self.beta3 + 2.0 * self.beta2 * p
        return (self.beta1 * q - (1.0 + self.beta1 * p) * dq) / (q * q)

    def conductivity_series(self, p: TruncatedSeries) -> TruncatedSeries:
        """G composed with a series argument, truncated to p's order."""
        num = 1.0 + self.beta1 * p
        den = 1.0 + (2.0 * self.beta3) * p + self.beta2 * (p * p)
        return num / den


@dataclass(frozen=True)
class TravelingParams:
    """Relaxation-law wave parameters plus the shared conductivity model."""

    tau: float
    theta: float
    c: float
    model: ModelParams

    def __post_init__(self) -> None:
        for name in ("tau", "theta", "c"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0.0):
                raise ValueError(f"{name} must be strictly positive")


def _model_of(kind: OdeKind, params) -> ModelParams:
    if kind is OdeKind.SELF_SIMILAR:
        if not isinstance(params, ModelParams):
            raise TypeError("self-similar problem expects ModelParams")
        return params
    if not isinstance(params, TravelingParams):
        raise TypeError("traveling-wave problem expects TravelingParams")
    return params.model


def residual_series(kind: OdeKind, params, p: TruncatedSeries) -> TruncatedSeries:
    """ODE residual of a trial series, truncated to order(p) - 2.

    Self-similar:   (G(P) P')' + 2 xi P'
    Traveling wave: tau c^2 P' + c tau theta (G(P) P')' - c P - G(P) P'
    """
    if p.order < 2:
        raise ValueError("residual needs a series of order >= 2")
    model = _model_of(kind, params)
    dp = p.differentiate()
    flux = model.conductivity_series(p) * dp
    if kind is OdeKind.SELF_SIMILAR:
        xi = TruncatedSeries((0.0, 1.0)).pad(p.order)
        return flux.differentiate() + 2.0 * (xi * dp)
    tp = params
    return (
        (tp.tau * tp.c * tp.c) * dp
        + (tp.c * tp.tau * tp.theta) * flux.differentiate()
        - tp.c * p
        - flux
    )


def _residual_coeff(kind: OdeKind, params, coeffs: list[float], degree: int) -> float:
    res = residual_series(kind, params, TruncatedSeries(tuple(coeffs)))
    return res.coeffs[degree]


def taylor_coefficients(
    kind: OdeKind, params, r0: float, r1: float, n: int
) -> TruncatedSeries:
    """Series (r0, r1, r2..rn) annihilating the residual through degree n-2.

    Each r_k (k >= 2) comes from the affine dependence of the degree-(k-2)
    residual coefficient on r_k: probe with r_k = 0 and r_k = 1, then solve.
    """
    if n < 2:
        raise ValueError("need n >= 2 to determine any coefficient")
    coeffs = [float(r0), float(r1)]
    for k in range(2, n + 1):
        try:
            at_zero = _residual_coeff(kind, params, coeffs + [0.0], k - 2)
            at_one = _residual_coeff(kind, params, coeffs + [1.0], k - 2)
        except SeriesDivisionError as exc:
            raise SingularRecurrenceError(
                "conductivity is singular at the expansion point"
            ) from exc
        slope = at_one - at_zero
        if abs(slope) <= 1e-10 * max(1.0, abs(at_zero)):
            raise SingularRecurrenceError(
                f"degenerate leading coefficient while solving for r_{k}"
            )
        coeffs.append(-at_zero / slope)
    return TruncatedSeries(tuple(coeffs))
