"""Mapping dimensional reservoir data onto the dimensionless front problem.

The oil viscosity near the bubble point is modeled as a parabola in
pressure; its curvature sets the pressure scale Omega = 1/sqrt(a), and the
reduced pressures y_i = p_i/Omega fix the conductivity coefficients beta_j
and the boundary value r0 = y2 - y1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .recurrence import ModelParams

ROUNDED_PRESSURE_SCALE = 0.81e7  # two-figure Omega used in the worked case


class FitError(ValueError):
    """Viscosity fit impossible (too little or degenerate data)."""


class NonConvexDataError(FitError):
    """Least squares produced a non-positive curvature."""


class CsvParseError(ValueError):
    """Malformed viscosity CSV row; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class SingularMappingError(ArithmeticError):
    """The permeability correction 1 + CkOmega*(y1 - y0) vanished."""


@dataclass(frozen=True)
class PhysicalParams:
    """Dimensional reservoir quantities.

    mu0 [Pa s] and p0 [Pa] locate the viscosity minimum, a [1/Pa^2] is the
    parabola curvature, ck_omega is the dimensionless permeability product,
    p1 and p2 [Pa] are the far-field and boundary pressures.  The optional
    block (k0, m0, cf, cm) only feeds the stored diffusivity scale.
    """

    mu0: float
    p0: float
    a: float
    ck_omega: float
    p1: float
    p2: float
    k0: float | None = None
    m0: float | None = None
    cf: float | None = None
    cm: float | None = None

    def __post_init__(self) -> None:
        if not (self.a > 0.0 and self.mu0 > 0.0 and self.p0 > 0.0):
            raise ValueError("a, mu0, and p0 must be strictly positive")


@dataclass(frozen=True)
class Nondimensional:
    """Dimensionless problem data derived from PhysicalParams."""

    omega: float
    y0: float
    y1: float
    y2: float
    model: ModelParams
    r0: float
    kappa: float | None = None
    d0: float | None = None


def fit_viscosity_parabola(
    points: list[tuple[float, float]],
) -> tuple[float, float, float]:
    """Fit mu = mu0 * (1 + a*(p - p0)^2) to (pressure, viscosity) samples.

    The vertex (p0, mu0) is pinned to the minimum-viscosity sample; the
    curvature a is the least-squares solution over the remaining points,
    a = sum((mu_i/mu0 - 1) w_i) / sum(w_i^2) with w_i = (p_i - p0)^2.
    """
    if len(points) < 3:
        raise FitError("need at least 3 (pressure, viscosity) points")
    p0, mu0 = min(points, key=lambda pt: pt[1])
    if mu0 <= 0.0:
        raise FitError("viscosities must be strictly positive")
    top = 0.0
    bottom = 0.0
    for p, mu in points:
        w = (p - p0) ** 2
        top += (mu / mu0 - 1.0) * w
        bottom += w * w
    if bottom == 0.0:
        raise FitError("all samples sit at the vertex pressure")
    a = top / bottom
    if a <= 0.0:
        raise NonConvexDataError(f"fitted curvature {a:g} is not positive")
    return mu0, p0, a


def parabola_fit_residual(
    points: list[tuple[float, float]], mu0: float, p0: float, a: float
) -> float:
    """Root-mean-square viscosity misfit of a fitted parabola."""
    sq = [
        (mu - mu0 * (1.0 + a * (p - p0) ** 2)) ** 2 for p, mu in points
    ]
    return math.sqrt(sum(sq) / len(sq))


def nondimensionalize(
    phys: PhysicalParams, rounded_scale: bool = False
) -> Nondimensional:
    """Reduce dimensional parameters to the dimensionless front problem.

    rounded_scale swaps the exact Omega = 1/sqrt(a) for the two-figure value
    0.81e7 Pa used in the published worked case, for number-for-number
    comparison.
    """
    omega = ROUNDED_PRESSURE_SCALE if rounded_scale else 1.0 / math.sqrt(phys.a)
    y0 = phys.p0 / omega
    y1 = phys.p1 / omega
    y2 = phys.p2 / omega
    dy = y1 - y0
    correction = 1.0 + phys.ck_omega * dy
    if correction == 0.0:
        raise SingularMappingError("1 + CkOmega*(y1 - y0) vanished")
    model = ModelParams(
        beta1=phys.ck_omega / correction,
        beta2=1.0 / (1.0 + dy * dy),
        beta3=dy / (1.0 + dy * dy),
    )
    kappa = None
    d0 = None
    if None not in (phys.k0, phys.m0, phys.cf, phys.cm):
        kappa = phys.k0 / (phys.mu0 * phys.m0 * (phys.cf + phys.cm))
        d0 = kappa * correction / (1.0 + dy * dy)
    return Nondimensional(omega, y0, y1, y2, model, y2 - y1, kappa, d0)


def load_viscosity_csv(path: str | Path) -> list[tuple[float, float]]:
    """Read (pressure, viscosity) points from a two-column text file.

    Comma or whitespace delimited; one optional header line is skipped.
    Rows must parse to finite floats.  The result is sorted by pressure.
    """
    points: list[tuple[float, float]] = []
    with open(path, newline="") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line:
                continue
            tokens = line.replace(",", " ").split()
            parsed = []
            for tok in tokens:
                try:
                    parsed.append(float(tok))
                except ValueError:
                    parsed.append(None)
            numeric = [v for v in parsed if v is not None]
            if len(tokens) == 2 and len(numeric) == 2:
                if not all(math.isfinite(v) for v in numeric):
                    raise CsvParseError(lineno, f"non-finite value in {line!r}")
                points.append((numeric[0], numeric[1]))
                continue
            if lineno == 1 and not numeric:
                continue  # header line
            raise CsvParseError(lineno, f"expected two numeric columns, got {line!r}")
    if len(points) < 3:
        raise FitError(f"need at least 3 data rows, found {len(points)}")
    return sorted(points)
