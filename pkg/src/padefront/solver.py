"""End-to-end pipelines for the two semi-infinite front problems.

For a given approximant order M the free initial slope r1 = P'(0) is the
root of a conservation-law residual: the integral of the decay-matched
approximant must balance the boundary flux (diffusive case) or the wave's
mass budget (relaxation case).  A fixed-step RK4 shooting solver provides
the reference trajectory the approximants are graded against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numerics import (
    BlowUpError,
    Bracket,
    Trajectory,
    brent_root,
    quad_adaptive,
    rk4_integrate,
)
from .pade import (
    DegenerateTableError,
    ExponentialFactor,
    GaussianFactor,
    PoleRejectionError,
    QuasiPade,
    build_quasi_pade,
)
from .recurrence import ModelParams, OdeKind, TravelingParams, taylor_coefficients

DEFAULT_SLOPE_BRACKETS = {
    OdeKind.SELF_SIMILAR: (-3.0, -0.5),
    OdeKind.TRAVELING_WAVE: (-3.0, -1.0),
}
DEFAULT_SHOOTING_LENGTH = {
    OdeKind.SELF_SIMILAR: 5.0,
    OdeKind.TRAVELING_WAVE: 8.0,
}
_SCAN_PANELS = 50
_RESIDUAL_TOL = 1e-8
_BOUNDARY_TOL = 1e-6


class InfeasibleCandidateError(ArithmeticError):
    """Candidate slope produced an approximant with a pole on [0, inf)."""


class NoSignChangeError(ArithmeticError):
    """Conservation residual found no sign change; carries the scan table."""

    def __init__(self, message: str, scan: list[tuple[float, float | None]]):
        super().__init__(message)
        self.scan = scan


class ShootingError(ArithmeticError):
    """Shooting failed: same-side termination or boundary mismatch."""


class CaseMismatchError(ValueError):
    """Approximant and oracle were computed for different problems."""


@dataclass
class SolveResult:
    """Solved slope with its approximant and diagnostics."""

    kind: OdeKind
    params: ModelParams | TravelingParams
    m: int
    r1: float
    pade: QuasiPade
    residual: float
    eta: float | None = None
    delta_profile: np.ndarray | None = None


@dataclass(frozen=True)
class OracleResult:
    """Shooting reference: exact slope, trajectory, accumulated mass."""

    kind: OdeKind
    params: ModelParams | TravelingParams
    r1_exact: float
    trajectory: Trajectory
    delta_limit_observed: float


@dataclass(frozen=True)
class ProfileStats:
    """Pointwise oracle-vs-approximant comparison on a grid."""

    grid: np.ndarray
    delta: np.ndarray
    delta_min: float
    delta_max: float
    eta: float


def traveling_decay_rate(tp: TravelingParams) -> float:
    """Negative root H of the far-field characteristic equation.

    Linearizing the wave ODE about P = 0 gives
    c*tau*theta*H^2 + (tau*c^2 - 1)*H - c = 0, and the decaying branch is
    H = [(1 - tau c^2) - sqrt((tau c^2 - 1)^2 + 4 tau theta c^2)] / (2 c tau theta).
    """
    tc2 = tp.tau * tp.c * tp.c
    disc = (tc2 - 1.0) ** 2 + 4.0 * tp.tau * tp.theta * tp.c * tp.c
    return ((1.0 - tc2) - math.sqrt(disc)) / (2.0 * tp.c * tp.tau * tp.theta)


def _factor_for(kind: OdeKind, params):
    if kind is OdeKind.SELF_SIMILAR:
        return GaussianFactor()
    return ExponentialFactor(traveling_decay_rate(params))


def approximant_at(
    kind: OdeKind, params, m: int, r1: float, r0: float = 1.0
) -> QuasiPade:
    """Build the order-m approximant for a candidate slope."""
    series = taylor_coefficients(kind, params, r0, r1, 2 * m)
    try:
        return build_quasi_pade(series, m, _factor_for(kind, params))
    except (PoleRejectionError, DegenerateTableError) as exc:
        raise InfeasibleCandidateError(
            f"slope {r1:.6g} gives no admissible order-{m} approximant: {exc}"
        ) from exc


def traveling_mass_limit(tp: TravelingParams, r1: float, r0: float = 1.0) -> float:
    """Required value of the integral of P for the wave problem.

    Integrating the wave ODE over [0, inf):
    Delta = (-tau c^2 r0 - c tau theta G(r0) r1 + int_0^r0 G) / c.
    """
    g_int = quad_adaptive(tp.model.conductivity, 0.0, r0, 1e-10)
    return (
        -tp.tau * tp.c * tp.c * r0
        - tp.c * tp.tau * tp.theta * tp.model.conductivity(r0) * r1
        + g_int
    ) / tp.c


def conservation_residual(
    kind: OdeKind,
    params,
    m: int,
    r1: float,
    r0: float = 1.0,
    paper_compat: bool = False,
) -> float:
    """Conservation-law mismatch of the order-m approximant at slope r1.

    Self-similar:   r1 + 2 * integral(PA) / G(r0)
    Traveling wave: integral(PA) - Delta(r1)

    paper_compat truncates the wave integral at 4.0 for orders above 1,
    matching the finite window used in the published worked case.
    """
    pa = approximant_at(kind, params, m, r1, r0)
    if kind is OdeKind.SELF_SIMILAR:
        return r1 + 2.0 * pa.integral() / params.conductivity(r0)
    upper = 4.0 if (paper_compat and m >= 2) else None
    return pa.integral(upper=upper) - traveling_mass_limit(params, r1, r0)


def solve_r1(
    kind: OdeKind,
    params,
    m: int,
    bracket: tuple[float, float] | None = None,
    r0: float = 1.0,
    paper_compat: bool = False,
    root_tol: float = 1e-10,
) -> SolveResult:
    """Solve the conservation law for the initial slope at order m.

    Falls back to a 50-panel scan of the bracket when the endpoints do not
    straddle a root (or are infeasible); if the scan finds no sign change
    either, NoSignChangeError carries the scanned (slope, residual) table.
    """
    lo, hi = bracket if bracket is not None else DEFAULT_SLOPE_BRACKETS[kind]

    def objective(r1: float) -> float:
        return conservation_residual(kind, params, m, r1, r0, paper_compat)

    def probe(r1: float) -> float | None:
        try:
            return objective(r1)
        except InfeasibleCandidateError:
            return None

    f_lo, f_hi = probe(lo), probe(hi)
    pair = None
    if f_lo is not None and f_hi is not None and f_lo * f_hi < 0.0:
        pair = (lo, hi, f_lo, f_hi)
    else:
        xs = [lo + (hi - lo) * i / _SCAN_PANELS for i in range(_SCAN_PANELS + 1)]
        vals = [probe(x) for x in xs]
        for i in range(_SCAN_PANELS):
            a, b = vals[i], vals[i + 1]
            if a is not None and b is not None and a * b < 0.0:
                pair = (xs[i], xs[i + 1], a, b)
                break
        if pair is None:
            raise NoSignChangeError(
                f"no sign change of the order-{m} conservation residual in "
                f"[{lo:.6g}, {hi:.6g}]",
                list(zip(xs, vals)),
            )
    root = brent_root(objective, Bracket(*pair), root_tol)
    pa = approximant_at(kind, params, m, root, r0)
    residual = objective(root)
    if abs(residual) > _RESIDUAL_TOL:
        raise ArithmeticError(
            f"conservation residual {residual:.3g} still above {_RESIDUAL_TOL:g} "
            "after the root solve"
        )
    return SolveResult(kind, params, m, root, pa, residual)


def _second_order_rhs(kind: OdeKind, params):
    # State is (P, P', Y) with Y' = P accumulating the conserved integral.
    if kind is OdeKind.SELF_SIMILAR:
        g = params.conductivity
        gp = params.conductivity_slope

        def rhs(x, y):
            p, dp, _ = y
            return (dp, (-2.0 * x * dp - gp(p) * dp * dp) / g(p), p)

        return rhs
    g = params.model.conductivity
    gp = params.model.conductivity_slope
    c = params.c
    tc2 = params.tau * params.c * params.c
    ctt = params.c * params.tau * params.theta

    def rhs(x, y):
        p, dp, _ = y
        gv = g(p)
        return (dp, (c * p + (gv - tc2) * dp - ctt * gp(p) * dp * dp) / (ctt * gv), p)

    return rhs


def shooting_exact(
    kind: OdeKind,
    params,
    bracket: tuple[float, float] | None = None,
    length: float | None = None,
    step: float = 1e-3,
    r0: float = 1.0,
    slope_tol: float = 1e-10,
) -> OracleResult:
    """Reference slope by shooting: bisect P'(0) until P(length) vanishes.

    Divergent candidates are classified by the sign of P at the blow-up
    point, so the bisection works on the whole bracket even where most
    trajectories never reach the far boundary.  The bracket is widened a few
    times if both ends terminate on the same side.
    """
    span = length if length is not None else DEFAULT_SHOOTING_LENGTH[kind]
    lo, hi = bracket if bracket is not None else DEFAULT_SLOPE_BRACKETS[kind]
    rhs = _second_order_rhs(kind, params)
    blow_limit = 50.0 * max(1.0, abs(r0))

    def terminal(r1: float) -> float:
        try:
            traj = rk4_integrate(rhs, (r0, r1, 0.0), span, step, blow_limit)
        except BlowUpError as err:
            return err.state[0]
        return float(traj.states[-1, 0])

    t_lo, t_hi = terminal(lo), terminal(hi)
    expansions = 0
    while (t_lo > 0.0) == (t_hi > 0.0):
        if expansions >= 3:
            raise ShootingError(
                "every candidate slope terminates on the same side; "
                f"bracket expansion up to [{lo:.4g}, {hi:.4g}] failed"
            )
        width = hi - lo
        lo -= width
        hi += width
        t_lo, t_hi = terminal(lo), terminal(hi)
        expansions += 1
    while hi - lo > slope_tol:
        mid = 0.5 * (lo + hi)
        t_mid = terminal(mid)
        if t_mid == 0.0:
            lo = hi = mid
            break
        if (t_mid > 0.0) == (t_lo > 0.0):
            lo, t_lo = mid, t_mid
        else:
            hi, t_hi = mid, t_mid
    r1_exact = 0.5 * (lo + hi)
    try:
        trajectory = rk4_integrate(rhs, (r0, r1_exact, 0.0), span, step, blow_limit)
    except BlowUpError as err:
        raise ShootingError(
            f"converged slope {r1_exact:.8g} still blows up at xi={err.xi:.4g}"
        ) from err
    p_end = float(trajectory.states[-1, 0])
    if abs(p_end) >= _BOUNDARY_TOL:
        raise ShootingError(
            f"far boundary missed: |P({span:g})| = {abs(p_end):.3g} >= {_BOUNDARY_TOL:g}"
        )
    return OracleResult(
        kind, params, r1_exact, trajectory, float(trajectory.states[-1, 2])
    )


def profile_error(
    result: SolveResult, oracle: OracleResult, grid
) -> ProfileStats:
    """Sampled oracle-minus-approximant profile plus the slope error eta.

    Also stores eta and the sampled profile back on the SolveResult.
    """
    if result.kind is not oracle.kind or result.params != oracle.params:
        raise CaseMismatchError("approximant and oracle solve different problems")
    grid = np.asarray(grid, dtype=float)
    reference = oracle.trajectory.interpolate(grid)
    delta = reference - result.pade.value(grid)
    eta = abs((result.r1 - oracle.r1_exact) / oracle.r1_exact)
    result.eta = eta
    result.delta_profile = np.column_stack([grid, delta])
    return ProfileStats(grid, delta, float(delta.min()), float(delta.max()), eta)


def verify_delta_limit(
    oracle: OracleResult, tp: TravelingParams, r1: float, r0: float = 1.0
) -> float:
    """|Y(L) - Delta(r1)|: how well the trajectory honors the mass budget."""
    if oracle.kind is not OdeKind.TRAVELING_WAVE:
        raise CaseMismatchError("mass-budget check applies to the wave problem")
    return abs(oracle.delta_limit_observed - traveling_mass_limit(tp, r1, r0))
