"""Semi-analytic solver for nonlinear filtration fronts on [0, inf).

Taylor coefficients of the invariant profile are generated by an affine
probing recurrence, compressed into low-order rational approximants with
the correct decay factor, and the free initial slope is pinned by an
integral conservation law.  A fixed-step RK4 shooting solver provides the
independent reference every approximant is graded against.
"""

from .numerics import (
    BlowUpError,
    Bracket,
    BracketError,
    QuadAccuracyError,
    Trajectory,
    brent_root,
    expint_ei,
    expint_ei_scaled,
    quad_adaptive,
    rk4_integrate,
)
from .pade import (
    AsymptoticFactor,
    DegenerateTableError,
    ExponentialFactor,
    GaussianFactor,
    PoleRejectionError,
    QuasiPade,
    build_quasi_pade,
)
from .physical import (
    CsvParseError,
    FitError,
    NonConvexDataError,
    Nondimensional,
    PhysicalParams,
    SingularMappingError,
    fit_viscosity_parabola,
    load_viscosity_csv,
    nondimensionalize,
    parabola_fit_residual,
)
from .recurrence import (
    ModelParams,
    OdeKind,
    SingularRecurrenceError,
    TravelingParams,
    residual_series,
    taylor_coefficients,
)
from .series import SeriesDivisionError, TruncatedSeries
from .solver import (
    CaseMismatchError,
    InfeasibleCandidateError,
    NoSignChangeError,
    OracleResult,
    ProfileStats,
    ShootingError,
    SolveResult,
    approximant_at,
    conservation_residual,
    profile_error,
    shooting_exact,
    solve_r1,
    traveling_decay_rate,
    traveling_mass_limit,
    verify_delta_limit,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticFactor",
    "BlowUpError",
    "Bracket",
    "BracketError",
    "CaseMismatchError",
    "CsvParseError",
    "DegenerateTableError",
    "ExponentialFactor",
    "FitError",
    "GaussianFactor",
    "InfeasibleCandidateError",
    "ModelParams",
    "NoSignChangeError",
    "NonConvexDataError",
    "Nondimensional",
    "OdeKind",
    "OracleResult",
    "PhysicalParams",
    "PoleRejectionError",
    "ProfileStats",
    "QuadAccuracyError",
    "QuasiPade",
    "SeriesDivisionError",
    "ShootingError",
    "SingularMappingError",
    "SingularRecurrenceError",
    "SolveResult",
    "Trajectory",
    "TravelingParams",
    "TruncatedSeries",
    "approximant_at",
    "brent_root",
    "build_quasi_pade",
    "conservation_residual",
    "expint_ei",
    "expint_ei_scaled",
    "fit_viscosity_parabola",
    "load_viscosity_csv",
    "nondimensionalize",
    "parabola_fit_residual",
    "profile_error",
    "quad_adaptive",
    "residual_series",
    "rk4_integrate",
    "shooting_exact",
    "solve_r1",
    "taylor_coefficients",
    "traveling_decay_rate",
    "traveling_mass_limit",
    "verify_delta_limit",
]
