"""Scalar numerical kernels used across the package.

Four self-contained tools live here: an adaptive Gauss-Legendre quadrature,
the exponential integral Ei, a bracketing Brent root finder, and a classic
fixed-step RK4 integrator with blow-up detection.  They are deliberately
dependency-light; the rest of the package treats them as the reference
numerics everything else is validated against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

_EULER_GAMMA = 0.5772156649015328606
_QUAD_MAX_DEPTH = 48

# 15-point Gauss-Legendre rule; exact through polynomial degree 29, so the
# bisection loop below typically stops after one or two levels on smooth
# integrands.
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(15)
_GL_NODES = tuple(float(x) for x in _GL_NODES)
_GL_WEIGHTS = tuple(float(w) for w in _GL_WEIGHTS)


class QuadAccuracyError(ArithmeticError):
    """Subdivision limit hit before the tolerance was met.

    Carries the best available estimate in ``estimate``.
    """

    def __init__(self, estimate: float, message: str):
        super().__init__(message)
        self.estimate = estimate


class BracketError(ValueError):
    """A root bracket whose endpoint values do not straddle zero."""


class BlowUpError(ArithmeticError):
    """Trajectory left the finite range before reaching the right endpoint.

    Carries the last valid abscissa ``xi``, the state there, and the partial
    trajectory integrated so far.
    """

    def __init__(self, xi: float, state: tuple[float, ...], trajectory: "Trajectory"):
        super().__init__(f"state blew up at xi={xi:.6g}")
        self.xi = xi
        self.state = state
        self.trajectory = trajectory


def _gl_panel(f: Callable[[float], float], a: float, b: float) -> float:
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    return half * math.fsum(
        w * f(mid + half * x) for x, w in zip(_GL_NODES, _GL_WEIGHTS)
    )


def quad_adaptive(
    f: Callable[[float], float], a: float, b: float, tol: float = 1e-10
) -> float:
    """Integrate f over [a, b] to absolute accuracy tol.

    Gauss-Legendre panels are bisected until the two-half refinement changes
    the panel value by less than the local error budget.  Raises
    QuadAccuracyError (carrying the best estimate) if the subdivision depth
    limit is reached first.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if a == b:
        return 0.0
    sign = 1.0
    if b < a:
        a, b = b, a
        sign = -1.0

    failed = False

    def recurse(lo: float, hi: float, budget: float, whole: float, depth: int) -> float:
        nonlocal failed
        mid = 0.5 * (lo + hi)
        left = _gl_panel(f, lo, mid)
        right = _gl_panel(f, mid, hi)
        refined = left + right
        if abs(refined - whole) <= budget:
            return refined
        if depth >= _QUAD_MAX_DEPTH:
            failed = True
            return refined
        return recurse(lo, mid, 0.5 * budget, left, depth + 1) + recurse(
            mid, hi, 0.5 * budget, right, depth + 1
        )

    total = recurse(a, b, tol, _gl_panel(f, a, b), 0)
    if failed:
        raise QuadAccuracyError(
            sign * total, f"tolerance {tol:g} not reached within depth {_QUAD_MAX_DEPTH}"
        )
    return sign * total


def _ei_power_series(x: float) -> float:
    # Ei(x) = gamma + ln|x| + sum_k x^k / (k * k!), fine for |x| <= 4 on the
    # negative side (cancellation still leaves ~13 digits) and any moderate
    # positive x (all late terms positive).
    total = 0.0
    term = 1.0
    for k in range(1, 400):
        term *= x / k
        contrib = term / k
        total += contrib
        if abs(contrib) < 1e-18 * (abs(total) + 1e-30):
            break
    return _EULER_GAMMA + math.log(abs(x)) + total


def _e1_continued_fraction(z: float) -> float:
    # Scaled continued fraction: returns exp(z) * E1(z), valid for z >= 1.
    # Modified Lentz evaluation of E1(z) = e^{-z} / (z + 1 - 1/(z + 3 - 4/(...)))
    # in its standard descending form.
    tiny = 1e-300
    b = z + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 300):
        a = -i * i
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return h


def _ei_asymptotic(x: float) -> float:
    # Ei(x) ~ e^x/x * sum_k k!/x^k, truncated at the smallest term; good to
    # well below 1e-12 relative for x >= 40.
    total = 1.0
    term = 1.0
    for k in range(1, 200):
        nxt = term * k / x
        if abs(nxt) >= abs(term):
            break
        term = nxt
        total += term
        if abs(term) < 1e-18 * abs(total):
            break
    return math.exp(x) / x * total


def expint_ei(x: float) -> float:
    """Principal-value exponential integral Ei(x) for x != 0."""
    if x == 0.0:
        raise ValueError("Ei has a logarithmic singularity at 0")
    if x > 0.0:
        if x < 40.0:
            return _ei_power_series(x)
        return _ei_asymptotic(x)
    if x > -4.0:
        return _ei_power_series(x)
    # Ei(x) = -E1(-x) for x < 0; the continued fraction returns e^{-x} E1(-x).
    return -math.exp(x) * _e1_continued_fraction(-x)


def expint_ei_scaled(x: float) -> float:
    """exp(-x) * Ei(x) for x < 0, stable for arbitrarily large |x|."""
    if x >= 0.0:
        raise ValueError("scaled form is defined for negative arguments")
    if x > -4.0:
        return math.exp(-x) * _ei_power_series(x)
    return -_e1_continued_fraction(-x)


@dataclass(frozen=True)
class Bracket:
    """Sign-changing interval [lo, hi] with cached endpoint values."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self) -> None:
        if not (self.lo < self.hi):
            raise BracketError("bracket needs lo < hi")
        if not (math.isfinite(self.f_lo) and math.isfinite(self.f_hi)):
            raise BracketError("bracket endpoint values must be finite")
        if self.f_lo == 0.0 or self.f_hi == 0.0 or (self.f_lo > 0.0) == (self.f_hi > 0.0):
            raise BracketError("bracket endpoint values must have opposite signs")

    @classmethod
    def from_function(
        cls, f: Callable[[float], float], lo: float, hi: float
    ) -> "Bracket":
        return cls(lo, hi, f(lo), f(hi))


def brent_root(
    f: Callable[[float], float], bracket: Bracket, tol: float = 1e-12
) -> float:
    """Find a root of f inside a sign-changing bracket (Brent's method).

    Combines bisection, secant, and inverse quadratic steps; terminates when
    the bracket width falls below tol plus a machine-precision floor.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    a, b = bracket.lo, bracket.hi
    fa, fb = bracket.f_lo, bracket.f_hi
    c, fc = a, fa
    e = d = b - a
    eps = 2.220446049250313e-16

    for _ in range(500):
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol1 = 2.0 * eps * abs(b) + 0.5 * tol
        m = 0.5 * (c - b)
        if abs(m) <= tol1 or fb == 0.0:
            return b
        if abs(e) < tol1 or abs(fa) <= abs(fb):
            e = d = m
        else:
            s = fb / fa
            if a == c:
                p = 2.0 * m * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0.0:
                q = -q
            else:
                p = -p
            s, e = e, d
            if 2.0 * p < 3.0 * m * q - abs(tol1 * q) and p < abs(0.5 * s * q):
                d = p / q
            else:
                e = d = m
        a, fa = b, fb
        if abs(d) > tol1:
            b += d
        else:
            b += tol1 if m > 0.0 else -tol1
        fb = f(b)
        if (fb > 0.0) == (fc > 0.0):
            c, fc = a, fa
            e = d = b - a
    raise ArithmeticError("brent_root failed to converge")


@dataclass(frozen=True)
class Trajectory:
    """Uniformly sampled ODE trajectory: abscissas, states, step size."""

    xs: np.ndarray
    states: np.ndarray
    h: float

    def __post_init__(self) -> None:
        xs = np.asarray(self.xs, dtype=float)
        states = np.asarray(self.states, dtype=float)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "states", states)
        if self.h <= 0.0:
            raise ValueError("step size must be positive")
        if xs.ndim != 1 or states.shape[0] != xs.shape[0]:
            raise ValueError("abscissa/state count mismatch")
        if xs.size > 1 and not np.all(np.diff(xs) > 0.0):
            raise ValueError("abscissas must be strictly increasing")
        if not np.all(np.isfinite(states)):
            raise ValueError("trajectory contains non-finite states")

    def interpolate(self, x, component: int = 0):
        """Linear interpolation of one state component at the given points."""
        x = np.asarray(x, dtype=float)
        if np.any(x < self.xs[0]) or np.any(x > self.xs[-1]):
            raise ValueError("interpolation point outside the trajectory span")
        return np.interp(x, self.xs, self.states[:, component])


def rk4_integrate(
    f: Callable[[float, tuple[float, ...]], Sequence[float]],
    y0: Sequence[float],
    length: float,
    h: float,
    blow_limit: float = 1e12,
) -> Trajectory:
    """Classical fourth-order Runge-Kutta over [0, length] with uniform steps.

    The requested step is rounded so the span divides evenly.  If any state
    component exceeds blow_limit or turns non-finite, a BlowUpError is raised
    carrying the last valid sample.
    """
    if h <= 0.0 or length <= 0.0:
        raise ValueError("length and h must be positive")
    n = max(1, round(length / h))
    step = length / n
    y = tuple(float(v) for v in y0)
    xs = [0.0]
    states = [y]
    half = 0.5 * step
    sixth = step / 6.0
    for i in range(n):
        x = i * step
        k1 = f(x, y)
        k2 = f(x + half, tuple(yi + half * ki for yi, ki in zip(y, k1)))
        k3 = f(x + half, tuple(yi + half * ki for yi, ki in zip(y, k2)))
        k4 = f(x + step, tuple(yi + step * ki for yi, ki in zip(y, k3)))
        y_next = tuple(
            yi + sixth * (a + 2.0 * (b + c) + d)
            for yi, a, b, c, d in zip(y, k1, k2, k3, k4)
        )
        if not all(math.isfinite(v) and abs(v) <= blow_limit for v in y_next):
            partial = Trajectory(np.array(xs), np.array(states), step)
            raise BlowUpError(x, y, partial)
        y = y_next
        xs.append((i + 1) * step)
        states.append(y)
    return Trajectory(np.array(xs), np.array(states), step)
