"""Locating the minimizer of A = T + B on the DP2 Kahler cone (slice delta = 1).

The search is exact where it matters: bisection on the sign of dA/dbeta along
the diagonal runs in rational arithmetic, and every value reported is an exact
rational.  The off-diagonal grid uses a float prefilter and rechecks every
candidate that comes anywhere near the witness exactly.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .cohomology import CohClass, T_sublevel_test, calT as class_calT, class_from_params, normalized_eta
from .errors import (
    BracketFailure,
    ConeViolation,
    DenominatorVanishes,
    NonPositiveSquare,
    SameSign,
    ToleranceTooSmall,
)
from .exact import MPoly, RatFn, as_rat, ratfn_eq
from .invariants import (
    calB,
    calB_symbolic,
    calT,
    invariant_set,
    scalar_bounds,
    specialize,
)
from .polytope import DP2, DP3, KahlerParams, SurfaceKind

MAX_BISECTION_STEPS = 256
Y_LEVEL = Fraction(29, 4)


# --------------------------------------------------------------------------
# exact sign bisection
# --------------------------------------------------------------------------

def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _single_var(f: RatFn) -> str | None:
    names = f.num.variables() | f.den.variables()
    if len(names) > 1:
        raise ValueError(f"expected a function of one variable, got {sorted(names)}")
    return next(iter(names), None)


def sign_bisection(f: RatFn, lo, hi, tol, var: str | None = None,
                   max_steps: int = MAX_BISECTION_STEPS) -> tuple[Fraction, Fraction]:
    """Shrink [lo, hi] around a sign change of f to width <= tol, exactly."""
    lo, hi, tol = as_rat(lo), as_rat(hi), as_rat(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if lo >= hi:
        raise ValueError("need lo < hi")
    var = var or _single_var(f) or "beta"
    den_sign = None

    def sgn(x):
        nonlocal den_sign
        d = f.den.eval({var: x})
        if d == 0:
            raise DenominatorVanishes(f"denominator vanishes at {var} = {x}")
        if den_sign is None:
            den_sign = _sign(d)
        elif _sign(d) != den_sign:
            raise DenominatorVanishes(f"denominator changes sign inside [{lo}, {hi}]")
        return _sign(f.num.eval({var: x})) * den_sign

    s_lo, s_hi = sgn(lo), sgn(hi)
    if s_lo == 0:
        return lo, lo
    if s_hi == 0:
        return hi, hi
    if s_lo == s_hi:
        raise SameSign(f"f has the same sign at {lo} and {hi}")
    steps = 0
    while hi - lo > tol:
        if steps >= max_steps:
            raise ToleranceTooSmall(f"bracket width {hi - lo} after {steps} steps")
        mid = (lo + hi) / 2
        s = sgn(mid)
        if s == 0:
            return mid, mid
        if s == s_lo:
            lo = mid
        else:
            hi = mid
        steps += 1
    return lo, hi


# --------------------------------------------------------------------------
# the DP2 action as a rational function at delta = 1
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def calA_symbolic_dp2() -> RatFn:
    """T + B on DP2 at delta = 1 as a rational function of (beta, gamma)."""
    b, g = MPoly.var("beta"), MPoly.var("gamma")
    c1w = 3 + 2 * b + 2 * g            # c1 . Omega
    sq = 1 + 2 * b + 2 * g + 2 * b * g  # Omega^2
    B = specialize(calB_symbolic(DP2))
    return RatFn(c1w * c1w * B.den + B.num * sq, sq * B.den)


@lru_cache(maxsize=None)
def _partials_dp2() -> tuple[RatFn, RatFn]:
    A = calA_symbolic_dp2()
    return A.partial("beta"), A.partial("gamma")


def is_symmetric_dp2() -> bool:
    A = calA_symbolic_dp2()
    return ratfn_eq(A, A.swap("beta", "gamma"))


def diagonal_class(u) -> CohClass:
    return class_from_params(DP2, KahlerParams.dp2(u, u))


def diagonal_Y_interval(t=Y_LEVEL) -> tuple[Fraction, Fraction]:
    """Rational [lo, hi] inside the diagonal slice of {T <= t}.

    On beta = gamma = u, T <= t reads t(2u^2 + 4u + 1) - (4u + 3)^2 >= 0.
    The float roots are pulled inward until the exact test (both the direct
    and the disk form) accepts the endpoints.
    """
    t = as_rat(t)
    qa, qb, qc = 2 * t - 16, 4 * t - 24, t - 9
    if qa >= 0:
        raise ConeViolation("the diagonal sublevel set is unbounded for t >= 8")
    disc = float(qb * qb - 4 * qa * qc)
    if disc < 0:
        raise ConeViolation(f"T <= {t} misses the diagonal")
    r1 = (-float(qb) + math.sqrt(disc)) / (2 * float(qa))
    r2 = (-float(qb) - math.sqrt(disc)) / (2 * float(qa))
    lo_f, hi_f = min(r1, r2), max(r1, r2)
    lo = Fraction(lo_f).limit_denominator(10 ** 6)
    hi = Fraction(hi_f).limit_denominator(10 ** 6)
    nudge = Fraction(1, 10 ** 6)
    while not T_sublevel_test(diagonal_class(lo), t):
        lo += nudge
    while not T_sublevel_test(diagonal_class(hi), t):
        hi -= nudge
    return lo, hi


# --------------------------------------------------------------------------
# float evaluation helpers for the grid prefilter
# --------------------------------------------------------------------------

def _float_eval(p: MPoly, b: np.ndarray, g: np.ndarray) -> np.ndarray:
    out = np.zeros_like(b, dtype=float)
    for (ea, eb, eg, ed), c in p.items():
        if ea or ed:
            raise ValueError("float evaluator expects a polynomial in beta, gamma only")
        out += float(c) * b ** eb * g ** eg
    return out


def _calA_float(b: np.ndarray, g: np.ndarray) -> np.ndarray:
    A = calA_symbolic_dp2()
    return _float_eval(A.num, b, g) / _float_eval(A.den, b, g)


def _calT_float(b: np.ndarray, g: np.ndarray) -> np.ndarray:
    return (3 + 2 * b + 2 * g) ** 2 / (1 + 2 * b + 2 * g + 2 * b * g)


# --------------------------------------------------------------------------
# minimization
# --------------------------------------------------------------------------

@dataclass
class GridCheck:
    step: Fraction
    points_inside: int
    exact_rechecks: int
    min_float: float
    min_point: tuple[Fraction, Fraction]
    passed: bool
    local_minima: list[tuple[Fraction, Fraction, float]] = field(default_factory=list)


@dataclass
class MinimizationResult:
    params_star: KahlerParams
    calA_star: Fraction
    gradient_norm: float
    certified_below: Fraction | None
    inside_Y: bool
    bracket: tuple[Fraction, Fraction]
    eta_square: Fraction
    symmetric: bool
    diagonal_critical: bool
    grid: GridCheck | None

    def to_record(self) -> dict:
        p = self.params_star
        rec = {
            "params": {"beta": str(p.beta), "gamma": str(p.gamma), "delta": str(p.delta)},
            "calA": str(self.calA_star),
            "calA_float": float(self.calA_star),
            "certified_below": None if self.certified_below is None else str(self.certified_below),
            "inside_Y": self.inside_Y,
            "bracket": [str(self.bracket[0]), str(self.bracket[1])],
            "eta_square": str(self.eta_square),
            "gradient_norm": self.gradient_norm,
            "symmetric": self.symmetric,
            "diagonal_critical": self.diagonal_critical,
        }
        if self.grid is not None:
            rec["grid"] = {
                "step": str(self.grid.step),
                "points_inside": self.grid.points_inside,
                "exact_rechecks": self.grid.exact_rechecks,
                "min_float": self.grid.min_float,
                "min_point": [str(x) for x in self.grid.min_point],
                "passed": self.grid.passed,
                "local_minima": [[str(b), str(g), v] for b, g, v in self.grid.local_minima],
            }
        return rec


def grid_check_dp2(witness_value: Fraction, step=Fraction(1, 100), t=Y_LEVEL) -> GridCheck:
    """Is any grid point of {T <= t} strictly below ``witness_value``?

    Floats only decide which points are obviously fine; any point whose float
    value is within a generous margin of the witness, or whose membership in
    the sublevel set is marginal, is settled in exact arithmetic.
    """
    step, t = as_rat(step), as_rat(t)
    # bounding box: extend until a full boundary ring lies outside the set
    n_max = int(1 / step)
    while True:
        idx = np.arange(1, 4 * n_max + 1)
        edge = idx * float(step)
        far = float(step) * 4 * n_max
        if np.all(_calT_float(edge, np.full_like(edge, far)) > float(t) + 1e-9) and \
                np.all(_calT_float(np.full_like(edge, far), edge) > float(t) + 1e-9):
            break
        n_max *= 2
    coords = np.arange(1, 4 * n_max + 1) * float(step)
    B, G = np.meshgrid(coords, coords, indexing="ij")
    T = _calT_float(B, G)
    marginal_T = np.abs(T - float(t)) < 1e-9
    inside = T <= float(t)
    A = _calA_float(B, G)
    target = float(witness_value)
    suspicious = (inside | marginal_T) & (A <= target + 1e-7)
    rechecks = 0
    passed = True
    for i, j in zip(*np.nonzero(suspicious)):
        rechecks += 1
        p = KahlerParams.dp2((i + 1) * step, (j + 1) * step)
        if calT(DP2, p) > t:
            continue
        exact = calT(DP2, p) + calB(DP2, p)
        if exact < witness_value:
            passed = False
    exact_inside = inside.copy()
    for i, j in zip(*np.nonzero(marginal_T)):
        p = KahlerParams.dp2((i + 1) * step, (j + 1) * step)
        exact_inside[i, j] = calT(DP2, p) <= t
    masked = np.where(exact_inside, A, np.inf)
    k = np.unravel_index(np.argmin(masked), masked.shape)
    minima = []
    for i, j in zip(*np.nonzero(exact_inside)):
        v = masked[i, j]
        nb = masked[max(i - 1, 0):i + 2, max(j - 1, 0):j + 2]
        if v <= nb.min():
            minima.append(((i + 1) * step, (j + 1) * step, float(v)))
    return GridCheck(step, int(exact_inside.sum()), rechecks, float(masked[k]),
                     ((k[0] + 1) * step, (k[1] + 1) * step), passed, minima)


def minimize_calA_dp2(tolerance=Fraction(1, 10 ** 8), grid_step=Fraction(1, 100),
                      run_grid: bool = True) -> MinimizationResult:
    """Bisect dA/dbeta on the diagonal inside Y_{29/4}, then certify the witness."""
    tolerance = as_rat(tolerance)
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    symmetric = is_symmetric_dp2()
    dB, dG = _partials_dp2()
    u = MPoly.var("beta")
    diag_dB = dB.subs({"gamma": u})
    lo, hi = diagonal_Y_interval(Y_LEVEL)
    try:
        lo, hi = sign_bisection(diag_dB, lo, hi, tolerance, var="beta")
    except SameSign as exc:
        raise BracketFailure(f"no sign change of dA/dbeta on the diagonal: {exc}") from exc

    def partial_sign(f, x):
        return _sign(f.eval((0, x, x, 1)))

    diagonal_critical = (
        lo == hi
        or (partial_sign(dB, lo) < 0 < partial_sign(dB, hi)
            and partial_sign(dG, lo) < 0 < partial_sign(dG, hi))
    )
    mid = (lo + hi) / 2
    star = KahlerParams.dp2(mid, mid)
    value = calT(DP2, star) + calB(DP2, star)
    eta_sq = normalized_eta(class_from_params(DP2, star)).square()
    inside = -eta_sq < 7 * (Y_LEVEL - 7) / Y_LEVEL
    grad = math.hypot(float(dB.eval((0, mid, mid, 1))), float(dG.eval((0, mid, mid, 1))))
    grid = grid_check_dp2(value, grid_step) if run_grid else None
    ok = value < Y_LEVEL and inside and (grid is None or grid.passed)
    return MinimizationResult(
        params_star=star,
        calA_star=value,
        gradient_norm=grad,
        certified_below=Y_LEVEL if ok else None,
        inside_Y=inside,
        bracket=(lo, hi),
        eta_square=eta_sq,
        symmetric=symmetric,
        diagonal_critical=diagonal_critical,
        grid=grid,
    )


# --------------------------------------------------------------------------
# sweeps
# --------------------------------------------------------------------------

QUANTITIES = ("V", "s0", "F1", "F2", "A", "B", "C", "a", "b", "calT", "calB", "calA", "smin", "smax")
_PARAM_NAMES = ("alpha", "beta", "gamma", "delta")


def frange(lo, hi, step) -> list[Fraction]:
    """lo, lo+step, ... up to and including hi (exact)."""
    lo, hi, step = as_rat(lo), as_rat(hi), as_rat(step)
    if step <= 0:
        raise ValueError("step must be positive")
    if hi < lo:
        return []
    n = int((hi - lo) / step)
    return [lo + i * step for i in range(n + 1)]


def evaluate_quantities(kind, params: KahlerParams, quantities) -> dict:
    """Exact values (Fraction or PiScalar) of the requested quantities."""
    kind = SurfaceKind.parse(kind)
    out = {}
    inv = None
    bounds = None
    for q in quantities:
        if q in ("V", "s0", "F1", "F2", "A", "B", "C", "a", "b"):
            inv = inv or invariant_set(kind, params)
            out[q] = getattr(inv, q)
        elif q == "calT":
            out[q] = calT(kind, params)
        elif q == "calB":
            out[q] = calB(kind, params)
        elif q == "calA":
            out[q] = calT(kind, params) + calB(kind, params)
        elif q in ("smin", "smax"):
            bounds = bounds or scalar_bounds(kind, params)
            out[q] = bounds[0] if q == "smin" else bounds[1]
        else:
            raise ValueError(f"unknown quantity {q!r}; choose from {', '.join(QUANTITIES)}")
    return out


@dataclass
class SweepRange:
    names: tuple[str, ...]
    lo: Fraction
    hi: Fraction
    step: Fraction

    def values(self) -> list[Fraction]:
        return frange(self.lo, self.hi, self.step)


def grid_sweep(kind, ranges: list[SweepRange], quantities, fixed: dict | None = None) -> list[dict]:
    """Rows over the product of ``ranges``; variables sharing a range move together.

    Unswept parameters default to delta = 1 and alpha = 0 (DP2) or 1 (DP3)
    and beta = gamma = 1.  Rows outside the cone are kept and flagged.
    """
    kind = SurfaceKind.parse(kind)
    base = {"alpha": Fraction(0 if kind is DP2 else 1), "beta": Fraction(1),
            "gamma": Fraction(1), "delta": Fraction(1)}
    for k, v in (fixed or {}).items():
        base[k] = as_rat(v)
    for r in ranges:
        for n in r.names:
            if n not in _PARAM_NAMES:
                raise ValueError(f"unknown parameter {n!r}")
            if kind is DP2 and n == "alpha":
                raise ValueError("DP2 has no alpha parameter")
    rows = []
    for combo in itertools.product(*(r.values() for r in ranges)):
        vals = dict(base)
        for r, v in zip(ranges, combo):
            for n in r.names:
                vals[n] = v
        params = KahlerParams(*(vals[n] for n in _PARAM_NAMES))
        row = {"params": params}
        try:
            row["values"] = evaluate_quantities(kind, params, quantities)
            row["status"] = "ok"
        except (ConeViolation, NonPositiveSquare) as exc:
            row["values"] = {}
            row["status"] = "cone_violation"
            row["error"] = str(exc)
        rows.append(row)
    return rows


def path_rows(omega2: CohClass, steps: int) -> list[dict]:
    """Diagnostics along (1-t) c1 + t p^*Omega on DP3 for t = 0, 1/steps, ..., 1."""
    from .cohomology import degeneration_path, params_from_class

    if steps < 1:
        raise ValueError("steps must be positive")
    rows = []
    for i in range(steps + 1):
        t = Fraction(i, steps)
        cls = degeneration_path(omega2, t)
        p = params_from_class(cls)
        smin, smax = scalar_bounds(DP3, p, allow_degenerate=True)
        rows.append({
            "t": t,
            "E1_area": cls.e[0],
            "calT": class_calT(cls),
            "calB": calB(DP3, p, allow_degenerate=True),
            "smin": smin,
            "smax": smax,
        })
    return rows


__all__ = [
    "GridCheck", "MinimizationResult", "QUANTITIES", "SweepRange", "calA_symbolic_dp2",
    "diagonal_Y_interval", "evaluate_quantities", "frange", "grid_check_dp2", "grid_sweep",
    "is_symmetric_dp2", "minimize_calA_dp2", "path_rows", "sign_bisection",
]
