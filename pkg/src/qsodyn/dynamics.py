"""Limit behavior of catalog operators: orbits, fixed points, 2-cycles.

Four catalog entries (ids 4, 13, 25, 28) have fully worked-out limit sets
with closed-form coordinates. This module provides

* generic orbit machinery (iterate, omega-limit classification) usable with
  any heredity tensor,
* the closed-form fixed points and 2-periodic points of the four analyzed
  operators, including the parametric families that appear at a = 1/2,
* an independent numeric fixed-point oracle (damped iteration over a
  barycentric seed grid plus bisection along invariant edges),
* per-initial-point limit predictions and a batch verifier that measures
  how close orbits come to their predicted limit sets.

Everything is deterministic given explicit seeds; there is no hidden state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .operators import HeredityTensor, apply, apply_array
from .catalog import operator_tensor
from .simplex import SimplexPoint, ZERO_TOL, sample_with_rng, vertex

#: Catalog ids whose limit behavior has closed-form predictions here.
ANALYZED_OPS = (4, 13, 25, 28)

#: Supremum of the slice parameter carrying genuine 2-cycles for operator 4
#: at a = 1/2: the discriminant 4c^2 - 8c + 1 vanishes at (2 - sqrt(3)) / 2.
CYCLE_PARAM_SUP = (2.0 - math.sqrt(3.0)) / 2.0

#: Initial points closer than this (l1) to a fixed/2-periodic set are
#: excluded from verification sampling; the predictions assume the orbit
#: does not start on those sets.
EXCLUSION_RADIUS = 1e-9

# Default stopping tolerances. Hyperbolic parameters contract geometrically;
# at a = 1/2 the approach to the limit families can be sub-geometric, so the
# budget is larger and the tolerance looser.
DEFAULT_TOL = 1e-9
DEFAULT_MAX_ITER = 10 ** 5
BALANCED_TOL = 1e-6
BALANCED_MAX_ITER = 10 ** 6

# Verification defaults by prediction type (vertex targets vs curve targets).
VERIFY_POINT_TOL = 1e-6
VERIFY_POINT_MAX_ITER = 10 ** 5
VERIFY_CURVE_TOL = 1e-4
VERIFY_CURVE_MAX_ITER = 10 ** 6


# ---------------------------------------------------------------------------
# The scalar coordinate map
# ---------------------------------------------------------------------------

def scalar_map(x: float, a: float) -> float:
    """The interval map x^2 + 2 a x (1 - x) driving single coordinates.

    For a < 1/2 every interior orbit decreases to 0, for a > 1/2 it increases
    to 1; a = 1/2 gives the identity.
    """
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"argument {x} outside [0, 1]")
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"parameter {a} outside [0, 1]")
    return x * x + 2.0 * a * x * (1.0 - x)


@dataclass(frozen=True)
class ScalarMapReport:
    a: float
    grid_size: int
    endpoints_fixed: bool
    monotone: bool
    sign_property: bool
    orbits_converged: bool
    orbit_max_steps: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def scalar_map_report(
    a: float,
    grid: Optional[Sequence[float]] = None,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> ScalarMapReport:
    """Audit the scalar map on a grid: endpoint fixed points, monotonicity,
    the drift sign (a - 1/2)(f(x) - x) > 0 on the interior, and convergence
    of every interior grid orbit to the predicted endpoint."""
    if a == 0.5:
        raise ValueError("a = 1/2 gives the identity map; nothing to audit")
    xs = np.asarray(grid if grid is not None else np.linspace(0.0, 1.0, 101), dtype=float)
    xs = np.sort(xs)
    failures: list[str] = []

    fx = xs * xs + 2.0 * a * xs * (1.0 - xs)
    endpoints = scalar_map(0.0, a) == 0.0 and scalar_map(1.0, a) == 1.0
    if not endpoints:
        failures.append("endpoints are not fixed")

    monotone = bool(np.all(np.diff(fx) >= -1e-15))
    if not monotone:
        failures.append("map not monotone on grid")

    interior = (xs > 0.0) & (xs < 1.0)
    drift = (a - 0.5) * (fx[interior] - xs[interior])
    sign_ok = bool(np.all(drift > 0.0))
    if not sign_ok:
        failures.append("drift sign property violated on interior grid")

    target = 0.0 if a < 0.5 else 1.0
    orbit = xs[interior].copy()
    remaining = np.arange(orbit.size)
    steps = 0
    max_steps = 0
    while remaining.size and steps < max_iter:
        steps += 1
        orbit = orbit * orbit + 2.0 * a * orbit * (1.0 - orbit)
        done = np.abs(orbit - target) <= tol
        if np.any(done):
            max_steps = steps
            orbit = orbit[~done]
            remaining = remaining[~done]
    orbits_ok = remaining.size == 0
    if not orbits_ok:
        failures.append(f"{remaining.size} orbits missed {target} within {max_iter} steps")

    return ScalarMapReport(a, xs.size, endpoints, monotone, sign_ok, orbits_ok,
                           max_steps, tuple(failures))


# ---------------------------------------------------------------------------
# Orbits and omega-limit classification
# ---------------------------------------------------------------------------

def iterate(T: HeredityTensor, x0: SimplexPoint, n: int) -> list[SimplexPoint]:
    """The orbit segment x^(0), ..., x^(n); each step renormalizes roundoff."""
    if n < 0:
        raise ValueError("need n >= 0")
    out = [x0]
    cur = x0
    for _ in range(n):
        cur = apply(T, cur)
        out.append(cur)
    return out


@dataclass(frozen=True)
class Outcome:
    """Orbit classification: a fixed point, a 2-cycle, or undecided."""

    kind: str  # "fixed_point" | "two_cycle" | "undecided"
    points: tuple[SimplexPoint, ...]


@dataclass(frozen=True)
class TrajectoryReport:
    initial: SimplexPoint
    iterates_kept: tuple[tuple[int, SimplexPoint], ...]
    steps: int
    outcome: Outcome
    final_residuals: tuple[float, float]

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "initial": list(self.initial),
            "steps": self.steps,
            "outcome": {
                "kind": self.outcome.kind,
                "points": [list(p) for p in self.outcome.points],
            },
            "final_residuals": list(self.final_residuals),
            "iterates_kept": [
                {"step": s, "x": list(p)} for s, p in self.iterates_kept
            ],
        }


def omega_limit(
    T: HeredityTensor,
    x0: SimplexPoint,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> TrajectoryReport:
    """Iterate until a fixed point or a 2-cycle is detected, or give up.

    A fixed point requires the one-step residual to fall to tol. A 2-cycle
    requires the two-step residual to fall to tol while the one-step residual
    stays above 10 tol, so slowly converging fixed points are not mistaken
    for cycles. Hitting max_iter yields outcome "undecided", which never
    asserts convergence.

    Kept iterates: every step up to 100, then geometrically spaced samples,
    plus the final state.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    cur = x0.coords
    prev: Optional[np.ndarray] = None
    kept: list[tuple[int, np.ndarray]] = [(0, cur)]
    next_keep = 1
    d1 = math.inf
    d2 = math.inf
    outcome = Outcome("undecided", ())
    steps = 0
    for t in range(1, max_iter + 1):
        nxt = apply_array(T, cur)
        steps = t
        d1 = float(np.abs(nxt - cur).sum())
        d2 = float(np.abs(nxt - prev).sum()) if prev is not None else math.inf
        keep = t <= 100 or t >= next_keep
        if keep:
            kept.append((t, nxt))
            if t > 100:
                next_keep = max(t + 1, math.ceil(next_keep * 1.25))
            else:
                next_keep = max(next_keep, 101)
        if d1 <= tol:
            outcome = Outcome("fixed_point", (SimplexPoint(nxt),))
            if not keep:
                kept.append((t, nxt))
            prev, cur = cur, nxt
            break
        if d2 <= tol and d1 > 10.0 * tol:
            outcome = Outcome("two_cycle", (SimplexPoint(cur), SimplexPoint(nxt)))
            if not keep:
                kept.append((t, nxt))
            prev, cur = cur, nxt
            break
        prev, cur = cur, nxt
    else:
        if kept[-1][0] != steps:
            kept.append((steps, cur))
    return TrajectoryReport(
        initial=x0,
        iterates_kept=tuple((s, SimplexPoint(arr)) for s, arr in kept),
        steps=steps,
        outcome=outcome,
        final_residuals=(d1, d2),
    )


def trajectory_csv(report: TrajectoryReport) -> str:
    """CSV of the kept iterates with ternary plot coordinates.

    Columns: step, x1, x2, x3, u, v with u = x2 + x3/2 and v = (sqrt(3)/2) x3.
    """
    half_sqrt3 = math.sqrt(3.0) / 2.0
    lines = ["step,x1,x2,x3,u,v"]
    for step, p in report.iterates_kept:
        x1, x2, x3 = p.coords
        u = x2 + x3 / 2.0
        v = half_sqrt3 * x3
        nums = ",".join(format(val, ".17g") for val in (x1, x2, x3, u, v))
        lines.append(f"{step},{nums}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Closed-form coordinates
# ---------------------------------------------------------------------------

def slice_fixed_height(b: float) -> float:
    """Second coordinate of the fixed point on the invariant slice x1 = b.

    The smaller root of x^2 - (3 - 2b) x + (1 - b) = 0; it lies in [0, 1 - b]
    for b in [0, 1]. Applies to operator 4 at a = 1/2, whose fixed points form
    the curve (b, h, 1 - b - h) with h this value.
    """
    if not 0.0 <= b <= 1.0:
        raise ValueError(f"slice parameter {b} outside [0, 1]")
    return (3.0 - 2.0 * b - math.sqrt(4.0 * b * b - 8.0 * b + 5.0)) / 2.0


def slice_cycle_heights(c: float) -> tuple[float, float]:
    """The two 2-cycle second coordinates on the slice x1 = c.

    Roots of x^2 - (1 - 2c) x + c = 0, real for c up to CYCLE_PARAM_SUP,
    returned as (low, high). Operator 4 at a = 1/2 exchanges the two points
    (c, h, 1 - c - h) built from them.
    """
    if not 0.0 <= c <= CYCLE_PARAM_SUP + 1e-15:
        raise ValueError(f"slice parameter {c} outside [0, {CYCLE_PARAM_SUP}]")
    disc = max(4.0 * c * c - 8.0 * c + 1.0, 0.0)
    r = math.sqrt(disc)
    return ((1.0 - 2.0 * c - r) / 2.0, (1.0 - 2.0 * c + r) / 2.0)


def edge_fixed_height(a: float) -> float:
    """Second coordinate of the edge fixed point (0, h, 1 - h) of operator 28.

    The root in [0, 1] of (1 - x)^2 + 2 a x (1 - x) = x, evaluated in the
    cancellation-free form 2 / (3 - 2a + sqrt(4 + (2a - 1)^2)); at a = 1/2 it
    continuously takes the value 1/2.
    """
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"parameter {a} outside [0, 1]")
    return 2.0 / (3.0 - 2.0 * a + math.sqrt(4.0 + (2.0 * a - 1.0) ** 2))


# ---------------------------------------------------------------------------
# Exact limit sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CurveFamily:
    """A one-parameter family of simplex points, e.g. a curve of fixed points."""

    label: str
    lo: float
    hi: float
    point_at: Callable[[float], SimplexPoint]
    include_hi: bool = True
    exclude_params: tuple[float, ...] = ()

    def sample(self, n: int) -> list[SimplexPoint]:
        """n parameter values spread over the range (excluded values dropped)."""
        if n < 1:
            return []
        if self.include_hi:
            ts = np.linspace(self.lo, self.hi, n)
        else:
            ts = self.lo + (self.hi - self.lo) * np.arange(n) / n
        out = []
        for t in ts:
            if any(abs(t - e) <= 1e-12 for e in self.exclude_params):
                continue
            out.append(self.point_at(float(t)))
        return out


@dataclass(frozen=True)
class PointSet:
    """A finite point set, possibly extended by parametric curve families."""

    points: tuple[SimplexPoint, ...] = ()
    curves: tuple[CurveFamily, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.points and not self.curves

    def sample(self, curve_samples: int = 50) -> list[SimplexPoint]:
        out = list(self.points)
        for curve in self.curves:
            out.extend(curve.sample(curve_samples))
        return out

    def min_l1_distance(self, x) -> float:
        """Distance from x to the set (curve closures included)."""
        arr = x.coords if isinstance(x, SimplexPoint) else np.asarray(x, dtype=float)
        best = math.inf
        for p in self.points:
            best = min(best, float(np.abs(p.coords - arr).sum()))
        for curve in self.curves:
            best = min(best, _curve_min_distance(curve, arr))
        return best


def _curve_min_distance(curve: CurveFamily, arr: np.ndarray) -> float:
    """Coarse scan plus golden-section refinement of the l1 distance."""
    ts = np.linspace(curve.lo, curve.hi, 257)
    dists = [float(np.abs(curve.point_at(float(t)).coords - arr).sum()) for t in ts]
    i = int(np.argmin(dists))
    lo = ts[max(i - 1, 0)]
    hi = ts[min(i + 1, len(ts) - 1)]
    phi = (math.sqrt(5.0) - 1.0) / 2.0

    def g(t: float) -> float:
        return float(np.abs(curve.point_at(t).coords - arr).sum())

    b, d = lo + (1 - phi) * (hi - lo), lo + phi * (hi - lo)
    gb, gd = g(b), g(d)
    for _ in range(80):
        if gb <= gd:
            hi, d, gd = d, b, gb
            b = lo + (1 - phi) * (hi - lo)
            gb = g(b)
        else:
            lo, b, gb = b, d, gd
            d = lo + phi * (hi - lo)
            gd = g(d)
    return min(dists[i], gb, gd)


def _edge_curve(zero_index: int, label: str, **kwargs) -> CurveFamily:
    """The simplex edge x_{zero_index} = 0 parameterized by the next coordinate."""
    others = [i for i in range(3) if i != zero_index - 1]

    def point_at(t: float) -> SimplexPoint:
        p = np.zeros(3)
        p[others[0]] = t
        p[others[1]] = 1.0 - t
        return SimplexPoint(p)

    return CurveFamily(label, 0.0, 1.0, point_at, **kwargs)


def _require_analyzed(op_id: int) -> None:
    if op_id not in ANALYZED_OPS:
        raise ValueError(f"operator {op_id} is not one of the analyzed ids {ANALYZED_OPS}")


def fixed_points_exact(op_id: int, a: float) -> PointSet:
    """Closed-form fixed point set of an analyzed operator at parameter a.

    Finite at generic a; at a = 1/2 three of the operators develop curves of
    fixed points, returned as parametric families.
    """
    _require_analyzed(op_id)
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"parameter {a} outside [0, 1]")
    e1, e2, e3 = vertex(1, 3), vertex(2, 3), vertex(3, 3)
    balanced = a == 0.5
    if op_id == 13:
        if not balanced:
            return PointSet(points=(e1, e2, e3))
        line = CurveFamily(
            "x1 = x3 segment", 0.0, 0.5,
            lambda t: SimplexPoint((t, 1.0 - 2.0 * t, t)))
        return PointSet(curves=(_edge_curve(2, "edge x2 = 0"), line))
    if op_id == 4:
        if not balanced:
            h = slice_fixed_height(0.0)
            return PointSet(points=(e1, SimplexPoint((0.0, h, 1.0 - h))))
        def fixed_curve(b: float) -> SimplexPoint:
            h = slice_fixed_height(b)
            return SimplexPoint((b, h, 1.0 - b - h))
        return PointSet(curves=(CurveFamily("slice fixed curve", 0.0, 1.0, fixed_curve),))
    if op_id == 28:
        h = edge_fixed_height(a)
        return PointSet(points=(e1, SimplexPoint((0.0, h, 1.0 - h))))
    # op_id == 25
    if not balanced:
        return PointSet(points=(e1, e2, e3))
    return PointSet(points=(e1,), curves=(_edge_curve(1, "edge x1 = 0"),))


def periodic2_exact(op_id: int, a: float) -> PointSet:
    """Closed-form set of genuinely 2-periodic points (period exactly 2).

    Empty for operators 13 and 25: their first coordinate moves strictly
    monotonically off the invariant edges, which rules out periodic returns,
    and the edge restrictions have only fixed points.
    """
    _require_analyzed(op_id)
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"parameter {a} outside [0, 1]")
    if op_id in (13, 25):
        return PointSet()
    e2, e3 = vertex(2, 3), vertex(3, 3)
    balanced = a == 0.5
    if op_id == 4:
        if not balanced:
            return PointSet(points=(e2, e3))
        def low(c: float) -> SimplexPoint:
            h = slice_cycle_heights(c)[0]
            return SimplexPoint((c, h, 1.0 - c - h))
        def high(c: float) -> SimplexPoint:
            h = slice_cycle_heights(c)[1]
            return SimplexPoint((c, h, 1.0 - c - h))
        return PointSet(curves=(
            CurveFamily("slice cycle, low branch", 0.0, CYCLE_PARAM_SUP, low, include_hi=False),
            CurveFamily("slice cycle, high branch", 0.0, CYCLE_PARAM_SUP, high, include_hi=False),
        ))
    # op_id == 28
    if not balanced:
        return PointSet(points=(e2, e3))
    return PointSet(curves=(
        _edge_curve(1, "edge x1 = 0 (minus its midpoint)", exclude_params=(0.5,)),
    ))


# ---------------------------------------------------------------------------
# Numeric fixed-point oracle
# ---------------------------------------------------------------------------

def fixed_points_numeric(
    T: HeredityTensor,
    grid_n: int = 50,
    refine_tol: float = 1e-10,
) -> list[SimplexPoint]:
    """Fixed points found from scratch, independently of any closed form.

    Seeds a barycentric grid of resolution grid_n, runs the damped iteration
    x <- x + (V(x) - x) / 2 from every seed (damping turns 2-cycles into
    transients and stabilizes moderately repelling fixed points), checks the
    three vertices directly, and bisects the 1-d fixed-point equations along
    invariant edges to catch boundary roots repelling in every damped
    direction. Results are deduplicated with l1 radius 10 * refine_tol and
    reported sorted lexicographically.
    """
    if T.m != 3:
        raise ValueError("the oracle is implemented for the 2-simplex (m = 3)")
    if grid_n < 10:
        raise ValueError("need grid_n >= 10")

    seeds = []
    for i in range(grid_n + 1):
        for j in range(grid_n + 1 - i):
            seeds.append((i / grid_n, j / grid_n, (grid_n - i - j) / grid_n))
    X = np.array(seeds, dtype=float)
    X = X / X.sum(axis=1, keepdims=True)

    for _ in range(4096):
        V = apply_array(T, X)
        step = 0.5 * (V - X)
        X = X + step
        X = X / X.sum(axis=1, keepdims=True)
        if np.max(np.abs(step).sum(axis=1)) < 0.1 * refine_tol:
            break

    residuals = np.abs(apply_array(T, X) - X).sum(axis=1)
    candidates = [(float(residuals[i]), X[i]) for i in range(X.shape[0])
                  if residuals[i] <= refine_tol]

    for i in range(1, 4):
        v = vertex(i, 3).coords
        r = float(np.abs(apply_array(T, v) - v).sum())
        if r <= refine_tol:
            candidates.append((r, v))

    candidates.extend(_edge_fixed_candidates(T, refine_tol))

    accepted: list[np.ndarray] = []
    for _, arr in sorted(candidates, key=lambda c: (c[0], tuple(c[1]))):
        if all(float(np.abs(arr - b).sum()) > 10.0 * refine_tol for b in accepted):
            accepted.append(arr)
    accepted.sort(key=lambda arr: tuple(arr))
    return [SimplexPoint(arr) for arr in accepted]


def _edge_fixed_candidates(T: HeredityTensor, refine_tol: float) -> list[tuple[float, np.ndarray]]:
    """Bisection roots of the edge-restricted fixed-point equations."""
    out: list[tuple[float, np.ndarray]] = []
    for zero in range(3):
        others = [i for i in range(3) if i != zero]

        def embed(u: float) -> np.ndarray:
            p = np.zeros(3)
            p[others[0]] = u
            p[others[1]] = 1.0 - u
            return p

        probe = np.linspace(0.0, 1.0, 33)
        if max(float(apply_array(T, embed(u))[zero]) for u in probe) > ZERO_TOL:
            continue  # edge not invariant; no boundary roots to recover here

        def f(u: float) -> float:
            return float(apply_array(T, embed(u))[others[0]]) - u

        us = np.linspace(0.0, 1.0, 1025)
        vals = np.array([f(u) for u in us])
        for u, val in zip(us, vals):
            if abs(val) <= refine_tol:
                p = embed(float(u))
                out.append((float(np.abs(apply_array(T, p) - p).sum()), p))
        for i in range(len(us) - 1):
            if vals[i] == 0.0 or vals[i] * vals[i + 1] > 0.0:
                continue
            lo, hi = float(us[i]), float(us[i + 1])
            flo = vals[i]
            for _ in range(100):
                mid = 0.5 * (lo + hi)
                fm = f(mid)
                if fm == 0.0:
                    lo = hi = mid
                    break
                if flo * fm < 0.0:
                    hi = mid
                else:
                    lo, flo = mid, fm
            p = embed(0.5 * (lo + hi))
            r = float(np.abs(apply_array(T, p) - p).sum())
            if r <= refine_tol:
                out.append((r, p))
    return out


# ---------------------------------------------------------------------------
# Regions of the 2-simplex
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RegionTag:
    """Most specific region of the 2-simplex containing a point.

    kind is one of "vertex", "edge" (x_index = 0), "line13" (x1 = x3), or
    "half_lower"/"half_upper" (x1 < x3 resp. x1 > x3 strictly, all
    coordinates positive). The two halves and the line cover every interior
    point, so no separate interior tag is needed.
    """

    kind: str
    index: Optional[int] = None

    def label(self) -> str:
        if self.kind == "vertex":
            return f"vertex e{self.index}"
        if self.kind == "edge":
            return f"edge x{self.index} = 0"
        if self.kind == "line13":
            return "line x1 = x3"
        return "half x1 <= x3" if self.kind == "half_lower" else "half x1 >= x3"


def region_classify(x: SimplexPoint, tol: float = ZERO_TOL) -> RegionTag:
    """Classify a point of the 2-simplex into its most specific region."""
    if x.m != 3:
        raise ValueError("region classification needs m = 3")
    coords = x.coords
    zeros = [i + 1 for i in range(3) if coords[i] <= tol]
    if len(zeros) >= 2:
        live = [i + 1 for i in range(3) if coords[i] > tol]
        return RegionTag("vertex", live[0])
    if len(zeros) == 1:
        return RegionTag("edge", zeros[0])
    if abs(coords[0] - coords[2]) <= tol:
        return RegionTag("line13")
    return RegionTag("half_lower" if coords[0] < coords[2] else "half_upper")


# ---------------------------------------------------------------------------
# Limit predictions and verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LimitPrediction:
    """Predicted omega-limit of one orbit: a point or an unordered 2-cycle."""

    kind: str  # "point" | "cycle"
    points: tuple[SimplexPoint, ...]
    continuum: bool  # target lies on a parametric family (slower approach)
    case: str


def limit_prediction(op_id: int, a: float, x0: SimplexPoint) -> LimitPrediction:
    """Case analysis mapping an initial point to its predicted limit set.

    Raises ValueError for parameter ranges without a covered prediction
    (operator 4 below a = 1/2) and for initial points the predictions exclude
    (within EXCLUSION_RADIUS of the fixed/2-periodic sets, whose orbits are
    trivial and not covered by the case analysis).
    """
    _require_analyzed(op_id)
    if x0.m != 3:
        raise ValueError("predictions are for the 2-simplex")
    if op_id == 4 and a < 0.5:
        raise ValueError("operator 4 has no covered limit prediction for a < 1/2")
    if fixed_points_exact(op_id, a).min_l1_distance(x0) <= EXCLUSION_RADIUS:
        raise ValueError("initial point lies in the excluded fixed-point set")
    per2 = periodic2_exact(op_id, a)
    if not per2.is_empty and per2.min_l1_distance(x0) <= EXCLUSION_RADIUS:
        raise ValueError("initial point lies in the excluded 2-periodic set")
    e1, e2, e3 = vertex(1, 3), vertex(2, 3), vertex(3, 3)
    c = float(x0[0])
    x2 = float(x0[1])
    on_edge1 = c <= ZERO_TOL
    on_edge2 = x2 <= ZERO_TOL

    if op_id == 13:
        if a == 0.5:
            if c > 0.5:
                p = SimplexPoint((c, 0.0, 1.0 - c))
                return LimitPrediction("point", (p,), True, "x1(0) > 1/2 -> (x1, 0, 1 - x1)")
            p = SimplexPoint((c, 1.0 - 2.0 * c, c))
            return LimitPrediction("point", (p,), True, "x1(0) <= 1/2 -> (x1, 1 - 2 x1, x1)")
        if a < 0.5:
            if not on_edge2:
                return LimitPrediction("point", (e2,), False, "x2(0) != 0 -> e2")
            return LimitPrediction("point", (e3,), False, "x2(0) = 0 -> e3")
        if not on_edge1:
            return LimitPrediction("point", (e1,), False, "x1(0) != 0 -> e1")
        return LimitPrediction("point", (e2,), False, "x1(0) = 0 -> e2")

    if op_id == 4:
        if a == 0.5:
            if c < CYCLE_PARAM_SUP:
                lo, hi = slice_cycle_heights(c)
                pts = (SimplexPoint((c, lo, 1.0 - c - lo)), SimplexPoint((c, hi, 1.0 - c - hi)))
                return LimitPrediction("cycle", pts, True, "x1(0) < cycle sup -> slice 2-cycle")
            h = slice_fixed_height(c)
            p = SimplexPoint((c, h, 1.0 - c - h))
            return LimitPrediction("point", (p,), True, "x1(0) >= cycle sup -> slice fixed point")
        if not on_edge1:
            return LimitPrediction("point", (e1,), False, "x1(0) != 0 -> e1")
        return LimitPrediction("cycle", (e2, e3), False, "x1(0) = 0 -> cycle {e2, e3}")

    if op_id == 28:
        if a != 0.5 and on_edge1:
            return LimitPrediction("cycle", (e2, e3), False, "x1(0) = 0 -> cycle {e2, e3}")
        return LimitPrediction("point", (e1,), False, "x1(0) != 0 -> e1")

    # op_id == 25
    if on_edge1 and a != 0.5:
        target = e3 if a < 0.5 else e2
        name = "e3" if a < 0.5 else "e2"
        return LimitPrediction("point", (target,), False, f"x1(0) = 0 -> {name}")
    return LimitPrediction("point", (e1,), False, "x1(0) != 0 -> e1")


def _interior_draw(rng: np.random.Generator) -> np.ndarray:
    return sample_with_rng(3, rng, 1)[0]


def _edge_draw(zero_index: int) -> Callable[[np.random.Generator], np.ndarray]:
    others = [i for i in range(3) if i != zero_index - 1]

    def draw(rng: np.random.Generator) -> np.ndarray:
        u = rng.random()
        p = np.zeros(3)
        p[others[0]] = u
        p[others[1]] = 1.0 - u
        return p

    return draw


def _constrained_interior(pred: Callable[[np.ndarray], bool]) -> Callable[[np.random.Generator], np.ndarray]:
    def draw(rng: np.random.Generator) -> np.ndarray:
        while True:
            p = _interior_draw(rng)
            if pred(p):
                return p

    return draw


def _case_samplers(op_id: int, a: float) -> list[tuple[str, Callable[[np.random.Generator], np.ndarray]]]:
    """Initial-point samplers for every case branch of an analyzed operator."""
    _require_analyzed(op_id)
    interior = _interior_draw
    if op_id == 13:
        if a == 0.5:
            return [
                ("x1(0) > 1/2", _constrained_interior(lambda p: p[0] > 0.5)),
                ("x1(0) <= 1/2", _constrained_interior(lambda p: p[0] <= 0.5)),
            ]
        if a < 0.5:
            return [("x2(0) != 0", interior), ("x2(0) = 0", _edge_draw(2))]
        return [("x1(0) != 0", interior), ("x1(0) = 0", _edge_draw(1))]
    if op_id == 4:
        if a == 0.5:
            return [
                ("x1(0) < cycle sup", _constrained_interior(lambda p: p[0] < CYCLE_PARAM_SUP)),
                ("x1(0) >= cycle sup", _constrained_interior(lambda p: p[0] >= CYCLE_PARAM_SUP)),
            ]
        if a < 0.5:
            raise ValueError("operator 4 has no covered limit prediction for a < 1/2")
        return [("x1(0) != 0", interior), ("x1(0) = 0", _edge_draw(1))]
    if op_id == 28:
        if a == 0.5:
            return [("x1(0) != 0", interior)]
        return [("x1(0) = 0", _edge_draw(1)), ("x1(0) != 0", interior)]
    # op_id == 25
    if a == 0.5:
        return [("x1(0) != 0", interior)]
    return [("x1(0) = 0", _edge_draw(1)), ("x1(0) != 0", interior)]


@dataclass(frozen=True)
class PointVerdict:
    index: int
    x0: tuple[float, ...]
    predicted: tuple[tuple[float, ...], ...]
    prediction_kind: str
    steps: Optional[int]
    distance: float
    passed: bool


@dataclass(frozen=True)
class CaseResult:
    label: str
    tol: float
    max_iter: int
    verdicts: tuple[PointVerdict, ...]

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)


@dataclass(frozen=True)
class VerificationReport:
    op_id: int
    a: float
    seeds: int
    base_seed: int
    cases: tuple[CaseResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "op": self.op_id,
            "a": self.a,
            "seeds": self.seeds,
            "base_seed": self.base_seed,
            "passed": self.passed,
            "cases": [
                {
                    "label": c.label,
                    "tol": c.tol,
                    "max_iter": c.max_iter,
                    "passed": c.passed,
                    "points": [
                        {
                            "index": v.index,
                            "x0": list(v.x0),
                            "predicted": [list(p) for p in v.predicted],
                            "kind": v.prediction_kind,
                            "steps": v.steps,
                            "distance": v.distance,
                            "passed": v.passed,
                        }
                        for v in c.verdicts
                    ],
                }
                for c in self.cases
            ],
        }


def verify_predictions(
    op_id: int,
    a_values: Sequence[float],
    seeds: int = 100,
    tol: Optional[float] = None,
    max_iter: Optional[int] = None,
    base_seed: int = 7,
) -> list[VerificationReport]:
    """Measure how close seeded orbits come to their predicted limit sets.

    For each parameter and each case branch, draws `seeds` initial points
    satisfying the branch condition (resampling anything within
    EXCLUSION_RADIUS of the exact fixed/2-periodic sets, which the
    predictions exclude), then iterates all of them in a batch until the
    distance to the predicted limit object falls below the tolerance or the
    iteration budget runs out. Explicit tol / max_iter apply to every case;
    otherwise vertex-type targets use (1e-6, 1e5) and continuum targets
    (1e-4, 1e6).
    """
    _require_analyzed(op_id)
    if seeds < 1:
        raise ValueError("need seeds >= 1")
    reports = []
    for a in a_values:
        T = operator_tensor(op_id, a)
        excluded = fixed_points_exact(op_id, a)
        per2 = periodic2_exact(op_id, a)
        cases = []
        for case_idx, (label, draw) in enumerate(_case_samplers(op_id, a)):
            rng = np.random.default_rng(
                [base_seed, op_id, case_idx, int(round(a * 10 ** 9))])
            xs = []
            preds = []
            while len(xs) < seeds:
                arr = draw(rng)
                if excluded.min_l1_distance(arr) <= EXCLUSION_RADIUS:
                    continue
                if not per2.is_empty and per2.min_l1_distance(arr) <= EXCLUSION_RADIUS:
                    continue
                xs.append(arr)
                preds.append(limit_prediction(op_id, a, SimplexPoint(arr)))
            continuum = preds[0].continuum
            case_tol = tol if tol is not None else (
                VERIFY_CURVE_TOL if continuum else VERIFY_POINT_TOL)
            case_max = max_iter if max_iter is not None else (
                VERIFY_CURVE_MAX_ITER if continuum else VERIFY_POINT_MAX_ITER)
            steps, dists = _run_case(T, np.array(xs), preds, case_tol, case_max)
            verdicts = tuple(
                PointVerdict(
                    index=i,
                    x0=tuple(float(v) for v in xs[i]),
                    predicted=tuple(p.as_tuple() for p in preds[i].points),
                    prediction_kind=preds[i].kind,
                    steps=int(steps[i]) if steps[i] >= 0 else None,
                    distance=float(dists[i]),
                    passed=bool(steps[i] >= 0),
                )
                for i in range(seeds)
            )
            cases.append(CaseResult(label, case_tol, case_max, verdicts))
        reports.append(VerificationReport(op_id, float(a), seeds, base_seed, tuple(cases)))
    return reports


def _run_case(
    T: HeredityTensor,
    X0: np.ndarray,
    preds: Sequence[LimitPrediction],
    tol: float,
    max_iter: int,
) -> tuple[np.ndarray, np.ndarray]:
    """Batch-iterate one case; returns per-point (steps, final distance).

    steps is -1 for points that never reached the target within max_iter.
    Point targets compare the current state; cycle targets compare the
    unordered pair (previous, current) against the predicted pair.
    """
    n = X0.shape[0]
    kind = preds[0].kind
    P1 = np.array([p.points[0].coords for p in preds])
    P2 = np.array([p.points[-1].coords for p in preds]) if kind == "cycle" else None

    steps = np.full(n, -1, dtype=np.int64)
    final = np.full(n, np.inf)
    idx = np.arange(n)
    X = X0.copy()
    prev = X0.copy()
    t = 0
    while idx.size and t < max_iter:
        t += 1
        nxt = apply_array(T, X)
        if kind == "point":
            d = np.abs(nxt - P1).sum(axis=1)
        else:
            dc1 = np.abs(nxt - P1).sum(axis=1)
            dc2 = np.abs(nxt - P2).sum(axis=1)
            dp1 = np.abs(X - P1).sum(axis=1)
            dp2 = np.abs(X - P2).sum(axis=1)
            d = np.minimum(np.maximum(dc1, dp2), np.maximum(dc2, dp1))
        done = d <= tol
        if np.any(done):
            steps[idx[done]] = t
            final[idx[done]] = d[done]
            keep = ~done
            idx = idx[keep]
            prev = X[keep]
            X = nxt[keep]
            P1 = P1[keep]
            if P2 is not None:
                P2 = P2[keep]
        else:
            prev = X
            X = nxt
        if t == max_iter and idx.size:
            final[idx] = d[~done] if np.any(done) else d
    return steps, final
