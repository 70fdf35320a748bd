"""Threshold optimization: the program chain p3 -> p4 -> p5.

The density question behind the weighting reduces to a box-constrained
maximization over common co-neighborhood densities.  Three equivalent
programs are implemented: the eight-variable coupled box program (p3),
its two-variable reduction (p4), and the single-variable form (p5).  All
share one optimum for every codegree defect d in [0, 1/6).  The defect at
which that optimum first reaches one is the unique root x* of the cubic
8x^3 - 22x^2 + 10x - 1 in [0, 1/6]; the codegree-density threshold bound
reported by this package is 1 - x* < 0.8579.

Evaluators are pure double-precision functions; maximizers are
deterministic (dense grids, golden-section, a small simplex search, and a
seeded multistart coordinate ascent for p3).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable

from .errors import InfeasiblePointError, InputError

D_MAX = 1 / 6 - 1e-12
_GOLDEN = (math.sqrt(5) - 1) / 2

X_STAR_REFERENCE = 0.1421657737  # bisection result, frozen for reporting


def poly_p(x: float) -> float:
    """The threshold cubic 8x^3 - 22x^2 + 10x - 1."""
    return ((8 * x - 22) * x + 10) * x - 1


@dataclass(frozen=True)
class ThresholdReport:
    """Root of the threshold cubic in [0, 1/6] with bisection diagnostics."""

    xstar: float
    threshold: float  # 1 - xstar
    residual: float
    bracket_low: float
    bracket_high: float
    iterations: int

    @property
    def bracket_width(self) -> float:
        return self.bracket_high - self.bracket_low

    def to_json_dict(self) -> dict:
        return {
            "xstar": self.xstar,
            "threshold": self.threshold,
            "residual": self.residual,
            "bracket_low": self.bracket_low,
            "bracket_high": self.bracket_high,
            "bracket_width": self.bracket_width,
            "iterations": self.iterations,
        }


def root_xstar(tol: float = 1e-10) -> ThresholdReport:
    """Bracketed bisection for x* on [0, 1/6].

    The cubic is strictly increasing there (derivative at least
    10 - 44/6 > 0), negative at 0 and positive at 1/6, so the sign change
    brackets a unique root.
    """
    if tol <= 0:
        raise InputError(f"tolerance must be positive, got {tol}")
    lo, hi = 0.0, 1 / 6
    flo = poly_p(lo)
    iterations = 0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        fmid = poly_p(mid)
        iterations += 1
        if fmid == 0.0:
            lo = hi = mid
            break
        if (flo < 0) == (fmid < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    x = (lo + hi) / 2
    return ThresholdReport(
        xstar=x,
        threshold=1 - x,
        residual=abs(poly_p(x)),
        bracket_low=lo,
        bracket_high=hi,
        iterations=iterations,
    )


def _check_d(d: float) -> None:
    if not 0 <= d <= D_MAX:
        raise InputError(f"defect d must lie in [0, 1/6), got {d}")


def _check_unit_band(name: str, value: float, d: float) -> None:
    if not (1 - d) - 1e-12 <= value <= 1 + 1e-12:
        raise InputError(f"{name} must lie in [1-d, 1] = [{1 - d}, 1], got {value}")


@dataclass(frozen=True)
class ProgramPoint:
    """A point of the eight-variable program at defect d.

    Box and coupling constraints (all intervals inclusive):
    e0, e, f in [1-d, 1]; q0 in [e0+e-1-d, e0]; q in [e+f-1-d, e];
    p in [q0+q-e-d, q0]; r0 in [1/2, e0]; r in [0, q0].
    """

    d: float
    e0: float
    e: float
    f: float
    q0: float
    q: float
    p: float
    r0: float
    r: float

    def violations(self, tol: float = 1e-12) -> list[str]:
        out = []
        d = self.d
        if not 0 <= d <= D_MAX:
            out.append(f"d={d} outside [0, 1/6)")

        def box(name, value, lo, hi):
            if value < lo - tol:
                out.append(f"{name}={value} below {lo}")
            if value > hi + tol:
                out.append(f"{name}={value} above {hi}")

        box("e0", self.e0, 1 - d, 1)
        box("e", self.e, 1 - d, 1)
        box("f", self.f, 1 - d, 1)
        box("q0", self.q0, self.e0 + self.e - 1 - d, self.e0)
        box("q", self.q, self.e + self.f - 1 - d, self.e)
        box("p", self.p, self.q0 + self.q - self.e - d, self.q0)
        box("r0", self.r0, 0.5, self.e0)
        box("r", self.r, 0.0, self.q0)
        return out

    def is_feasible(self, tol: float = 1e-12) -> bool:
        return not self.violations(tol)

    def to_json_dict(self) -> dict:
        return {
            "d": self.d, "e0": self.e0, "e": self.e, "f": self.f,
            "q0": self.q0, "q": self.q, "p": self.p, "r0": self.r0, "r": self.r,
        }


def _w3_raw(e0, e, f, q0, q, p, r0, r) -> float:
    inner_a = (1 / q0) * (1 / e - 1 / e0)
    inner_b = (1 / p) * ((1 / q) * (1 / e - 1 / f) + inner_a)
    return e0 * r0 * (inner_a + r * inner_b)


def w3_eval(pt: ProgramPoint, tol: float = 1e-12) -> float:
    """Objective of the eight-variable program at a feasible point."""
    problems = pt.violations(tol)
    if problems:
        raise InfeasiblePointError(problems)
    return _w3_raw(pt.e0, pt.e, pt.f, pt.q0, pt.q, pt.p, pt.r0, pt.r)


def w4_eval(d: float, e0: float, f: float) -> float:
    """Two-variable reduction: the other six variables pushed to their
    optimal bounds (r0=e0, r=q0, then p, q, q0 and e at their extremes)."""
    _check_d(d)
    _check_unit_band("e0", e0, d)
    _check_unit_band("f", f, d)
    a = (1 / (1 - d) - 1 / e0) / (e0 - 2 * d)
    b = (1 / (1 - d) - 1 / f) / (f - 2 * d)
    return e0 * e0 * (a + (e0 - 2 * d) / (e0 + f - 1 - 4 * d) * (b + a))


def w5_eval(d: float, f: float) -> float:
    """Single-variable reduction: the two-variable form at e0 = 1."""
    _check_d(d)
    _check_unit_band("f", f, d)
    a = (1 / (1 - d) - 1) / (1 - 2 * d)
    b = (1 / (1 - d) - 1 / f) / (f - 2 * d)
    return a + (1 - 2 * d) / (f - 4 * d) * (b + a)


def w5_at_one(d: float) -> float:
    """Closed form of the single-variable objective at f = 1.

    Equals (8d^2 - 3d) / (8d^3 - 14d^2 + 7d - 1); the denominator factors
    as (d-1)(2d-1)(4d-1) and is negative on [0, 1/6).  The value crosses
    one exactly at the root of the threshold cubic.
    """
    _check_d(d)
    return (8 * d * d - 3 * d) / (((8 * d - 14) * d + 7) * d - 1)


def eta(d: float, f: float) -> float:
    """Cubic controlling monotonicity of the two-variable objective in e0.

    eta(f) = f^3 + (2-11d) f^2 + (23d^2-3) f + (17d^3 - 23d^2 + 5d + 1);
    at f = 1-d it equals (1-d)(1-3d)(1-6d) and it stays non-negative on
    [1-d, 1] whenever d is at most x*.
    """
    return (
        f ** 3
        + (2 - 11 * d) * f ** 2
        + (23 * d * d - 3) * f
        + (17 * d ** 3 - 23 * d * d + 5 * d + 1)
    )


def _golden_max(fn: Callable[[float], float], lo: float, hi: float, tol: float):
    """Golden-section maximization; returns (x, fn(x))."""
    if hi - lo <= tol:
        x = (lo + hi) / 2
        return x, fn(x)
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1, f2 = fn(x1), fn(x2)
    while hi - lo > tol:
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _GOLDEN * (hi - lo)
            f2 = fn(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _GOLDEN * (hi - lo)
            f1 = fn(x1)
    x = (lo + hi) / 2
    return x, fn(x)


@dataclass(frozen=True)
class OptimizeResult:
    value: float
    point: dict
    evaluations: int

    def to_json_dict(self) -> dict:
        return {"value": self.value, "point": self.point, "evaluations": self.evaluations}


def maximize_p5(d: float, grid: int = 10_000, refine_tol: float = 1e-10) -> OptimizeResult:
    """Maximize the single-variable objective over f in [1-d, 1].

    Dense grid plus golden-section refinement around the best cell.  For
    d at most x* the maximum sits at f = 1 with value at most one, with
    equality exactly at d = x*.
    """
    _check_d(d)
    lo, hi = 1 - d, 1.0
    evals = 0

    def fn(f):
        nonlocal evals
        evals += 1
        return w5_eval(d, f)

    if hi - lo <= 0:
        return OptimizeResult(value=fn(1.0), point={"f": 1.0}, evaluations=evals)
    best_i = 0
    best_v = -math.inf
    step = (hi - lo) / grid
    for i in range(grid + 1):
        f = lo + i * step
        v = fn(f)
        if v > best_v:
            best_i, best_v = i, v
    a = max(lo, lo + (best_i - 1) * step)
    b = min(hi, lo + (best_i + 1) * step)
    x, v = _golden_max(fn, a, b, refine_tol)
    if v < best_v:
        x, v = lo + best_i * step, best_v
    return OptimizeResult(value=v, point={"f": x}, evaluations=evals)


def _nelder_mead_box(fn, x0, lower, upper, tol=1e-10, max_iter=400):
    """Tiny Nelder-Mead for maximization, candidates clipped into the box."""
    dim = len(x0)

    def clip(x):
        return [min(max(v, lo), hi) for v, lo, hi in zip(x, lower, upper)]

    def ev(x):
        return fn(*x)

    simplex = [clip(list(x0))]
    for i in range(dim):
        pt = list(x0)
        span = (upper[i] - lower[i]) or 1.0
        pt[i] = pt[i] + 0.1 * span if pt[i] + 0.1 * span <= upper[i] else pt[i] - 0.1 * span
        simplex.append(clip(pt))
    values = [ev(p) for p in simplex]
    for _ in range(max_iter):
        order = sorted(range(dim + 1), key=lambda k: -values[k])
        simplex = [simplex[k] for k in order]
        values = [values[k] for k in order]
        if abs(values[0] - values[-1]) < tol:
            break
        centroid = [sum(p[i] for p in simplex[:-1]) / dim for i in range(dim)]
        worst = simplex[-1]
        refl = clip([c + (c - w) for c, w in zip(centroid, worst)])
        fr = ev(refl)
        if fr > values[0]:
            expd = clip([c + 2 * (c - w) for c, w in zip(centroid, worst)])
            fe = ev(expd)
            if fe > fr:
                simplex[-1], values[-1] = expd, fe
            else:
                simplex[-1], values[-1] = refl, fr
        elif fr > values[-2]:
            simplex[-1], values[-1] = refl, fr
        else:
            contr = clip([c + 0.5 * (w - c) for c, w in zip(centroid, worst)])
            fc = ev(contr)
            if fc > values[-1]:
                simplex[-1], values[-1] = contr, fc
            else:
                best = simplex[0]
                for k in range(1, dim + 1):
                    simplex[k] = clip(
                        [b + 0.5 * (p - b) for b, p in zip(best, simplex[k])]
                    )
                    values[k] = ev(simplex[k])
    best = max(range(dim + 1), key=lambda k: values[k])
    return simplex[best], values[best]


def maximize_p4(d: float, grid: int = 300, refine_tol: float = 1e-8) -> OptimizeResult:
    """Maximize the two-variable objective over [1-d, 1]^2.

    Endpoint-inclusive grid scan followed by simplex-search refinement.
    Agrees with the single-variable optimum for every d.
    """
    _check_d(d)
    lo, hi = 1 - d, 1.0
    evals = 0

    def fn(e0, f):
        nonlocal evals
        evals += 1
        return w4_eval(d, e0, f)

    if hi - lo <= 0:
        v = fn(1.0, 1.0)
        return OptimizeResult(value=v, point={"e0": 1.0, "f": 1.0}, evaluations=evals)
    step = (hi - lo) / grid
    best = (-math.inf, 1.0, 1.0)
    for i in range(grid + 1):
        e0 = lo + i * step
        for j in range(grid + 1):
            f = lo + j * step
            v = fn(e0, f)
            if v > best[0]:
                best = (v, e0, f)
    _, e0_0, f_0 = best
    point, value = _nelder_mead_box(
        fn, (e0_0, f_0), (lo, lo), (hi, hi), tol=refine_tol
    )
    if value < best[0]:
        point, value = [e0_0, f_0], best[0]
    return OptimizeResult(
        value=value, point={"e0": point[0], "f": point[1]}, evaluations=evals
    )


_P3_NAMES = ("e0", "e", "f", "q0", "q", "p", "r0", "r")


def _p3_interval(idx: int, vals, d: float):
    e0, e, f, q0, q, p, r0, r = vals
    if idx == 0 or idx == 1 or idx == 2:
        return (1 - d, 1.0)
    if idx == 3:
        return (e0 + e - 1 - d, e0)
    if idx == 4:
        return (e + f - 1 - d, e)
    if idx == 5:
        return (q0 + q - e - d, q0)
    if idx == 6:
        return (0.5, e0)
    return (0.0, q0)


def _p3_project(vals, d: float) -> list:
    out = list(vals)
    for idx in (3, 4, 5, 6, 7):  # dependency order: q0, q, p, r0, r
        lo, hi = _p3_interval(idx, out, d)
        out[idx] = min(max(out[idx], lo), hi)
    return out


def _p3_sample(rng: random.Random, d: float) -> list:
    vals = [0.0] * 8
    for idx in (0, 1, 2):
        vals[idx] = rng.uniform(1 - d, 1.0)
    for idx in (3, 4, 5, 6, 7):
        lo, hi = _p3_interval(idx, vals, d)
        vals[idx] = rng.uniform(lo, hi)
    return vals


def _p3_ascend(vals, d, coarse=32, cycle_tol=1e-9, max_cycles=80):
    """Cyclic coordinate ascent with projection onto the coupled intervals.

    Each coordinate is maximized by a coarse line scan plus golden-section
    refinement, with downstream variables re-projected after every trial
    value so the iterate stays feasible throughout.
    """
    evals = 0

    def objective(candidate):
        nonlocal evals
        evals += 1
        v = _p3_project(candidate, d)
        return _w3_raw(*v)

    current = _p3_project(vals, d)
    best = objective(current)
    for _ in range(max_cycles):
        improved = best
        for idx in range(8):
            lo, hi = _p3_interval(idx, current, d)
            if hi - lo <= 1e-15:
                current[idx] = lo
                current = _p3_project(current, d)
                continue

            def line(t, idx=idx):
                trial = list(current)
                trial[idx] = t
                return objective(trial)

            step = (hi - lo) / coarse
            best_t, best_v = current[idx], line(current[idx])
            for i in range(coarse + 1):
                t = lo + i * step
                v = line(t)
                if v > best_v:
                    best_t, best_v = t, v
            a = max(lo, best_t - step)
            b = min(hi, best_t + step)
            t_ref, v_ref = _golden_max(line, a, b, 1e-12)
            if v_ref > best_v:
                best_t, best_v = t_ref, v_ref
            if best_v > best:
                current[idx] = best_t
                current = _p3_project(current, d)
                best = best_v
        if best - improved < cycle_tol:
            break
    return current, best, evals


def maximize_p3(
    d: float, seed: int = 0, starts: int = 200, threads: int = 1
) -> OptimizeResult:
    """Multistart projected coordinate ascent over the coupled box region.

    ``starts`` feasible points are sampled with the seeded generator
    (independent draws for the free variables, then each dependent
    variable uniform in its induced interval).  The best ascent wins;
    ties break toward the lowest start index, so the result is
    deterministic for a fixed seed regardless of thread count.
    """
    _check_d(d)
    rng = random.Random(seed)
    start_points = [_p3_sample(rng, d) for _ in range(max(1, starts))]

    def run(item):
        index, point = item
        vals, value, evals = _p3_ascend(point, d)
        return value, index, vals, evals

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, enumerate(start_points)))
    else:
        results = [run(item) for item in enumerate(start_points)]

    total_evals = sum(r[3] for r in results)
    value, _, vals, _ = max(results, key=lambda r: (r[0], -r[1]))
    point = ProgramPoint(d, *vals)
    return OptimizeResult(
        value=value, point=point.to_json_dict(), evaluations=total_evals
    )


def optimal_point_p3(d: float, f: float) -> ProgramPoint:
    """Assemble the boundary point that realizes the chain optimum.

    e0 = 1, e = 1-d, q0, q and p at their lower bounds, r0 and r at their
    upper bounds; its objective equals the single-variable objective at f
    up to floating point association.
    """
    _check_d(d)
    _check_unit_band("f", f, d)
    e0 = 1.0
    e = 1 - d
    q0 = e0 + e - 1 - d
    q = e + f - 1 - d
    p = q0 + q - e - d
    return ProgramPoint(d=d, e0=e0, e=e, f=f, q0=q0, q=q, p=p, r0=e0, r=q0)


@dataclass(frozen=True)
class ChainReport:
    """Agreement of the three program optima at one defect value."""

    d: float
    tol: float
    p3_value: float
    p4_value: float
    p5_value: float

    @property
    def p4_vs_p5(self) -> float:
        return abs(self.p4_value - self.p5_value)

    @property
    def p3_vs_p5(self) -> float:
        return abs(self.p3_value - self.p5_value)

    @property
    def ok(self) -> bool:
        return self.p4_vs_p5 <= self.tol and self.p3_vs_p5 <= self.tol

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "tol": self.tol,
            "p3_value": self.p3_value,
            "p4_value": self.p4_value,
            "p5_value": self.p5_value,
            "p4_vs_p5": self.p4_vs_p5,
            "p3_vs_p5": self.p3_vs_p5,
            "ok": self.ok,
        }


def verify_chain(d: float, tol: float = 1e-4, seed: int = 0) -> ChainReport:
    """Run all three maximizers and report pairwise deviations."""
    _check_d(d)
    if tol <= 0:
        raise InputError(f"tolerance must be positive, got {tol}")
    p5 = maximize_p5(d)
    p4 = maximize_p4(d)
    p3 = maximize_p3(d, seed=seed)
    return ChainReport(
        d=d, tol=tol, p3_value=p3.value, p4_value=p4.value, p5_value=p5.value
    )
