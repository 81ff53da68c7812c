"""Scaling, truncation-transition and cusp measurements.

Wall times come from the monotonic nanosecond clock, median of repeated runs
with a discarded warm-up; only log-log slopes are meaningful targets, never
absolute times.
"""

from __future__ import annotations

import math
import platform
import time
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from . import _kernels, analytic
from .lattice import build_whip
from .propagation import early_eval_expectation, sink_pair


@dataclass(frozen=True)
class ScalingSample:
    L: int
    wall_ns: int
    max_strings: int
    value: float
    theta: float


def environment_metadata() -> Dict[str, str]:
    return {
        "platform": platform.platform(),
        "python": platform.python_version(),
        "numpy": np.__version__,
        "kernel": "numba" if _kernels.HAS_NUMBA else "numpy",
    }


def _timed_early(L: int, theta: float, repeats: int) -> ScalingSample:
    circuit = build_whip(2, L)
    pair = sink_pair(circuit)
    value, stats = early_eval_expectation(circuit, pair, theta, return_stats=True)
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter_ns()
        early_eval_expectation(circuit, pair, theta)
        times.append(time.perf_counter_ns() - t0)
    return ScalingSample(L, int(np.median(times)), stats["max_strings"], value, theta)


def scaling_run(L_list: Sequence[int], theta: float = math.pi / 4,
                repeats: int = 5) -> Tuple[float, float, List[ScalingSample]]:
    """Log-log least-squares slopes of wall time and retained-string count
    for the early-evaluation engine; needs >= 4 distinct sizes."""
    sizes = sorted(set(L_list))
    if len(sizes) < 4:
        raise ValueError("need at least 4 distinct sizes")
    _kernels.warmup()
    _timed_early(sizes[0], theta, 1)  # warm-up, discarded
    samples = [_timed_early(L, theta, repeats) for L in sizes]
    logs = np.log([s.L for s in samples])
    time_slope = float(np.polyfit(logs, np.log([s.wall_ns for s in samples]), 1)[0])
    strings_slope = float(np.polyfit(logs, np.log([s.max_strings for s in samples]), 1)[0])
    return time_slope, strings_slope, samples


def truncation_transition(theta_list: Sequence[float],
                          cutoff_list: Sequence[int]) -> List[dict]:
    """Layer-series truncation error against the closed form, with a decay
    classification per angle: power-law ~ -1/2 at the critical angle,
    exponential elsewhere."""
    cutoffs = sorted(set(cutoff_list))
    rows: List[dict] = []
    for theta in theta_list:
        exact = analytic.zz_closed_form(theta)
        errors = [abs(analytic.zz_series(theta, c) - exact) for c in cutoffs]
        row = {"theta": theta, "cutoffs": list(cutoffs), "errors": errors}
        positive = [(c, e) for c, e in zip(cutoffs, errors) if e > 0.0]
        if len(positive) >= 3:
            cs = np.log([c for c, _ in positive])
            es = np.log([e for _, e in positive])
            row["loglog_slope"] = float(np.polyfit(cs, es, 1)[0])
            row["semilog_slope"] = float(np.polyfit([c for c, _ in positive], es, 1)[0])
        else:
            row["loglog_slope"] = math.nan
            row["semilog_slope"] = math.nan
        rows.append(row)
    return rows


def second_derivative(fn, theta: float, step: float = 1e-3) -> float:
    return (fn(theta + step) - 2.0 * fn(theta) + fn(theta - step)) / (step * step)


def cusp_scan(L_list: Sequence[int], center: float = -math.pi / 4,
              half_width: float = 0.05, points: int = 21,
              step: float = 1e-3) -> List[dict]:
    """Centered second differences of the early-evaluation ZZ value around
    the cusp; the peak magnitude grows with L."""
    thetas = np.linspace(center - half_width, center + half_width, points)
    rows: List[dict] = []
    for L in sorted(set(L_list)):
        circuit = build_whip(2, L)
        pair = sink_pair(circuit)

        def value(t: float) -> float:
            return early_eval_expectation(circuit, pair, t)

        derivs = [second_derivative(value, float(t), step) for t in thetas]
        peak = float(max(abs(d) for d in derivs))
        rows.append({"L": L, "thetas": [float(t) for t in thetas],
                     "second_derivs": derivs, "peak": peak})
    return rows


def compare_kernels(L_list: Sequence[int], theta: float = math.pi / 4,
                    repeats: int = 3) -> List[dict]:
    """Wall-time comparison of the jitted kernel against the numpy fallback
    on identical inputs; values must agree exactly per layer algebra."""
    rows: List[dict] = []
    for L in sorted(set(L_list)):
        circuit = build_whip(2, L)
        pair = sink_pair(circuit)
        row: Dict[str, object] = {"L": L}
        for label, flag in (("numba", True), ("numpy", False)):
            if flag and not _kernels.HAS_NUMBA:
                row["numba_ns"] = -1
                continue
            times = []
            value = None
            for _ in range(repeats + 1):
                t0 = time.perf_counter_ns()
                value = _early_with_kernel(circuit, pair, theta, flag)
                times.append(time.perf_counter_ns() - t0)
            row[f"{label}_ns"] = int(np.median(times[1:]))
            row[f"{label}_value"] = value
        rows.append(row)
    return rows


def _early_with_kernel(circuit, pair, theta, use_numba: bool) -> float:
    # mirrors early_eval_expectation but pins the kernel choice
    L = circuit.shape[0]
    a, b = pair
    w_bulk = -math.cos(theta) * math.sin(theta)
    w_edge = -math.sin(2.0 * theta)
    D = np.zeros((2 * L, 2 * L))
    sink = (L - 1, L - 1)
    if sum(a) != sum(b):
        other = b if a == sink else a
        D[2 * other[0], 2 * sink[0] + 1] = 1.0
        start = 2 * L - 2
    else:
        xa, xb = sorted((a[0], b[0]))
        D[2 * xa + 1, 2 * xb + 1] = 1.0
        start = sum(a)
    scalar = 0.0
    for csum in range(start, 0, -1):
        scalar = _kernels.step_layer(D, csum, L, w_bulk, w_edge, scalar,
                                     use_numba=use_numba)
        _kernels.repack(D, L)
    return scalar
