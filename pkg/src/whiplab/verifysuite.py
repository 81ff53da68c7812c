"""Named invariant suites behind ``whiplab verify``.

Each check returns ``(name, ok, detail)``; a suite passes when every check
does.  The pytest suite drives the same functions, so the CLI and CI agree
by construction.
"""

from __future__ import annotations

import math
from typing import Callable, Dict, List, Tuple

import numpy as np

from . import analytic, statevector as sv, wala as wala_mod
from .lattice import build_whip
from .pauli import PauliString, PauliSum, commutes
from .propagation import early_eval_expectation, naive_expectation, sink_pair

Check = Tuple[str, bool, str]


def _check(name: str, ok: bool, detail: str = "") -> Check:
    return name, bool(ok), detail


def verify_engines(seed: int = 11) -> List[Check]:
    rng = np.random.default_rng(seed)
    checks: List[Check] = []
    worst = 0.0
    for L in (2, 3, 4):
        circuit = build_whip(2, L)
        pair = sink_pair(circuit)
        observable = PauliSum.single(PauliString({pair[0]: "Z", pair[1]: "Z"}))
        for theta in rng.uniform(-math.pi, math.pi, 20):
            reference = sv.expectation(sv.run_circuit(circuit, theta), observable)
            naive, _ = naive_expectation(circuit, observable, theta)
            early = early_eval_expectation(circuit, pair, theta)
            worst = max(worst, abs(reference - naive), abs(reference - early))
    checks.append(_check("cross-engine agreement (L<=4, 20 angles)",
                         worst < 1e-12, f"worst |diff| = {worst:.3e}"))

    circuit = build_whip(2, 3)
    pair = sink_pair(circuit)
    period = max(abs(early_eval_expectation(circuit, pair, t)
                     - early_eval_expectation(circuit, pair, t + 2 * math.pi))
                 for t in (0.3, -1.2, 2.5))
    checks.append(_check("2pi periodicity", period < 1e-12, f"worst = {period:.3e}"))

    L = 6
    circuit = build_whip(2, L)
    _, stats = early_eval_expectation(circuit, sink_pair(circuit), 0.7,
                                      return_stats=True)
    bound = math.comb(L, 2) + 1
    checks.append(_check("early front size <= C(L,2)+1",
                         stats["max_strings"] <= bound,
                         f"{stats['max_strings']} <= {bound}"))
    return checks


def verify_analytic() -> List[Check]:
    checks: List[Check] = []
    grid = np.linspace(-math.pi, math.pi, 777)

    worst = max(abs(analytic.zz_series(t, 10_000) - analytic.zz_closed_form(t))
                for t in grid if abs(math.sin(2 * t)) <= 0.98)
    checks.append(_check("series matches closed form (cutoff 1e4)",
                         worst < 1e-8, f"worst = {worst:.3e}"))

    ok = all(analytic.cycle_count_layer(k) == sum(
        analytic.brute_force_lgv(k - w, w) for w in range(1, k)) for k in range(2, 8))
    checks.append(_check("layer counts match brute-force enumeration (<=7)", ok))

    worst = max(abs(analytic.cycle_count_layer_gamma(k) - analytic.cycle_count_layer(k))
                / analytic.cycle_count_layer(k) for k in range(1, 41))
    checks.append(_check("layer counts match Gamma closed form (<=40)",
                         worst < 1e-9, f"worst rel = {worst:.3e}"))

    worst = max(abs(analytic.correlation_closed_form(t, 1) - analytic.zz_closed_form(t) ** 2)
                for t in grid)
    worst = max(worst, max(abs(analytic.correlation_closed_form(t, 3)
                               - analytic.correlation_closed_form(t, 1) ** 3) for t in grid))
    checks.append(_check("correlation identities", worst < 1e-12, f"worst = {worst:.3e}"))

    worst = max(abs(analytic.order_parameter_closed_form(t)
                    - analytic.order_parameter_decomposed(t))
                for t in np.linspace(-math.pi, math.pi, 1000))
    checks.append(_check("order-parameter decomposition identity",
                         worst < 1e-12, f"worst = {worst:.3e}"))

    cusps = {analytic.canonical_angle(math.pi / 4 + m * math.pi / 2) for m in range(-3, 4)}
    half = 5e-9
    jump = 0.0
    for fn in (analytic.zz_closed_form, analytic.order_parameter_closed_form):
        for center in np.linspace(-math.pi, math.pi, 4001):
            if min(abs(center - c) for c in cusps) < 1e-6:
                continue
            jump = max(jump, abs(fn(center + half) - fn(center - half)))
    checks.append(_check("closed forms continuous off the cusps (1e-8 windows)",
                         jump < 1e-6, f"max off-cusp jump = {jump:.3e}"))

    sym = max(abs(analytic.energy_density_2d(t + math.pi) - analytic.energy_density_2d(t))
              for t in grid)
    flip = max(abs(abs(analytic.order_parameter_closed_form(t + math.pi))
                   - abs(analytic.order_parameter_closed_form(t))) for t in grid)
    checks.append(_check("pi-shift symmetry of energy and |order|",
                         max(sym, flip) < 1e-12, f"worst = {max(sym, flip):.3e}"))
    return checks


def verify_symmetry(seed: int = 5) -> List[Check]:
    rng = np.random.default_rng(seed)
    checks: List[Check] = []
    worst = min(sv.symmetry_check(3, t) for t in rng.uniform(-math.pi, math.pi, 10))
    checks.append(_check("boundary-Z relates theta and theta+pi (L=3)",
                         worst >= 1.0 - 1e-10, f"min fidelity = {worst:.12f}"))
    T = sv.symmetry_operator(4)
    anti = all(not commutes(T, p) for p, _ in sv.order_parameter_operator(4).items())
    checks.append(_check("symmetry operator anticommutes with the order parameter", anti))
    control = sv.symmetry_check(3, 0.31, use_operator=False)
    checks.append(_check("negative control (operator dropped) departs from 1",
                         control < 0.999, f"fidelity = {control:.6f}"))
    return checks


def verify_phasepoints() -> List[Check]:
    report = sv.phase_point_checks(3)
    checks = [
        _check("theta in {0, pi} gives product states",
               report["product_state_entropy"] < 1e-10,
               f"max single-site entropy = {report['product_state_entropy']:.3e}"),
        _check("|phi(3pi/4)> equals |phi(-pi/4)> up to phase",
               report["ghz_pair_overlap_error"] < 1e-10,
               f"overlap error = {report['ghz_pair_overlap_error']:.3e}"),
        _check("theta = pi/2 expectations lie in {0, +-1} (Clifford)",
               report["clifford_expectation_error"] < 1e-10,
               f"worst deviation = {report['clifford_expectation_error']:.3e}"),
    ]
    return checks


def verify_wala() -> List[Check]:
    checks: List[Check] = []
    with_pt = wala_mod.build_wala("with_pt")
    without = wala_mod.build_wala("without_pt")

    fid = sv.fidelity(sv.run_circuit(with_pt, math.pi / 4),
                      sv.run_circuit(without, math.pi / 4))
    checks.append(_check("toric-code equality at pi/4", fid >= 1.0 - 1e-10,
                         f"fidelity = {fid:.12f}"))

    thetas = np.linspace(0.0, math.pi / 2, 65)
    worst_pl = 0.0
    worst_vx = 0.0
    for theta in thetas:
        state = sv.run_circuit(without, theta)
        got = sv.expectation(state, wala_mod.plaquette_operator("south"))
        worst_pl = max(worst_pl, abs(got - analytic.wala_plaquette_no_pt(theta)))
        for circ in (without, with_pt):
            st = sv.run_circuit(circ, theta) if circ is not without else state
            worst_vx = max(worst_vx, max(
                abs(1.0 - sv.expectation(st, wala_mod.vertex_operator(v)))
                for v in wala_mod.cube_vertices()))
    checks.append(_check("no-PT bottom plaquette equals (sin 2t)^5",
                         worst_pl < 1e-12, f"worst = {worst_pl:.3e}"))
    checks.append(_check("vertex operators invariant for all angles",
                         worst_vx < 1e-10, f"worst = {worst_vx:.3e}"))

    g5, g6 = with_pt.gates[4].generator(), with_pt.gates[5].generator()
    checks.append(_check("hinge rotations commute", commutes(g5, g6)))
    return checks


SUITES: Dict[str, Callable[[], List[Check]]] = {
    "engines": verify_engines,
    "analytic": verify_analytic,
    "symmetry": verify_symmetry,
    "phasepoints": verify_phasepoints,
    "wala": verify_wala,
}
