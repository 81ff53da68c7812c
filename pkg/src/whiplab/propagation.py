"""Observable expectations by Heisenberg-picture Pauli propagation.

Two engines:

* ``naive_expectation`` conjugates the observable gate by gate through the
  circuit layers in reverse, keeps every surviving string (optionally
  truncated by a :class:`TruncationPolicy`), then evaluates each term on the
  initial product state.  Exact but exponential near the critical angle.

* ``early_eval_expectation`` implements the polynomial-time strategy for the
  2-d whip circuit: sites are traced out as soon as no remaining gate touches
  them, which collapses the state to a two-body Z front of at most O(L^2)
  terms and O(L^4) total work.

Both use the lattice frame (source at the all-zero corner).  The paper-frame
observables live at the sink: :func:`sink_pair` is the nearest-neighbor pair
and :func:`diagonal_pair` the separation-d correlation pair.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import _kernels
from .lattice import WhipCircuit, ZYGate
from .pauli import PauliString, PauliSum, Site


class TermBudgetError(RuntimeError):
    """Raised when the naive engine exceeds its term cap."""

    def __init__(self, layer: int, terms: int, cap: int):
        super().__init__(
            f"term budget exceeded at layer {layer}: {terms} live terms > cap {cap}")
        self.layer = layer


@dataclass(frozen=True)
class TruncationPolicy:
    """Optional pruning applied after each conjugated layer.

    ``layer_cutoff`` stops the propagation after that many layers (counted
    from the observable end); ``coeff_floor`` drops small coefficients;
    ``weight_cap`` drops strings wider than the cap.  All fields unset means
    exact propagation.
    """
    layer_cutoff: Optional[int] = None
    coeff_floor: Optional[float] = None
    weight_cap: Optional[int] = None

    def __post_init__(self):
        if self.layer_cutoff is not None and self.layer_cutoff < 1:
            raise ValueError("layer_cutoff must be positive")
        if self.coeff_floor is not None and self.coeff_floor < 0:
            raise ValueError("coeff_floor must be non-negative")
        if self.weight_cap is not None and self.weight_cap < 1:
            raise ValueError("weight_cap must be positive")

    def is_exact(self) -> bool:
        return (self.layer_cutoff is None and self.coeff_floor is None
                and self.weight_cap is None)


EXACT = TruncationPolicy()


@dataclass
class FrontState:
    """Early-evaluation state: pair coefficients over one diagonal front.

    ``front`` lists the live sites (by x column) at coordinate sum ``csum``;
    ``pair_coeffs`` maps ordered site pairs to the coefficient of
    ``Z_i Z_j``; ``scalar`` accumulates fully evaluated contributions.
    """
    csum: int
    front: Tuple[Site, ...]
    pair_coeffs: Dict[Tuple[Site, Site], float]
    scalar: float


# ---------------------------------------------------------------------------
# naive engine (mask-encoded sparse Pauli sum)

_PHASE_Z = (0, 1, 3, 0)   # phase power of Z*letter for letter in I,X,Y,Z
_PHASE_Y = (0, 3, 0, 1)   # phase power of Y*letter
_CODE = ((0, 3), (1, 2))  # (x_bit, z_bit) -> letter code I=0,X=1,Y=2,Z=3


def naive_expectation(circuit: WhipCircuit, observable: PauliSum, theta: float,
                      policy: TruncationPolicy = EXACT, term_cap: int = 2_000_000,
                      ) -> Tuple[float, Dict[str, int]]:
    """Back-propagate ``observable`` through the circuit and evaluate it on
    the circuit's initial product state.

    Returns ``(value, stats)`` with ``stats = {"max_terms", "total_branchings",
    "layers_applied"}``.  Exact when ``policy`` is exact; raises
    :class:`TermBudgetError` if the live term count passes ``term_cap``.
    """
    site_index = {s: i for i, s in enumerate(circuit.sites)}

    terms: Dict[Tuple[int, int], float] = {}
    for string, coeff in observable.items():
        x_mask = 0
        z_mask = 0
        for site, letter in string.letters.items():
            bit = 1 << site_index[site]
            if letter in ("X", "Y"):
                x_mask |= bit
            if letter in ("Z", "Y"):
                z_mask |= bit
        terms[(x_mask, z_mask)] = terms.get((x_mask, z_mask), 0.0) + coeff

    max_terms = len(terms)
    branchings = 0
    layers_applied = 0

    for rev_layer, layer in enumerate(reversed(circuit.layers), start=1):
        if policy.layer_cutoff is not None and rev_layer > policy.layer_cutoff:
            break
        for gate_idx in layer:
            gate = circuit.gates[gate_idx]
            alpha = gate.angle(theta)
            cos_a = math.cos(alpha)
            sin_a = math.sin(alpha)
            c_bit = site_index[gate.control]
            t_bit = site_index[gate.target]
            nxt: Dict[Tuple[int, int], float] = {}
            for (x, z), coeff in terms.items():
                xc = (x >> c_bit) & 1
                xt = (x >> t_bit) & 1
                zt = (z >> t_bit) & 1
                if (xc ^ xt ^ zt) == 0:  # commutes with Z_c Y_t
                    nxt[(x, z)] = nxt.get((x, z), 0.0) + coeff
                    continue
                branchings += 1
                key = (x, z)
                nxt[key] = nxt.get(key, 0.0) + cos_a * coeff
                # Q = (Z_c Y_t) * P : flip x at t, z at c and t, track phase
                zc = (z >> c_bit) & 1
                k = _PHASE_Z[_CODE[xc][zc]] + _PHASE_Y[_CODE[xt][zt]]
                # i * i^k must be real: k is 1 or 3 here
                sign = -1.0 if (k % 4) == 1 else 1.0
                qx = x ^ (1 << t_bit)
                qz = z ^ (1 << c_bit) ^ (1 << t_bit)
                qkey = (qx, qz)
                nxt[qkey] = nxt.get(qkey, 0.0) + sign * sin_a * coeff
            terms = {k: v for k, v in nxt.items() if v != 0.0}
            if len(terms) > term_cap:
                raise TermBudgetError(rev_layer, len(terms), term_cap)
            max_terms = max(max_terms, len(terms))
        layers_applied = rev_layer
        if policy.coeff_floor is not None:
            terms = {k: v for k, v in terms.items() if abs(v) > policy.coeff_floor}
        if policy.weight_cap is not None:
            terms = {k: v for k, v in terms.items()
                     if bin(k[0] | k[1]).count("1") <= policy.weight_cap}

    if circuit.initial_state == "plus":
        value = math.fsum(c for (x, z), c in terms.items() if z == 0)
    elif circuit.initial_state == "zero":
        value = math.fsum(c for (x, z), c in terms.items() if x == 0)
    else:
        raise ValueError(f"unknown initial state {circuit.initial_state!r}")
    stats = {"max_terms": max_terms, "total_branchings": branchings,
             "layers_applied": layers_applied}
    return value, stats


# ---------------------------------------------------------------------------
# early-evaluation engine

def sink_pair(circuit: WhipCircuit) -> Tuple[Site, Site]:
    """The nearest-neighbor ZZ pair at the sink corner (the paper-frame
    ``Z_{0,0} Z_{0,1}`` observable)."""
    L = circuit.shape[0]
    return ((L - 1, L - 1), (L - 1, L - 2))


def diagonal_pair(circuit: WhipCircuit, d: int) -> Tuple[Site, Site]:
    """Separation-d diagonal pair (paper-frame ``Z_{d,0} Z_{0,d}``)."""
    L = circuit.shape[0]
    if not 1 <= d <= L - 1:
        raise ValueError(f"separation {d} outside 1..{L - 1}")
    return ((L - 1 - d, L - 1), (L - 1, L - 1 - d))


def _validate_early(circuit: WhipCircuit, pair: Tuple[Site, Site]) -> None:
    if circuit.kind != "whip" or circuit.d != 2:
        raise ValueError("early evaluation applies to 2-d whip circuits only; "
                         "the two-body front update does not close in 3-d")
    L = circuit.shape[0]
    a, b = pair
    for site in (a, b):
        if len(site) != 2 or not all(0 <= v < L for v in site):
            raise ValueError(f"site {site} not on the {L}x{L} lattice")
    if a == b:
        raise ValueError("pair sites must differ")
    sink = (L - 1, L - 1)
    same_front = sum(a) == sum(b)
    nn_at_sink = sink in (a, b) and abs(sum(a) - sum(b)) == 1
    if not (same_front or nn_at_sink):
        raise ValueError(f"pair {pair} is not representable on a single front")


def early_eval_expectation(circuit: WhipCircuit, pair: Tuple[Site, Site],
                           theta: float, return_stats: bool = False):
    """Exact ZZ expectation via the early-evaluation front update.

    Advances the two-body Z front one diagonal layer at a time: each dead
    site's Z branches onto its one or two predecessors (weight
    ``-cos sin`` per half-angle branch, ``-sin 2theta`` for the full-angle
    boundary gate), pairs landing on a common site fold into the scalar, and
    the final boundary layer closes through the source with ``sin^2(2theta)``.
    Time O(L^4), memory O(L^2).
    """
    _validate_early(circuit, pair)
    L = circuit.shape[0]
    a, b = pair
    w_bulk = -math.cos(theta) * math.sin(theta)
    w_edge = -math.sin(2.0 * theta)

    D = np.zeros((2 * L, 2 * L))
    sink = (L - 1, L - 1)
    if sum(a) != sum(b):  # sink nearest-neighbor entry
        other = b if a == sink else a
        lo, hi = 2 * other[0], 2 * sink[0] + 1
        start = 2 * L - 2
    else:
        xa, xb = sorted((a[0], b[0]))
        lo, hi = 2 * xa + 1, 2 * xb + 1
        start = sum(a)
    D[lo, hi] = 1.0

    scalar = 0.0
    max_strings = 1
    for csum in range(start, 0, -1):
        scalar = _kernels.step_layer(D, csum, L, w_bulk, w_edge, scalar)
        live = _kernels.repack(D, L)
        max_strings = max(max_strings, live + 1)
    if np.count_nonzero(D):
        raise AssertionError("front state did not fully evaluate")
    if return_stats:
        return scalar, {"max_strings": max_strings}
    return scalar


def front_state(circuit: WhipCircuit, pair: Tuple[Site, Site], theta: float,
                layers: int) -> FrontState:
    """Advance the early-evaluation update a fixed number of layers and
    return the intermediate front (introspection/test helper)."""
    _validate_early(circuit, pair)
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
    csum = start
    for _ in range(layers):
        if csum < 1:
            break
        scalar = _kernels.step_layer(D, csum, L, w_bulk, w_edge, scalar)
        _kernels.repack(D, L)
        csum -= 1
    front = tuple((x, csum - x) for x in range(max(0, csum - (L - 1)), min(L - 1, csum) + 1))
    pairs: Dict[Tuple[Site, Site], float] = {}
    n2 = 2 * L
    for i in range(1, n2, 2):
        for j in range(i + 2, n2, 2):
            if D[i, j] != 0.0:
                xa, xb = i // 2, j // 2
                pairs[((xa, csum - xa), (xb, csum - xb))] = D[i, j]
    return FrontState(csum, front, pairs, scalar)


# ---------------------------------------------------------------------------
# grid scans

def scan_expectation(engine: str, circuit: WhipCircuit, observable,
                     thetas: Sequence[float], policy: TruncationPolicy = EXACT,
                     threads: Optional[int] = None) -> List[dict]:
    """Evaluate one observable over a theta grid.

    ``observable`` is a site pair for the early engine and a
    :class:`PauliSum` otherwise.  Returns one row dict per grid point in
    order, with per-point wall clock; failed points carry ``ok=False`` and
    the error text.
    """
    thetas = list(thetas)
    if not thetas:
        raise ValueError("theta grid is empty")

    def evaluate(theta: float) -> float:
        if engine == "early":
            return early_eval_expectation(circuit, observable, theta)
        if engine == "naive":
            value, _ = naive_expectation(circuit, observable, theta, policy)
            return value
        if engine == "statevector":
            from . import statevector as sv
            return sv.expectation(sv.run_circuit(circuit, theta), observable)
        raise ValueError(f"unknown engine {engine!r}")

    rows: List[dict] = []
    for theta in thetas:
        t0 = time.perf_counter_ns()
        try:
            value = evaluate(theta)
            rows.append({"theta": theta, "value": value, "engine": engine,
                         "wall_ns": time.perf_counter_ns() - t0, "ok": True,
                         "error": ""})
        except (ValueError, TermBudgetError) as exc:
            rows.append({"theta": theta, "value": math.nan, "engine": engine,
                         "wall_ns": time.perf_counter_ns() - t0, "ok": False,
                         "error": str(exc)})
    return rows
