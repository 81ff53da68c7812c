"""Dense statevector engine: the ground-truth oracle for every other engine.

Amplitudes are kept as a flat complex vector over ``2^N`` basis states with
qubits ordered row-major over site coordinates (qubit 0 is the most
significant bit).  Two-qubit ZY rotations and the four-qubit plaquette
rotation are applied as small dense kernels over strided amplitude blocks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from .lattice import WhipCircuit, ZYGate, boundary_sites, lower_boundary_sites
from .pauli import PauliString, PauliSum, Site

QUBIT_CAP = 22

_PAULI_MATS = {
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


class QubitCapError(ValueError):
    pass


@dataclass
class DenseState:
    """Complex amplitude vector plus the site -> qubit-index map."""
    amps: np.ndarray
    sites: Tuple[Site, ...]

    @property
    def n(self) -> int:
        return len(self.sites)

    @property
    def index_of(self) -> Dict[Site, int]:
        return {s: i for i, s in enumerate(self.sites)}

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def copy(self) -> "DenseState":
        return DenseState(self.amps.copy(), self.sites)


def product_state(sites: Sequence[Site], kind: str, cap: int = QUBIT_CAP) -> DenseState:
    """|+>^N or |0>^N over the given (sorted) sites."""
    sites = tuple(sorted(sites))
    n = len(sites)
    if n > cap:
        raise QubitCapError(f"{n} qubits exceeds the cap of {cap}")
    amps = np.zeros(1 << n, dtype=complex)
    if kind == "zero":
        amps[0] = 1.0
    elif kind == "plus":
        amps[:] = 1.0 / math.sqrt(1 << n)
    else:
        raise ValueError(f"unknown initial state {kind!r}")
    return DenseState(amps, sites)


def _bit(n: int, qubit: int) -> int:
    # qubit 0 = most significant bit
    return 1 << (n - 1 - qubit)


def apply_pauli_rotation(state: DenseState, letters: Dict[Site, str], alpha: float) -> None:
    """In-place ``exp(-i alpha/2 * G)`` for a Pauli-string generator ``G``.

    Works on the strided amplitude pairs connected by the X/Y part of ``G``;
    identity on all other qubits.
    """
    idx = state.index_of
    n = state.n
    x_mask = 0
    z_mask = 0
    ny = 0
    for site, letter in letters.items():
        b = _bit(n, idx[site])
        if letter in ("X", "Y"):
            x_mask |= b
        if letter in ("Z", "Y"):
            z_mask |= b
        if letter == "Y":
            ny += 1
    amps = state.amps
    dim = amps.shape[0]
    basis = np.arange(dim, dtype=np.int64)
    # G|b> = i^ny * (-1)^<z,b> |b ^ x>  with X applied after Z
    parity = _popcount_parity(basis & z_mask)
    gphase = (1j ** ny) * np.where(parity, -1.0, 1.0)
    if x_mask:
        g_amps = np.empty_like(amps)
        g_amps[basis ^ x_mask] = gphase * amps
    else:
        g_amps = gphase * amps
    c, s = math.cos(alpha / 2.0), math.sin(alpha / 2.0)
    state.amps = c * amps - 1j * s * g_amps


def apply_pauli_string(state: DenseState, string: PauliString) -> DenseState:
    """Return ``P |psi>`` as a new state."""
    idx = state.index_of
    n = state.n
    x_mask = 0
    z_mask = 0
    ny = 0
    for site, letter in string.letters.items():
        b = _bit(n, idx[site])
        if letter in ("X", "Y"):
            x_mask |= b
        if letter in ("Z", "Y"):
            z_mask |= b
        if letter == "Y":
            ny += 1
    amps = state.amps
    basis = np.arange(amps.shape[0], dtype=np.int64)
    parity = _popcount_parity(basis & z_mask)
    phase = string.phase * (1j ** ny) * np.where(parity, -1.0, 1.0)
    out = np.empty_like(amps)
    out[basis ^ x_mask] = phase * amps
    return DenseState(out, state.sites)


def _popcount_parity(values: np.ndarray) -> np.ndarray:
    v = values.copy()
    for shift in (32, 16, 8, 4, 2, 1):
        v ^= v >> shift
    return (v & 1).astype(bool)


def run_circuit(circuit, theta: float, cap: int = QUBIT_CAP) -> DenseState:
    """Apply the circuit's gates in declared order to its initial state."""
    state = product_state(_circuit_sites(circuit), circuit.initial_state, cap=cap)
    for gate in circuit.gates:
        if isinstance(gate, ZYGate):
            letters = {gate.control: "Z", gate.target: "Y"}
        else:  # four-qubit plaquette rotation
            letters = dict(gate.letters())
        apply_pauli_rotation(state, letters, gate.angle(theta))
    return state


def _circuit_sites(circuit) -> Tuple[Site, ...]:
    return tuple(circuit.sites)


def expectation(state: DenseState, observable: PauliSum | PauliString) -> float:
    """Real expectation ``<psi| O |psi>``."""
    if isinstance(observable, PauliString):
        observable = PauliSum.single(observable)
    total = 0.0
    for string, coeff in observable.items():
        applied = apply_pauli_string(state, string)
        total += coeff * float(np.real(np.vdot(state.amps, applied.amps)))
    return total


def fidelity(a: DenseState, b: DenseState) -> float:
    """Global-phase-insensitive overlap ``|<a|b>|``."""
    return float(abs(np.vdot(a.amps, b.amps)))


def entanglement(state: DenseState, subset: Iterable[Site]) -> Tuple[float, np.ndarray]:
    """Entanglement entropy and spectrum across the given bipartition.

    Returns ``(S, xi)`` with ``S = -sum(lam * log(lam))`` and the spectrum
    ``xi = -log(lam)`` ascending; exact zeros map to ``+inf``.
    """
    subset = set(subset)
    if not subset or subset == set(state.sites):
        raise ValueError("bipartition subset must be non-empty and proper")
    idx = state.index_of
    a_axes = sorted(idx[s] for s in subset)
    b_axes = [i for i in range(state.n) if i not in a_axes]
    tensor = state.amps.reshape((2,) * state.n)
    matrix = tensor.transpose(a_axes + b_axes).reshape(1 << len(a_axes), -1)
    svals = np.linalg.svd(matrix, compute_uv=False)
    lam = svals ** 2
    lam = lam / lam.sum()
    entropy = float(-np.sum(lam[lam > 0] * np.log(lam[lam > 0])))
    with np.errstate(divide="ignore"):
        xi = np.where(lam > 0, -np.log(np.maximum(lam, 1e-300)), np.inf)
    return entropy, np.sort(xi)


def half_lattice_cut(L: int) -> Tuple[Site, ...]:
    """Half of the L x L lattice: the first floor(L/2) coordinate rows."""
    return tuple((x, y) for x in range(L // 2) for y in range(L))


def symmetry_operator(L: int) -> PauliString:
    """Boundary-Z symmetry operator of the 2-d whip circuit."""
    return PauliString({site: "Z" for site in boundary_sites(L)})


def order_parameter_operator(L: int) -> PauliSum:
    """Sum of X on the 2L-2 sink-adjacent boundary sites."""
    return PauliSum({PauliString({site: "X"}): 1.0 for site in lower_boundary_sites(L)})


def symmetry_check(L: int, theta: float, use_operator: bool = True) -> float:
    """Overlap ``|<phi(theta+pi)| T |phi(theta)>|`` for the 2-d whip circuit.

    ``use_operator=False`` drops T (negative control; the overlap is then
    generically below 1).
    """
    from .lattice import build_whip

    circuit = build_whip(2, L)
    lhs = run_circuit(circuit, theta + math.pi)
    rhs = run_circuit(circuit, theta)
    if use_operator:
        rhs = apply_pauli_string(rhs, symmetry_operator(L))
    return fidelity(lhs, rhs)


def order_parameter_finite(L: int, theta: float) -> float:
    """Statevector ``<dX> / (2L-2)`` on the L x L whip circuit."""
    from .lattice import build_whip

    state = run_circuit(build_whip(2, L), theta)
    return expectation(state, order_parameter_operator(L)) / (2 * L - 2)


def ghz_state(sites: Sequence[Site], staggered: bool = False) -> DenseState:
    """(|00...0> + |11...1>)/sqrt(2), or the staggered (antiferromagnetic)
    pattern with site parity given by the coordinate sum."""
    sites = tuple(sorted(sites))
    n = len(sites)
    amps = np.zeros(1 << n, dtype=complex)
    if staggered:
        pattern = 0
        for i, site in enumerate(sites):
            if sum(site) % 2 == 1:
                pattern |= _bit(n, i)
        amps[pattern] = 1 / math.sqrt(2)
        amps[pattern ^ ((1 << n) - 1)] = 1 / math.sqrt(2)
    else:
        amps[0] = 1 / math.sqrt(2)
        amps[-1] = 1 / math.sqrt(2)
    return DenseState(amps, sites)


def phase_point_checks(L: int, seed: int = 7) -> Dict[str, float]:
    """Representative-state checks at the special whip angles.

    Returns a report of worst-case deviations; all entries should be ~0.
    """
    from .lattice import build_whip

    rng = np.random.default_rng(seed)
    circuit = build_whip(2, L)
    report: Dict[str, float] = {}

    worst = 0.0
    for theta in (0.0, math.pi):
        state = run_circuit(circuit, theta)
        for site in circuit.sites:
            entropy, _ = entanglement(state, [site])
            worst = max(worst, abs(entropy))
    report["product_state_entropy"] = worst

    lhs = run_circuit(circuit, 3 * math.pi / 4)
    rhs = run_circuit(circuit, -math.pi / 4)
    report["ghz_pair_overlap_error"] = abs(1.0 - fidelity(lhs, rhs))

    state = run_circuit(circuit, math.pi / 2)
    sites = circuit.sites
    worst = 0.0
    for _ in range(50):
        letters = {}
        for site in sites:
            letter = rng.choice(["I", "X", "Y", "Z"])
            if letter != "I":
                letters[site] = str(letter)
        value = expectation(state, PauliString(letters))
        worst = max(worst, min(abs(value), abs(abs(value) - 1.0)))
    report["clifford_expectation_error"] = worst
    return report
