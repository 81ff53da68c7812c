"""One-parameter variational optimization with exact-diagonalization baselines.

Benchmarks the whip ansatz pair (with / without phase transition) on the
transverse-field Ising model on the 4x4 lattice, and the loop-ansatz pair on
the single-cube Z2 gauge Hamiltonian.  The exact ground energy comes from an
iterative extremal eigensolver on a matrix-free Hamiltonian apply; the
variational angle from a coarse scan plus golden-section refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

import numpy as np
from scipy.sparse.linalg import LinearOperator, eigsh

from . import statevector as sv
from . import wala as wala_mod
from .lattice import WhipCircuit, build_whip, build_whip_no_pt

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class VqeResult:
    x: float
    theta_star: float
    e_vqe: float
    e_exact: float
    ansatz: str

    @property
    def rel_error(self) -> float:
        return abs(self.e_vqe - self.e_exact) / abs(self.e_exact)


def golden_section(fn: Callable[[float], float], lo: float, hi: float,
                   tol: float = 1e-8) -> Tuple[float, float]:
    """Derivative-free 1-d minimization on [lo, hi]; robust at cusps."""
    a, b = lo, hi
    c = b - GOLDEN * (b - a)
    d = a + GOLDEN * (b - a)
    fc, fd = fn(c), fn(d)
    while (b - a) > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - GOLDEN * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + GOLDEN * (b - a)
            fd = fn(d)
    mid = 0.5 * (a + b)
    return mid, fn(mid)


def minimize_angle(fn: Callable[[float], float], coarse: int = 64,
                   brackets: int = 8, tol: float = 1e-8) -> Tuple[float, float]:
    """Global coarse scan over (-pi, pi] followed by golden-section refinement
    of the best local-minimum brackets."""
    grid = np.linspace(-math.pi, math.pi, coarse, endpoint=False) + math.pi / coarse
    values = np.array([fn(t) for t in grid])
    candidates = sorted(range(coarse), key=lambda i: values[i])[:brackets]
    best = (math.nan, math.inf)
    step = 2.0 * math.pi / coarse
    for idx in candidates:
        theta, value = golden_section(fn, grid[idx] - step, grid[idx] + step, tol)
        if value < best[1]:
            best = (theta, value)
    return best


# ---------------------------------------------------------------------------
# transverse-field Ising model on the L x L lattice

def _tfim_parts(L: int):
    """Edge list, per-basis-state ZZ diagonal and X-flip index maps."""
    circuit = build_whip(2, L)
    sites = circuit.sites
    n = len(sites)
    index = {s: i for i, s in enumerate(sites)}
    edges = []
    for (x, y) in sites:
        if x + 1 < L:
            edges.append(((x, y), (x + 1, y)))
        if y + 1 < L:
            edges.append(((x, y), (x, y + 1)))
    dim = 1 << n
    basis = np.arange(dim, dtype=np.int64)
    zz_diag = np.zeros(dim)
    for a, b in edges:
        ba = 1 << (n - 1 - index[a])
        bb = 1 << (n - 1 - index[b])
        sa = 1.0 - 2.0 * ((basis & ba) > 0)
        sb = 1.0 - 2.0 * ((basis & bb) > 0)
        zz_diag += sa * sb
    flip_masks = [1 << (n - 1 - q) for q in range(n)]
    return n, edges, zz_diag, flip_masks


def tfim_exact_energy(L: int, x: float, tol: float = 1e-10) -> float:
    """Lowest eigenvalue of ``-(1-x) sum X_i - x sum Z_i Z_j`` by a
    matrix-free Lanczos solve."""
    n, _, zz_diag, flip_masks = _tfim_parts(L)
    dim = 1 << n
    basis = np.arange(dim, dtype=np.int64)
    flips = [basis ^ m for m in flip_masks]

    def matvec(v):
        out = -x * zz_diag * v
        acc = np.zeros_like(v)
        for f in flips:
            acc += v[f]
        return out - (1.0 - x) * acc

    op = LinearOperator((dim, dim), matvec=matvec, dtype=float)
    vals = eigsh(op, k=1, which="SA", tol=tol, return_eigenvectors=False)
    return float(vals[0])


def tfim_circuit_energy(circuit: WhipCircuit, x: float, theta: float,
                        cache: dict | None = None) -> float:
    """Variational energy of the ansatz state at one angle."""
    L = circuit.shape[0]
    key = ("parts", L)
    if cache is not None and key in cache:
        n, edges, zz_diag, flip_masks = cache[key]
    else:
        n, edges, zz_diag, flip_masks = _tfim_parts(L)
        if cache is not None:
            cache[key] = (n, edges, zz_diag, flip_masks)
    state = sv.run_circuit(circuit, theta)
    amps = state.amps
    zz = float(np.real(np.vdot(amps, zz_diag * amps)))
    basis = np.arange(amps.shape[0], dtype=np.int64)
    xsum = 0.0
    for mask in flip_masks:
        xsum += float(np.real(np.vdot(amps, amps[basis ^ mask])))
    return -(1.0 - x) * xsum - x * zz


def tfim_vqe(L: int = 4, ansatz: str = "with_pt",
             x_grid: Sequence[float] | None = None) -> List[VqeResult]:
    """Optimize the whip angle for each coupling on the TFIM grid."""
    if ansatz == "with_pt":
        circuit = build_whip(2, L)
    elif ansatz == "without_pt":
        circuit = build_whip_no_pt(L)
    else:
        raise ValueError(f"unknown ansatz {ansatz!r}")
    if x_grid is None:
        x_grid = np.linspace(0.0, 1.0, 21)
    cache: dict = {}
    results = []
    for x in x_grid:
        e_exact = tfim_exact_energy(L, float(x))
        theta_star, e_vqe = minimize_angle(
            lambda t: tfim_circuit_energy(circuit, float(x), t, cache))
        results.append(VqeResult(float(x), theta_star, e_vqe, e_exact, ansatz))
    return results


# ---------------------------------------------------------------------------
# Z2 gauge theory on the single cube
#
# Every circuit state and the exact ground state sit in the +1 sector of all
# vertex stabilizers, where the vertex sum contributes the constant -8.  The
# relative-error benchmark therefore scores the x-dependent part
# -(1-x) sum Xp - x sum Z_l alone; including the constant would only dilute
# the denominator.

def z2_metric_hamiltonian(x: float) -> "PauliSum":
    from .pauli import PauliString, PauliSum

    terms = {}
    for face in wala_mod._FACES:
        terms[wala_mod.plaquette_operator(face)] = -(1.0 - x)
    for edge in wala_mod.cube_edges():
        terms[PauliString({edge: "Z"})] = -x
    return PauliSum(terms)


def z2_exact_energy(x: float, tol: float = 1e-10) -> float:
    ham = z2_metric_hamiltonian(x)
    sites = wala_mod.cube_edges()
    n = len(sites)
    index = {s: i for i, s in enumerate(sites)}
    dim = 1 << n
    basis = np.arange(dim, dtype=np.int64)
    rows: List[np.ndarray] = []
    cols: List[np.ndarray] = []
    vals: List[np.ndarray] = []
    for string, coeff in ham.items():
        x_mask = 0
        z_mask = 0
        for site, letter in string.letters.items():
            bit = 1 << (n - 1 - index[site])
            if letter in ("X", "Y"):
                x_mask |= bit
            if letter in ("Z", "Y"):
                z_mask |= bit
        parity = basis & z_mask
        for shift in (8, 4, 2, 1):
            parity ^= parity >> shift
        sign = 1.0 - 2.0 * (parity & 1)
        rows.append(basis ^ x_mask)
        cols.append(basis)
        vals.append(coeff * sign)
    from scipy.sparse import coo_matrix

    mat = coo_matrix((np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
                     shape=(dim, dim)).tocsr()
    return float(eigsh(mat, k=1, which="SA", tol=tol, return_eigenvectors=False)[0])


def z2_circuit_energy(variant: str, x: float, theta: float) -> float:
    circuit = wala_mod.build_wala(variant)
    state = sv.run_circuit(circuit, theta)
    return sv.expectation(state, z2_metric_hamiltonian(x))


def z2_vqe(ansatz: str = "with_pt", x_grid: Sequence[float] | None = None) -> List[VqeResult]:
    if ansatz not in ("with_pt", "without_pt"):
        raise ValueError(f"unknown ansatz {ansatz!r}")
    if x_grid is None:
        x_grid = np.linspace(0.0, 1.0, 21)
    results = []
    for x in x_grid:
        e_exact = z2_exact_energy(float(x))
        theta_star, e_vqe = minimize_angle(lambda t: z2_circuit_energy(ansatz, float(x), t))
        results.append(VqeResult(float(x), theta_star, e_vqe, e_exact, ansatz))
    return results


def worst_case_error(results: Sequence[VqeResult]) -> float:
    return max(r.rel_error for r in results)
