"""Sequential plaquette-rotation circuits on one cube of the Z2 gauge lattice.

Twelve qubits sit on the cube edges.  Each gate is a four-qubit rotation
``exp(-i (m theta / 2) X_i X_j X_k Y_l)`` oriented toward one target edge
``l``; the variant with a phase transition splits the final plaquette
rotation into two half-angle rotations sharing the same target edge, the
variant without applies five full-angle rotations and leaves the sixth face
to the stabilizer constraint.

Face labels follow the build order documented here (top, the four sides,
bottom/south last); only labeling-independent claims are asserted in tests:
the toric-code equality at theta = pi/4, the bottom-plaquette closed form
``(sin 2theta)^5`` and the vertex-operator invariance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .pauli import PauliString, PauliSum

# an edge is (axis, a, b): axis 0/1/2 = x/y/z, (a, b) the transverse
# coordinates in axis order, each 0 or 1
Edge = Tuple[int, int, int]

_FACES: Dict[str, Tuple[int, int]] = {
    "top": (2, 1), "north": (1, 1), "east": (0, 1),
    "west": (0, 0), "bottom": (2, 0), "south": (1, 0),
}

#: gate order and target edges; the last two faces share the target edge
#: (the bottom-south hinge), untouched by the four earlier rotations
_ORDER: Tuple[Tuple[str, Edge], ...] = (
    ("top", (0, 1, 1)),
    ("north", (2, 1, 1)),
    ("east", (2, 1, 0)),
    ("west", (2, 0, 0)),
    ("bottom", (0, 0, 0)),
    ("south", (0, 0, 0)),
)


def cube_edges() -> Tuple[Edge, ...]:
    return tuple(sorted((axis, a, b) for axis in range(3)
                        for a in range(2) for b in range(2)))


def face_edges(face: str) -> Tuple[Edge, ...]:
    normal, offset = _FACES[face]
    out: List[Edge] = []
    for axis in range(3):
        if axis == normal:
            continue
        # transverse coordinates of an edge are the non-axis coordinates in
        # axis order; find where the face normal sits among them
        transverse_axes = [a for a in range(3) if a != axis]
        pos = transverse_axes.index(normal)
        for other in range(2):
            coords = [0, 0]
            coords[pos] = offset
            coords[1 - pos] = other
            out.append((axis, coords[0], coords[1]))
    return tuple(sorted(out))


def cube_vertices() -> Tuple[Tuple[int, int, int], ...]:
    return tuple((x, y, z) for x in range(2) for y in range(2) for z in range(2))


def vertex_edges(vertex: Tuple[int, int, int]) -> Tuple[Edge, ...]:
    x, y, z = vertex
    return ((0, y, z), (1, x, z), (2, x, y))


@dataclass(frozen=True)
class PlaquetteGate:
    """Rotation exp(-i (multiplier * theta / 2) X_i X_j X_k Y_target)."""
    face: str
    edges: Tuple[Edge, ...]
    target: Edge
    multiplier: Fraction

    def letters(self) -> Dict[Edge, str]:
        return {e: ("Y" if e == self.target else "X") for e in self.edges}

    def generator(self) -> PauliString:
        return PauliString(self.letters())

    def angle(self, theta: float) -> float:
        return float(self.multiplier) * theta


@dataclass(frozen=True)
class WalaCircuit:
    variant: str                      # "with_pt" | "without_pt"
    gates: Tuple[PlaquetteGate, ...]
    initial_state: str = "zero"

    @property
    def sites(self) -> Tuple[Edge, ...]:
        return cube_edges()

    @property
    def d(self) -> int:
        return 3

    @property
    def shape(self) -> Tuple[int, ...]:
        return (2, 2, 2)


def build_wala(variant: str) -> WalaCircuit:
    """Single-cube loop-ansatz circuit.

    ``with_pt``: six rotations in face order, the two hinge faces at half
    angle.  ``without_pt``: the first five faces at full angle; the south
    face carries no gate and its expectation follows the closed sphere.
    """
    if variant not in ("with_pt", "without_pt"):
        raise ValueError(f"unknown variant {variant!r}")
    gates: List[PlaquetteGate] = []
    order = _ORDER if variant == "with_pt" else _ORDER[:5]
    for face, target in order:
        if variant == "with_pt" and face in ("bottom", "south"):
            mult = Fraction(1)
        else:
            mult = Fraction(2)
        gates.append(PlaquetteGate(face, face_edges(face), target, mult))
    return WalaCircuit(variant, tuple(gates))


def plaquette_operator(face: str) -> PauliString:
    return PauliString({e: "X" for e in face_edges(face)})


def vertex_operator(vertex: Tuple[int, int, int]) -> PauliString:
    return PauliString({e: "Z" for e in vertex_edges(vertex)})


def toric_code_state():
    """Exact toric-code stabilizer state on the cube: project |0..0> onto
    the +1 sector of five independent plaquettes."""
    import numpy as np

    from . import statevector as sv

    state = sv.product_state(cube_edges(), "zero")
    for face, _ in _ORDER[:5]:
        projected = sv.apply_pauli_string(state, plaquette_operator(face))
        state = sv.DenseState((state.amps + projected.amps) / math.sqrt(2.0),
                              state.sites)
    norm = np.linalg.norm(state.amps)
    state.amps /= norm
    return state


def z2_hamiltonian(x: float) -> PauliSum:
    """Single-cube gauge Hamiltonian
    ``-(1-x) sum_p Xp - x sum_l Z_l - sum_v Zv``."""
    if not 0.0 <= x <= 1.0:
        raise ValueError("field strength must lie in [0, 1]")
    terms: Dict[PauliString, float] = {}
    for face in _FACES:
        terms[plaquette_operator(face)] = -(1.0 - x)
    for edge in cube_edges():
        terms[PauliString({edge: "Z"})] = terms.get(PauliString({edge: "Z"}), 0.0) - x
    for vertex in cube_vertices():
        terms[vertex_operator(vertex)] = -1.0
    return PauliSum(terms)


def plaquette_scan(variant: str, thetas) -> List[dict]:
    """Statevector sweep of every plaquette expectation plus the worst-case
    vertex-operator deviation per angle."""
    from . import statevector as sv

    circuit = build_wala(variant)
    faces = sorted(_FACES)
    rows: List[dict] = []
    for theta in thetas:
        state = sv.run_circuit(circuit, theta)
        row: dict = {"theta": theta, "variant": variant}
        for face in faces:
            row[f"plaquette_{face}"] = sv.expectation(state, plaquette_operator(face))
        row["vertex_min"] = min(sv.expectation(state, vertex_operator(v))
                                for v in cube_vertices())
        rows.append(row)
    return rows
