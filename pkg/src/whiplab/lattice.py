"""Whip-circuit construction on d-dimensional lattice DAGs.

A whip circuit is an ordered list of two-qubit ZY rotations read off a
directed acyclic graph with a single source and a single sink.  Each gate is
``exp(-i (m theta / 2) Z_c Y_t)`` where the rational multiplier ``m`` equals
``d / indeg(t)`` on the square lattice: bulk targets of the 2-d lattice get
half-angle rotations (m = 1), targets on the two source-adjacent boundary
edges get full-angle ones (m = 2).

Gates are grouped into layers of mutually commuting rotations; on the square
lattice a layer collects all gates whose target sits on one coordinate-sum
diagonal, with the source at the all-zero corner.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

Site = Tuple[int, ...]


@dataclass(frozen=True)
class ZYGate:
    """Rotation exp(-i (multiplier * theta / 2) Z_control Y_target)."""
    control: Site
    target: Site
    multiplier: Fraction

    def __post_init__(self):
        if self.multiplier <= 0:
            raise ValueError("multiplier must be positive")
        if self.control == self.target:
            raise ValueError("control and target coincide")

    def angle(self, theta: float) -> float:
        return float(self.multiplier) * theta


@dataclass(frozen=True)
class WhipCircuit:
    """Ordered ZY-rotation list with a commuting-layer partition.

    ``layers`` holds indices into ``gates``; gates are applied in list order
    (layer by layer) to the ``initial_state`` product state.
    """
    kind: str                       # "whip" | "cycle" | "cycle-bipolar" | "whip-nopt"
    d: int
    shape: Tuple[int, ...]
    gates: Tuple[ZYGate, ...]
    layers: Tuple[Tuple[int, ...], ...]
    initial_state: str = "plus"

    @property
    def sites(self) -> Tuple[Site, ...]:
        """All lattice sites, sorted row-major."""
        if self.kind in ("cycle", "cycle-bipolar"):
            return tuple((i,) for i in range(self.shape[0]))
        return tuple(sorted(itertools.product(*(range(n) for n in self.shape))))

    @property
    def n_sites(self) -> int:
        out = 1
        for n in self.shape:
            out *= n
        return out

    def in_degree(self, site: Site) -> int:
        return sum(1 for g in self.gates if g.target == site)

    def source(self) -> Site:
        """The unique site that is never a gate target."""
        targets = {g.target for g in self.gates}
        sources = [s for s in self.sites if s not in targets]
        if len(sources) != 1:
            raise ValueError(f"circuit has {len(sources)} source sites")
        return sources[0]

    def sink(self) -> Site:
        """The unique site that is never a gate control."""
        controls = {g.control for g in self.gates}
        sinks = [s for s in self.sites if s not in controls]
        if len(sinks) != 1:
            raise ValueError(f"circuit has {len(sinks)} sink sites")
        return sinks[0]


def build_whip(d: int, L: int) -> WhipCircuit:
    """Square-lattice whip circuit in dimension ``d`` with side length ``L``.

    Each non-source site ``t`` is targeted by one gate per negative-axis
    neighbor, with multiplier ``d / indeg(t)``; layers follow the coordinate
    sum of the target, source at the all-zero corner.  Emits exactly
    ``d (L-1) L^(d-1)`` gates (the lattice edge count).
    """
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if L < 2:
        raise ValueError("side length must be >= 2")
    gates: List[ZYGate] = []
    layer_of: List[int] = []
    sites = sorted(itertools.product(*(range(L) for _ in range(d))))
    for target in sites:
        csum = sum(target)
        if csum == 0:
            continue
        controls = []
        for axis in range(d):
            if target[axis] > 0:
                control = list(target)
                control[axis] -= 1
                controls.append(tuple(control))
        mult = Fraction(d, len(controls))
        for control in sorted(controls):
            gates.append(ZYGate(control, target, mult))
            layer_of.append(csum)
    order = sorted(range(len(gates)), key=lambda i: (layer_of[i], gates[i].target, gates[i].control))
    gates = [gates[i] for i in order]
    layer_of = [layer_of[i] for i in order]
    layers = _group_layers(layer_of)
    return WhipCircuit("whip", d, (L,) * d, tuple(gates), layers)


def build_cycle(L: int, style: str = "uniform-half") -> WhipCircuit:
    """Closed-cycle ZY circuit on ``L`` sites.

    ``uniform-half``: gates ``i -> i+1 (mod L)`` applied sequentially around
    the cycle, all half-angle.  This is genuinely cyclic (no DAG source).

    ``bipolar``: a DAG orientation with the source at site 0 and the sink at
    ``L // 2``; both arcs run full-angle gates except the two half-angle ones
    meeting at the sink.
    """
    if L < 3:
        raise ValueError("cycle length must be >= 3")
    if style == "uniform-half":
        # seam at site L-1: it controls the first gate and is whipped last,
        # so the Eq-style closed form holds for the pair (L-2, L-1)
        gates = tuple(ZYGate(((L - 1 + i) % L,), ((L + i) % L,), Fraction(1))
                      for i in range(L))
        layers = tuple((i,) for i in range(L))
        return WhipCircuit("cycle", 1, (L,), gates, layers)
    if style == "bipolar":
        sink = L // 2
        gates: List[ZYGate] = []
        layer_of: List[int] = []
        for step in range(1, sink):
            gates.append(ZYGate((step - 1,), (step,), Fraction(2)))
            layer_of.append(step)
        for step in range(1, L - sink):
            gates.append(ZYGate(((L - step + 1) % L,), ((L - step) % L,), Fraction(2)))
            layer_of.append(step)
        gates.append(ZYGate((sink - 1,), (sink,), Fraction(1)))
        layer_of.append(max(sink, L - sink))
        gates.append(ZYGate(((sink + 1) % L,), (sink,), Fraction(1)))
        layer_of.append(max(sink, L - sink))
        order = sorted(range(len(gates)), key=lambda i: (layer_of[i], gates[i].target, gates[i].control))
        gates = [gates[i] for i in order]
        layers = _group_layers([layer_of[i] for i in order])
        return WhipCircuit("cycle-bipolar", 1, (L,), tuple(gates), layers)
    raise ValueError(f"unknown cycle style {style!r}")


def build_whip_no_pt(L: int) -> WhipCircuit:
    """Tree-subgraph whip variant on the L x L lattice, no phase transition.

    Comb tree: vertical spine ``(0,0) -> (1,0) -> ...`` plus horizontal teeth
    ``(x,0) -> (x,1) -> ...``; all ``L^2 - 1`` gates full-angle (indeg 1).
    """
    if L < 2:
        raise ValueError("side length must be >= 2")
    gates: List[ZYGate] = []
    layer_of: List[int] = []
    for x in range(1, L):
        gates.append(ZYGate((x - 1, 0), (x, 0), Fraction(2)))
        layer_of.append(x)
    for x in range(L):
        for y in range(1, L):
            gates.append(ZYGate((x, y - 1), (x, y), Fraction(2)))
            layer_of.append(x + y)
    order = sorted(range(len(gates)), key=lambda i: (layer_of[i], gates[i].target, gates[i].control))
    gates = [gates[i] for i in order]
    layers = _group_layers([layer_of[i] for i in order])
    return WhipCircuit("whip-nopt", 2, (L, L), tuple(gates), layers)


def _group_layers(layer_of: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    groups: Dict[int, List[int]] = {}
    for idx, layer in enumerate(layer_of):
        groups.setdefault(layer, []).append(idx)
    return tuple(tuple(groups[k]) for k in sorted(groups))


def serialize_circuit(circuit: WhipCircuit) -> str:
    """Line-oriented text format, one gate per line:

    ``layer control_coords target_coords mult_num/mult_den``
    with coordinates comma-joined, e.g. ``3 0,1 1,1 1/1``.
    """
    lines = []
    for layer_idx, layer in enumerate(circuit.layers):
        for gate_idx in layer:
            g = circuit.gates[gate_idx]
            lines.append("{} {} {} {}/{}".format(
                layer_idx,
                ",".join(map(str, g.control)),
                ",".join(map(str, g.target)),
                g.multiplier.numerator, g.multiplier.denominator))
    return "\n".join(lines) + "\n"


def boundary_sites(L: int) -> Tuple[Site, ...]:
    """The symmetry-operator site set: lattice boundary minus the source and
    sink corners.

    Bulk gates each contribute one boundary Z when the circuit parameter is
    shifted by pi; the per-site products cancel everywhere except on the
    boundary, and at the two diagonal corners nothing is left either (the
    source controls only full-angle gates, the sink is hit by two Y factors).
    """
    out = {(x, y) for x in range(L) for y in range(L)
           if x in (0, L - 1) or y in (0, L - 1)}
    out -= {(0, 0), (L - 1, L - 1)}
    return tuple(sorted(out))


def lower_boundary_sites(L: int) -> Tuple[Site, ...]:
    """The 2L-2 sink-adjacent boundary sites carrying the order parameter.

    These are the two lattice edges meeting at the sink corner
    ``(L-1, L-1)``, sink excluded.
    """
    sites = {(L - 1, y) for y in range(L - 1)} | {(x, L - 1) for x in range(L - 1)}
    return tuple(sorted(sites))
