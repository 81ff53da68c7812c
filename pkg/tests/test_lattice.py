from fractions import Fraction

import pytest

from whiplab.lattice import (ZYGate, boundary_sites, build_cycle, build_whip,
                             build_whip_no_pt, lower_boundary_sites,
                             serialize_circuit)
from whiplab.pauli import PauliString, commutes


def test_chain_gates():
    c = build_whip(1, 4)
    assert len(c.gates) == 3
    assert all(g.multiplier == 1 for g in c.gates)
    assert c.source() == (0,)
    assert c.sink() == (3,)


def test_2x2_multipliers():
    c = build_whip(2, 2)
    mults = sorted(g.multiplier for g in c.gates)
    assert mults == [1, 1, 2, 2]
    # the two half-angle gates both target the sink
    sink = c.sink()
    assert all(g.target == sink for g in c.gates if g.multiplier == 1)


def test_edge_counts():
    assert len(build_whip(2, 4).gates) == 24  # 2L(L-1)
    for d in (1, 2, 3):
        for L in range(2, 7):
            if d == 3 and L > 4:
                continue
            c = build_whip(d, L)
            assert len(c.gates) == d * (L - 1) * L ** (d - 1)


def test_dag_single_source_single_sink():
    for d in (1, 2, 3):
        for L in (2, 3, 4):
            c = build_whip(d, L)
            assert c.source() == (0,) * d
            assert c.sink() == (L - 1,) * d
            for site in c.sites:
                indeg = c.in_degree(site)
                expected = sum(1 for v in site if v > 0)
                assert indeg == expected
                if indeg:
                    gates = [g for g in c.gates if g.target == site]
                    assert all(g.multiplier == Fraction(d, indeg) for g in gates)


def test_layers_commute():
    for circuit in (build_whip(2, 3), build_whip(3, 2), build_whip_no_pt(3),
                    build_cycle(6, "bipolar")):
        for layer in circuit.layers:
            gens = [PauliString({circuit.gates[i].control: "Z",
                                 circuit.gates[i].target: "Y"}) for i in layer]
            for i in range(len(gens)):
                for j in range(i + 1, len(gens)):
                    assert commutes(gens[i], gens[j])
            # no target collides with another gate's control inside a layer
            targets = {circuit.gates[i].target for i in layer}
            controls = {circuit.gates[i].control for i in layer}
            assert not targets & controls


def test_gate_order_is_layer_major():
    c = build_whip(2, 3)
    position = {idx: n for n, idx in enumerate(
        i for layer in c.layers for i in layer)}
    assert list(position) == sorted(position)  # gates listed in layer order


def test_cycle_uniform():
    c = build_cycle(8)
    assert len(c.gates) == 8
    assert all(g.multiplier == 1 for g in c.gates)
    # seam: first control equals last target
    assert c.gates[0].control == c.gates[-1].target
    tri = build_cycle(3)
    assert len(tri.gates) == 3


def test_cycle_bipolar():
    c = build_cycle(8, "bipolar")
    mults = sorted(g.multiplier for g in c.gates)
    assert mults == [1, 1] + [2] * 6
    sink = c.sink()
    assert sink == (4,)
    assert [g.target for g in c.gates if g.multiplier == 1] == [sink, sink]
    assert c.source() == (0,)


def test_no_pt_tree():
    for L in (2, 3, 4):
        c = build_whip_no_pt(L)
        assert len(c.gates) == L * L - 1
        assert all(g.multiplier == 2 for g in c.gates)
        for site in c.sites:
            assert c.in_degree(site) == (0 if site == (0, 0) else 1)
    # spanning: every site reachable from the source
    c = build_whip_no_pt(4)
    reached = {(0, 0)}
    for g in c.gates:
        assert g.control in reached
        reached.add(g.target)
    assert reached == set(c.sites)


def test_build_errors():
    with pytest.raises(ValueError):
        build_whip(0, 3)
    with pytest.raises(ValueError):
        build_whip(2, 1)
    with pytest.raises(ValueError):
        build_cycle(2)
    with pytest.raises(ValueError):
        build_cycle(5, "spiral")
    with pytest.raises(ValueError):
        build_whip_no_pt(1)
    with pytest.raises(ValueError):
        ZYGate((0, 0), (0, 0), Fraction(1))
    with pytest.raises(ValueError):
        ZYGate((0, 0), (0, 1), Fraction(-1))


def test_serialization_format():
    text = serialize_circuit(build_whip(2, 2))
    lines = text.strip().splitlines()
    assert len(lines) == 4
    assert lines[0].split() == ["0", "0,0", "0,1", "2/1"]
    layer, control, target, mult = lines[-1].split()
    assert mult == "1/1"
    assert target == "1,1"


def test_boundary_site_sets():
    b = boundary_sites(3)
    assert len(b) == 6
    assert (0, 0) not in b and (2, 2) not in b
    assert (0, 2) in b and (2, 0) in b
    lower = lower_boundary_sites(4)
    assert len(lower) == 6  # 2L-2
    assert (3, 3) not in lower
    assert all(x == 3 or y == 3 for x, y in lower)
