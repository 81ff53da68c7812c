import math

import numpy as np
import pytest

from whiplab.vqe import (VqeResult, golden_section, minimize_angle,
                         tfim_circuit_energy, tfim_exact_energy, tfim_vqe,
                         worst_case_error, z2_circuit_energy, z2_exact_energy,
                         z2_vqe)
from whiplab.lattice import build_whip


def test_golden_section_on_cusped_function():
    theta, value = golden_section(lambda t: abs(t - 0.9) + 0.25, 0.0, 2.0)
    assert theta == pytest.approx(0.9, abs=1e-7)
    assert value == pytest.approx(0.25, abs=1e-7)


def test_minimize_angle_finds_global_minimum():
    def landscape(t):
        return math.cos(t) + 0.3 * math.cos(3 * t + 0.4)

    theta, value = minimize_angle(landscape)
    grid = np.linspace(-math.pi, math.pi, 20001)
    brute = min(landscape(t) for t in grid)
    assert value <= brute + 1e-9


def test_tfim_exact_energy_limits():
    # x = 0: -sum X_i ground energy is -N
    assert tfim_exact_energy(2, 0.0) == pytest.approx(-4.0, abs=1e-8)
    # x = 1: -sum ZZ ground energy is -|E|
    assert tfim_exact_energy(2, 1.0) == pytest.approx(-4.0, abs=1e-8)
    assert tfim_exact_energy(3, 1.0) == pytest.approx(-12.0, abs=1e-8)


def test_tfim_circuit_energy_matches_direct_expectation():
    circuit = build_whip(2, 2)
    cache = {}
    value = tfim_circuit_energy(circuit, 0.0, 0.0, cache)
    assert value == pytest.approx(-4.0, abs=1e-12)  # |+>^4 on -sum X
    value = tfim_circuit_energy(circuit, 1.0, -math.pi / 4, cache)
    assert value == pytest.approx(-4.0, abs=1e-12)  # GHZ on -sum ZZ


def test_tfim_vqe_endpoints_small_lattice():
    results = tfim_vqe(L=2, ansatz="with_pt", x_grid=[0.0, 1.0])
    for res in results:
        assert res.rel_error < 1e-8
        assert res.e_vqe >= res.e_exact - 1e-9
    results = tfim_vqe(L=2, ansatz="without_pt", x_grid=[0.0, 1.0])
    for res in results:
        assert res.rel_error < 1e-8


def test_z2_vqe_endpoints():
    for ansatz in ("with_pt", "without_pt"):
        results = z2_vqe(ansatz, x_grid=[0.0, 1.0])
        for res in results:
            assert res.rel_error < 1e-8
            assert res.e_vqe >= res.e_exact - 1e-9
        # toric point and vacuum point
        assert results[0].theta_star == pytest.approx(math.pi / 4, abs=1e-4) or \
            math.isclose(abs(z2_circuit_energy(ansatz, 0.0, results[0].theta_star)),
                         abs(results[0].e_exact), rel_tol=1e-8)
        assert abs(z2_circuit_energy(ansatz, 1.0, 0.0) - results[-1].e_exact) < 1e-8


def test_z2_exact_energy_values():
    # x = 0: all six plaquettes satisfied -> -6 on the x-dependent part
    assert z2_exact_energy(0.0) == pytest.approx(-6.0, abs=1e-8)
    # x = 1: all links down -> -12
    assert z2_exact_energy(1.0) == pytest.approx(-12.0, abs=1e-8)


def test_variational_bound_random_points():
    rng = np.random.default_rng(0)
    for x in rng.uniform(0, 1, 3):
        e0 = z2_exact_energy(float(x))
        for ansatz in ("with_pt", "without_pt"):
            for theta in rng.uniform(-math.pi, math.pi, 3):
                assert z2_circuit_energy(ansatz, float(x), float(theta)) >= e0 - 1e-9


def test_vqe_result_fields():
    res = VqeResult(0.5, 0.1, -9.9, -10.0, "with_pt")
    assert res.rel_error == pytest.approx(0.01)
    assert worst_case_error([res, VqeResult(0.1, 0.0, -9.0, -10.0, "with_pt")]) \
        == pytest.approx(0.1)
