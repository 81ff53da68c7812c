import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from whiplab import analytic as an
from whiplab import statevector as sv
from whiplab.lattice import build_cycle, build_whip_no_pt
from whiplab.pauli import PauliString, PauliSum


@given(st.floats(-50.0, 50.0))
@settings(max_examples=200, deadline=None)
def test_canonical_angle_idempotent(theta):
    folded = an.canonical_angle(theta)
    assert -math.pi < folded <= math.pi
    assert an.canonical_angle(folded) == folded


def test_zz_closed_form_values():
    assert an.zz_closed_form(-math.pi / 4) == pytest.approx(1.0)
    assert an.zz_closed_form(math.pi / 4) == pytest.approx(-1.0)
    assert an.zz_closed_form(0.0) == 0.0
    assert an.zz_closed_form(math.pi / 2) == pytest.approx(0.0, abs=1e-15)
    assert an.zz_closed_form(math.pi / 8) == pytest.approx(1 - math.sqrt(2), abs=1e-12)
    # regular form equals the raw quotient away from the removable points
    for theta in (0.3, -0.7, 1.2):
        raw = (abs(math.cos(2 * theta)) - 1) / math.sin(2 * theta)
        assert an.zz_closed_form(theta) == pytest.approx(raw, abs=1e-14)


def test_energy_density_2d():
    assert an.energy_density_2d(-math.pi / 4) == pytest.approx(-1.0)
    assert an.energy_density_2d(0.0) == 0.0
    # at +pi/4 the state is the staggered GHZ, the top of this Hamiltonian
    assert an.energy_density_2d(math.pi / 4) == pytest.approx(1.0)
    assert an.energy_density_2d(0.6 + math.pi) == pytest.approx(
        an.energy_density_2d(0.6), abs=1e-14)


def test_zz_series():
    assert an.zz_series(0.4, 1) == pytest.approx(-math.sin(0.4) * math.cos(0.4))
    assert an.zz_series(-math.pi / 4, 1) == pytest.approx(0.5)
    assert an.zz_series(0.3, 200) == pytest.approx(an.zz_closed_form(0.3), abs=1e-10)
    with pytest.raises(ValueError):
        an.zz_series(0.3, 0)


def test_series_converges_where_contractive():
    for theta in np.linspace(-1.5, 1.5, 31):
        if abs(math.sin(2 * theta)) <= 0.98:
            assert abs(an.zz_series(theta, 10_000)
                       - an.zz_closed_form(theta)) < 1e-8


def test_lgv_counts():
    assert an.lgv_count(1, 1) == 1
    assert an.lgv_count(2, 2) == 3
    assert an.lgv_count(2, 1) == 1
    for l in range(1, 6):
        for w in range(1, 6):
            assert an.lgv_count(l, w) == an.brute_force_lgv(l, w)
            n = l + w
            rational = l * w * math.comb(n, l) ** 2 / ((n - 1) * n * n)
            assert an.lgv_count(l, w) == pytest.approx(rational)
    with pytest.raises(ValueError):
        an.lgv_count(0, 1)


def test_cycle_count_layer():
    assert [an.cycle_count_layer(k) for k in (1, 2, 3, 4)] == [1, 1, 2, 5]
    for layer in range(2, 8):
        brute = sum(an.brute_force_lgv(layer - w, w) for w in range(1, layer))
        assert an.cycle_count_layer(layer) == brute
    for layer in range(1, 41):
        exact = an.cycle_count_layer(layer)
        assert abs(an.cycle_count_layer_gamma(layer) - exact) / exact < 1e-9


def test_asymptotic_cycle_ratio():
    assert abs(an.asymptotic_cycle_ratio(20) - 1) < 0.1
    assert abs(an.asymptotic_cycle_ratio(100) - 1) < 0.02
    assert an.asymptotic_cycle_ratio(2) > 0
    with pytest.raises(ValueError):
        an.asymptotic_cycle_ratio(1)


def test_cycle_expectation():
    theta = math.pi / 6
    assert an.cycle_expectation(theta, 8) == pytest.approx(-0.43978, abs=5e-6)
    assert an.cycle_expectation(0.0, 5) == 0.0
    assert an.cycle_expectation(-math.pi / 2, 8) == pytest.approx(0.0, abs=1e-15)
    with pytest.raises(ValueError):
        an.cycle_expectation(0.3, 2)


def test_energy_1d():
    assert an.energy_1d(0.9, 7, "obc") == pytest.approx(-6 * math.sin(0.9))
    assert an.energy_1d(-math.pi / 4, 8, "pbc", coupling=-1) == pytest.approx(-8.0)
    assert an.energy_1d(0.0, 9, "pbc") == 0.0
    with pytest.raises(ValueError):
        an.energy_1d(0.1, 1, "obc")
    with pytest.raises(ValueError):
        an.energy_1d(0.1, 4, "torus")


def test_energy_1d_pbc_matches_statevector():
    L = 8
    circuit = build_cycle(L, "bipolar")
    ham = PauliSum({PauliString({(i,): "Z", ((i + 1) % L,): "Z"}): 1.0
                    for i in range(L)})
    for theta in (0.3, -0.9, 1.7):
        reference = sv.expectation(sv.run_circuit(circuit, theta), ham)
        assert an.energy_1d(theta, L, "pbc") == pytest.approx(reference, abs=1e-12)


def test_entropy_1d_obc():
    s0, spec0 = an.entropy_1d_obc(0.0)
    assert s0 == 0.0 and spec0 == (1.0, 0.0)
    s1, spec1 = an.entropy_1d_obc(math.pi / 2)
    assert s1 == pytest.approx(math.log(2))
    assert spec1[0] == pytest.approx(0.5) and spec1[1] == pytest.approx(0.5)
    s2, _ = an.entropy_1d_obc(math.pi / 3)
    assert s2 == pytest.approx(-0.75 * math.log(0.75) - 0.25 * math.log(0.25))
    assert s2 == pytest.approx(0.56233, abs=1e-5)


def test_correlation_closed_form():
    assert an.correlation_closed_form(-math.pi / 4, 3) == pytest.approx(1.0)
    assert an.correlation_closed_form(0.77, 0) == 1.0
    assert an.correlation_closed_form(math.pi / 8, 1) == pytest.approx(0.171573, abs=1e-6)
    for theta in np.linspace(-3, 3, 61):
        assert an.correlation_closed_form(theta, 1) == pytest.approx(
            an.zz_closed_form(theta) ** 2, abs=1e-14)
        assert an.correlation_closed_form(theta, 4) == pytest.approx(
            an.correlation_closed_form(theta, 1) ** 4, abs=1e-14)


def test_correlation_path_count():
    for d in (1, 2, 3):
        assert an.correlation_path_count(d, 0, 0) == 1
        for w in range(4):
            for l in range(4):
                assert an.correlation_path_count(d, w, l) == \
                    an.brute_force_correlation_count(d, w, l)
    # d=1 reduces to the rectangle-cycle family: the layer sums agree with
    # the nearest-neighbor cycle counts shifted by the entry layer
    for h in range(6):
        assert an.correlation_layer_sum(1, h) == an.cycle_count_layer(h + 2) \
            if h > 0 else an.correlation_layer_sum(1, 0) == 1
    with pytest.raises(ValueError):
        an.correlation_path_count(0, 1, 1)


def test_correlation_length():
    assert an.correlation_length(math.pi / 4) == math.inf
    assert an.inverse_correlation_length(math.pi / 4 + 0.1) == pytest.approx(
        0.2013468, abs=1e-6)
    ratios = [an.inverse_correlation_length(math.pi / 4 + phi) / phi
              for phi in (1e-3, 1e-4)]
    assert ratios[0] == pytest.approx(2.0, abs=1e-5)
    assert ratios[1] == pytest.approx(2.0, abs=1e-7)
    with pytest.raises(ValueError):
        an.inverse_correlation_length(math.pi / 4 + 1.0)


def test_order_parameter():
    assert an.order_parameter_closed_form(0.0) == 1.0
    for theta in np.linspace(math.pi / 4, 3 * math.pi / 4, 21):
        assert an.order_parameter_closed_form(theta) == pytest.approx(0.0, abs=1e-15)
    assert an.order_parameter_closed_form(math.pi / 8) == pytest.approx(
        0.765367, abs=1e-6)
    assert an.order_parameter_closed_form(math.pi / 2) == 0.0
    for theta in np.linspace(-math.pi, math.pi, 1000):
        assert an.order_parameter_closed_form(theta) == pytest.approx(
            an.order_parameter_decomposed(theta), abs=1e-12)


def test_energy_density_no_pt():
    for L in (2, 3, 5):
        assert an.energy_density_no_pt(-math.pi / 4, L) == pytest.approx(-1.0)
        assert an.energy_density_no_pt(0.0, L) == 0.0
    # limit value away from the special angles
    assert an.energy_density_no_pt(0.3, 4000) == pytest.approx(
        math.sin(0.6) / 2, abs=1e-3)
    with pytest.raises(ValueError):
        an.energy_density_no_pt(0.3, 1)


def test_energy_density_no_pt_matches_statevector():
    for L in (2, 3):
        circuit = build_whip_no_pt(L)
        edges = [(a, b) for a in circuit.sites for b in circuit.sites
                 if a < b and sum(abs(i - j) for i, j in zip(a, b)) == 1]
        ham = PauliSum({PauliString({a: "Z", b: "Z"}): 1.0
                        for a, b in edges}).scaled(-1.0 / len(edges))
        for theta in (0.7, -0.4, 2.2):
            reference = sv.expectation(sv.run_circuit(circuit, theta), ham)
            assert an.energy_density_no_pt(theta, L) == pytest.approx(
                reference, abs=1e-12)


def test_wala_plaquette_no_pt():
    assert an.wala_plaquette_no_pt(math.pi / 4, 1) == pytest.approx(1.0)
    assert an.wala_plaquette_no_pt(0.0, 1) == 0.0
    assert an.wala_plaquette_no_pt(0.3, 1) == pytest.approx(math.sin(0.6) ** 5)
    assert an.wala_plaquette_no_pt(0.3, 2) == pytest.approx(math.sin(0.6) ** 9)
    with pytest.raises(ValueError):
        an.wala_plaquette_no_pt(0.3, 0)


def test_truncation_error_model():
    assert an.truncation_error_model(math.pi / 4, 64) == pytest.approx(1 / 8)
    fixed = [an.truncation_error_model(0.3, c) for c in (50, 100, 200)]
    assert fixed[0] > fixed[1] > fixed[2]
    assert fixed[2] / fixed[1] < fixed[1] / fixed[0] * 1.001  # exponential-ish
    assert an.truncation_error_model(0.0, 10) == 0.0
    assert an.truncation_error_model(0.3, 1) > 0.0


def test_zz_derivative_one_sided_jump():
    eps = 1e-9
    left = an.zz_derivative(math.pi / 4 - eps)
    right = an.zz_derivative(math.pi / 4 + eps)
    assert right - left == pytest.approx(4.0, abs=1e-6)


def test_continuity_off_cusps():
    # jump across a 1e-8 window stays tiny everywhere off the cusp points
    cusps = [an.canonical_angle(math.pi / 4 + m * math.pi / 2) for m in range(-3, 4)]
    half = 5e-9
    for fn in (an.zz_closed_form, an.order_parameter_closed_form):
        for center in np.linspace(-math.pi, math.pi, 4001):
            if min(abs(center - c) for c in cusps) < 1e-6:
                continue
            assert abs(fn(center + half) - fn(center - half)) < 1e-6
