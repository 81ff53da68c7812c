import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from whiplab.lattice import ZYGate
from whiplab.pauli import (PauliString, PauliSum, anticommutes, commutes,
                           conjugate, conjugate_by_generator, evaluate_on_plus,
                           evaluate_on_zero, multiply, pauli)

from fractions import Fraction

SITES = [(0,), (1,), (2,)]

I2 = np.eye(2, dtype=complex)
MATS = {
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def dense(string: PauliString, sites=SITES) -> np.ndarray:
    out = np.array([[1.0 + 0j]])
    letters = string.letters
    for site in sites:
        out = np.kron(out, MATS.get(letters.get(site, "I"), I2) if site in letters else I2)
    return string.phase * out


def dense_sum(ps: PauliSum, sites=SITES) -> np.ndarray:
    dim = 1 << len(sites)
    out = np.zeros((dim, dim), dtype=complex)
    for string, coeff in ps.items():
        out += coeff * dense(string, sites)
    return out


letters_strategy = st.dictionaries(
    st.sampled_from(SITES), st.sampled_from(["X", "Y", "Z"]), max_size=3)


def test_single_site_products():
    y = pauli({(7,): "Y"})
    z = pauli({(7,): "Z"})
    prod = multiply(y, z)
    assert prod.letters == {(7,): "X"}
    assert prod.phase == 1j  # Y Z = iX

    x = pauli({(3,): "X"})
    assert multiply(x, x).is_identity()
    assert multiply(x, x).phase == 1


@given(letters_strategy, letters_strategy)
@settings(max_examples=150, deadline=None)
def test_multiply_matches_dense(a_letters, b_letters):
    a, b = PauliString(a_letters), PauliString(b_letters)
    got = dense(multiply(a, b))
    want = dense(a) @ dense(b)
    assert np.allclose(got, want, atol=1e-12)


@given(letters_strategy, letters_strategy)
@settings(max_examples=150, deadline=None)
def test_commutes_matches_dense(a_letters, b_letters):
    a, b = PauliString(a_letters), PauliString(b_letters)
    comm = dense(a) @ dense(b) - dense(b) @ dense(a)
    assert commutes(a, b) == bool(np.allclose(comm, 0, atol=1e-12))


def test_evaluate_on_plus():
    assert evaluate_on_plus(pauli({(3,): "X", (7,): "X"})) == 1
    assert evaluate_on_plus(pauli({(3,): "Z"})) == 0
    assert evaluate_on_plus(PauliString()) == 1
    assert evaluate_on_plus(pauli({(0,): "X"}, phase_k=2)) == -1
    with pytest.raises(ValueError):
        evaluate_on_plus(pauli({(0,): "X"}, phase_k=1))


def test_evaluate_on_zero():
    assert evaluate_on_zero(pauli({(1,): "Z", (2,): "Z"})) == 1
    assert evaluate_on_zero(pauli({(1,): "X"})) == 0
    assert evaluate_on_zero(pauli({(1,): "Z"}, phase_k=2)) == -1


def test_pauli_sum_folds_phases_and_prunes():
    s = PauliSum({pauli({(0,): "Z"}, phase_k=2): 2.0, pauli({(0,): "Z"}): 2.0})
    assert len(s) == 0  # -2 + 2 cancels
    with pytest.raises(ValueError):
        PauliSum({pauli({(0,): "Z"}, phase_k=1): 1.0})


def test_conjugate_two_bulk_gates_closed_form():
    """Conjugating a single Z by the two half-angle gates that target it.

    The dense 8x8 oracle fixes all four coefficients, in particular the
    negative sign of the three-Z term.
    """
    theta = 0.7
    start = PauliSum.single(pauli({(0,): "Z"}))
    g1 = pauli({(0,): "Y", (1,): "Z"})
    g2 = pauli({(0,): "Y", (2,): "Z"})
    out = conjugate_by_generator(conjugate_by_generator(start, g2, theta), g1, theta)
    c, s = math.cos(theta), math.sin(theta)
    assert out.coeff(pauli({(0,): "Z"})) == pytest.approx(c * c, abs=1e-15)
    assert out.coeff(pauli({(0,): "X", (1,): "Z"})) == pytest.approx(-c * s, abs=1e-15)
    assert out.coeff(pauli({(0,): "X", (2,): "Z"})) == pytest.approx(-c * s, abs=1e-15)
    assert out.coeff(pauli({(0,): "Z", (1,): "Z", (2,): "Z"})) == pytest.approx(-s * s, abs=1e-15)


def test_conjugate_commuting_and_zero_angle():
    term = PauliSum.single(pauli({(0,): "Z", (1,): "Z"}))
    gen = pauli({(2,): "Y", (0,): "Z"})  # commutes with the term
    assert conjugate_by_generator(term, gen, 0.9) is not None
    out = conjugate_by_generator(term, gen, 0.9)
    assert out.coeff(pauli({(0,): "Z", (1,): "Z"})) == 1.0
    assert len(out) == 1
    same = conjugate_by_generator(term, pauli({(0,): "Y", (1,): "Z"}), 0.0)
    assert same.coeff(pauli({(0,): "Z", (1,): "Z"})) == 1.0


def _random_sum(rng) -> PauliSum:
    terms = {}
    for _ in range(rng.integers(1, 5)):
        letters = {s: rng.choice(["X", "Y", "Z"]) for s in SITES
                   if rng.random() < 0.7}
        terms[PauliString(letters)] = float(rng.normal())
    return PauliSum(terms)


def test_conjugate_oracle_equivalence():
    """Sparse conjugation agrees with dense 8x8 matrix conjugation on 100
    random (sum, gate, angle) triples."""
    import scipy.linalg

    rng = np.random.default_rng(42)
    for _ in range(100):
        sum_ = _random_sum(rng)
        control, target = rng.choice(3, size=2, replace=False)
        gate = ZYGate(SITES[control], SITES[target],
                      Fraction(rng.integers(1, 4), rng.integers(1, 3)))
        theta = float(rng.uniform(-math.pi, math.pi))
        got = dense_sum(conjugate(sum_, gate, theta))
        gen = dense(pauli({gate.control: "Z", gate.target: "Y"}))
        u = scipy.linalg.expm(-1j * gate.angle(theta) / 2 * gen)
        want = u.conj().T @ dense_sum(sum_) @ u
        assert np.allclose(got, want, atol=1e-12)


def test_norm_conservation_and_involution():
    rng = np.random.default_rng(7)
    sum_ = _random_sum(rng)
    norm = sum_.norm_sq()
    gates = [ZYGate(SITES[0], SITES[1], Fraction(1)),
             ZYGate(SITES[1], SITES[2], Fraction(2)),
             ZYGate(SITES[2], SITES[0], Fraction(3, 2))]
    current = sum_
    for gate in gates:
        current = conjugate(current, gate, 0.43)
        assert current.norm_sq() == pytest.approx(norm, abs=1e-12)
    for gate in reversed(gates):
        current = conjugate(current, gate, -0.43)
    for string, coeff in sum_.items():
        assert current.coeff(string) == pytest.approx(coeff, abs=1e-12)


def test_deterministic_iteration_order():
    s = PauliSum({pauli({(2,): "X"}): 1.0, pauli({(0,): "Z"}): 2.0,
                  pauli({(1,): "Y"}): 3.0})
    keys = [p for p, _ in s.items()]
    assert keys == sorted(keys)
