import numpy as np
import pytest

from cdelab import dynamics
from cdelab.errors import NonConjugatePair

from conftest import random_states

SQRT2 = np.sqrt(2.0)


def test_hamiltonian_pinned_values():
    assert dynamics.hamiltonian(np.zeros(4)) == 0.0
    assert dynamics.hamiltonian(dynamics.P_PLUS) == -0.125
    assert dynamics.hamiltonian(dynamics.P_MINUS) == -0.125
    assert dynamics.hamiltonian(np.array([0.0, 1.0, 0.0, 0.0])) == 0.5


def test_two_energy_forms_agree_to_4ulp():
    s = random_states(10_000, seed=1, scale=2.0)
    h1 = dynamics.hamiltonian(s)
    h2 = dynamics.hamiltonian_grouped(s)
    u, v, a, b = s
    # bound the rounding by the magnitude of the terms entering either form
    scale = (0.5 * v * v + 0.5 * u * u * (a * a + b * b + 0.25) + np.abs(a * b)
             + 0.5 * (np.abs(u * u - 1.0)) * (a * a + b * b + 0.25)
             + 0.5 * ((a - b) ** 2 + 0.25))
    assert np.all(np.abs(h1 - h2) <= 4.0 * np.finfo(float).eps * scale)


def test_vector_field_pinned_values():
    # P0 is exactly representable; for P+/- the components 1/(2 sqrt 2) round,
    # leaving the field at the rounding floor of a^2 + b^2 - 1/4
    assert np.array_equal(dynamics.vector_field(np.zeros(4)), np.zeros(4))
    assert np.linalg.norm(dynamics.vector_field(dynamics.P_PLUS)) <= 1e-15
    np.testing.assert_allclose(dynamics.vector_field(np.array([1.0, 0, 0, 0])),
                               [0.0, 0.25, 0.0, 0.0], rtol=0, atol=0)


def test_vector_field_is_symplectic_gradient():
    # f = (dH/dv, -dH/du, dH/db, -dH/da), checked by central differences
    s = random_states(100, seed=2)
    h = 1e-5
    f = dynamics.vector_field(s)

    def dH(i):
        e = np.zeros((4, 1))
        e[i] = h
        return (dynamics.hamiltonian(s + e) - dynamics.hamiltonian(s - e)) / (2 * h)

    expected = np.stack([dH(1), -dH(0), dH(3), -dH(2)])
    err = np.abs(f - expected) / np.maximum(1.0, np.abs(expected))
    assert err.max() <= 1e-6


def test_rotation_pinned_and_roundtrip():
    np.testing.assert_allclose(dynamics.to_rotated(dynamics.P_PLUS),
                               [1.0, 0.0, 0.5, 0.0], rtol=0, atol=1e-16)
    assert np.array_equal(dynamics.to_rotated(np.zeros(4)), np.zeros(4))
    s = np.array([0.3, -0.1, 0.7, 0.2])
    np.testing.assert_allclose(dynamics.from_rotated(dynamics.to_rotated(s)), s,
                               rtol=0, atol=1e-15)


def test_rotated_vector_field_pinned_values():
    assert np.allclose(dynamics.rotated_vector_field(np.array([1.0, 0, 0.5, 0])),
                       np.zeros(4), atol=1e-16)
    np.testing.assert_allclose(
        dynamics.rotated_vector_field(np.array([1.0, 0.0, 0.0, 0.5])),
        [0.0, 0.0, -1.0, 0.0], rtol=0, atol=1e-16)


def test_rotation_conjugates_the_vector_fields():
    # the rotation is linear, so it is its own differential
    s = random_states(100, seed=3)
    lhs = dynamics.to_rotated(dynamics.vector_field(s))
    # the (u, v) slots of to_rotated are untouched, so this is the pushforward
    lhs[0], lhs[1] = dynamics.vector_field(s)[0], dynamics.vector_field(s)[1]
    rhs = dynamics.rotated_vector_field(dynamics.to_rotated(s))
    assert np.max(np.abs(lhs - rhs)) <= 1e-13


def test_rotated_hamiltonian_matches():
    r = np.array([1.0, 0.0, 0.5, 0.0])
    assert dynamics.hamiltonian_rotated(r) == -0.125
    assert dynamics.hamiltonian_rotated(np.zeros(4)) == 0.0
    rr = random_states(100, seed=4)
    np.testing.assert_allclose(dynamics.hamiltonian_rotated(rr),
                               dynamics.hamiltonian(dynamics.from_rotated(rr)),
                               rtol=0, atol=1e-14)


def test_time_reversal_swap():
    assert np.array_equal(dynamics.time_reversal_swap(dynamics.P_PLUS),
                          dynamics.P_PLUS)
    np.testing.assert_array_equal(
        dynamics.time_reversal_swap(np.array([1.0, 2.0, 3.0, 4.0])),
        [1.0, -2.0, 4.0, 3.0])
    # equivariance f(sigma s) = -sigma f(s)
    s = random_states(100, seed=5)
    lhs = dynamics.vector_field(dynamics.time_reversal_swap(s))
    rhs = -dynamics.time_reversal_swap(dynamics.vector_field(s))
    assert np.max(np.abs(lhs - rhs)) == 0.0


def test_spinor_view():
    p = dynamics.spinor_from_state(np.array([0.0, 0.0, 1.0, 0.0]))
    assert p.psi_plus == 1.0 and p.psi_minus == 1.0
    p = dynamics.spinor_from_state(np.array([0.0, 0.0, 0.0, 1.0]))
    assert p.psi_plus == 1j and p.psi_minus == -1j
    s = random_states(100, seed=6)
    for col in s.T:
        pair = dynamics.spinor_from_state(col)
        lhs = abs(pair.psi_plus) ** 2 + abs(pair.psi_minus) ** 2
        assert abs(lhs - 2.0 * (col[2] ** 2 + col[3] ** 2)) <= 1e-14
        back = dynamics.state_from_spinor(col[0], col[1], pair)
        np.testing.assert_array_equal(back, col)


def test_state_from_spinor_rejects_nonconjugate():
    with pytest.raises(NonConjugatePair):
        dynamics.state_from_spinor(0.0, 0.0,
                                   dynamics.SpinorPair(1.0 + 1j, 1.0 + 1j))


def test_equilibrium_catalog():
    cat = dynamics.equilibria()
    for _, point, energy in cat.items():
        assert np.linalg.norm(dynamics.vector_field(point)) <= 1e-15
    assert cat.energies == (0.0, -0.125, -0.125)
