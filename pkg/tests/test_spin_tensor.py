import itertools
import math

import numpy as np
import pytest
from hypothesis import given

from spingroup import (
    FourMomentum,
    RestSpinAxis,
    SpinTensor,
    basis,
    boost_spin_axis,
    generator,
    max_abs,
    momentum_boost,
    momentum_spin_contraction,
    pauli_lubanski,
    slash_spin_commutator,
    spin_operator,
    spin_tensor_by_conjugation,
)

from conftest import momenta, unit_vectors

I4 = np.eye(4)
Z = np.array([0.0, 0.0, 1.0])
X = np.array([1.0, 0.0, 0.0])


def test_four_momentum_on_shell():
    p = FourMomentum([0.3, -1.2, 2.0], 1.7)
    assert p.p0**2 - p.p @ p.p == pytest.approx(1.7**2, abs=1e-12)
    assert p.p0 >= p.m


def test_four_momentum_rejects_bad_mass():
    with pytest.raises(ValueError):
        FourMomentum([0, 0, 0], 0.0)
    with pytest.raises(ValueError):
        FourMomentum([0, 0], 1.0)


def test_rest_axis_validation():
    with pytest.raises(ValueError):
        RestSpinAxis([0, 0, 1.1])
    with pytest.raises(ValueError):
        RestSpinAxis.normalized([0, 0, 0])
    assert np.allclose(RestSpinAxis.normalized([0, 0, 3]).vec, Z)


def test_rest_frame_tensor():
    a = np.array([0.6, 0.0, -0.8])
    s = boost_spin_axis(FourMomentum.at_rest(), a)
    assert np.array_equal(s.s1, np.zeros(3))
    assert np.allclose(s.s2, a, atol=0)


def test_momentum_parallel_to_axis():
    for mag in (0.1, 1.0, 4.0):
        s = boost_spin_axis(FourMomentum(mag * Z), Z)
        assert max_abs(s.s1) == 0
        assert np.allclose(s.s2, Z, atol=1e-14)


def test_transverse_momentum():
    m = 2.0
    s = boost_spin_axis(FourMomentum(m * X, m), Z)
    assert np.allclose(s.s1, [0, -1, 0], atol=1e-15)
    assert np.allclose(s.s2, [0, 0, math.sqrt(2)], atol=1e-15)


def test_lower_tensor_layout():
    s = SpinTensor([1, 2, 3], [4, 5, 6])
    t = s.lower()
    assert np.array_equal(t, -t.T)
    assert (t[0, 1], t[0, 2], t[0, 3]) == (1, 2, 3)
    assert (t[2, 3], t[3, 1], t[1, 2]) == (4, 5, 6)


@given(momenta, unit_vectors)
def test_tensor_invariants(p, a):
    s = boost_spin_axis(p, a)
    assert abs(s.orthogonality()) <= 1e-10
    assert abs(s.invariant() - 1.0) <= 1e-10


def test_spin_operator_rest(gb):
    sig = spin_operator(boost_spin_axis(FourMomentum.at_rest(), Z), gb)
    assert max_abs(sig - 1j * gb.sigma[1, 2]) == 0
    assert np.allclose(np.sort(np.linalg.eigvals(sig).real), [-1, -1, 1, 1])


@given(momenta, unit_vectors)
def test_spin_operator_squares_to_one(p, a):
    sig = spin_operator(boost_spin_axis(p, a))
    assert max_abs(sig @ sig - I4) <= 1e-10
    assert max_abs(generator(boost_spin_axis(p, a)) @ generator(boost_spin_axis(p, a)) + I4) <= 1e-10


def test_spin_operator_spectrum(rng):
    for _ in range(20):
        p = FourMomentum(rng.uniform(-3, 3, 3))
        a = rng.standard_normal(3)
        sig = spin_operator(boost_spin_axis(p, a / np.linalg.norm(a)))
        ev = np.sort(np.linalg.eigvals(sig).real)
        assert np.allclose(ev, [-1, -1, 1, 1], atol=1e-9)


def test_momentum_boost():
    n, b = momentum_boost(FourMomentum(np.zeros(3)))
    assert b == 0.0 and np.linalg.norm(n) == 1.0
    n, b = momentum_boost(FourMomentum([0, 3.0, 4.0]))
    assert np.allclose(n, [0, 0.6, 0.8])
    assert math.tanh(2 * b) == pytest.approx(5 / math.sqrt(26), abs=1e-15)


def test_conjugation_at_rest(gb):
    got = spin_tensor_by_conjugation(FourMomentum.at_rest(), Z, gb)
    assert max_abs(got - 1j * gb.sigma[1, 2]) <= 1e-15


def test_conjugation_transverse(gb):
    p = FourMomentum(X)
    formula = spin_operator(boost_spin_axis(p, Z), gb)
    assert max_abs(formula - spin_tensor_by_conjugation(p, Z, gb)) <= 1e-9


@given(momenta, unit_vectors)
def test_conjugation_matches_formula(p, a):
    gb = basis()
    assert max_abs(spin_operator(boost_spin_axis(p, a), gb) - spin_tensor_by_conjugation(p, a, gb)) <= 1e-9


# ---- Pauli-Lubanski


def _perm_sign(perm):
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def _pl_brute(p4, t):
    g = np.diag([1.0, -1, -1, -1])
    p_low = g @ p4
    lam = np.zeros(4)
    for perm in itertools.permutations(range(4)):
        a, b, mu, nu = perm
        lam[a] += _perm_sign(perm) * p_low[b] * t[mu, nu]
    return lam


def test_pauli_lubanski_rest_value():
    m = 1.5
    p = FourMomentum.at_rest(m)
    lam = pauli_lubanski(p, boost_spin_axis(p, Z))
    assert lam[0] == 0.0
    assert np.allclose(lam, [0, 0, 0, -2 * m], atol=1e-15)


def test_pauli_lubanski_matches_brute_force(rng):
    for _ in range(10):
        p = FourMomentum(rng.uniform(-2, 2, 3))
        a = rng.standard_normal(3)
        s = boost_spin_axis(p, a / np.linalg.norm(a))
        assert max_abs(pauli_lubanski(p, s) - _pl_brute(p.four_vector(), s.lower())) <= 1e-12


@given(momenta, unit_vectors)
def test_pauli_lubanski_orthogonal_and_invariant(p, a):
    g = np.diag([1.0, -1, -1, -1])
    lam = pauli_lubanski(p, boost_spin_axis(p, a))
    assert abs(p.four_vector() @ g @ lam) <= 1e-10
    rest = FourMomentum.at_rest()
    lam0 = pauli_lubanski(rest, boost_spin_axis(rest, a))
    assert abs(lam @ g @ lam - lam0 @ g @ lam0) <= 1e-9


# ---- momentum / spin contraction


def test_contraction_rest():
    p = FourMomentum.at_rest()
    assert max_abs(momentum_spin_contraction(p, boost_spin_axis(p, Z))) == 0


@given(momenta, unit_vectors)
def test_contraction_vanishes(p, a):
    s = boost_spin_axis(p, a)
    assert max_abs(momentum_spin_contraction(p, s)) <= 1e-10
    assert max_abs(slash_spin_commutator(p, s)) <= 1e-10


def test_contraction_mismatched_momentum(rng):
    for _ in range(20):
        p = FourMomentum(rng.uniform(-3, 3, 3))
        a = rng.standard_normal(3)
        s = boost_spin_axis(p, a / np.linalg.norm(a))
        shifted = FourMomentum(p.p + X)
        assert max_abs(momentum_spin_contraction(shifted, s)) > 1e-2


def test_commutator_proportional_to_contraction(rng):
    # [p.gamma, s.sigma/2] = 2 p^a s_ab gamma^b for an arbitrary antisymmetric s
    p = FourMomentum(rng.uniform(-2, 2, 3))
    s = SpinTensor(rng.standard_normal(3), rng.standard_normal(3))
    comm = slash_spin_commutator(p, s)
    contr = momentum_spin_contraction(p, s)
    assert max_abs(comm - 2 * contr) <= 1e-12
