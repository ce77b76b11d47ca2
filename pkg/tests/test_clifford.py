import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from spingroup import (
    ConvergenceError,
    beta_from_half_rapidity,
    exp_boost_closed,
    exp_rotation_closed,
    exp_series,
    half_rapidity_from_beta,
    max_abs,
    slash,
    vector_rep,
)

from conftest import angles, unit_vectors

I4 = np.eye(4)
G = np.diag([1.0, -1.0, -1.0, -1.0])


def test_gamma0_is_diagonal(gb):
    assert np.array_equal(gb.gamma[0], np.diag([1, 1, -1, -1]))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_spatial_gammas_square_to_minus_one(gb, k):
    assert max_abs(gb.gamma[k] @ gb.gamma[k] + I4) == 0.0


def test_sigma12(gb):
    # from the stored gammas directly, not from gb.sigma
    expected = 0.5 * (gb.gamma[1] @ gb.gamma[2] - gb.gamma[2] @ gb.gamma[1])
    assert max_abs(expected - (-1j) * np.diag([1, -1, 1, -1])) == 0.0
    assert max_abs(gb.sigma[1, 2] - expected) == 0.0


def test_anticommutation(gb):
    for a in range(4):
        for b in range(4):
            anti = gb.gamma[a] @ gb.gamma[b] + gb.gamma[b] @ gb.gamma[a]
            assert max_abs(anti - 2 * G[a, b] * I4) <= 1e-12


def test_hermiticity(gb):
    assert max_abs(gb.gamma[0].conj().T - gb.gamma[0]) == 0
    for k in (1, 2, 3):
        assert max_abs(gb.gamma[k].conj().T + gb.gamma[k]) == 0


def test_sigma_antisymmetric(gb):
    for a in range(4):
        assert max_abs(gb.sigma[a, a]) == 0
        for b in range(4):
            assert max_abs(gb.sigma[a, b] + gb.sigma[b, a]) == 0


def test_levi_civita(gb):
    eps = gb.levi_civita
    assert eps[0, 1, 2, 3] == 1
    assert eps[1, 0, 2, 3] == -1
    assert eps[3, 2, 1, 0] == 1
    assert np.count_nonzero(eps) == 24


def test_basis_arrays_are_read_only(gb):
    with pytest.raises(ValueError):
        gb.gamma[0, 0, 0] = 2


def test_vec_groupings(gb):
    a = np.array([0.3, -0.2, 0.7])
    assert max_abs(gb.vec1(a) - (0.3 * gb.sigma[0, 1] - 0.2 * gb.sigma[0, 2] + 0.7 * gb.sigma[0, 3])) == 0
    assert max_abs(gb.vec2(a) - (0.3 * gb.sigma[2, 3] - 0.2 * gb.sigma[3, 1] + 0.7 * gb.sigma[1, 2])) == 0
    assert np.allclose(gb.components1(gb.vec1(a) + gb.vec2([1, 2, 3])), a)
    assert np.allclose(gb.components2(gb.vec2(a) + gb.vec1([1, 2, 3])), a)


# ---- slash


def test_slash_rest(gb):
    assert max_abs(slash([2.0, 0, 0, 0], gb) - 2.0 * gb.gamma[0]) == 0


def test_slash_zero(gb):
    assert max_abs(slash(np.zeros(4), gb)) == 0


def test_slash_moving(gb):
    m = 1.3
    got = slash([math.sqrt(2) * m, m, 0, 0], gb)
    assert max_abs(got - (math.sqrt(2) * m * gb.gamma[0] - m * gb.gamma[1])) <= 1e-15


def test_slash_squares_to_mass(gb):
    p = np.array([math.sqrt(1 + 0.25 + 4 + 1), 0.5, -2.0, 1.0])
    ps = slash(p, gb)
    assert max_abs(ps @ ps - I4) <= 1e-13


# ---- exponentials


def test_exp_series_zero():
    assert max_abs(exp_series(np.zeros((4, 4))) - I4) == 0


def test_exp_series_diagonal():
    d = np.diag([math.log(2), 0.5, -1.0, 0.0])
    assert max_abs(exp_series(d) - np.diag([2.0, math.exp(0.5), math.exp(-1.0), 1.0])) <= 1e-15


def test_exp_series_rejects_bad_tol():
    with pytest.raises(ValueError):
        exp_series(np.zeros((4, 4)), tol=0)


def test_exp_series_cap():
    with pytest.raises(ConvergenceError):
        exp_series(60 * np.eye(4), max_terms=20)


def test_exp_boost_identity(gb):
    assert max_abs(exp_boost_closed([0, 0, 1], 0.0, gb) - I4) == 0


def test_exp_boost_z(gb):
    oracle = exp_series(0.5 * gb.sigma[0, 3])
    assert max_abs(exp_boost_closed([0, 0, 1], 0.5, gb) - oracle) <= 1e-14
    assert max_abs(oracle - (math.cosh(0.5) * I4 + math.sinh(0.5) * gb.sigma[0, 3])) <= 1e-14


def test_exp_series_boost_03(gb):
    got = exp_series(0.3 * gb.sigma[0, 3])
    assert max_abs(got - exp_boost_closed([0, 0, 1], 0.3, gb)) <= 1e-14


def test_exp_boost_is_hermitian(gb):
    b = exp_boost_closed([0.6, 0, 0.8], 0.7, gb)
    assert max_abs(b - b.conj().T) <= 1e-15


def test_exp_boost_errors(gb):
    with pytest.raises(ValueError):
        exp_boost_closed([1, 1, 0], 0.2, gb)
    with pytest.raises(ValueError):
        exp_boost_closed([1, 0, 0], -0.2, gb)


def test_exp_rotation_identity_and_sign_flip(gb):
    assert max_abs(exp_rotation_closed([0, 1, 0], 0.0, gb) - I4) == 0
    assert max_abs(exp_rotation_closed([0, 1, 0], 2 * math.pi, gb) + I4) <= 1e-15
    assert max_abs(exp_rotation_closed([0, 1, 0], 4 * math.pi, gb) - I4) <= 1e-15


def test_exp_rotation_z(gb):
    oracle = exp_series(math.pi / 6 * gb.sigma[1, 2])
    expected = math.cos(math.pi / 6) * I4 + math.sin(math.pi / 6) * gb.sigma[1, 2]
    assert max_abs(oracle - expected) <= 1e-14
    assert max_abs(exp_rotation_closed([0, 0, 1], math.pi / 3, gb) - oracle) <= 1e-14


def test_exp_rotation_is_unitary(gb):
    r = exp_rotation_closed([0.6, 0, 0.8], 2.1, gb)
    assert max_abs(r.conj().T @ r - I4) <= 1e-14


def test_exp_rotation_rejects_non_unit(gb):
    with pytest.raises(ValueError):
        exp_rotation_closed([0, 0, 2], 1.0, gb)


@given(unit_vectors, st.floats(0.0, 1.5))
def test_boost_matches_series(n, b):
    from spingroup import basis

    gb = basis()
    assert max_abs(exp_boost_closed(n, b, gb) - exp_series(b * gb.vec1(n))) <= 1e-9


@given(unit_vectors, angles)
def test_rotation_matches_series(a, theta):
    from spingroup import basis

    gb = basis()
    assert max_abs(exp_rotation_closed(a, theta, gb) - exp_series(theta / 2 * gb.vec2(a))) <= 1e-9


def test_half_rapidity_round_trip():
    assert beta_from_half_rapidity(half_rapidity_from_beta(0.6)) == pytest.approx(0.6, abs=1e-15)
    assert beta_from_half_rapidity(0.0) == 0.0


# ---- vector representation


def test_vector_rep_identity(gb):
    assert max_abs(vector_rep(I4, gb) - np.eye(4)) <= 1e-15


def test_vector_rep_rotation(gb):
    theta = 0.9
    c, s = math.cos(theta), math.sin(theta)
    expected = np.array([[1, 0, 0, 0], [0, c, -s, 0], [0, s, c, 0], [0, 0, 0, 1]])
    assert max_abs(vector_rep(exp_rotation_closed([0, 0, 1], theta, gb), gb) - expected) <= 1e-14


def test_vector_rep_boost(gb):
    b = 0.4
    lam = vector_rep(exp_boost_closed([0, 0, 1], b, gb), gb)
    beta = math.tanh(2 * b)
    gamma = 1 / math.sqrt(1 - beta**2)
    expected = np.eye(4)
    expected[0, 0] = expected[3, 3] = gamma
    expected[0, 3] = expected[3, 0] = gamma * beta
    assert max_abs(lam - expected) <= 1e-14


def test_vector_rep_maps_rest_momentum_along_boost(gb):
    lam = vector_rep(exp_boost_closed([1, 0, 0], 0.3, gb), gb)
    p = lam @ np.array([1.0, 0, 0, 0])
    assert p[1] / p[0] == pytest.approx(math.tanh(0.6), abs=1e-14)


def test_vector_rep_singular(gb):
    with pytest.raises(ValueError):
        vector_rep(np.zeros((4, 4)), gb)


def test_vector_rep_rejects_non_spin_matrix(gb):
    with pytest.raises(ValueError):
        # rotation through an imaginary angle gives sin -> i sinh in the vector rep
        vector_rep(exp_series(0.5j * gb.sigma[1, 2]), gb)


def _random_transform(rng, gb):
    if rng.random() < 0.5:
        n = rng.standard_normal(3)
        return exp_boost_closed(n / np.linalg.norm(n), rng.uniform(0, 1.2), gb)
    a = rng.standard_normal(3)
    return exp_rotation_closed(a / np.linalg.norm(a), rng.uniform(0, 4 * math.pi), gb)


def test_vector_rep_homomorphism_and_metric(gb, rng):
    for _ in range(100):
        s1, s2 = _random_transform(rng, gb), _random_transform(rng, gb)
        l1, l2, l12 = vector_rep(s1, gb), vector_rep(s2, gb), vector_rep(s1 @ s2, gb)
        assert max_abs(l12 - l1 @ l2) <= 1e-9
        assert max_abs(l12.T @ G @ l12 - G) <= 1e-9


def test_vector_rep_conjugation_convention(gb, rng):
    s = _random_transform(rng, gb) @ _random_transform(rng, gb)
    lam = vector_rep(s, gb)
    x = rng.standard_normal(4)
    assert max_abs(s @ slash(x, gb) @ np.linalg.inv(s) - slash(lam @ x, gb)) <= 1e-12
