import math

import numpy as np
import pytest
from hypothesis import given

from spingroup import (
    FourMomentum,
    axis_tensor,
    boost_bispinor,
    boost_spin_axis,
    dirac_residual,
    element,
    extract_phase,
    rest_bispinor,
    spin_eigen_residual,
)

from conftest import momenta, unit_vectors

Z = np.array([0.0, 0.0, 1.0])
X = np.array([1.0, 0.0, 0.0])
PHASE_GRID = [0.0, math.pi / 2, math.pi, 2 * math.pi, 3 * math.pi, 4 * math.pi]


def test_rest_spin_up(gb):
    assert np.array_equal(rest_bispinor(Z, gb), [1, 0, 0, 0])


def test_rest_spin_down(gb):
    assert np.array_equal(rest_bispinor(-Z, gb), [0, 1, 0, 0])


def test_rest_spin_x(gb):
    # eigenvector of sigma_x with eigenvalue +1 in the upper block
    assert np.allclose(rest_bispinor(X, gb), np.array([1, 1, 0, 0]) / math.sqrt(2), atol=1e-15)


@given(unit_vectors)
def test_rest_bispinor_eigen_equations(a):
    psi = rest_bispinor(a)
    rest = FourMomentum.at_rest()
    assert np.linalg.norm(psi) == pytest.approx(1.0, abs=1e-12)
    assert dirac_residual(psi, rest) <= 1e-12
    assert spin_eigen_residual(psi, boost_spin_axis(rest, a)) <= 1e-12


def test_rest_bispinor_gauge():
    psi = rest_bispinor([0.0, 0.6, -0.8])
    lead = int(np.argmax(np.abs(psi)))
    assert psi[lead].imag == 0 and psi[lead].real > 0


def test_rest_bispinor_deterministic():
    a = np.array([0.48, -0.6, 0.64])
    assert rest_bispinor(a).tobytes() == rest_bispinor(a).tobytes()


def test_rest_bispinor_falls_back_to_next_seed():
    # for -z the first seed e_0 projects to zero
    assert np.array_equal(rest_bispinor(-Z), [0, 1, 0, 0])


def test_boost_at_rest_is_identity():
    psi0 = rest_bispinor(Z)
    assert np.array_equal(boost_bispinor(psi0, FourMomentum.at_rest()), psi0)


def test_boost_along_axis():
    p = FourMomentum(Z)
    psi = boost_bispinor(rest_bispinor(Z), p)
    assert dirac_residual(psi, p) <= 1e-10
    assert spin_eigen_residual(psi, boost_spin_axis(p, Z)) <= 1e-10


@given(momenta, unit_vectors)
def test_boosted_residuals(p, a):
    psi = boost_bispinor(rest_bispinor(a), p)
    assert dirac_residual(psi, p) <= 1e-10
    assert spin_eigen_residual(psi, boost_spin_axis(p, a)) <= 1e-10


def test_dirac_residual_positive_control():
    psi = rest_bispinor(Z)
    for mag in (1.0, 2.5):
        assert dirac_residual(psi, FourMomentum(mag * X)) > 0.1


def test_spin_residual_positive_control():
    rest = FourMomentum.at_rest()
    assert spin_eigen_residual(rest_bispinor(Z), boost_spin_axis(rest, X)) > 0.5


def test_extract_phase_identity():
    c, r = extract_phase(np.eye(4), rest_bispinor(Z))
    assert c == 1 and r == 0


def test_extract_phase_rejects_zero():
    with pytest.raises(ValueError):
        extract_phase(np.eye(4), np.zeros(4))


def test_extract_phase_non_eigenvector():
    psi = np.array([1, 1, 0, 0], dtype=complex)
    _, r = extract_phase(np.diag([1, -1, 1, 1]), psi)
    assert r == pytest.approx(1.0)


@pytest.mark.parametrize("phi", PHASE_GRID)
def test_phase_law_on_grid(phi, rng):
    for _ in range(10):
        p = FourMomentum(rng.uniform(-3, 3, 3))
        a = rng.standard_normal(3)
        a /= np.linalg.norm(a)
        psi = boost_bispinor(rest_bispinor(a), p)
        w = element(axis_tensor(p, a), phi).W
        c, r = extract_phase(w, psi)
        assert r <= 1e-10
        assert abs(abs(c) - 1) <= 1e-10
        assert abs(c - complex(math.cos(phi / 2), -math.sin(phi / 2))) <= 1e-9


def test_two_pi_flips_sign():
    p = FourMomentum([0.7, -1.1, 0.3])
    psi = boost_bispinor(rest_bispinor(Z), p)
    c, r = extract_phase(element(axis_tensor(p, Z), 2 * math.pi).W, psi)
    assert abs(c + 1) <= 1e-10 and r <= 1e-10
