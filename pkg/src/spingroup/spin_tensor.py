"""Spin tensor of a moving spin-1/2 fermion.

The spin tensor ``s_{ab}`` is kept in three-dimensional form as a vector
``s1 = (s_01, s_02, s_03)`` and a pseudovector ``s2 = (s_23, s_31, s_12)``,
the same split as ``(E, B)`` for the field tensor. In the rest frame
``s1 = 0`` and ``s2`` is the unit spin axis.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .clifford import (
    PSEUDO_PAIRS,
    GammaBasis,
    basis,
    exp_boost_closed,
    slash,
)

__all__ = [
    "FourMomentum",
    "RestSpinAxis",
    "SpinTensor",
    "boost_spin_axis",
    "generator",
    "momentum_boost",
    "momentum_spin_contraction",
    "pauli_lubanski",
    "slash_spin_commutator",
    "spin_operator",
    "spin_tensor_by_conjugation",
]


def _vec3(v, name: str) -> np.ndarray:
    v = np.array(v, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"{name} must have 3 components, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} must be finite")
    v.setflags(write=False)
    return v


@dataclass(frozen=True, eq=False)
class FourMomentum:
    """On-shell momentum of mass ``m``; the energy is always derived."""

    p: np.ndarray
    m: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "p", _vec3(self.p, "p"))
        if not self.m > 0:
            raise ValueError(f"mass must be positive, got {self.m!r}")

    @classmethod
    def at_rest(cls, m: float = 1.0) -> "FourMomentum":
        return cls(np.zeros(3), m)

    @property
    def p0(self) -> float:
        return float(np.sqrt(self.m**2 + self.p @ self.p))

    @property
    def magnitude(self) -> float:
        return float(np.linalg.norm(self.p))

    def four_vector(self) -> np.ndarray:
        """Contravariant components ``(p0, px, py, pz)``."""
        return np.concatenate(([self.p0], self.p))


@dataclass(frozen=True, eq=False)
class RestSpinAxis:
    """Unit pseudovector along which the spin of the fermion at rest is projected."""

    vec: np.ndarray
    tol: float = field(default=1e-12, repr=False)

    def __post_init__(self):
        v = _vec3(self.vec, "spin axis")
        if abs(np.linalg.norm(v) - 1.0) > self.tol:
            raise ValueError(f"spin axis must be a unit vector, |axis| = {np.linalg.norm(v)!r}")
        object.__setattr__(self, "vec", v)

    @classmethod
    def normalized(cls, v) -> "RestSpinAxis":
        v = np.asarray(v, dtype=float)
        norm = float(np.linalg.norm(v))
        if norm == 0.0 or not np.isfinite(norm):
            raise ValueError("cannot normalize a zero spin vector")
        return cls(v / norm)


def _axis_vec(axis) -> np.ndarray:
    if isinstance(axis, RestSpinAxis):
        return axis.vec
    return RestSpinAxis(axis).vec


@dataclass(frozen=True, eq=False)
class SpinTensor:
    """``s1 = (s_01, s_02, s_03)``, ``s2 = (s_23, s_31, s_12)``."""

    s1: np.ndarray
    s2: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "s1", _vec3(self.s1, "s1"))
        object.__setattr__(self, "s2", _vec3(self.s2, "s2"))

    def lower(self) -> np.ndarray:
        """Full antisymmetric ``s_{ab}`` with lower indices as a 4x4 array."""
        t = np.zeros((4, 4))
        t[0, 1:] = self.s1
        t[1:, 0] = -self.s1
        for comp, (k, l) in zip(self.s2, PSEUDO_PAIRS):
            t[k, l] = comp
            t[l, k] = -comp
        return t

    def orthogonality(self) -> float:
        """``s1 . s2``; zero for any boosted rest axis."""
        return float(self.s1 @ self.s2)

    def invariant(self) -> float:
        """``s2^2 - s1^2``; equals 1 for any boosted unit rest axis."""
        return float(self.s2 @ self.s2 - self.s1 @ self.s1)


def boost_spin_axis(p: FourMomentum, axis) -> SpinTensor:
    """Spin tensor seen by an observer in which the fermion has momentum ``p``.

    ``s1 = p x a / m`` and ``s2 = (p0/m) a - p (p.a) / (m (m + p0))``.
    """
    a = _axis_vec(axis)
    m, p0, pv = p.m, p.p0, p.p
    s1 = np.cross(pv, a) / m
    s2 = (p0 / m) * a - pv * (pv @ a) / (m * (m + p0))
    return SpinTensor(s1, s2)


def generator(s: SpinTensor, gb: GammaBasis | None = None) -> np.ndarray:
    """``s_{ab} sigma^{ab} / 2 = s1.sigma^{0k} + s2.sigma^{kl}``; squares to ``-1`` for unit axes."""
    gb = gb or basis()
    return gb.vec1(s.s1) + gb.vec2(s.s2)


def spin_operator(s: SpinTensor, gb: GammaBasis | None = None) -> np.ndarray:
    """Dimensionless spin projection operator ``i s_{ab} sigma^{ab} / 2``, eigenvalues ``+-1``."""
    return 1j * generator(s, gb)


def momentum_boost(p: FourMomentum) -> tuple[np.ndarray, float]:
    """Direction and half-rapidity ``b`` of the boost taking rest momentum to ``p``.

    ``tanh(2 b) = |p| / p0``. At rest the direction is arbitrarily ``z`` and ``b = 0``.
    """
    mag = p.magnitude
    if mag == 0.0:
        return np.array([0.0, 0.0, 1.0]), 0.0
    return p.p / mag, 0.5 * float(np.arctanh(mag / p.p0))


def spin_tensor_by_conjugation(p: FourMomentum, axis, gb: GammaBasis | None = None) -> np.ndarray:
    """Boosted spin operator by explicit conjugation of the rest-frame operator.

    Independent of :func:`boost_spin_axis`; the two must agree.
    """
    gb = gb or basis()
    a = _axis_vec(axis)
    n, b = momentum_boost(p)
    boost = exp_boost_closed(n, b, gb)
    boost_inv = exp_boost_closed(-n, b, gb)
    return boost @ (1j * gb.vec2(a)) @ boost_inv


def pauli_lubanski(p: FourMomentum, s: SpinTensor, gb: GammaBasis | None = None) -> np.ndarray:
    """``lambda^a = eps^{abmn} p_b s_{mn}`` (no symmetrization factor).

    At rest with axis ``a`` this is ``(0, -2 m a)``.
    """
    gb = gb or basis()
    p_lower = gb.metric @ p.four_vector()
    return np.einsum("abmn,b,mn->a", gb.levi_civita, p_lower, s.lower())


def momentum_spin_contraction(p: FourMomentum, s: SpinTensor, gb: GammaBasis | None = None) -> np.ndarray:
    """``p^a s_{ab} gamma^b`` as a matrix; vanishes when ``s`` was built from ``p``."""
    gb = gb or basis()
    coeff = p.four_vector() @ s.lower()
    return np.einsum("b,bij->ij", coeff, gb.gamma)


def slash_spin_commutator(p: FourMomentum, s: SpinTensor, gb: GammaBasis | None = None) -> np.ndarray:
    """``[p_a gamma^a, s_{mn} sigma^{mn} / 2]``; equal to ``2 p^a s_{ab} gamma^b``."""
    gb = gb or basis()
    ps = slash(p, gb)
    g = generator(s, gb)
    return ps @ g - g @ ps
