"""Dirac algebra in the Dirac-Pauli representation.

Conventions used throughout the package:

* metric signature ``(+, -, -, -)`` and ``eps^{0123} = +1``;
* units with ``c = 1``;
* ``sigma^{ab} = (gamma^a gamma^b - gamma^b gamma^a) / 2`` (no factor of ``i``);
* a spinor boost ``exp(b n.sigma^{0k})`` has half-rapidity ``b``, so the
  frame speed is ``beta = tanh(2 b)``.

The two three-component groupings of the six ``sigma^{ab}`` are exposed as
:meth:`GammaBasis.vec1` (``a_x sigma^{01} + a_y sigma^{02} + a_z sigma^{03}``)
and :meth:`GammaBasis.vec2` (``a_x sigma^{23} + a_y sigma^{31} + a_z sigma^{12}``).
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ConvergenceError",
    "GammaBasis",
    "basis",
    "beta_from_half_rapidity",
    "build_gamma_basis",
    "exp_boost_closed",
    "exp_rotation_closed",
    "exp_series",
    "half_rapidity_from_beta",
    "max_abs",
    "slash",
    "vector_rep",
]

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
IDENTITY = np.eye(4, dtype=complex)

# spatial index pairs carrying the pseudovector components x, y, z
PSEUDO_PAIRS = ((2, 3), (3, 1), (1, 2))

UNIT_TOL = 1e-12
SERIES_MAX_TERMS = 200


class ConvergenceError(RuntimeError):
    """Raised when the Taylor series for a matrix exponential does not settle."""


def max_abs(a) -> float:
    """Largest absolute entry, the distance used for every matrix comparison."""
    return float(np.max(np.abs(a)))


def _levi_civita4() -> np.ndarray:
    eps = np.zeros((4, 4, 4, 4))
    for perm in itertools.permutations(range(4)):
        inversions = sum(
            1 for i in range(4) for j in range(i + 1, 4) if perm[i] > perm[j]
        )
        eps[perm] = -1.0 if inversions % 2 else 1.0
    return eps


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class GammaBasis:
    """Gamma matrices with their commutators, metric and Levi-Civita symbol.

    ``gamma[a]`` is ``gamma^a``; ``sigma[a, b]`` is ``sigma^{ab}`` for every
    ordered pair, so ``sigma[b, a] == -sigma[a, b]`` and the diagonal is zero.
    """

    gamma: np.ndarray
    sigma: np.ndarray
    metric: np.ndarray
    levi_civita: np.ndarray

    @property
    def gamma_lower(self) -> np.ndarray:
        """``gamma_a = g_{ab} gamma^b``."""
        return np.einsum("ab,bij->aij", self.metric, self.gamma)

    def vec1(self, a) -> np.ndarray:
        """``a_x sigma^{01} + a_y sigma^{02} + a_z sigma^{03}`` (Hermitian)."""
        a = np.asarray(a)
        return np.einsum("k,kij->ij", a, self.sigma[0, 1:]).astype(complex)

    def vec2(self, a) -> np.ndarray:
        """``a_x sigma^{23} + a_y sigma^{31} + a_z sigma^{12}`` (anti-Hermitian)."""
        a = np.asarray(a)
        out = np.zeros((4, 4), dtype=complex)
        for comp, (k, l) in zip(a, PSEUDO_PAIRS):
            out = out + comp * self.sigma[k, l]
        return out

    def components1(self, m: np.ndarray) -> np.ndarray:
        """Coefficients of ``m`` along ``sigma^{01}, sigma^{02}, sigma^{03}`` (trace projection)."""
        # Tr(sigma^{0k} sigma^{0k}) = 4 and the basis is trace-orthogonal
        return np.array([np.trace(m @ self.sigma[0, k]) / 4.0 for k in (1, 2, 3)])

    def components2(self, m: np.ndarray) -> np.ndarray:
        """Coefficients of ``m`` along ``sigma^{23}, sigma^{31}, sigma^{12}``."""
        # (sigma^{kl})^2 = -1, hence the minus sign
        return np.array([-np.trace(m @ self.sigma[k, l]) / 4.0 for k, l in PSEUDO_PAIRS])


def build_gamma_basis() -> GammaBasis:
    """Construct the standard Dirac-Pauli basis (``gamma^0`` diagonal)."""
    pauli = [
        np.array([[0, 1], [1, 0]], dtype=complex),
        np.array([[0, -1j], [1j, 0]], dtype=complex),
        np.array([[1, 0], [0, -1]], dtype=complex),
    ]
    zero = np.zeros((2, 2), dtype=complex)
    one = np.eye(2, dtype=complex)

    gamma = np.empty((4, 4, 4), dtype=complex)
    gamma[0] = np.block([[one, zero], [zero, -one]])
    for k, pk in enumerate(pauli, start=1):
        gamma[k] = np.block([[zero, pk], [-pk, zero]])

    sigma = 0.5 * (
        np.einsum("aij,bjk->abik", gamma, gamma)
        - np.einsum("bij,ajk->abik", gamma, gamma)
    )
    return GammaBasis(
        gamma=_frozen(gamma),
        sigma=_frozen(sigma),
        metric=_frozen(METRIC.copy()),
        levi_civita=_frozen(_levi_civita4()),
    )


@functools.lru_cache(maxsize=None)
def basis() -> GammaBasis:
    """Shared default basis; its arrays are read-only."""
    return build_gamma_basis()


def _unit(v, name: str, tol: float = UNIT_TOL) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"{name} must have 3 components, got shape {v.shape}")
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > tol:
        raise ValueError(f"{name} must be a unit vector, |{name}| = {norm!r}")
    return v


def slash(p, gb: GammaBasis | None = None) -> np.ndarray:
    """``p_a gamma^a = p^0 gamma^0 - p^x gamma^1 - p^y gamma^2 - p^z gamma^3``.

    ``p`` is a contravariant 4-vector ``(p0, px, py, pz)`` or anything with a
    ``four_vector()`` method.
    """
    gb = gb or basis()
    if hasattr(p, "four_vector"):
        p = p.four_vector()
    p_lower = gb.metric @ np.asarray(p, dtype=float)
    return np.einsum("a,aij->ij", p_lower, gb.gamma)


def exp_series(m: np.ndarray, tol: float = 1e-17, max_terms: int = SERIES_MAX_TERMS) -> np.ndarray:
    """Plain Taylor series for ``exp(m)``, the reference for all closed forms.

    Terms are added until the largest entry of the next term drops below
    ``tol``. No scaling and squaring is done; inputs are expected to have
    norm of order one.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = np.asarray(m, dtype=complex)
    total = np.eye(m.shape[0], dtype=complex)
    term = total.copy()
    for k in range(1, max_terms + 1):
        term = term @ m / k
        total = total + term
        if max_abs(term) < tol:
            return total
    raise ConvergenceError(f"exp_series did not converge in {max_terms} terms")


def exp_boost_closed(direction, b: float, gb: GammaBasis | None = None) -> np.ndarray:
    """``exp(b n_k sigma^{0k}) = cosh(b) + sinh(b) n.sigma^{0k}`` for unit ``n``."""
    gb = gb or basis()
    n = _unit(direction, "direction")
    if b < 0:
        raise ValueError("half-rapidity b must be non-negative; flip the direction instead")
    return np.cosh(b) * IDENTITY + np.sinh(b) * gb.vec1(n)


def exp_rotation_closed(axis, theta: float, gb: GammaBasis | None = None) -> np.ndarray:
    """Spinor rotation by ``theta`` about ``axis``; period ``4 pi`` in ``theta``."""
    gb = gb or basis()
    a = _unit(axis, "axis")
    return np.cos(theta / 2) * IDENTITY + np.sin(theta / 2) * gb.vec2(a)


def half_rapidity_from_beta(beta: float) -> float:
    return 0.5 * float(np.arctanh(beta))


def beta_from_half_rapidity(b: float) -> float:
    return float(np.tanh(2.0 * b))


def vector_rep(s: np.ndarray, gb: GammaBasis | None = None, tol: float = 1e-9) -> np.ndarray:
    """Lorentz matrix of a spinor transform.

    Returns the real ``L`` with ``S slash(x) S^{-1} = slash(L x)`` for every
    4-vector ``x``, i.e. ``L^mu_nu = Tr(gamma^mu S gamma_nu S^{-1}) / 4``.
    The map is a homomorphism: ``vector_rep(S1 S2) = vector_rep(S1) vector_rep(S2)``.
    """
    gb = gb or basis()
    s = np.asarray(s, dtype=complex)
    try:
        s_inv = np.linalg.inv(s)
    except np.linalg.LinAlgError as exc:
        raise ValueError("spinor transform is singular") from exc
    if not np.all(np.isfinite(s_inv)):
        raise ValueError("spinor transform is singular")
    conj = np.einsum("ij,njk,kl->nil", s, gb.gamma_lower, s_inv)
    lam = np.einsum("mij,nji->mn", gb.gamma, conj) / 4.0
    scale = max(1.0, max_abs(lam))
    if max_abs(lam.imag) > tol * scale:
        raise ValueError(
            "transform is not in the image of the spin group "
            f"(imaginary residue {max_abs(lam.imag):.3e})"
        )
    return lam.real
