"""Rest-frame and boosted positive-energy bispinors."""

from __future__ import annotations

import numpy as np

from .clifford import IDENTITY, GammaBasis, basis, exp_boost_closed, slash
from .spin_tensor import (
    FourMomentum,
    SpinTensor,
    _axis_vec,
    momentum_boost,
    spin_operator,
)

__all__ = [
    "boost_bispinor",
    "dirac_residual",
    "extract_phase",
    "rest_bispinor",
    "spin_eigen_residual",
]

# projections smaller than this are treated as null and the next seed is tried
_NULL_PROJECTION = 1e-6


def rest_bispinor(axis, gb: GammaBasis | None = None) -> np.ndarray:
    """Unit bispinor at rest with spin ``+1/2`` along ``axis``.

    Projects the canonical seeds ``e_0, e_1, ...`` with
    ``(1 + gamma^0)(1 + Sigma) / 4`` and keeps the first non-null image.
    The result is normalized and its first largest-modulus component is made
    real and non-negative, so repeated calls are bit-identical.
    """
    gb = gb or basis()
    a = _axis_vec(axis)
    sigma_rest = spin_operator(SpinTensor(np.zeros(3), a), gb)
    projector = 0.25 * (IDENTITY + gb.gamma[0]) @ (IDENTITY + sigma_rest)
    for k in range(4):
        psi = projector[:, k].copy()
        norm = np.linalg.norm(psi)
        if norm > _NULL_PROJECTION:
            psi /= norm
            lead = int(np.argmax(np.round(np.abs(psi), 12)))
            psi *= np.exp(-1j * np.angle(psi[lead]))
            psi[lead] = abs(psi[lead])
            return psi
    raise RuntimeError("every canonical seed projects to zero; the gamma basis is broken")


def boost_bispinor(psi0: np.ndarray, p: FourMomentum, gb: GammaBasis | None = None) -> np.ndarray:
    """Bispinor of the same fermion moving with momentum ``p``; not renormalized."""
    gb = gb or basis()
    n, b = momentum_boost(p)
    return exp_boost_closed(n, b, gb) @ psi0


def dirac_residual(psi: np.ndarray, p: FourMomentum, gb: GammaBasis | None = None) -> float:
    """``|(p_a gamma^a - m) psi|``."""
    gb = gb or basis()
    return float(np.linalg.norm((slash(p, gb) - p.m * IDENTITY) @ psi))


def spin_eigen_residual(psi: np.ndarray, s: SpinTensor, gb: GammaBasis | None = None) -> float:
    """``|(Sigma(s) - 1) psi|`` for the dimensionless spin operator ``Sigma``."""
    gb = gb or basis()
    return float(np.linalg.norm((spin_operator(s, gb) - IDENTITY) @ psi))


def extract_phase(w: np.ndarray, psi: np.ndarray) -> tuple[complex, float]:
    """Rayleigh quotient ``c = psi^+ W psi / psi^+ psi`` and eigen-residual.

    The residual ``|W psi - c psi| / |psi|`` is zero exactly when ``psi`` is an
    eigenvector of ``W``, in which case ``c`` is the acquired phase.
    """
    psi = np.asarray(psi, dtype=complex)
    norm2 = float(np.vdot(psi, psi).real)
    if norm2 == 0.0:
        raise ValueError("psi must be non-zero")
    w_psi = w @ psi
    c = complex(np.vdot(psi, w_psi) / norm2)
    return c, float(np.linalg.norm(w_psi - c * psi) / np.sqrt(norm2))
