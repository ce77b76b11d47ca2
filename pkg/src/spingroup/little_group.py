"""Little-group elements of a massive momentum and their boost/rotation factors.

For a unit pseudovector ``w`` (any direction for the little group, the rest
spin axis for the spin group) the boosted tensor ``(w1, w2)`` gives the
generator ``G = w1.sigma^{0k} + w2.sigma^{kl}`` with ``G^2 = -1`` and

    W(phi) = exp(G phi / 2) = cos(phi/2) + G sin(phi/2).

``W`` keeps the momentum fixed and splits as boost x rotation or
rotation x boost. All closed forms are written with ``c = cos(phi/2)`` and
``s = sin(phi/2)`` rather than ``tan(phi/2)`` so that nothing blows up at
``phi = pi``; with ``D = c^2 + w2^2 s^2``

    rotation = (c + s w2.sigma^{kl}) / sqrt(D)
    boost    = sqrt(D) (1 + u.sigma^{0k}),  u = (s c w1 -+ s^2 w1 x w2) / D

with ``-`` for boost-then-rotation and ``+`` for rotation-then-boost.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .clifford import IDENTITY, GammaBasis, basis, max_abs, vector_rep
from .spin_tensor import (
    FourMomentum,
    SpinTensor,
    _axis_vec,
    boost_spin_axis,
    generator,
    spin_operator,
)

__all__ = [
    "AxisTensor",
    "FactorizationError",
    "Factorization",
    "LittleGroupElement",
    "angle_from_rotation_factor",
    "axis_tensor",
    "boost_factor_closed",
    "boost_speed",
    "boost_speed_variants",
    "boost_vector",
    "closure_check",
    "element",
    "factor",
    "momentum_residual",
    "p_perp",
    "polar_factor",
    "rotation_angle",
    "rotation_factor_closed",
    "spin_conjugation_residual",
    "spin_group_element",
]

Order = Literal["br", "rb"]
ORDERS = ("br", "rb")


class FactorizationError(RuntimeError):
    """The closed-form factors do not multiply back to the element."""


@dataclass(frozen=True, eq=False)
class AxisTensor(SpinTensor):
    """Boosted axis tensor ``(w1, w2)`` together with the unit axis and momentum it came from."""

    axis: np.ndarray | None = None
    p: FourMomentum | None = None

    @property
    def w1(self) -> np.ndarray:
        return self.s1

    @property
    def w2(self) -> np.ndarray:
        return self.s2


@dataclass(frozen=True, eq=False)
class LittleGroupElement:
    W: np.ndarray
    phi: float
    axis: AxisTensor
    p: FourMomentum


@dataclass(frozen=True, eq=False)
class Factorization:
    """``W = boost @ rotation`` (order ``"br"``) or ``W = rotation @ boost`` (``"rb"``)."""

    boost_factor: np.ndarray
    rotation_factor: np.ndarray
    order: Order
    rotation_angle_2r: float
    boost_vector: np.ndarray
    phi: float

    @property
    def boost_param(self) -> float:
        """``|u|``, the tanh of the spinor half-rapidity of the boost factor."""
        return float(np.linalg.norm(self.boost_vector))

    @property
    def beta(self) -> float:
        """Physical boost speed ``tanh(2 b) = 2|u| / (1 + |u|^2)``."""
        u = self.boost_param
        return 2.0 * u / (1.0 + u * u)

    @property
    def boost_direction(self) -> np.ndarray:
        """Unit direction of the boost; the zero vector when there is no boost."""
        u = self.boost_param
        if u < 1e-15:
            return np.zeros(3)
        return self.boost_vector / u

    def product(self) -> np.ndarray:
        if self.order == "br":
            return self.boost_factor @ self.rotation_factor
        return self.rotation_factor @ self.boost_factor


def axis_tensor(p: FourMomentum, w) -> AxisTensor:
    """Boost the unit pseudovector ``w`` into the frame where the fermion has momentum ``p``."""
    w = _axis_vec(w)
    t = boost_spin_axis(p, w)
    return AxisTensor(t.s1, t.s2, axis=w, p=p)


def element(axis: AxisTensor, phi: float, gb: GammaBasis | None = None, tol: float = 1e-9) -> LittleGroupElement:
    gb = gb or basis()
    g = generator(axis, gb)
    defect = max_abs(g @ g + IDENTITY)
    if defect > tol * max(1.0, max_abs(g)) ** 2:
        raise ValueError(f"generator does not square to -1 (defect {defect:.3e})")
    w = math.cos(phi / 2) * IDENTITY + math.sin(phi / 2) * g
    return LittleGroupElement(W=w, phi=float(phi), axis=axis, p=axis.p)


def spin_group_element(p: FourMomentum, spin_axis, phi: float, gb: GammaBasis | None = None) -> LittleGroupElement:
    """Element of the one-parameter group generated by the fermion's own spin tensor."""
    return element(axis_tensor(p, spin_axis), phi, gb)


def p_perp(p: FourMomentum, axis: AxisTensor) -> np.ndarray:
    """Part of ``p`` perpendicular to ``w2``."""
    w2 = axis.w2
    return p.p - w2 * (w2 @ p.p) / (w2 @ w2)


def boost_vector(
    axis: AxisTensor,
    phi: float,
    sign: int = +1,
    form: Literal["cross", "pperp"] = "cross",
    w2_squared: float | None = None,
) -> np.ndarray:
    """Vector ``u`` of the boost factor ``sqrt(D)(1 + u.sigma^{0k})``.

    ``sign=+1`` is the boost-then-rotation factor, ``sign=-1`` the
    rotation-then-boost one. ``form="cross"`` builds the quadratic term from
    ``-w1 x w2``; ``form="pperp"`` from ``(p_perp / p0) w2^2``. The two agree
    on shell. ``w2_squared`` overrides ``w2 . w2`` in the ``pperp`` numerator
    (for checking the ``1 + w1^2`` spelling).
    """
    c, s = math.cos(phi / 2), math.sin(phi / 2)
    w1, w2 = axis.w1, axis.w2
    w2sq = float(w2 @ w2)
    denom = c * c + w2sq * s * s
    if form == "cross":
        quad = -np.cross(w1, w2)
    elif form == "pperp":
        p = axis.p
        quad = p_perp(p, axis) / p.p0 * (w2sq if w2_squared is None else w2_squared)
    else:
        raise ValueError(f"unknown form {form!r}")
    return (s * c * w1 + sign * s * s * quad) / denom


def _sqrt_d(axis: AxisTensor, phi: float) -> float:
    c, s = math.cos(phi / 2), math.sin(phi / 2)
    return math.sqrt(c * c + float(axis.w2 @ axis.w2) * s * s)


def rotation_factor_closed(axis: AxisTensor, phi: float, gb: GammaBasis | None = None) -> np.ndarray:
    """Unitary factor, shared by both orders."""
    gb = gb or basis()
    c, s = math.cos(phi / 2), math.sin(phi / 2)
    return (c * IDENTITY + s * gb.vec2(axis.w2)) / _sqrt_d(axis, phi)


def boost_factor_closed(axis: AxisTensor, phi: float, order: Order = "br", gb: GammaBasis | None = None) -> np.ndarray:
    """Hermitian factor of ``W`` for the given order."""
    gb = gb or basis()
    u = boost_vector(axis, phi, sign=+1 if order == "br" else -1)
    return _sqrt_d(axis, phi) * (IDENTITY + gb.vec1(u))


def _unwrap_half_angle(raw: float, phi: float) -> float:
    # pick the branch of raw + 2 pi k closest to phi/2
    return phi / 2 + math.remainder(raw - phi / 2, 2 * math.pi)


def rotation_angle(axis: AxisTensor, phi: float) -> float:
    """Rotation angle ``2r`` of the unitary factor about ``w2``.

    ``tan r = |w2| tan(phi/2)``, continued through ``phi = pi`` so that ``2r``
    increases with ``phi`` and ``2r(2 pi k) = 2 pi k``.
    """
    c, s = math.cos(phi / 2), math.sin(phi / 2)
    raw = math.atan2(float(np.linalg.norm(axis.w2)) * s, c)
    return 2.0 * _unwrap_half_angle(raw, phi)


def angle_from_rotation_factor(r: np.ndarray, w2: np.ndarray, phi: float, gb: GammaBasis | None = None) -> float:
    """Read ``2r`` off a unitary factor ``cos r + sin r (w2/|w2|).sigma^{kl}``."""
    gb = gb or basis()
    scalar = float(np.trace(r).real / 4.0)
    along = float(gb.components2(r).real @ (w2 / np.linalg.norm(w2)))
    return 2.0 * _unwrap_half_angle(math.atan2(along, scalar), phi)


def boost_speed_variants(axis: AxisTensor, phi: float) -> tuple[float, float]:
    """``|u|`` for the boost-then-rotation and rotation-then-boost factors."""
    return (
        float(np.linalg.norm(boost_vector(axis, phi, +1))),
        float(np.linalg.norm(boost_vector(axis, phi, -1))),
    )


def boost_speed(axis: AxisTensor, p: FourMomentum | None, phi: float) -> tuple[float, float]:
    """``(|u|, beta)``: the boost factor's ``tanh b`` and the frame speed ``tanh 2b``.

    ``p`` defaults to the momentum stored on ``axis``.
    """
    if p is not None and p is not axis.p:
        axis = axis_tensor(p, axis.axis)
    u = float(np.linalg.norm(boost_vector(axis, phi, +1, form="pperp")))
    return u, 2.0 * u / (1.0 + u * u)


def factor(
    el: LittleGroupElement,
    order: Order = "br",
    gb: GammaBasis | None = None,
    tol: float = 1e-9,
    verify: bool = True,
    _flip_quadratic: bool = False,
) -> Factorization:
    """Closed-form boost and rotation factors of ``el.W`` in the requested order.

    With ``verify`` the product is compared with ``W`` and a
    :class:`FactorizationError` is raised on mismatch. ``_flip_quadratic``
    flips the sign of the quadratic boost term; it exists only so the
    verification harness can confirm that it catches such a fault.
    """
    if order not in ORDERS:
        raise ValueError(f"order must be one of {ORDERS}, got {order!r}")
    gb = gb or basis()
    axis, phi = el.axis, el.phi
    sign = +1 if order == "br" else -1
    if _flip_quadratic:
        sign = -sign
    u = boost_vector(axis, phi, sign)
    boost = _sqrt_d(axis, phi) * (IDENTITY + gb.vec1(u))
    rot = rotation_factor_closed(axis, phi, gb)
    result = Factorization(
        boost_factor=boost,
        rotation_factor=rot,
        order=order,
        rotation_angle_2r=rotation_angle(axis, phi),
        boost_vector=u,
        phi=phi,
    )
    if verify:
        mismatch = max_abs(result.product() - el.W)
        if mismatch > tol * max(1.0, max_abs(el.W)):
            raise FactorizationError(f"{order} factors differ from W by {mismatch:.3e}")
    return result


def _hermitian_sqrt(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    vals, vecs = np.linalg.eigh(a)
    if vals.min() <= 0:
        raise ValueError("matrix is not positive definite; W is singular")
    root = np.sqrt(vals)
    return (vecs * root) @ vecs.conj().T, (vecs / root) @ vecs.conj().T


def polar_factor(el: LittleGroupElement, order: Order = "br", gb: GammaBasis | None = None) -> Factorization:
    """Polar decomposition of ``W`` by eigendecomposition, independent of the closed forms.

    ``"br"``: ``W = H U`` with ``H = (W W^+)^{1/2}``; ``"rb"``: ``W = U H`` with
    ``H = (W^+ W)^{1/2}``.
    """
    if order not in ORDERS:
        raise ValueError(f"order must be one of {ORDERS}, got {order!r}")
    gb = gb or basis()
    w = el.W
    if order == "br":
        h, h_inv = _hermitian_sqrt(w @ w.conj().T)
        u = h_inv @ w
    else:
        h, h_inv = _hermitian_sqrt(w.conj().T @ w)
        u = w @ h_inv
    scalar = float(np.trace(h).real / 4.0)
    return Factorization(
        boost_factor=h,
        rotation_factor=u,
        order=order,
        rotation_angle_2r=angle_from_rotation_factor(u, el.axis.w2, el.phi, gb),
        boost_vector=gb.components1(h).real / scalar,
        phi=el.phi,
    )


def momentum_residual(el: LittleGroupElement, gb: GammaBasis | None = None) -> float:
    """``|L p - p| / |p|`` with ``L`` the Lorentz matrix of ``W`` (Euclidean norms)."""
    p4 = el.p.four_vector()
    lam = vector_rep(el.W, gb)
    return float(np.linalg.norm(lam @ p4 - p4) / np.linalg.norm(p4))


def spin_conjugation_residual(el: LittleGroupElement, s: SpinTensor, gb: GammaBasis | None = None) -> float:
    """``max|W Sigma(s) W^{-1} - Sigma(s)|``; zero when ``W`` belongs to the spin group of ``s``."""
    sig = spin_operator(s, gb)
    return max_abs(el.W @ sig @ np.linalg.inv(el.W) - sig)


def closure_check(p: FourMomentum, spin_axis, phi1: float, phi2: float, gb: GammaBasis | None = None) -> float:
    """``max|W(phi1) W(phi2) - W(phi1 + phi2)|`` for the spin group of ``spin_axis``."""
    t = axis_tensor(p, spin_axis)
    w1 = element(t, phi1, gb).W
    w2 = element(t, phi2, gb).W
    return max_abs(w1 @ w2 - element(t, phi1 + phi2, gb).W)
