"""Seeded property suite over every invariant of the library.

Each property is evaluated on ``trials`` independent draws. Draw ``i`` of
property ``pid`` uses a PCG64 generator seeded with the entropy tuple
``(seed, crc32(pid), i)`` through :class:`numpy.random.SeedSequence`, so a
draw never depends on which other draws ran, or in what order.
"""

from __future__ import annotations

import datetime as _dt
import json
import math
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from . import __version__
from .bispinor import (
    boost_bispinor,
    dirac_residual,
    extract_phase,
    rest_bispinor,
    spin_eigen_residual,
)
from .clifford import (
    IDENTITY,
    GammaBasis,
    basis,
    exp_boost_closed,
    exp_rotation_closed,
    exp_series,
    max_abs,
    vector_rep,
)
from .little_group import (
    angle_from_rotation_factor,
    axis_tensor,
    boost_speed_variants,
    boost_vector,
    closure_check,
    element,
    factor,
    momentum_residual,
    polar_factor,
    rotation_angle,
    spin_conjugation_residual,
)
from .spin_tensor import (
    FourMomentum,
    boost_spin_axis,
    generator,
    momentum_spin_contraction,
    pauli_lubanski,
    slash_spin_commutator,
    spin_operator,
    spin_tensor_by_conjugation,
)

__all__ = [
    "PROPERTIES",
    "PropertyRecord",
    "SuiteConfig",
    "SuiteReport",
    "draw_rng",
    "random_momentum",
    "random_unit",
    "run_suite",
]

FAULTS = ("flip-boost-sign",)
PHASE_GRID = (0.0, math.pi / 2, math.pi, 2 * math.pi, 3 * math.pi, 4 * math.pi)
NEAR_PI = 1e-3


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 20240917
    trials: int = 100
    tol_strict: float = 1e-10
    tol_accum: float = 1e-9
    tol_exact: float = 1e-12
    mass: float = 1.0
    p_max_over_m: float = 5.0

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        for name in ("tol_strict", "tol_accum", "tol_exact", "mass"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if self.p_max_over_m < 0:
            raise ValueError("p_max_over_m must be non-negative")


@dataclass
class PropertyRecord:
    id: str
    anchor: str
    trials: int
    max_residual: float
    threshold: float
    bound: str
    passed: bool
    counterexample: dict | None = None


@dataclass
class SuiteReport:
    records: list[PropertyRecord]
    passed: bool
    config: dict
    version: str = __version__
    timestamp: str = field(default_factory=lambda: _dt.datetime.now(_dt.timezone.utc).isoformat())

    def failures(self) -> list[PropertyRecord]:
        return [r for r in self.records if not r.passed]

    def to_dict(self, include_timestamp: bool = True) -> dict:
        d = {
            "version": self.version,
            "passed": self.passed,
            "config": self.config,
            "properties": [asdict(r) for r in self.records],
        }
        if include_timestamp:
            d["timestamp"] = self.timestamp
        return d

    def to_json(self, include_timestamp: bool = True) -> str:
        return json.dumps(self.to_dict(include_timestamp), indent=2)

    def to_text(self) -> str:
        lines = [f"spingroup {self.version} verify seed={self.config['seed']} trials={self.config['trials']}"]
        for r in self.records:
            op = "<=" if r.bound == "upper" else ">="
            word = "value" if r.bound == "upper" else "min"
            lines.append(
                f"{'PASS' if r.passed else 'FAIL'}  {r.id:<34} {r.anchor:<24} "
                f"{word}={r.max_residual:.3e} {op} {r.threshold:.1e}  (n={r.trials})"
            )
            if r.counterexample:
                lines.append(f"      counterexample: {json.dumps(r.counterexample)}")
        n_fail = len(self.failures())
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'} ({len(self.records) - n_fail}/{len(self.records)} properties)")
        return "\n".join(lines)


# ---------------------------------------------------------------- draws


def draw_rng(seed: int, pid: str, index: int) -> np.random.Generator:
    """Generator for draw ``index`` of property ``pid``."""
    ss = np.random.SeedSequence([seed, zlib.crc32(pid.encode()), index])
    return np.random.Generator(np.random.PCG64(ss))


def random_unit(rng: np.random.Generator) -> np.ndarray:
    while True:
        v = rng.standard_normal(3)
        n = np.linalg.norm(v)
        if n > 1e-8:
            return v / n


def random_momentum(rng: np.random.Generator, cfg: SuiteConfig, p_min_over_m: float = 0.0) -> FourMomentum:
    """``|p|`` uniform on ``[p_min, p_max] m``, direction uniform on the sphere."""
    lo = p_min_over_m * cfg.mass
    hi = max(cfg.p_max_over_m, p_min_over_m) * cfg.mass
    mag = rng.uniform(lo, hi) if hi > lo else lo
    return FourMomentum(mag * random_unit(rng), cfg.mass)


def random_phi(rng: np.random.Generator, index: int | None = None) -> float:
    """Uniform on ``[0, 4 pi)``; with an index, every fourth draw sits near ``pi`` or ``2 pi``."""
    if index is not None and index % 4 == 1:
        return math.pi + rng.uniform(-NEAR_PI, NEAR_PI)
    if index is not None and index % 4 == 2:
        return 2 * math.pi + rng.uniform(-NEAR_PI, NEAR_PI)
    return rng.uniform(0.0, 4 * math.pi)


def _perpendicular_unit(rng: np.random.Generator, a: np.ndarray) -> np.ndarray:
    while True:
        v = rng.standard_normal(3)
        v = v - a * (a @ v)
        n = np.linalg.norm(v)
        if n > 1e-6:
            return v / n


def _inputs(index, p=None, spin=None, axis=None, phi=None, **extra) -> dict:
    out = {"draw": index}
    if p is not None:
        out["p"] = [float(x) for x in p.p]
        out["mass"] = p.m
    if spin is not None:
        out["spin"] = [float(x) for x in spin]
    if axis is not None:
        out["axis"] = [float(x) for x in axis]
    if phi is not None:
        out["phi"] = float(phi)
    out.update(extra)
    if p is not None and spin is not None and phi is not None:
        m = p.m
        vec = ",".join(repr(float(x) / m) for x in p.p)
        sv = ",".join(repr(float(x)) for x in spin)
        out["replay"] = f"spingroup factorize --mass {m!r} --p={vec} --spin={sv} --phi {float(phi)!r}"
    return out


# ---------------------------------------------------------------- properties


@dataclass(frozen=True)
class _Ctx:
    cfg: SuiteConfig
    gb: GammaBasis
    fault: str | None


@dataclass(frozen=True)
class Property:
    id: str
    anchor: str
    tol: str  # "strict", "accum" or "exact"; ignored for lower bounds
    fn: Callable[[np.random.Generator, int, _Ctx], tuple[float, dict]]
    bound: str = "upper"
    single: bool = False
    lower_value: float = 0.0

    def threshold(self, cfg: SuiteConfig) -> float:
        if self.bound == "lower":
            return self.lower_value
        return getattr(cfg, f"tol_{self.tol}")


def _anticommutation(rng, i, ctx):
    gb = ctx.gb
    worst = 0.0
    for a in range(4):
        for b in range(4):
            lhs = gb.gamma[a] @ gb.gamma[b] + gb.gamma[b] @ gb.gamma[a]
            worst = max(worst, max_abs(lhs - 2 * gb.metric[a, b] * IDENTITY))
    return worst, _inputs(i)


def _sigma_definition(rng, i, ctx):
    gb = ctx.gb
    worst = 0.0
    for a in range(4):
        for b in range(4):
            ref = 0.5 * (gb.gamma[a] @ gb.gamma[b] - gb.gamma[b] @ gb.gamma[a])
            worst = max(worst, max_abs(gb.sigma[a, b] - ref))
    return worst, _inputs(i)


def _hermiticity(rng, i, ctx):
    g = ctx.gb.gamma
    worst = max_abs(g[0].conj().T - g[0])
    for k in (1, 2, 3):
        worst = max(worst, max_abs(g[k].conj().T + g[k]))
    return worst, _inputs(i)


def _boost_oracle(rng, i, ctx):
    n, b = random_unit(rng), rng.uniform(0.0, 1.5)
    closed = exp_boost_closed(n, b, ctx.gb)
    return max_abs(closed - exp_series(b * ctx.gb.vec1(n))), _inputs(i, axis=n, b=b)


def _rotation_oracle(rng, i, ctx):
    a, theta = random_unit(rng), rng.uniform(0.0, 4 * math.pi)
    closed = exp_rotation_closed(a, theta, ctx.gb)
    return max_abs(closed - exp_series(theta / 2 * ctx.gb.vec2(a))), _inputs(i, axis=a, theta=theta)


def _random_transform(rng, gb):
    if rng.random() < 0.5:
        return exp_boost_closed(random_unit(rng), rng.uniform(0.0, 1.2), gb)
    return exp_rotation_closed(random_unit(rng), rng.uniform(0.0, 4 * math.pi), gb)


def _homomorphism(rng, i, ctx):
    s1, s2 = _random_transform(rng, ctx.gb), _random_transform(rng, ctx.gb)
    lam12 = vector_rep(s1 @ s2, ctx.gb)
    diff = max_abs(lam12 - vector_rep(s1, ctx.gb) @ vector_rep(s2, ctx.gb))
    return diff / max(1.0, max_abs(lam12)), _inputs(i)


def _metric_preservation(rng, i, ctx):
    s = _random_transform(rng, ctx.gb) @ _random_transform(rng, ctx.gb)
    lam = vector_rep(s, ctx.gb)
    g = ctx.gb.metric
    return max_abs(lam.T @ g @ lam - g) / max(1.0, max_abs(lam)) ** 2, _inputs(i)


def _boost_speed_rep(rng, i, ctx):
    n, b = random_unit(rng), rng.uniform(0.0, 1.2)
    lam = vector_rep(exp_boost_closed(n, b, ctx.gb), ctx.gb)
    beta = np.linalg.norm(lam[1:, 0]) / lam[0, 0]
    return abs(beta - math.tanh(2 * b)), _inputs(i, axis=n, b=b)


def _spin_invariants(rng, i, ctx):
    p, a = random_momentum(rng, ctx.cfg), random_unit(rng)
    s = boost_spin_axis(p, a)
    return max(abs(s.orthogonality()), abs(s.invariant() - 1.0)), _inputs(i, p=p, spin=a)


def _spin_square(rng, i, ctx):
    p, a = random_momentum(rng, ctx.cfg), random_unit(rng)
    sig = spin_operator(boost_spin_axis(p, a), ctx.gb)
    return max_abs(sig @ sig - IDENTITY), _inputs(i, p=p, spin=a)


def _conjugation_oracle(rng, i, ctx):
    p, a = random_momentum(rng, ctx.cfg), random_unit(rng)
    formula = spin_operator(boost_spin_axis(p, a), ctx.gb)
    return max_abs(formula - spin_tensor_by_conjugation(p, a, ctx.gb)), _inputs(i, p=p, spin=a)


def _contraction(rng, i, ctx):
    p, a = random_momentum(rng, ctx.cfg), random_unit(rng)
    return max_abs(momentum_spin_contraction(p, boost_spin_axis(p, a), ctx.gb)), _inputs(i, p=p, spin=a)


def _commutator(rng, i, ctx):
    p, a = random_momentum(rng, ctx.cfg), random_unit(rng)
    return max_abs(slash_spin_commutator(p, boost_spin_axis(p, a), ctx.gb)), _inputs(i, p=p, spin=a)


def _contraction_control(rng, i, ctx):
    p, a = random_momentum(rng, ctx.cfg), random_unit(rng)
    s = boost_spin_axis(p, a)
    shifted = FourMomentum(p.p + np.array([p.m, 0.0, 0.0]), p.m)
    return max_abs(momentum_spin_contraction(shifted, s, ctx.gb)), _inputs(i, p=p, spin=a)


def _pl_orthogonality(rng, i, ctx):
    p, a = random_momentum(rng, ctx.cfg), random_unit(rng)
    lam = pauli_lubanski(p, boost_spin_axis(p, a), ctx.gb)
    return abs(p.four_vector() @ ctx.gb.metric @ lam), _inputs(i, p=p, spin=a)


def _pl_invariance(rng, i, ctx):
    p, a = random_momentum(rng, ctx.cfg), random_unit(rng)
    g = ctx.gb.metric
    lam = pauli_lubanski(p, boost_spin_axis(p, a), ctx.gb)
    rest = FourMomentum.at_rest(p.m)
    lam0 = pauli_lubanski(rest, boost_spin_axis(rest, a), ctx.gb)
    return abs(lam @ g @ lam - lam0 @ g @ lam0), _inputs(i, p=p, spin=a)


def _dirac(rng, i, ctx):
    p, a = random_momentum(rng, ctx.cfg), random_unit(rng)
    psi = boost_bispinor(rest_bispinor(a, ctx.gb), p, ctx.gb)
    return dirac_residual(psi, p, ctx.gb), _inputs(i, p=p, spin=a)


def _spin_eigen(rng, i, ctx):
    p, a = random_momentum(rng, ctx.cfg), random_unit(rng)
    psi = boost_bispinor(rest_bispinor(a, ctx.gb), p, ctx.gb)
    return spin_eigen_residual(psi, boost_spin_axis(p, a), ctx.gb), _inputs(i, p=p, spin=a)


def _phase_setup(rng, i, ctx):
    p, a = random_momentum(rng, ctx.cfg), random_unit(rng)
    phi = PHASE_GRID[i % len(PHASE_GRID)]
    psi = boost_bispinor(rest_bispinor(a, ctx.gb), p, ctx.gb)
    el = element(axis_tensor(p, a), phi, ctx.gb)
    c, r = extract_phase(el.W, psi)
    return c, r, phi, _inputs(i, p=p, spin=a, phi=phi)


def _phase_law(rng, i, ctx):
    c, _, phi, inp = _phase_setup(rng, i, ctx)
    return abs(c - complex(math.cos(phi / 2), -math.sin(phi / 2))), inp


def _phase_eigen(rng, i, ctx):
    c, r, _, inp = _phase_setup(rng, i, ctx)
    return r, inp


def _phase_modulus(rng, i, ctx):
    c, _, _, inp = _phase_setup(rng, i, ctx)
    return abs(abs(c) - 1.0), inp


def _rest_determinism(rng, i, ctx):
    a = random_unit(rng)
    x, y = rest_bispinor(a, ctx.gb), rest_bispinor(a, ctx.gb)
    return (0.0 if x.tobytes() == y.tobytes() else math.inf), _inputs(i, spin=a)


def _little_setup(rng, i, ctx, near_pi=False):
    p, w = random_momentum(rng, ctx.cfg), random_unit(rng)
    phi = random_phi(rng, i if near_pi else None)
    return p, w, phi, element(axis_tensor(p, w), phi, ctx.gb)


def _momentum_invariance(rng, i, ctx):
    p, w, phi, el = _little_setup(rng, i, ctx)
    return momentum_residual(el, ctx.gb), _inputs(i, p=p, axis=w, phi=phi)


def _proper_orthochronous(rng, i, ctx):
    p, w, phi, el = _little_setup(rng, i, ctx)
    lam = vector_rep(el.W, ctx.gb)
    value = max(abs(np.linalg.det(lam) - 1.0), max(0.0, 1.0 - lam[0, 0])) / max(1.0, max_abs(lam)) ** 4
    return value, _inputs(i, p=p, axis=w, phi=phi)


def _spin_invariance(rng, i, ctx):
    p, a, phi, el = _little_setup(rng, i, ctx)
    return spin_conjugation_residual(el, boost_spin_axis(p, a), ctx.gb), _inputs(i, p=p, spin=a, phi=phi)


def _spin_control(rng, i, ctx):
    p, a = random_momentum(rng, ctx.cfg, p_min_over_m=0.5), random_unit(rng)
    w = _perpendicular_unit(rng, a)
    el = element(axis_tensor(p, w), math.pi / 2, ctx.gb)
    return spin_conjugation_residual(el, boost_spin_axis(p, a), ctx.gb), _inputs(i, p=p, spin=a, axis=w, phi=math.pi / 2)


def _flip(ctx):
    return ctx.fault == "flip-boost-sign"


def _factor_product(rng, i, ctx):
    p, w, phi, el = _little_setup(rng, i, ctx, near_pi=True)
    worst = 0.0
    for order in ("br", "rb"):
        f = factor(el, order, ctx.gb, verify=False, _flip_quadratic=_flip(ctx))
        worst = max(worst, max_abs(f.product() - el.W))
    return worst, _inputs(i, p=p, spin=w, phi=phi)


def _factor_polar(rng, i, ctx):
    p, w, phi, el = _little_setup(rng, i, ctx, near_pi=True)
    worst = 0.0
    for order in ("br", "rb"):
        f = factor(el, order, ctx.gb, verify=False, _flip_quadratic=_flip(ctx))
        g = polar_factor(el, order, ctx.gb)
        worst = max(worst, max_abs(f.boost_factor - g.boost_factor), max_abs(f.rotation_factor - g.rotation_factor))
    return worst, _inputs(i, p=p, spin=w, phi=phi)


def _rotation_order_independence(rng, i, ctx):
    p, w, phi, el = _little_setup(rng, i, ctx, near_pi=True)
    b_br = factor(el, "br", ctx.gb, verify=False, _flip_quadratic=_flip(ctx)).boost_factor
    b_rb = factor(el, "rb", ctx.gb, verify=False, _flip_quadratic=_flip(ctx)).boost_factor
    r_br = np.linalg.solve(b_br, el.W)
    r_rb = np.linalg.solve(b_rb.T, el.W.T).T
    return max_abs(r_br - r_rb), _inputs(i, p=p, spin=w, phi=phi)


def _boost_perp(rng, i, ctx):
    p, w, phi, el = _little_setup(rng, i, ctx, near_pi=True)
    t = el.axis
    w2hat = t.w2 / np.linalg.norm(t.w2)
    return max(abs(boost_vector(t, phi, s) @ w2hat) for s in (+1, -1)), _inputs(i, p=p, spin=w, phi=phi)


def _speed_symmetry(rng, i, ctx):
    p, w, phi, el = _little_setup(rng, i, ctx, near_pi=True)
    u_plus, u_minus = boost_speed_variants(el.axis, phi)
    return abs(u_plus - u_minus), _inputs(i, p=p, spin=w, phi=phi)


def _two_forms(rng, i, ctx):
    p, w, phi, el = _little_setup(rng, i, ctx, near_pi=True)
    t = el.axis
    worst = 0.0
    for s in (+1, -1):
        ref = boost_vector(t, phi, s, form="cross")
        worst = max(
            worst,
            max_abs(ref - boost_vector(t, phi, s, form="pperp")),
            max_abs(ref - boost_vector(t, phi, s, form="pperp", w2_squared=1.0 + t.w1 @ t.w1)),
        )
    return worst, _inputs(i, p=p, spin=w, phi=phi)


def _beta_vector_rep(rng, i, ctx):
    p, w, phi, el = _little_setup(rng, i, ctx, near_pi=True)
    worst = 0.0
    for order in ("br", "rb"):
        f = factor(el, order, ctx.gb, verify=False, _flip_quadratic=_flip(ctx))
        lam = vector_rep(f.boost_factor, ctx.gb)
        worst = max(worst, abs(np.linalg.norm(lam[1:, 0]) / lam[0, 0] - f.beta))
    return worst, _inputs(i, p=p, spin=w, phi=phi)


def _angle_consistency(rng, i, ctx):
    p, w, phi, el = _little_setup(rng, i, ctx, near_pi=True)
    worst = 0.0
    for order in ("br", "rb"):
        u = polar_factor(el, order, ctx.gb).rotation_factor
        worst = max(worst, abs(rotation_angle(el.axis, phi) - angle_from_rotation_factor(u, el.axis.w2, phi, ctx.gb)))
    return worst, _inputs(i, p=p, spin=w, phi=phi)


def _generator_square(rng, i, ctx):
    p, w = random_momentum(rng, ctx.cfg), random_unit(rng)
    g = generator(axis_tensor(p, w), ctx.gb)
    return max_abs(g @ g + IDENTITY), _inputs(i, p=p, axis=w)


def _closure(rng, i, ctx):
    p, a = random_momentum(rng, ctx.cfg), random_unit(rng)
    phi1, phi2 = random_phi(rng), random_phi(rng)
    return closure_check(p, a, phi1, phi2, ctx.gb), _inputs(i, p=p, spin=a, phi=phi1, phi2=phi2)


def _series_oracle(rng, i, ctx):
    p, w, phi, el = _little_setup(rng, i, ctx)
    g = generator(el.axis, ctx.gb)
    return max_abs(el.W - exp_series(g * (phi / 2))), _inputs(i, p=p, axis=w, phi=phi)


def _spinor_period(rng, i, ctx):
    p, w, phi, el = _little_setup(rng, i, ctx)
    w4 = element(el.axis, phi + 4 * math.pi, ctx.gb).W
    w2 = element(el.axis, phi + 2 * math.pi, ctx.gb).W
    return max(max_abs(w4 - el.W), max_abs(w2 + el.W)), _inputs(i, p=p, axis=w, phi=phi)


def _vector_period(rng, i, ctx):
    p, w, phi, el = _little_setup(rng, i, ctx)
    lam = vector_rep(el.W, ctx.gb)
    lam2 = vector_rep(element(el.axis, phi + 2 * math.pi, ctx.gb).W, ctx.gb)
    return max_abs(lam2 - lam), _inputs(i, p=p, axis=w, phi=phi)


PROPERTIES: tuple[Property, ...] = (
    Property("gamma-anticommutation", "Sec1-gamma-algebra", "exact", _anticommutation, single=True),
    Property("gamma-sigma-definition", "Sec1-sigma-def", "exact", _sigma_definition, single=True),
    Property("gamma-hermiticity", "Sec1-gamma-algebra", "exact", _hermiticity, single=True),
    Property("exp-boost-oracle", "boost-closed-form", "accum", _boost_oracle),
    Property("exp-rotation-oracle", "rotation-closed-form", "accum", _rotation_oracle),
    Property("vector-rep-homomorphism", "vector-rep", "accum", _homomorphism),
    Property("vector-rep-metric", "vector-rep", "accum", _metric_preservation),
    Property("vector-rep-boost-speed", "boost-speed-tanh2b", "accum", _boost_speed_rep),
    Property("spin-tensor-invariants", "spin-tensor", "strict", _spin_invariants),
    Property("spin-operator-square", "generator-square", "strict", _spin_square),
    Property("spin-tensor-conjugation", "spin-tensor-conjugation", "accum", _conjugation_oracle),
    Property("momentum-spin-contraction", "momentum-spin-transverse", "strict", _contraction),
    Property("momentum-spin-commutator", "momentum-spin-transverse", "strict", _commutator),
    Property("momentum-spin-mismatch-control", "momentum-spin-transverse", "", _contraction_control, bound="lower", lower_value=1e-2),
    Property("pauli-lubanski-orthogonality", "pauli-lubanski", "strict", _pl_orthogonality),
    Property("pauli-lubanski-invariance", "pauli-lubanski", "accum", _pl_invariance),
    Property("bispinor-dirac", "dirac-equation", "strict", _dirac),
    Property("bispinor-spin-eigen", "spin-eigenvector", "strict", _spin_eigen),
    Property("rest-bispinor-determinism", "rest-bispinor", "exact", _rest_determinism),
    Property("phase-law", "phase-law", "accum", _phase_law),
    Property("phase-eigen-residual", "phase-law", "strict", _phase_eigen),
    Property("phase-modulus", "phase-law", "strict", _phase_modulus),
    Property("little-group-momentum", "little-group", "accum", _momentum_invariance),
    Property("little-group-proper", "little-group", "accum", _proper_orthochronous),
    Property("spin-group-spin-invariance", "spin-invariance", "strict", _spin_invariance),
    Property("generic-axis-spin-control", "generic-axis", "", _spin_control, bound="lower", lower_value=1e-2),
    Property("factorization-product", "boost-rotation-split", "accum", _factor_product),
    Property("factorization-polar-oracle", "boost-rotation-split", "accum", _factor_polar),
    Property("rotation-order-independence", "shared-rotation", "exact", _rotation_order_independence),
    Property("boost-direction-perp", "boost-direction", "strict", _boost_perp),
    Property("boost-speed-symmetry", "same-speed", "exact", _speed_symmetry),
    Property("boost-numerator-forms", "boost-numerator", "strict", _two_forms),
    Property("boost-beta-vector-rep", "boost-speed", "accum", _beta_vector_rep),
    Property("rotation-angle-consistency", "rotation-angle", "accum", _angle_consistency),
    Property("generator-square", "generator-square", "strict", _generator_square),
    Property("group-closure", "one-parameter-subgroup", "strict", _closure),
    Property("element-series-oracle", "element-series", "accum", _series_oracle),
    Property("period-spinor-4pi", "double-cover", "strict", _spinor_period),
    Property("period-vector-2pi", "double-cover", "accum", _vector_period),
)


def _evaluate(prop: Property, index: int, ctx: _Ctx) -> tuple[float, dict]:
    rng = draw_rng(ctx.cfg.seed, prop.id, index)
    value, inputs = prop.fn(rng, index, ctx)
    return float(value), inputs


def run_suite(
    cfg: SuiteConfig | None = None,
    workers: int = 1,
    fault: str | None = None,
    gb: GammaBasis | None = None,
) -> SuiteReport:
    """Evaluate every property and collect a report.

    ``workers > 1`` spreads draws over a thread pool; results do not depend
    on it. ``fault`` injects a known defect (see ``FAULTS``) and exists for
    testing the suite itself.
    """
    cfg = cfg or SuiteConfig()
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}; expected one of {FAULTS}")
    ctx = _Ctx(cfg=cfg, gb=gb or basis(), fault=fault)

    jobs = [(prop, i) for prop in PROPERTIES for i in range(1 if prop.single else cfg.trials)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda job: _evaluate(job[0], job[1], ctx), jobs))
    else:
        results = [_evaluate(prop, i, ctx) for prop, i in jobs]

    grouped: dict[str, list[tuple[float, dict]]] = {}
    for (prop, _), res in zip(jobs, results):
        grouped.setdefault(prop.id, []).append(res)

    records = []
    for prop in sorted(PROPERTIES, key=lambda pr: pr.id):
        values = grouped[prop.id]
        threshold = prop.threshold(cfg)
        if prop.bound == "upper":
            worst_idx = max(range(len(values)), key=lambda k: (values[k][0], -k))
            worst = values[worst_idx][0]
            passed = bool(np.isfinite(worst) and worst <= threshold)
        else:
            worst_idx = min(range(len(values)), key=lambda k: (values[k][0], k))
            worst = values[worst_idx][0]
            passed = bool(worst >= threshold)
        records.append(
            PropertyRecord(
                id=prop.id,
                anchor=prop.anchor,
                trials=len(values),
                max_residual=worst,
                threshold=threshold,
                bound=prop.bound,
                passed=passed,
                counterexample=None if passed else values[worst_idx][1],
            )
        )
    return SuiteReport(
        records=records,
        passed=all(r.passed for r in records),
        config=asdict(cfg),
    )
