"""Command line front end.

    spingroup verify    [--seed N] [--trials N] [--tol-strict X] [--tol-accum X] [--json] [--out FILE]
    spingroup factorize --p X,Y,Z --spin X,Y,Z --phi PHI [--order br|rb] [--json]
    spingroup sweep     --p X,Y,Z --spin X,Y,Z [--phi-max PHI] [--steps N] [--out FILE]

Momentum components are given in units of the mass (``--mass``, default 1).
Negative components need the ``--p=-1,0,0`` spelling. Exit status is 0 on
success, 1 when a verification fails and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import __version__
from .bispinor import (
    boost_bispinor,
    dirac_residual,
    extract_phase,
    rest_bispinor,
    spin_eigen_residual,
)
from .clifford import basis, max_abs
from .harness import SuiteConfig, run_suite
from .little_group import (
    axis_tensor,
    boost_speed_variants,
    element,
    factor,
    momentum_residual,
    p_perp,
    polar_factor,
    spin_conjugation_residual,
)
from .spin_tensor import FourMomentum, RestSpinAxis

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SWEEP_HEADER = ["phi", "rot2r", "u", "beta", "bdir_x", "bdir_y", "bdir_z", "phase_re", "phase_im"]


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (value > 0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"must be positive and finite, got {text!r}")
    return value


def _finite_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"must be finite, got {text!r}")
    return value


def _vector(text: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated numbers, got {text!r}")
    return np.array([_finite_float(x) for x in parts])


def _fmt17(x: float) -> str:
    return format(float(x), ".17g")


def _matrix_json(m: np.ndarray) -> dict:
    return {"re": m.real.tolist(), "im": m.imag.tolist()}


def _matrix_text(name: str, m: np.ndarray) -> list[str]:
    lines = [f"{name}:"]
    for row in m:
        lines.append("  " + "  ".join(f"{z.real:+.9f}{z.imag:+.9f}j" for z in row))
    return lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spingroup", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mass", type=_positive_float, default=1.0, help="fermion mass (c = 1)")
    common.add_argument("--tol-strict", type=_positive_float, default=1e-10)
    common.add_argument("--tol-accum", type=_positive_float, default=1e-9)
    common.add_argument("--json", action="store_true", help="emit one JSON document")

    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="run the randomized property suite")
    verify.add_argument("--seed", type=int, default=SuiteConfig.seed)
    verify.add_argument("--trials", type=_positive_int, default=SuiteConfig.trials)
    verify.add_argument("--p-max", type=float, default=SuiteConfig.p_max_over_m, help="largest |p| / m drawn")
    verify.add_argument("--workers", type=_positive_int, default=1)
    verify.add_argument("--out", help="write the report here instead of standard output")

    element_flags = argparse.ArgumentParser(add_help=False)
    element_flags.add_argument("--p", type=_vector, required=True, help="spatial momentum / m as x,y,z")
    element_flags.add_argument("--spin", type=_vector, required=True, help="rest spin axis x,y,z (normalized)")

    fact = sub.add_parser("factorize", parents=[common, element_flags], help="factor one spin-group element")
    fact.add_argument("--phi", type=_finite_float, required=True)
    fact.add_argument("--order", choices=("br", "rb"), default="br")

    sweep = sub.add_parser("sweep", parents=[common, element_flags], help="tabulate factors over a phi grid")
    sweep.add_argument("--phi-max", type=_finite_float, default=4 * math.pi)
    sweep.add_argument("--steps", type=_positive_int, default=64)
    sweep.add_argument("--order", choices=("br", "rb"), default="br")
    sweep.add_argument("--out", default="-", help="CSV destination, '-' for standard output")
    return parser


def _write(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from exc


def _spin_axis(args) -> tuple[RestSpinAxis, float]:
    norm = float(np.linalg.norm(args.spin))
    if norm == 0.0:
        raise UsageError("--spin must be a non-zero vector")
    return RestSpinAxis.normalized(args.spin), norm


def cmd_verify(args) -> int:
    try:
        cfg = SuiteConfig(
            seed=args.seed,
            trials=args.trials,
            tol_strict=args.tol_strict,
            tol_accum=args.tol_accum,
            mass=args.mass,
            p_max_over_m=args.p_max,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = run_suite(cfg, workers=args.workers)
    _write(report.to_json() if args.json else report.to_text(), args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def factorize_document(p: FourMomentum, spin: RestSpinAxis, phi: float, order: str) -> dict:
    """Everything ``factorize`` reports, as plain Python data."""
    gb = basis()
    t = axis_tensor(p, spin)
    el = element(t, phi, gb)
    f = factor(el, order, gb)
    g = polar_factor(el, order, gb)
    psi = boost_bispinor(rest_bispinor(spin, gb), p, gb)
    phase, phase_res = extract_phase(el.W, psi)
    u_plus, u_minus = boost_speed_variants(t, phi)
    residuals = {
        "product": max_abs(f.product() - el.W),
        "polar_boost": max_abs(f.boost_factor - g.boost_factor),
        "polar_rotation": max_abs(f.rotation_factor - g.rotation_factor),
        "momentum": momentum_residual(el, gb),
        "spin_conjugation": spin_conjugation_residual(el, t, gb),
        "phase_eigen": phase_res,
        "phase_law": abs(phase - complex(math.cos(phi / 2), -math.sin(phi / 2))),
        "dirac": dirac_residual(psi, p, gb),
        "spin_eigen": spin_eigen_residual(psi, t, gb),
        "speed_symmetry": abs(u_plus - u_minus),
        "rotation_angle": abs(f.rotation_angle_2r - g.rotation_angle_2r),
    }
    return {
        "version": __version__,
        "input": {
            "mass": p.m,
            "p": p.p.tolist(),
            "p0": p.p0,
            "spin": spin.vec.tolist(),
            "phi": phi,
            "order": order,
        },
        "spin_tensor": {"s1": t.w1.tolist(), "s2": t.w2.tolist()},
        "p_perp": p_perp(p, t).tolist(),
        "W": _matrix_json(el.W),
        "boost_factor": _matrix_json(f.boost_factor),
        "rotation_factor": _matrix_json(f.rotation_factor),
        "rotation_angle_2r": f.rotation_angle_2r,
        "u": f.boost_param,
        "beta": f.beta,
        "boost_direction": f.boost_direction.tolist(),
        "phase": {"re": phase.real, "im": phase.imag},
        "residuals": residuals,
    }


def _factorize_text(doc: dict, spin_norm: float) -> str:
    inp = doc["input"]
    lines = [
        f"spingroup {doc['version']} factorize order={inp['order']}",
        f"mass = {inp['mass']!r}   p = {inp['p']}   p0 = {inp['p0']!r}",
        f"spin axis = {inp['spin']} (input norm {spin_norm!r})   phi = {inp['phi']!r}",
        f"s1 = {doc['spin_tensor']['s1']}   s2 = {doc['spin_tensor']['s2']}",
        f"p_perp = {doc['p_perp']}",
    ]
    for key in ("W", "boost_factor", "rotation_factor"):
        m = np.array(doc[key]["re"]) + 1j * np.array(doc[key]["im"])
        lines += _matrix_text(key, m)
    lines += [
        f"rotation angle 2r = {doc['rotation_angle_2r']:.12f}",
        f"|u|               = {doc['u']:.12f}",
        f"beta              = {doc['beta']:.12f}",
        f"boost direction   = {doc['boost_direction']}",
        f"phase <psi|W|psi> = {doc['phase']['re']:+.12f}{doc['phase']['im']:+.12f}j",
        "residuals:",
    ]
    lines += [f"  {k:<17} {v:.3e}" for k, v in doc["residuals"].items()]
    lines.append(f"overall: {'PASS' if doc['passed'] else 'FAIL'}")
    return "\n".join(lines)


def cmd_factorize(args) -> int:
    spin, spin_norm = _spin_axis(args)
    p = FourMomentum(args.p * args.mass, args.mass)
    doc = factorize_document(p, spin, args.phi, args.order)
    doc["input"]["spin_input"] = args.spin.tolist()
    doc["input"]["spin_input_norm"] = spin_norm
    doc["passed"] = all(v <= args.tol_accum for v in doc["residuals"].values())
    _write(json.dumps(doc, indent=2) if args.json else _factorize_text(doc, spin_norm), None)
    return EXIT_OK if doc["passed"] else EXIT_FAIL


def sweep_rows(p: FourMomentum, spin: RestSpinAxis, phi_max: float, steps: int, order: str = "br") -> list[list[float]]:
    """Rows of ``SWEEP_HEADER`` on ``steps + 1`` evenly spaced angles in ``[0, phi_max]``."""
    gb = basis()
    t = axis_tensor(p, spin)
    psi = boost_bispinor(rest_bispinor(spin, gb), p, gb)
    rows = []
    for phi in np.linspace(0.0, phi_max, steps + 1):
        el = element(t, float(phi), gb)
        f = factor(el, order, gb)
        phase, _ = extract_phase(el.W, psi)
        rows.append([float(phi), f.rotation_angle_2r, f.boost_param, f.beta, *f.boost_direction, phase.real, phase.imag])
    return rows


def cmd_sweep(args) -> int:
    if not args.phi_max > 0:
        raise UsageError("--phi-max must be positive")
    if args.steps < 2:
        raise UsageError("--steps must be at least 2")
    spin, _ = _spin_axis(args)
    p = FourMomentum(args.p * args.mass, args.mass)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for row in sweep_rows(p, spin, args.phi_max, args.steps, args.order):
        writer.writerow([_fmt17(x) for x in row])
    _write(buf.getvalue(), args.out)
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "factorize": cmd_factorize, "sweep": cmd_sweep}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags and 0 for --help / --version
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"spingroup {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
