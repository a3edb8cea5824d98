"""Command-line interface.

Commands: ``omega``, ``bound``, ``verify``, ``oracle``, ``scan-theta`` and
``export``. Exit codes: 0 success, 1 violations found (``verify``),
2 usage or validation errors.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import _backend
from .bounds import jpdd_bound, verify_uur
from .errors import UURError
from .fixtures import FIG7_COS, FIG7_SIN, REORTHO_TOL, preset, read_unitary, write_unitary
from .linalg import unitarity_deviation
from .majorization import UncertaintyMeasure
from .measurement import BasisPair, gram_schmidt
from .omega import DEFAULT_DIM_CAP, omega_vector
from .oracle import brute_force_omega_k


class UsageError(Exception):
    pass


def _fmt(x: float) -> str:
    return f"{x:.10f}"


def _load_pair(args) -> BasisPair:
    path = args.unitary_pos or args.unitary
    if path and args.preset:
        raise UsageError("give either a unitary file or --preset, not both")
    if path:
        try:
            return read_unitary(path, reorthonormalize=args.reorthonormalize)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot load {path}: {exc}") from None
    if args.preset:
        try:
            return preset(args.preset, args.theta)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    raise UsageError("no input: give a unitary JSON file or --preset")


def _describe(pair: BasisPair) -> list[str]:
    meta = pair.metadata
    src = meta.get("preset") or meta.get("source", "?")
    lines = [f"input: {src}  d={pair.dim}" + (f"  theta={meta['theta']!r}" if "theta" in meta else "")]
    if meta.get("reorthonormalized"):
        lines.append(f"reorthonormalized: pre-correction deviation {meta['pre_correction_deviation']:.6e}")
    return lines


def _measure(args) -> UncertaintyMeasure:
    try:
        return UncertaintyMeasure.parse(args.measure, args.log_base)
    except UURError as exc:
        raise UsageError(str(exc)) from None


def cmd_omega(args) -> int:
    pair = _load_pair(args)
    omega, table = omega_vector(pair, args.dim_cap)
    out = _describe(pair)
    out.append(f"backend: {_backend.BACKEND}")
    out.append(f"{'k':>3}  {'Omega_k':>14}  {'raw':>14}  argmax partition")
    for k in range(pair.dim):
        part = ",".join(map(str, table.argmax_partition[k]))
        out.append(f"{k + 1:>3}  {_fmt(table.omega_k[k]):>14}  {_fmt(table.raw_omega_k[k]):>14}  ({part})")
    out.append("omega: " + " ".join(_fmt(x) for x in omega))
    for f in table.findings:
        out.append(f"finding: {f}")
    print("\n".join(out))
    return 0


def cmd_bound(args) -> int:
    m = _measure(args)
    pair = _load_pair(args)
    rep = jpdd_bound(pair, m, args.dim_cap)
    out = _describe(pair)
    out += [
        f"measure: {rep.measure}  log base: {rep.measure.log_base}",
        f"c: {_fmt(rep.c)}",
        f"b_mu: {_fmt(rep.b_mu)}",
        f"b_jpdd: {_fmt(rep.b_jpdd)}",
    ]
    if rep.piecewise_branch is not None:
        out.append(f"branch: {rep.piecewise_branch}  (classification as stated, dimension-generic)")
        out.append(f"piecewise bound: {_fmt(rep.piecewise_value)}")
    for w in rep.warnings:
        out.append(f"warning: {w}")
    print("\n".join(out))
    return 0


def cmd_verify(args) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    pair = _load_pair(args)
    rep = verify_uur(pair, args.samples, args.seed, args.tol)
    out = _describe(pair)
    out += [
        f"samples: {rep.samples}  seed: {rep.seed}  tol: {args.tol:g}",
        f"majorization violations: {rep.violations_majorization}",
        f"worst prefix deficit: {rep.worst_prefix_deficit:.6e}",
        f"entropy violations: {rep.violations_entropy}",
        f"worst entropy gap: {rep.worst_entropy_gap:.6e}",
    ]
    if rep.violating_indices:
        out.append("violating sample indices: " + " ".join(map(str, rep.violating_indices)))
    print("\n".join(out))
    return 1 if (rep.violations_majorization or rep.violations_entropy) else 0


def cmd_oracle(args) -> int:
    pair = _load_pair(args)
    if not 1 <= args.k <= pair.dim:
        raise UsageError(f"--k must be in 1..{pair.dim}")
    exhaustive = {"auto": None, "all": True, "partition": False}[args.regions]
    rep = brute_force_omega_k(pair, args.k, args.starts, args.seed, exhaustive, tol=args.oracle_tol)
    cells = " ".join(f"({i},{j})" for i, j in sorted(rep.best_region))
    out = _describe(pair)
    out += [
        f"k: {rep.k}  regions: {'all' if rep.exhaustive else 'partition-shaped'} ({rep.regions_searched})"
        f"  starts: {rep.starts_used}  seed: {args.seed}",
        f"oracle: {_fmt(rep.oracle_value)}",
        f"formula: {_fmt(rep.formula_value)}",
        f"gap (formula - oracle): {rep.gap:.6e}",
        f"best region: {cells}",
        f"best region partition-shaped: {str(rep.best_region_is_partition_shaped).lower()}",
        f"best partition-shaped value: {_fmt(rep.best_partition_value)}",
        f"converged: {str(rep.converged).lower()}",
    ]
    print("\n".join(out))
    return 0


def _template_family(path):
    """``{"dim": d, "cos": M, "sin": M}`` with [re, im] entries; U = cos*M_c + sin*M_s."""
    try:
        doc = json.loads(Path(path).read_text())
        d = int(doc["dim"])
        parts = []
        for key in ("cos", "sin"):
            a = np.asarray(doc[key], dtype=float)
            if a.shape != (d, d, 2):
                raise ValueError(f"'{key}' must be {d}x{d} [re, im] pairs")
            parts.append(a[..., 0] + 1j * a[..., 1])
    except (OSError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"cannot load template {path}: {exc}") from None
    return parts[0], parts[1], str(path)


def scan_rows(mc, ms, thetas, m: UncertaintyMeasure, dim_cap=DEFAULT_DIM_CAP):
    rows, worst_dev = [], 0.0
    for theta in thetas:
        raw = mc * math.cos(theta) + ms * math.sin(theta)
        dev = unitarity_deviation(raw)
        if dev > REORTHO_TOL:
            raise UsageError(f"template at theta={theta!r} is {dev:.3e} from unitary (limit {REORTHO_TOL})")
        worst_dev = max(worst_dev, dev)
        pair = BasisPair(gram_schmidt(raw))
        rep = jpdd_bound(pair, m, dim_cap)
        rows.append((float(theta), rep.c, rep.b_jpdd, rep.b_mu))
    return rows, worst_dev


def cmd_scan_theta(args) -> int:
    if args.steps < 2:
        raise UsageError("--steps must be >= 2")
    if not (math.isfinite(args.theta_from) and math.isfinite(args.theta_to)) or args.theta_from == args.theta_to:
        raise UsageError("--from and --to must be finite and different")
    m = _measure(args)
    if args.unitary_template:
        mc, ms, source = _template_family(args.unitary_template)
    elif args.preset in (None, "fig7"):
        mc, ms, source = FIG7_COS, FIG7_SIN, "fig7"
    else:
        raise UsageError("scan-theta needs --preset fig7 or --unitary-template")
    thetas = np.linspace(args.theta_from, args.theta_to, args.steps, endpoint=False)
    rows, worst_dev = scan_rows(mc, ms, thetas, m, args.dim_cap)

    text = "theta,c,b_jpdd,b_mu\n" + "".join(",".join(repr(x) for x in r) + "\n" for r in rows)
    meta = {
        "source": source,
        "measure": str(m),
        "log_base": m.log_base,
        "from": args.theta_from,
        "to": args.theta_to,
        "steps": args.steps,
        "endpoint": False,
        "reorthonormalized": True,
        "max_pre_correction_deviation": worst_dev,
    }
    out = Path(args.out)
    try:
        out.write_text(text)
        Path(str(out) + ".meta.json").write_text(json.dumps(meta, indent=1) + "\n")
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from None
    jumps = np.abs(np.diff([r[2] for r in rows]))
    print(f"wrote {len(rows)} rows to {out}")
    print(f"max pre-correction deviation: {worst_dev:.6e}")
    print(f"max adjacent b_jpdd jump: {float(jumps.max()):.6e}")
    return 0


def cmd_export(args) -> int:
    pair = _load_pair(args)
    try:
        write_unitary(pair, args.out)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from None
    print(f"wrote {pair.dim}x{pair.dim} unitary to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("unitary_pos", nargs="?", metavar="UNITARY", help="JSON unitary file")
    common.add_argument("--unitary", help="JSON unitary file")
    common.add_argument("--preset", help="identity[:d] | hadamard | fourier:d | fig7 | rotation:c")
    common.add_argument("--theta", type=float, default=0.0, help="angle for the fig7 preset")
    common.add_argument("--reorthonormalize", action="store_true",
                        help=f"accept files within {REORTHO_TOL:g} of unitary and correct them")
    common.add_argument("--tol", type=float, default=1e-9)
    common.add_argument("--seed", type=int, default=1)
    common.add_argument("--dim-cap", type=int, default=DEFAULT_DIM_CAP)

    measure = argparse.ArgumentParser(add_help=False)
    measure.add_argument("--measure", default="shannon", help="shannon | renyi:ALPHA | tsallis:Q")
    measure.add_argument("--log-base", choices=["e", "2"], default="e",
                         type=lambda s: {"natural": "e", "ln": "e", "two": "2"}.get(s, s))

    parser = argparse.ArgumentParser(prog="uurjpdd", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("omega", parents=[common], help="print Omega_k and the majorization vector")
    p.set_defaults(func=cmd_omega)
    p = sub.add_parser("bound", parents=[common, measure], help="entropic lower bounds")
    p.set_defaults(func=cmd_bound)
    p = sub.add_parser("verify", parents=[common], help="audit the majorization on Haar states")
    p.add_argument("--samples", type=int, default=10_000)
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("oracle", parents=[common], help="brute-force Omega_k for small d")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--starts", type=int, default=64)
    p.add_argument("--regions", choices=["auto", "all", "partition"], default="auto")
    p.add_argument("--oracle-tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_oracle)
    p = sub.add_parser("scan-theta", parents=[common, measure], help="CSV of bounds along a theta family")
    p.add_argument("--unitary-template", help='JSON {"dim", "cos", "sin"} family')
    p.add_argument("--from", dest="theta_from", type=float, default=0.0)
    p.add_argument("--to", dest="theta_to", type=float, default=2 * math.pi)
    p.add_argument("--steps", type=int, default=200)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_scan_theta)
    p = sub.add_parser("export", parents=[common], help="write the selected unitary as JSON")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, UURError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
