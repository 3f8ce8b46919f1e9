"""Command-line interface.

Subcommands: enumerate, transfer, series, identity, bezout, modular,
appendixc, accept.  Output is deterministic: exact values are printed as
num/den strings, floats with shortest round-trip repr, JSON with sorted
keys.  Exit codes: 0 success, 1 failed checks, 2 argument errors.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from .arith import gamma_dm, lambda_fsz, verify_master, verify_s1_s2
from .bezout import BezoutContext, kac_table_text, table_json_obj
from .characters import TauPoint
from .conformal import (Z_hv_bezout, Z_hv_direct, Z_hv_u1, appendix_c_form,
                        modular_rep_check, render_appendix_form)
from .lattice import census_counter, lattice_Z
from .model import ModelSpec
from .transfer import C_coefficients, markov_Z


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("TORUSLOOP_WORKERS", "1")))
    except ValueError:
        return 1


def _write(args, text: str):
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _add_model_args(sub, with_u=True):
    sub.add_argument("--kind", choices=("dense", "dilute"), default="dilute")
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--pq", type=int, required=True,
                     help="the coprime integer p' > p")
    if with_u:
        sub.add_argument("--u", type=float, default=None,
                         help="spectral parameter (default: isotropic point)")
    sub.add_argument("--alpha", type=float, default=1.0,
                     help="non-contractible loop fugacity")


def _model_from(args) -> ModelSpec:
    spec = ModelSpec(args.kind, args.p, args.pq, getattr(args, "u", 0.0) or 0.0,
                     alpha=args.alpha)
    if getattr(args, "u", None) is None:
        spec = spec.isotropic()
    return spec


def cmd_enumerate(args) -> int:
    spec = _model_from(args)
    counter = census_counter(spec.kind, args.M, args.N, workers=args.workers)
    lines = ["count,n_beta,class_i,class_j,n_wind,"
             + ",".join(f"n{t}" for t in range(1, 10)) + ",h,v"]
    for (n_beta, winds, counts, h, v), mult in counter:
        if winds:
            (ci, cj), nw = winds[0]
        else:
            ci = cj = nw = 0
        lines.append(
            f"{mult},{n_beta},{ci},{cj},{nw},"
            + ",".join(str(c) for c in counts) + f",{h},{v}")
    if args.with_z:
        z = lattice_Z(spec, args.M, args.N,
                      sector=tuple(args.sector) if args.sector else None,
                      workers=args.workers)
        lines.append(f"# Z = {z!r}")
    _write(args, "\n".join(lines))
    return 0


def cmd_transfer(args) -> int:
    spec = _model_from(args)
    table = []
    dmax = args.N if args.d is None else args.d
    dvals = range(args.N % 2 if spec.kind == "dense" else 0, dmax + 1,
                  2 if spec.kind == "dense" else 1)
    for d in dvals:
        C = C_coefficients(spec, args.N, args.M, d)
        for j in range(-args.M, args.M + 1):
            if C[j]:
                table.append({"d": d, "j": j, "value": repr(C[j])})
    sectors = {}
    hvs = [(args.N % 2, args.M % 2)] if spec.kind == "dense" else \
        [(0, 0), (0, 1), (1, 0), (1, 1)]
    for (h, v) in hvs:
        sectors[f"({h},{v})"] = repr(markov_Z(spec, args.M, args.N, h, v))
    _write(args, json.dumps({"C": table, "Z": sectors}, indent=2, sort_keys=True))
    return 0


def cmd_series(args) -> int:
    form = {"direct": Z_hv_direct, "u1": Z_hv_u1, "bezout": Z_hv_bezout}[args.form]
    series = form(args.p, args.pq, args.h, args.v, Fraction(args.cutoff))
    _write(args, json.dumps(series.to_json_obj(), indent=2, sort_keys=True))
    return 0


def cmd_identity(args) -> int:
    failures = []
    if args.check in ("gamma-lambda", "all"):
        worst = 0.0
        for d in range(1, args.dmax + 1):
            for m in range(1, d + 1):
                n = d // math.gcd(m, d)
                for g in (0.0, 0.3, 1.0, 2.6, math.pi - 0.1):
                    worst = max(worst, abs(gamma_dm(d, m, g)
                                           - 0.5 * lambda_fsz(d, n, g / math.pi)))
        ok = worst < 1e-10
        print(f"gamma-lambda: worst residual {worst!r} -> {'ok' if ok else 'FAIL'}")
        if not ok:
            failures.append("gamma-lambda")
    if args.check in ("s1s2", "all"):
        bad = [d for d in range(1, args.dmax + 1) if not verify_s1_s2(d, args.window)]
        print(f"s1s2: d <= {args.dmax}, window {args.window} -> "
              + ("ok" if not bad else f"FAIL at {bad}"))
        if bad:
            failures.append("s1s2")
    if args.check in ("master", "all"):
        bad = [(a, l) for a in range(1, args.amax + 1)
               for l in range(1, args.lmax + 1) if not verify_master(a, l)]
        print(f"master: a <= {args.amax}, l <= {args.lmax} -> "
              + ("ok" if not bad else f"FAIL at {bad[:5]}"))
        if bad:
            failures.append("master")
    return 1 if failures else 0


def cmd_bezout(args) -> int:
    ctx = BezoutContext(args.p, args.pq, args.h, args.v)
    if args.table:
        _write(args, kac_table_text(ctx))
    else:
        _write(args, json.dumps(table_json_obj(ctx), indent=2, sort_keys=True))
    return 0


def cmd_modular(args) -> int:
    if args.tau:
        taus = tuple(TauPoint(complex(re, im)) for re, im in args.tau)
    else:
        taus = tuple(TauPoint(complex(*pair)) for pair in
                     ((0.1, 0.9), (-0.4, 1.3), (0.5, 0.5)))
    rep = modular_rep_check(taus=taus, D_cutoff=args.cutoff)
    for key in sorted(rep):
        print(f"{key} = {rep[key]!r}")
    ok = (rep["S2_is_identity"] and rep["T2_is_identity"]
          and rep["ST3_is_identity"] and rep["T_sign_checks"]
          and rep["sector_covariance_residual"] < 1e-8
          and rep["character_S_residual"] < 1e-8)
    return 0 if ok else 1


def cmd_appendixc(args) -> int:
    blocks = []
    hvs = [(args.h, args.v)] if args.h is not None and args.v is not None else \
        [(0, 0), (0, 1), (1, 0), (1, 1)]
    for (h, v) in hvs:
        blocks.append(f"Z({args.p},{args.pq}) sector ({h},{v}):")
        blocks.append(render_appendix_form(appendix_c_form(args.p, args.pq, h, v)))
    _write(args, "\n".join(blocks))
    return 0


def cmd_accept(args) -> int:
    from .acceptance import run_suite
    from .golden import GOLDEN_APPENDIX_FORMS, GOLDEN_TABLE_CELLS
    ok = run_suite(GOLDEN_APPENDIX_FORMS, GOLDEN_TABLE_CELLS)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torusloop",
        description="Torus partition functions of dense and dilute loop models")
    parser.add_argument("--workers", type=int, default=_default_workers(),
                        help="worker-count hint for lattice enumeration")
    subs = parser.add_subparsers(dest="command", required=True)

    p_enum = subs.add_parser("enumerate", help="enumerate torus configurations")
    _add_model_args(p_enum)
    p_enum.add_argument("--M", type=int, required=True)
    p_enum.add_argument("--N", type=int, required=True)
    p_enum.add_argument("--sector", type=int, nargs=2, default=None)
    p_enum.add_argument("--with-z", action="store_true")
    p_enum.add_argument("--out", default=None)
    p_enum.set_defaults(func=cmd_enumerate)

    p_tr = subs.add_parser("transfer", help="transfer-matrix C_{d,j} and sector Z")
    _add_model_args(p_tr)
    p_tr.add_argument("--M", type=int, required=True)
    p_tr.add_argument("--N", type=int, required=True)
    p_tr.add_argument("--d", type=int, default=None,
                      help="largest defect number to tabulate (default N)")
    p_tr.add_argument("--out", default=None)
    p_tr.set_defaults(func=cmd_transfer)

    p_ser = subs.add_parser("series", help="exact sector series at alpha = 2")
    p_ser.add_argument("--p", type=int, required=True)
    p_ser.add_argument("--pq", type=int, required=True)
    p_ser.add_argument("--h", type=int, choices=(0, 1), required=True)
    p_ser.add_argument("--v", type=int, choices=(0, 1), required=True)
    p_ser.add_argument("--form", choices=("direct", "u1", "bezout"),
                       default="direct")
    p_ser.add_argument("--cutoff", type=Fraction, default=Fraction(8),
                       help="exponent cutoff, integer or num/den")
    p_ser.add_argument("--out", default=None)
    p_ser.set_defaults(func=cmd_series)

    p_id = subs.add_parser("identity", help="number-theoretic identity checks")
    p_id.add_argument("--check", choices=("gamma-lambda", "s1s2", "master", "all"),
                      default="all")
    p_id.add_argument("--dmax", type=int, default=12)
    p_id.add_argument("--window", type=int, default=25)
    p_id.add_argument("--amax", type=int, default=10)
    p_id.add_argument("--lmax", type=int, default=50)
    p_id.set_defaults(func=cmd_identity)

    p_bz = subs.add_parser("bezout", help="Bezout conjugate tables")
    p_bz.add_argument("--p", type=int, required=True)
    p_bz.add_argument("--pq", type=int, required=True)
    p_bz.add_argument("--h", type=int, choices=(0, 1), default=0)
    p_bz.add_argument("--v", type=int, choices=(0, 1), default=0)
    p_bz.add_argument("--table", action="store_true",
                      help="text layout instead of JSON")
    p_bz.add_argument("--out", default=None)
    p_bz.set_defaults(func=cmd_bezout)

    p_mod = subs.add_parser("modular", help="modular covariance report")
    p_mod.add_argument("--cutoff", type=int, default=40)
    p_mod.add_argument("--tau", type=float, nargs=2, action="append",
                       metavar=("RE", "IM"), help="sample point (repeatable)")
    p_mod.set_defaults(func=cmd_modular)

    p_app = subs.add_parser("appendixc", help="folded sesquilinear forms")
    p_app.add_argument("--p", type=int, required=True)
    p_app.add_argument("--pq", type=int, required=True)
    p_app.add_argument("--h", type=int, choices=(0, 1), default=None)
    p_app.add_argument("--v", type=int, choices=(0, 1), default=None)
    p_app.add_argument("--out", default=None)
    p_app.set_defaults(func=cmd_appendixc)

    p_acc = subs.add_parser("accept", help="run the acceptance suite")
    p_acc.add_argument("--suite", choices=("core",), default="core")
    p_acc.set_defaults(func=cmd_accept)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
