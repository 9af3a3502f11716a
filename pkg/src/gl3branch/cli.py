"""Command line front end.

Exit codes: 0 success, 1 invalid input, 2 a verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from . import __version__
from .emit import bounded_triples, diagram_emit, table_emit
from .oracle import DEFAULT_CEILING, DEFAULT_SAMPLES, OracleLimitError, verify_report
from .poset import ConductorData, in_Tm, parse_triple
from .support import dim_U, dim_V, intertwine_V

SCHEMA = "gl3branch/1"

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2


class InputError(ValueError):
    pass


def _triple(text: str):
    try:
        return parse_triple(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gl3branch",
        description="Branching of ramified principal series of GL(3) to the maximal compact subgroup.",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--M", type=int, required=True, help="conductor of chi_2")
    common.add_argument("--N", type=int, required=True, help="conductor of chi_3")
    common.add_argument("--q0", type=int, help="also evaluate polynomials at this q (>= 4)")
    common.add_argument("--format", choices=["json", "csv", "dot", "text"])

    bounded = argparse.ArgumentParser(add_help=False)
    g = bounded.add_mutually_exclusive_group()
    g.add_argument("--bound", type=_triple, help="componentwise bound, e.g. 4,4,4")
    g.add_argument("--sum-max", type=int, help="bound on c1+c2+c3")

    p = sub.add_parser("list", parents=[common, bounded], help="enumerate T_m under a bound")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("dims", parents=[common, bounded], help="dimensions of U_c and V_c")
    p.add_argument("--triple", type=_triple, action="append", help="a single triple (repeatable)")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("intertwine", parents=[common], help="intertwining numbers for a pair")
    p.add_argument("--c", type=_triple, required=True)
    p.add_argument("--d", type=_triple, required=True)
    p.set_defaults(func=cmd_intertwine)

    p = sub.add_parser("diagram", parents=[common, bounded], help="DOT diagram of T_m")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("table", parents=[common, bounded], help="CSV table of dim V_c")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="compare with the finite group GL(3, Z/p^n)")
    p.add_argument("--p", type=int, default=5)
    p.add_argument("--level", type=int, default=1, choices=[1, 2])
    p.add_argument("--mode", choices=["exact", "enumerate", "sampled"], default="exact")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    p.add_argument("--c", type=_triple, help="restrict to one pair (needs --d)")
    p.add_argument("--d", type=_triple)
    p.set_defaults(func=cmd_verify)
    return ap


def _conductor(args) -> ConductorData:
    try:
        return ConductorData(args.M, args.N)
    except ValueError as e:
        raise InputError(str(e))


def _check_q0(args):
    if args.q0 is not None and args.q0 < 4:
        raise InputError(f"q0 must be at least 4, got {args.q0}")


def _triples(args, m):
    if args.bound is None and args.sum_max is None:
        raise InputError("give --bound or --sum-max")
    try:
        return bounded_triples(m, args.bound, args.sum_max)
    except ValueError as e:
        raise InputError(str(e))


def _require_Tm(t, m):
    if not in_Tm(t, m):
        raise InputError(f"{t} is not in T_m for m={m.m}")


def _poly(v, q0):
    out = {"coeffs": v.to_json(), "text": str(v)}
    if q0 is not None:
        out["at_q0"] = v.evaluate(q0)
    return out


def _dump(obj) -> str:
    return json.dumps({"schema": SCHEMA, **obj}, indent=2)


def cmd_list(args, out):
    m = _conductor(args)
    ts = _triples(args, m)
    if (args.format or "text") == "json":
        out.write(_dump({"M": m.M, "N": m.N, "triples": [list(t) for t in ts]}) + "\n")
    else:
        for t in ts:
            out.write(f"{t}\n")
    return EXIT_OK


def cmd_dims(args, out):
    m = _conductor(args)
    if args.triple:
        ts = args.triple
        for t in ts:
            _require_Tm(t, m)
    else:
        ts = _triples(args, m)
    rows = [(t, dim_U(t, m), dim_V(t, m)) for t in ts]
    fmt = args.format or "json"
    if fmt == "json":
        out.write(_dump({
            "M": m.M, "N": m.N, "q0": args.q0,
            "dims": [{"c": list(t), "dim_U": _poly(u, args.q0), "dim_V": _poly(v, args.q0)} for t, u, v in rows],
        }) + "\n")
    else:
        for t, u, v in rows:
            extra = "" if args.q0 is None else f"  [q={args.q0}: {u.evaluate(args.q0)}, {v.evaluate(args.q0)}]"
            out.write(f"{t}  dim U = {u}  dim V = {v}{extra}\n")
    return EXIT_OK


def cmd_intertwine(args, out):
    m = _conductor(args)
    _require_Tm(args.c, m)
    _require_Tm(args.d, m)
    rep = intertwine_V(args.c, args.d, m)
    fmt = args.format or "json"
    if fmt == "json":
        data = rep.to_json()
        if args.q0 is not None:
            data["i_UU_at_q0"] = rep.i_UU.evaluate(args.q0)
            data["i_VV_at_q0"] = rep.i_VV.evaluate(args.q0)
        out.write(_dump({"M": m.M, "N": m.N, **data}) + "\n")
    else:
        out.write(f"I(U_c,U_d) = {rep.i_UU}\nI(V_c,V_d) = {rep.i_VV}\n")
    return EXIT_OK


def cmd_diagram(args, out):
    m = _conductor(args)
    _triples(args, m)
    out.write(diagram_emit(m, args.bound, args.sum_max, args.q0))
    return EXIT_OK


def cmd_table(args, out):
    m = _conductor(args)
    _triples(args, m)
    out.write(table_emit(m, args.bound, args.sum_max, args.q0))
    return EXIT_OK


def cmd_verify(args, out):
    m = _conductor(args)
    if (args.c is None) != (args.d is None):
        raise InputError("--c and --d go together")
    pairs = None
    if args.c is not None:
        for t in (args.c, args.d):
            _require_Tm(t, m)
            if t[2] > args.level:
                raise InputError(f"{t} needs level >= {t[2]}")
        pairs = [(args.c, args.d)]
    if m.N > args.level:
        raise InputError(f"level {args.level} is below N={m.N}")
    t0 = time.perf_counter()
    try:
        reports = verify_report(
            args.p, m, pairs, level=args.level, mode=args.mode,
            seed=args.seed, samples=args.samples, ceiling=args.ceiling,
        )
    except (OracleLimitError, ValueError) as e:
        raise InputError(str(e))
    failed = [r for r in reports if r.status != "pass"]
    out.write(_dump({
        "p": args.p, "M": m.M, "N": m.N, "level": args.level, "mode": args.mode, "seed": args.seed,
        "pairs": [r.to_json() for r in reports],
        "passed": len(reports) - len(failed),
        "failed": len(failed),
        "seconds": round(time.perf_counter() - t0, 3),
    }) + "\n")
    return EXIT_MISMATCH if failed else EXIT_OK


def run_command(argv: Optional[list] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on bad usage; that slot is reserved for mismatches
        return EXIT_OK if e.code == 0 else EXIT_INVALID
    try:
        _check_q0(args)
        return args.func(args, out)
    except InputError as e:
        err.write(f"error: {e}\n")
        return EXIT_INVALID


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
