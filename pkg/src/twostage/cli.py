"""Command line entry point.

Exit codes: 0 success, 1 usage or input error, 2 solver error (budget, overflow).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import io
from .bench import bench, format_table
from .dp_asym import solve_dp2
from .dp_exact import dp1_value, solve_dp1
from .fptas import approx_solve, parse_epsilon, scale_instance, select_solver
from .gen import GenSpec, generate
from .oracle import DEFAULT_BUDGET, BudgetExceeded, oracle_solve


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twostage", description="Two-stage jobs on identical two-stage flowshops.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="exact optimum")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--algo", choices=["dp1", "dp2", "auto"], default="auto")
    p.add_argument("--value-only", action="store_true", help="dp1 only: makespan without schedule")
    p.add_argument("--canonical", action="store_true", help="dp1 only: merge shop relabelings")
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("approx", help="(1+eps)-approximate schedule")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--eps", required=True, help="rational, e.g. 1/4")
    p.add_argument("--inner", choices=["dp1", "dp2", "auto"], default="auto")

    p = sub.add_parser("oracle", help="brute-force optimum")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("gen", help="seeded random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--tmax", type=int, required=True)
    p.add_argument("--zero-r", default="0")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("bench", help="run a benchmark grid")
    p.add_argument("--grid", required=True)
    p.add_argument("--out", required=True)
    return parser


def _read_instance(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return io.load_instance(text)
    except io.FormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _solve(args) -> dict:
    inst = _read_instance(args.infile)
    if args.threads < 1:
        raise UsageError("--threads must be >= 1")
    algo = select_solver(inst) if args.algo == "auto" else args.algo
    if algo != "dp1" and (args.value_only or args.canonical):
        raise UsageError("--value-only and --canonical apply to dp1 only")
    if args.value_only:
        value = dp1_value(inst, canonical=args.canonical, threads=args.threads)
        return io.result_to_dict(None, makespan=value, algo=algo, optimal=True)
    if algo == "dp1":
        sched = solve_dp1(inst, canonical=args.canonical, threads=args.threads)
    else:
        sched = solve_dp2(inst, threads=args.threads)
    return io.result_to_dict(sched, algo=algo, optimal=True)


def _approx(args) -> dict:
    inst = _read_instance(args.infile)
    try:
        eps = parse_epsilon(args.eps)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--eps: {exc}") from None
    sched = approx_solve(inst, eps, args.inner)
    exact = inst.n == 0 or scale_instance(inst, eps)[1]
    return io.result_to_dict(sched, algo=f"approx:{args.inner}", optimal=exact, ratio_bound=1 + eps)


def _oracle(args) -> dict:
    inst = _read_instance(args.infile)
    return io.result_to_dict(oracle_solve(inst, args.budget), algo="oracle", optimal=True)


def _gen(args) -> None:
    try:
        spec = GenSpec(args.n, args.m, args.rmax, args.tmax, Fraction(args.zero_r), args.seed)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None
    Path(args.out).write_text(io.save_instance(generate(spec)) + "\n", encoding="utf-8")


def _bench(args) -> None:
    try:
        grid = io.parse_json(Path(args.grid).read_text(encoding="utf-8"))
    except (OSError, io.FormatError) as exc:
        raise UsageError(f"{args.grid}: {exc}") from None
    rows = bench(grid)
    Path(args.out).write_text(json.dumps({"cells": rows}, indent=1) + "\n", encoding="utf-8")
    sys.stdout.write(format_table(rows))


def run_cli(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        handler = {"solve": _solve, "approx": _approx, "oracle": _oracle, "gen": _gen, "bench": _bench}
        doc = handler[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except (BudgetExceeded, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if doc is not None:
        sys.stdout.write(io.dump_result(doc))
    return 0


def main() -> None:
    sys.exit(run_cli())
