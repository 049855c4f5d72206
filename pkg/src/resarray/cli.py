"""``resarray`` command line: bench, verify and game subcommands.

Exit status is 0 on success, 1 when a check fails and 2 on bad usage.
"""

from __future__ import annotations

import argparse
import csv
import sys
from fractions import Fraction
from typing import List, Optional

from . import game
from .bench import IMPLS, WorkloadError, WorkloadSpec, run_bench
from .checks import SUITES, run_suite


def _fraction(text: str) -> Fraction:
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError("alpha must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="resarray", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bench", help="run a workload and write measurements as CSV")
    b.add_argument("--impl", required=True, choices=IMPLS)
    b.add_argument("--r", type=int, default=3, help="levels of the tiered structure (2..8)")
    b.add_argument("--alpha", type=_fraction, default=Fraction(1),
                   help="expansion factor of the geometric array, e.g. 1 or 1/2")
    b.add_argument("--b0", type=int, default=4, help="initial block size B")
    b.add_argument("--chunk", default=None,
                   help="chunk threshold T: a power of 2, 'auto' or 'none'")
    b.add_argument("--ops", required=True,
                   help="workload, e.g. grow:100000 or mix:10000:0.6:1,shrink:50")
    b.add_argument("--sample", type=int, default=1000, help="emit a row every SAMPLE ops")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--csv", default="-", help="output path ('-' for stdout)")

    v = sub.add_parser("verify", help="run an invariant suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--scale", type=float, default=1.0,
                   help="multiply array sizes (smaller is faster)")

    g = sub.add_parser("game", help="growth game solver")
    g.add_argument("action", choices=("solve", "replay", "counter", "sweep"))
    g.add_argument("--n", type=int, default=None, help="number of items N")
    g.add_argument("--k", type=int, default=None, help="number of subarrays")
    g.add_argument("--l", type=int, default=0, help="allowed vacancies")
    g.add_argument("--steps", type=int, default=None, help="counter increments")
    g.add_argument("--nmax", type=int, default=20)
    g.add_argument("--kmax", type=int, default=4)
    return p


def cmd_bench(args, parser) -> int:
    try:
        spec = WorkloadSpec(ops=args.ops, impl=args.impl, r=args.r, alpha=args.alpha,
                            b0=args.b0, chunk=args.chunk, seed=args.seed)
        if args.csv == "-":
            run_bench(spec, args.sample, sys.stdout)
        else:
            with open(args.csv, "w", newline="") as fh:
                run_bench(spec, args.sample, fh)
    except WorkloadError as e:
        parser.error(str(e))
    return 0


def _fmt(a) -> str:
    return "(" + ",".join(str(x) for x in a) + ")"


def cmd_game(args, parser) -> int:
    def need(name, lo):
        val = getattr(args, name)
        if val is None or val < lo:
            parser.error(f"game {args.action} needs --{name} >= {lo}")
        return val

    if args.l < 0:
        parser.error("--l must be >= 0")
    if args.action == "solve":
        N, k, l = need("n", 0), need("k", 1), args.l
        if l == 0:
            cost = game.cost_closed_form(N, k)
            n = game.rank_n(N, k)
            state = game.pick_optimal_state(N, k).a
        elif N % (l + 1) == 0:
            cost = game.cost_with_slack(N, k, l)
            n = game.rank_n(N // (l + 1), k)
            state = tuple((l + 1) * x for x in game.pick_optimal_state(N // (l + 1), k).a)
        else:
            table = game.oracle_min_cost(N, k, l)
            cost, n = table.value, ""
            state = min(table.optimal_states()).a
        amort = f"{cost / N:.6f}" if N else "0"
        print(f"N={N} k={k} l={l} n={n} cost={cost} amortized={amort}")
        print(f"state={_fmt(state)}")
        return 0
    if args.action == "replay":
        N, k = need("n", 0), need("k", 1)
        if args.l:
            parser.error("replay is defined for --l 0 only")
        total = 0
        for step, mv in enumerate(game.optimal_replay(N, k), 1):
            total += mv.cost
            print(f"{step} {mv.kind}[{mv.index}] cost={mv.cost} state={_fmt(mv.state.a)}")
        print(f"total={total}")
        return 0
    if args.action == "counter":
        k, steps = need("k", 1), need("steps", 0)
        ctr = game.counter_init(k)
        for step in range(1, steps + 1):
            a, b, cost = game.counter_increment(ctr)
            print(f"{step} a={_fmt(a)} b={_fmt(b)} cost={cost}")
        return 0
    # sweep
    nmax, kmax, l = args.nmax, args.kmax, args.l
    if nmax < 1 or kmax < 1:
        parser.error("--nmax and --kmax must be >= 1")
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["N", "k", "l", "n", "cost", "amortized"])
    ok = True
    for k in range(1, kmax + 1):
        try:
            table = game.oracle_min_cost(nmax, k, l)
        except game.ResourceLimit as e:
            parser.error(f"oracle too large: {e}")
        for N in range(1, nmax + 1):
            cost = table.best[N]
            if N % (l + 1) == 0:
                n = game.rank_n(N // (l + 1), k)
                ok &= cost == game.cost_with_slack(N, k, l)
            else:
                n = ""
            w.writerow([N, k, l, n, cost, f"{cost / N:.6f}"])
    if not ok:
        print("closed form disagrees with the oracle", file=sys.stderr)
    return 0 if ok else 1


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "bench":
        return cmd_bench(args, parser)
    if args.command == "verify":
        if args.scale <= 0:
            parser.error("--scale must be positive")
        return 0 if run_suite(args.suite, args.scale) else 1
    return cmd_game(args, parser)


if __name__ == "__main__":
    sys.exit(main())
