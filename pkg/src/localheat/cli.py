"""Command-line front end.

Exit status: 0 solved/feasible, 2 infeasible, 1 usage, I/O or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .bounds import first_violation, prefix_bounds
from .bounds import Infeasible
from .greedy import BadPermutation
from .harness import PRICE_MODES, format_bench, run_bench, run_fuzz
from .model import GeneratorParams, InstanceError, generate_instance
from .solvers import ALGORITHMS, solve

EXIT_OK, EXIT_ERROR, EXIT_INFEASIBLE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _infeasible_message(pb) -> str:
    t = first_violation(pb)
    return (f"infeasible: lower[{t}]={pb.lower[t]} > upper[{t}]={pb.upper[t]}; "
            "a schedule exists only if lower[t] <= upper[t] for every t")


def cmd_solve(args) -> int:
    inst = io.read_instance(args.instance, args.format)
    order = io.read_order(args.order_file) if args.order_file else None
    pb = prefix_bounds(inst)
    try:
        report = solve(inst, args.algorithm, order=order)
    except Infeasible as exc:
        msg = _infeasible_message(pb) if first_violation(pb) is not None else str(exc)
        print(msg, file=sys.stderr)
        return EXIT_INFEASIBLE
    out = {
        "algorithm": args.algorithm,
        "cost": report.schedule.cost,
        "runs": report.schedule.runs,
        "schedule": report.schedule.decisions.tolist(),
        "stats": report.stats,
        "elapsed_s": report.elapsed,
    }
    if args.emit_bounds:
        out["lower"] = pb.lower.tolist()
        out["upper"] = pb.upper.tolist()
    print(json.dumps(out))
    return EXIT_OK


def cmd_check(args) -> int:
    inst = io.read_instance(args.instance, args.format)
    pb = prefix_bounds(inst)
    t = first_violation(pb)
    if args.verbose:
        print("lower " + " ".join(map(str, pb.lower.tolist())))
        print("upper " + " ".join(map(str, pb.upper.tolist())))
    if t is None:
        print("feasible")
        return EXIT_OK
    print(_infeasible_message(pb) if args.verbose else "infeasible")
    if args.verbose:
        print(f"first violation at t={t}")
    return EXIT_INFEASIBLE


def cmd_generate(args) -> int:
    params = GeneratorParams(
        horizon=args.horizon,
        heat_range=(args.heat_min, args.heat_max),
        demand_scale=args.demand_scale,
        price_max=args.price_max,
        negative_fraction=args.negative_fraction,
        capacity=args.capacity,
        initial_fill=args.initial_fill,
        integral=not args.real,
    )
    inst = generate_instance(args.seed, params)
    if args.output:
        io.write_instance(inst, args.output, args.format)
    else:
        text = io.dumps_columns(inst) if args.format == "columns" else io.dumps_json(inst)
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return EXIT_OK


def cmd_fuzz(args, engines=None) -> int:
    res = run_fuzz(args.count, args.t_min, args.t_max, args.seed, args.price_mode,
                   engines=engines)
    if res.ok:
        print(f"ok: {res.checked} instances, {res.feasible} feasible")
        return EXIT_OK
    print(f"DISAGREEMENT at seed {res.seed}: {res.failure}", file=sys.stderr)
    print(f"reproduce with: localheat fuzz --count 1 --seed {res.seed} "
          f"--t-min {args.t_min} --t-max {args.t_max} --price-mode {args.price_mode}",
          file=sys.stderr)
    if args.dump:
        io.write_instance(res.instance, args.dump, "json")
        print(f"instance written to {args.dump}", file=sys.stderr)
    else:
        print(io.dumps_json(res.instance), file=sys.stderr)
    return EXIT_ERROR


def cmd_bench(args) -> int:
    rows = run_bench(args.sizes, args.engines, args.repeats, args.presorted, args.seed)
    print(format_bench(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="localheat", description="Cheapest on/off schedules for a buffered heater.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def instance_args(sp):
        sp.add_argument("instance", help="instance file (JSON or columnar text)")
        sp.add_argument("--format", choices=("json", "columns"), default=None)

    sp = sub.add_parser("solve", help="compute an optimal schedule")
    instance_args(sp)
    sp.add_argument("--algorithm", choices=ALGORITHMS, default="dsu")
    sp.add_argument("--order-file", help="precomputed 1-based visiting order")
    sp.add_argument("--emit-bounds", action="store_true", help="include the tightened bounds")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("check", help="decide feasibility")
    instance_args(sp)
    sp.add_argument("--verbose", action="store_true")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("generate", help="write a random instance")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--horizon", type=int, default=24)
    sp.add_argument("--heat-min", type=float, default=1)
    sp.add_argument("--heat-max", type=float, default=4)
    sp.add_argument("--demand-scale", type=float, default=1.0)
    sp.add_argument("--price-max", type=float, default=10)
    sp.add_argument("--negative-fraction", type=float, default=0.0)
    sp.add_argument("--capacity", type=float, default=None)
    sp.add_argument("--initial-fill", type=float, default=0.0)
    sp.add_argument("--real", action="store_true", help="real-valued demand and prices")
    sp.add_argument("--format", choices=("json", "columns"), default="json")
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("fuzz", help="differential test of all engines against the oracles")
    sp.add_argument("--count", type=int, default=1000)
    sp.add_argument("--t-min", type=int, default=1)
    sp.add_argument("--t-max", type=int, default=12)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--price-mode", choices=tuple(PRICE_MODES), default="mixed")
    sp.add_argument("--dump", help="write a failing instance here")
    sp.set_defaults(func=cmd_fuzz)

    sp = sub.add_parser("bench", help="time the engines and fit growth exponents")
    sp.add_argument("--sizes", type=int, nargs="+", default=[2**12, 2**13, 2**14])
    sp.add_argument("--repeats", type=int, default=3)
    sp.add_argument("--engines", nargs="+", choices=("naive", "tree", "dsu"), default=["dsu"])
    sp.add_argument("--presorted", action=argparse.BooleanOptionalAction, default=True,
                    help="exclude the price sort from the timings")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, InstanceError, BadPermutation, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
