"""Command line: ``fewelfare gen|solve|eval|bench``.

Exit status: 0 success, 1 I/O or parse error, 2 precondition violation,
3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import generators
from .bench import format_bench, run_bench
from .io import (
    SolveReport,
    parse_instance,
    parse_partition,
    serialize_instance,
    serialize_partition,
)
from .model import PreconditionError, SizeCapError
from .oracle import DEFAULT_CAP
from .solve import ALGORITHMS, solve

FAMILIES = ["example", "random"] + [f.value for f in generators.Family]


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x]


def cmd_gen(args) -> None:
    if args.family != "example" and len(args.n) != 1:
        raise ValueError("--n must give exactly one size for gen")
    if args.family == "example":
        inst = generators.gen_paper_example()
    elif args.family == "random":
        (n,) = args.n
        inst = generators.gen_random(n, args.p, args.symmetric, args.ensure_friend, args.seed)
    else:
        (n,) = args.n
        inst = generators.gen_tight_family(args.family, n)
    _write(args.out, serialize_instance(inst))


def cmd_solve(args) -> None:
    inst = parse_instance(_read(args.inp))
    report = solve(inst, args.model, args.alg, seed=args.seed, oracle_cap=args.oracle_cap)
    _write(args.out, serialize_partition(report))


def cmd_eval(args) -> None:
    inst = parse_instance(_read(args.inp))
    part = parse_partition(_read(args.partition))
    if part.n != inst.n:
        raise PreconditionError(f"partition covers {part.n} agents, instance has {inst.n}")
    _write(args.out, serialize_partition(SolveReport.build(inst, part, args.model, "given")))


def cmd_bench(args) -> None:
    algs = [a for chunk in args.alg for a in chunk.split(",") if a]
    rows = run_bench(
        args.model, algs, args.family, args.n, args.trials, args.seed, args.oracle_cap,
        args.p, args.symmetric, args.ensure_friend,
    )
    _write(args.out, format_bench(rows))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fewelfare", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, model=True):
        if model:
            p.add_argument("--model", choices=["fa", "ea"], default="fa")
        p.add_argument("--out", default=None, help="output file (default stdout)")
        p.add_argument("--seed", type=int, default=0)

    g = sub.add_parser("gen", help="write an instance file")
    common(g, model=False)
    g.add_argument("--family", choices=FAMILIES, required=True)
    g.add_argument("--n", type=_int_list, default=[])
    g.add_argument("--p", type=Fraction, default=Fraction(1, 2))
    g.add_argument("--symmetric", action="store_true")
    g.add_argument("--no-ensure-friend", dest="ensure_friend", action="store_false")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="run one algorithm on an instance file")
    common(s)
    s.add_argument("--alg", choices=sorted(ALGORITHMS), required=True)
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--oracle-cap", type=int, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_solve)

    e = sub.add_parser("eval", help="score a partition file against an instance")
    common(e)
    e.add_argument("--in", dest="inp", required=True)
    e.add_argument("--partition", required=True)
    e.set_defaults(func=cmd_eval)

    b = sub.add_parser("bench", help="empirical approximation ratios as TSV")
    common(b)
    b.add_argument("--alg", action="append", required=True, help="name or comma list; repeatable")
    b.add_argument("--family", choices=FAMILIES[1:], required=True)
    b.add_argument("--n", type=_int_list, required=True, help="comma-separated sizes")
    b.add_argument("--p", type=Fraction, default=Fraction(1, 2))
    b.add_argument("--trials", type=int, default=1)
    b.add_argument("--oracle-cap", type=int, default=DEFAULT_CAP)
    b.add_argument("--symmetric", action="store_true")
    b.add_argument("--no-ensure-friend", dest="ensure_friend", action="store_false")
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
