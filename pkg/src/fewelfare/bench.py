"""Empirical approximation ratios against the exhaustive oracle."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .generators import Family, gen_random, gen_tight_family
from .io import rational
from .model import Instance, Model
from .oracle import DEFAULT_CAP, exact_max_esw
from .solve import algorithm_value, solve

HEADER = ("family", "n", "seed", "algorithm", "alg_value", "opt_value", "ratio")

Ratio = Union[Fraction, str]  # a rational, "infinite" or "uncomputed"


@dataclass(frozen=True)
class BenchRow:
    family: str
    n: int
    seed: int
    algorithm: str
    alg_value: Fraction
    opt_value: Optional[Fraction]
    ratio: Ratio

    def cells(self) -> list[str]:
        opt = "uncomputed" if self.opt_value is None else rational(self.opt_value)
        ratio = self.ratio if isinstance(self.ratio, str) else rational(self.ratio)
        return [self.family, str(self.n), str(self.seed), self.algorithm,
                rational(self.alg_value), opt, ratio]


def ratio_of(opt: Optional[Fraction], alg: Fraction) -> Ratio:
    if opt is None:
        return "uncomputed"
    if alg > 0:
        return opt / alg
    # both zero: the algorithm matched the optimum
    return Fraction(1) if opt == alg else "infinite"


def make_instance(family: str, n: int, seed: int, p: Fraction, symmetric: bool,
                  ensure_friend: bool) -> Instance:
    if family == "random":
        return gen_random(n, p, symmetric=symmetric, ensure_friend=ensure_friend, seed=seed)
    return gen_tight_family(Family(family), n)


def run_bench(
    model: Model | str,
    algorithms: Iterable[str],
    family: str,
    sizes: Iterable[int],
    trials: int = 1,
    seed: int = 0,
    oracle_cap: int = DEFAULT_CAP,
    p: Fraction = Fraction(1, 2),
    symmetric: bool = False,
    ensure_friend: bool = True,
) -> list[BenchRow]:
    """One row per (size, trial, algorithm), in that order.

    Trial ``t`` uses seed ``seed + t``; tight families ignore the seed.
    """
    model = Model(model)
    algorithms = list(algorithms)
    if family != "random":
        family = Family(family).value
    rows = []
    for n in sizes:
        for t in range(trials):
            s = seed + t
            inst = make_instance(family, n, s, p, symmetric, ensure_friend)
            opt = exact_max_esw(inst, model, oracle_cap).best_value if n <= oracle_cap else None
            for name in algorithms:
                value = algorithm_value(solve(inst, model, name, seed=s, oracle_cap=oracle_cap))
                rows.append(BenchRow(family, n, s, name, value, opt, ratio_of(opt, value)))
    return rows


def summarize(rows: Iterable[BenchRow]) -> dict[tuple[str, int], Ratio]:
    """Largest observed ratio per (algorithm, n); "infinite" beats any rational."""
    best: dict[tuple[str, int], Ratio] = {}
    for row in rows:
        if row.ratio == "uncomputed":
            continue
        key = (row.algorithm, row.n)
        cur = best.get(key)
        if cur is None or row.ratio == "infinite" or (cur != "infinite" and row.ratio > cur):
            best[key] = row.ratio
    return best


def format_bench(rows: list[BenchRow]) -> str:
    lines = ["\t".join(HEADER)]
    lines += ["\t".join(r.cells()) for r in rows]
    lines.append("# summary: algorithm n max_ratio")
    for (alg, n), r in summarize(rows).items():
        lines.append(f"# {alg}\t{n}\t{r if isinstance(r, str) else rational(r)}")
    return "\n".join(lines) + "\n"
