"""Algorithm registry shared by the CLI and the benchmark harness."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import ea, fa
from .io import SolveReport, rational
from .model import Instance, Model, Partition, PreconditionError
from .oracle import DEFAULT_CAP, exact_max_esw

FRIENDLESS_NOTE = "some agent has no friends: all singletons is optimal with welfare 0"


@dataclass(frozen=True)
class Algorithm:
    name: str
    models: tuple[Model, ...]
    run: Callable[..., SolveReport]


def _simple(name: str, solver: Callable[[Instance], Partition]) -> Callable[..., SolveReport]:
    def run(inst: Instance, model: Model, **_) -> SolveReport:
        return SolveReport.build(inst, solver(inst), model, name)
    return run


def _randalgo(inst: Instance, model: Model, seed: int = 0, **_) -> SolveReport:
    out = fa.rand_algo(inst)
    expected = fa.expected_utilities(inst, out)
    randomized = {
        "alpha": rational(out.alpha),
        "v": None if out.v is None else rational(out.v),
        "branches": [
            {"algorithm": name, "probability": rational(p), "coalitions": [list(c) for c in part]}
            for name, (part, p) in zip(("weaklyconn", "oneweaklyconn"), out.branches)
        ],
        "expected_utilities": [rational(u) for u in expected],
        "min_expected_utility": rational(min(expected)),
        "sample_seed": seed,
    }
    return SolveReport.build(inst, fa.sample(out, seed), model, "randalgo", randomized=randomized)


def _symmetric(inst: Instance, model: Model, **_) -> SolveReport:
    part, tr = fa.symmetric_approx(inst)
    trace = None
    if tr is not None:
        trace = {
            "roots": sorted(tr.roots),
            "closed_ones": sorted(tr.closed_ones),
            "stars": {str(r): sorted(s) for r, s in sorted(tr.stars.items())},
            "lonely": sorted(tr.lonely),
            "residual": sorted(tr.residual),
            "residual_final": sorted(tr.residual_final),
            "kappa": tr.kappa,
        }
    return SolveReport.build(inst, part, model, "symmetric", trace=trace)


def _ea(name: str, solver) -> Callable[..., SolveReport]:
    def run(inst: Instance, model: Model, **_) -> SolveReport:
        part = solver(inst)
        profile = {str(k): v for k, v in ea.clique_size_profile(part).items()}
        return SolveReport.build(inst, part, model, name, extra={"clique_sizes": profile})
    return run


def _oracle(inst: Instance, model: Model, oracle_cap: int = DEFAULT_CAP, **_) -> SolveReport:
    res = exact_max_esw(inst, model, oracle_cap)
    return SolveReport.build(inst, res.best_partition, model, "oracle", extra={"explored": res.explored})


ALGORITHMS: dict[str, Algorithm] = {
    a.name: a
    for a in [
        Algorithm("singletons", (Model.FA, Model.EA),
                  _simple("singletons", lambda inst: Partition.singletons(inst.n))),
        Algorithm("weaklyconn", (Model.FA,), _simple("weaklyconn", fa.weakly_conn)),
        Algorithm("oneweaklyconn", (Model.FA,), _simple("oneweaklyconn", fa.one_weakly_conn)),
        Algorithm("randalgo", (Model.FA,), _randalgo),
        Algorithm("symmetric", (Model.FA,), _symmetric),
        Algorithm("forest", (Model.FA,), _simple("forest", fa.fa_forest_opt)),
        Algorithm("ea-approx", (Model.EA,), _ea("ea-approx", ea.ea_approx_solve)),
        Algorithm("ea-trianglefree", (Model.EA,), _ea("ea-trianglefree", ea.ea_triangle_free_solve)),
        Algorithm("oracle", (Model.FA, Model.EA), _oracle),
    ]
}


def solve(inst: Instance, model: Model | str, algorithm: str, **kw) -> SolveReport:
    """Run a named algorithm and wrap the result in a report.

    Raises PreconditionError for unknown names, model mismatches and solver
    preconditions; SizeCapError when an exhaustive search exceeds its cap.
    """
    model = Model(model)
    if algorithm not in ALGORITHMS:
        raise PreconditionError(f"unknown algorithm {algorithm!r}")
    alg = ALGORITHMS[algorithm]
    if model not in alg.models:
        raise PreconditionError(f"{algorithm} does not solve the {model.value.upper()} model")
    report = alg.run(inst, model, **kw)
    if inst.friendless() and algorithm != "oracle":
        report.notes.append(FRIENDLESS_NOTE)
    return report


def algorithm_value(report: SolveReport) -> Fraction:
    """Welfare credited to an algorithm: min expected utility for randomized ones."""
    if report.randomized is not None:
        return Fraction(report.randomized["min_expected_utility"])
    return report.esw
