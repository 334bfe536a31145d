"""Text formats: ``.hg`` instances, ``.part`` partitions and JSON solve reports.

Instance files::

    # comments are ignored
    agents 3
    friend 0 1
    friend 1 2

Partition files use the same header followed by ``coalition <i> <j> ...`` lines.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .model import Instance, Model, Partition, guarantee_flags, utilities


class FormatError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _tokens(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line.split()


def _ints(number: int, parts: list[str]) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(number, f"expected integers, got {' '.join(parts)!r}") from None


def _header(number: int, toks: list[str]) -> int:
    if toks[0] != "agents":
        raise FormatError(number, "the first line must be 'agents <n>'")
    if len(toks) != 2:
        raise FormatError(number, "malformed 'agents' line")
    (n,) = _ints(number, toks[1:])
    if n < 1:
        raise FormatError(number, "agent count must be positive")
    return n


def parse_instance(text: str) -> Instance:
    n: Optional[int] = None
    seen: set[tuple[int, int]] = set()
    for number, toks in _tokens(text):
        if n is None:
            n = _header(number, toks)
            continue
        if toks[0] == "agents":
            raise FormatError(number, "duplicate 'agents' header")
        if toks[0] != "friend":
            raise FormatError(number, f"unknown keyword {toks[0]!r}")
        if len(toks) != 3:
            raise FormatError(number, "malformed 'friend' line")
        i, j = _ints(number, toks[1:])
        if not (0 <= i < n and 0 <= j < n):
            raise FormatError(number, f"agent index out of range 0..{n - 1}")
        if i == j:
            raise FormatError(number, f"self-loop on agent {i}")
        if (i, j) in seen:
            raise FormatError(number, f"duplicate edge {i} -> {j}")
        seen.add((i, j))
    if n is None:
        raise FormatError(0, "missing 'agents' header")
    return Instance.from_edges(n, sorted(seen))


def serialize_instance(inst: Instance, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"agents {inst.n}")
    lines += [f"friend {i} {j}" for i, j in inst.edges()]
    return "\n".join(lines) + "\n"


def parse_partition(text: str) -> Partition:
    n: Optional[int] = None
    blocks: list[list[int]] = []
    for number, toks in _tokens(text):
        if n is None:
            n = _header(number, toks)
            continue
        if toks[0] != "coalition" or len(toks) < 2:
            raise FormatError(number, "expected 'coalition <agent> ...'")
        blocks.append(_ints(number, toks[1:]))
    if n is None:
        raise FormatError(0, "missing 'agents' header")
    try:
        return Partition(blocks, n)
    except ValueError as exc:
        raise FormatError(0, str(exc)) from None


def serialize_partition_file(part: Partition) -> str:
    lines = [f"agents {part.n}"]
    lines += ["coalition " + " ".join(map(str, c)) for c in part.coalitions]
    return "\n".join(lines) + "\n"


def rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass
class SolveReport:
    model: Model
    algorithm: str
    partition: Partition
    utilities: list[Fraction]
    esw: Fraction
    guarantees: list[dict[str, bool]]
    notes: list[str] = field(default_factory=list)
    randomized: Optional[dict[str, Any]] = None
    trace: Optional[dict[str, Any]] = None
    extra: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def build(cls, inst: Instance, part: Partition, model: Model, algorithm: str, **kw) -> SolveReport:
        us = utilities(inst, part, model)
        return cls(Model(model), algorithm, part, us, min(us), guarantee_flags(inst, part), **kw)

    def to_dict(self) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "model": self.model.value,
            "algorithm": self.algorithm,
            "agents": self.partition.n,
            "coalitions": [list(c) for c in self.partition.coalitions],
            "utilities": [rational(u) for u in self.utilities],
            "esw": rational(self.esw),
            "guarantees": self.guarantees,
        }
        if self.notes:
            doc["notes"] = list(self.notes)
        if self.extra:
            doc.update(self.extra)
        if self.randomized is not None:
            doc["randomized"] = self.randomized
        if self.trace is not None:
            doc["trace"] = self.trace
        return doc


def serialize_partition(report: SolveReport) -> str:
    """Render a report as JSON, one top-level key per line in a fixed order.

    Identical reports give identical bytes.
    """
    doc = report.to_dict()
    body = ",\n".join(
        f"  {json.dumps(k)}: {json.dumps(v, separators=(', ', ': '))}" for k, v in doc.items()
    )
    return "{\n" + body + "\n}\n"
