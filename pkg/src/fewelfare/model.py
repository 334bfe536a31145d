"""Friends-and-enemies game instances, partitions and exact welfare.

Agents are dense 0-based integers. Every utility is a :class:`fractions.Fraction`,
so comparisons such as ``1 + 3/n`` against ``1`` are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence


class PreconditionError(ValueError):
    """A solver or operation was called on an input outside its contract."""


class SizeCapError(ValueError):
    """An exhaustive search was asked to run beyond its configured size cap."""


class Model(str, Enum):
    FA = "fa"
    EA = "ea"


class Guarantee(str, Enum):
    ALL_F = "AllF"
    ONLY_F = "OnlyF"
    ONE_F = "OneF"


@dataclass(frozen=True)
class Instance:
    """A game on ``n`` agents given by each agent's set of friends.

    Everyone not listed as a friend of ``i`` is an enemy of ``i``.
    """

    n: int
    friends: tuple[frozenset[int], ...]

    def __init__(self, n: int, friends: Sequence[Iterable[int]]):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"agent count must be a positive integer, got {n!r}")
        if len(friends) != n:
            raise ValueError(f"expected {n} friend sets, got {len(friends)}")
        sets = []
        for i, fs in enumerate(friends):
            fs = frozenset(fs)
            for j in fs:
                if not isinstance(j, int) or not 0 <= j < n:
                    raise ValueError(f"agent {i} lists invalid friend {j!r}")
            if i in fs:
                raise ValueError(f"agent {i} lists itself as a friend")
            sets.append(fs)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "friends", tuple(sets))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Instance:
        """Build from directed friend edges ``(i, j)`` meaning ``j`` is a friend of ``i``."""
        friends: list[set[int]] = [set() for _ in range(n)]
        for i, j in edges:
            friends[i].add(j)
        return cls(n, friends)

    @classmethod
    def from_mutual_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Instance:
        friends: list[set[int]] = [set() for _ in range(n)]
        for i, j in edges:
            friends[i].add(j)
            friends[j].add(i)
        return cls(n, friends)

    def f(self, i: int) -> int:
        return len(self.friends[i])

    def e(self, i: int) -> int:
        return self.n - len(self.friends[i]) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in sorted(self.friends[i])]

    def is_symmetric(self) -> bool:
        return all(i in self.friends[j] for i in range(self.n) for j in self.friends[i])

    def friendless(self) -> list[int]:
        return [i for i in range(self.n) if not self.friends[i]]


@dataclass(frozen=True)
class FriendshipViews:
    directed_edges: frozenset[tuple[int, int]]
    mutual_edges: frozenset[frozenset[int]]
    symmetric: bool


def derive_views(inst: Instance) -> FriendshipViews:
    directed = frozenset(inst.edges())
    mutual = frozenset(frozenset((i, j)) for i, j in directed if i < j and (j, i) in directed)
    return FriendshipViews(directed, mutual, inst.is_symmetric())


def mutual_adjacency(inst: Instance) -> list[frozenset[int]]:
    """Neighbourhoods in the strong (mutual) friendship graph."""
    return [frozenset(j for j in inst.friends[i] if i in inst.friends[j]) for i in range(inst.n)]


@dataclass(frozen=True)
class Partition:
    """An exact cover of ``range(n)`` by disjoint nonempty coalitions.

    Coalitions are stored canonically: members ascending, coalitions ordered by
    smallest member. Two partitions are equal iff they group agents the same way.
    """

    coalitions: tuple[tuple[int, ...], ...]
    assignment: tuple[int, ...]

    def __init__(self, blocks: Iterable[Iterable[int]], n: int | None = None):
        canon = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0] if b else -1)
        if any(not b for b in canon):
            raise ValueError("coalitions must be nonempty")
        seen = [a for b in canon for a in b]
        size = len(seen) if n is None else n
        if sorted(seen) != list(range(size)):
            raise ValueError(f"coalitions do not partition the agents 0..{size - 1}")
        assignment = [0] * size
        for k, b in enumerate(canon):
            for a in b:
                assignment[a] = k
        object.__setattr__(self, "coalitions", tuple(canon))
        object.__setattr__(self, "assignment", tuple(assignment))

    @classmethod
    def singletons(cls, n: int) -> Partition:
        return cls([[i] for i in range(n)], n)

    @classmethod
    def grand(cls, n: int) -> Partition:
        return cls([range(n)], n)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> Partition:
        groups: dict[int, list[int]] = {}
        for agent, lab in enumerate(labels):
            groups.setdefault(lab, []).append(agent)
        return cls(groups.values(), len(labels))

    @property
    def n(self) -> int:
        return len(self.assignment)

    def coalition_of(self, agent: int) -> tuple[int, ...]:
        return self.coalitions[self.assignment[agent]]

    def __len__(self) -> int:
        return len(self.coalitions)

    def __iter__(self):
        return iter(self.coalitions)


def _check(inst: Instance, part: Partition, agent: int | None = None) -> None:
    if part.n != inst.n:
        raise ValueError(f"partition covers {part.n} agents, instance has {inst.n}")
    if agent is not None and not 0 <= agent < inst.n:
        raise ValueError(f"agent {agent} out of range for n={inst.n}")


def _counts(inst: Instance, coalition: Iterable[int], agent: int) -> tuple[int, int]:
    fs = inst.friends[agent]
    f_in = e_in = 0
    for j in coalition:
        if j == agent:
            continue
        if j in fs:
            f_in += 1
        else:
            e_in += 1
    return f_in, e_in


def coalition_utility(inst: Instance, coalition: Iterable[int], agent: int, model: Model) -> Fraction:
    f_in, e_in = _counts(inst, coalition, agent)
    if Model(model) is Model.FA:
        return Fraction(f_in * inst.n - e_in, inst.n)
    return Fraction(f_in - inst.n * e_in)


def fa_utility(inst: Instance, part: Partition, agent: int) -> Fraction:
    _check(inst, part, agent)
    return coalition_utility(inst, part.coalition_of(agent), agent, Model.FA)


def ea_utility(inst: Instance, part: Partition, agent: int) -> Fraction:
    _check(inst, part, agent)
    return coalition_utility(inst, part.coalition_of(agent), agent, Model.EA)


def utilities(inst: Instance, part: Partition, model: Model) -> list[Fraction]:
    _check(inst, part)
    return [coalition_utility(inst, part.coalition_of(i), i, model) for i in range(inst.n)]


def esw(inst: Instance, part: Partition, model: Model) -> Fraction:
    """Egalitarian welfare: the smallest utility any agent receives."""
    return min(utilities(inst, part, model))


@dataclass(frozen=True)
class AgentClasses:
    f_min: int
    n_min: frozenset[int]
    n_one: frozenset[int]


def agent_classes(inst: Instance) -> AgentClasses:
    degrees = [inst.f(i) for i in range(inst.n)]
    f_min = min(degrees)
    return AgentClasses(
        f_min,
        frozenset(i for i, d in enumerate(degrees) if d == f_min),
        frozenset(i for i, d in enumerate(degrees) if d == 1),
    )


@dataclass(frozen=True)
class Bounds:
    """``lower_exclusive < opt <= upper_inclusive`` for the FA optimum."""

    lower_exclusive: Fraction
    upper_inclusive: Fraction


def fa_opt_bounds(inst: Instance) -> Bounds:
    if inst.friendless():
        raise PreconditionError(
            f"agents {inst.friendless()} have no friends; the optimum is 0 (all singletons)"
        )
    f_min = agent_classes(inst).f_min
    return Bounds(Fraction(f_min - 1), Fraction(f_min))


def check_guarantee(inst: Instance, part: Partition, agent: int, g: Guarantee) -> bool:
    _check(inst, part, agent)
    coalition = set(part.coalition_of(agent))
    fs = inst.friends[agent]
    g = Guarantee(g)
    if g is Guarantee.ALL_F:
        return fs <= coalition
    if g is Guarantee.ONLY_F:
        return coalition - {agent} <= fs
    return bool(coalition & fs)


def guarantee_flags(inst: Instance, part: Partition) -> list[dict[str, bool]]:
    return [
        {g.value: check_guarantee(inst, part, i, g) for g in Guarantee}
        for i in range(inst.n)
    ]


def is_minimal_one_f(inst: Instance, part: Partition, subset: Iterable[int]) -> bool:
    """Whether ``part`` is the minimal-by-refinement partition giving OneF to ``subset``.

    Raises PreconditionError if ``part`` does not give OneF to every agent of ``subset``.
    """
    from .graphs import weakly_connected_components

    _check(inst, part)
    subset = sorted(set(subset))
    bad = [i for i in subset if not check_guarantee(inst, part, i, Guarantee.ONE_F)]
    if bad:
        raise PreconditionError(f"partition does not guarantee OneF for agents {bad}")
    kept = [(i, j) for i in subset for j in inst.friends[i]]
    return weakly_connected_components(inst.n, kept) == part
