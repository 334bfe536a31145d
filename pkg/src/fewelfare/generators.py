"""Instance constructors: the worked example, reduction gadgets, tight families, random games.

All agent numbering is 0-based and deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Sequence

from .graphs import UndirectedGraph
from .model import Instance, Partition


class Family(str, Enum):
    WEAKLY_FMIN1 = "WeaklyFmin1"
    WEAKLY_FMIN2 = "WeaklyFmin2"
    RAND_TIGHT = "RandTight"
    SYMMETRIC_TIGHT = "SymmetricTight"


@dataclass(frozen=True)
class GadgetMap:
    """Which generated agents stand for which source vertex.

    For ``PC`` each vertex ``v`` maps to ``[v]`` and ``extra`` is the range of
    the added clique; for ``PIT`` vertex ``v`` maps to ``[a_v, b_v, c_v, z_v]``.
    """

    kind: str
    vertex_agents: dict[int, list[int]]
    extra: range = range(0)


def gen_paper_example() -> Instance:
    # agents 1, 2, 3 with F_1 = {2}, F_2 = {3}, F_3 = {2}, shifted to 0-based
    return Instance(3, [{1}, {2}, {1}])


def gen_ea_from_pc(
    g: UndirectedGraph,
) -> tuple[Instance, GadgetMap, Callable[[Sequence[Sequence[int]]], Partition]]:
    """Symmetric EA instance on V plus a disjoint clique V' joined to all of V.

    The third return value turns a clique partition of ``g`` into a partition of
    the instance by spreading V' as evenly as possible over its cliques.
    """
    k = g.vertex_count
    n = 2 * k
    edges = list(g.sorted_edges())
    edges += [(k + a, k + b) for a in range(k) for b in range(a + 1, k)]
    edges += [(v, k + a) for v in range(k) for a in range(k)]
    inst = Instance.from_mutual_edges(n, edges)
    gmap = GadgetMap("PC", {v: [v] for v in range(k)}, range(k, n))

    def build(cliques: Sequence[Sequence[int]]) -> Partition:
        blocks = [list(c) for c in cliques]
        size, rem = divmod(k, len(blocks))
        start = k
        for h, block in enumerate(blocks):
            take = size + (1 if h < rem else 0)
            block.extend(range(start, start + take))
            start += take
        return Partition(blocks, n)

    return inst, gmap, build


def gen_fa_from_pit(g: UndirectedGraph) -> tuple[Instance, GadgetMap]:
    """Symmetric FA instance with agents ``a_v, b_v, c_v, z_v`` per source vertex.

    Layout: ``a_*`` occupy ``0..k-1``, then ``b_*``, ``c_*`` and ``z_*``.
    Each ``z_v`` befriends its own ``a_v, b_v, c_v``, and every source edge is
    copied onto the a-, b- and c-layers.
    """
    k = g.vertex_count
    a, b, c, z = (lambda v, s=s: s * k + v for s in range(4))
    edges = []
    for v in range(k):
        edges += [(a(v), z(v)), (b(v), z(v)), (c(v), z(v))]
    for u, v in g.sorted_edges():
        edges += [(a(u), a(v)), (b(u), b(v)), (c(u), c(v))]
    gmap = GadgetMap("PIT", {v: [a(v), b(v), c(v), z(v)] for v in range(k)})
    return Instance.from_mutual_edges(4 * k, edges), gmap


def gen_tight_family(family: Family | str, n: int) -> Instance:
    family = Family(family)
    if family is Family.WEAKLY_FMIN1:
        if n < 2 or n % 2:
            raise ValueError("WeaklyFmin1 needs an even n >= 2")
        edges = [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)]
        edges += [(2 * j + 1, 2 * j) for j in range(n // 2)]
        return Instance.from_edges(n, edges)
    if family is Family.WEAKLY_FMIN2:
        if n < 6:
            raise ValueError("WeaklyFmin2 needs n >= 6")
        small, large = range(3), range(3, n)
        edges = [(i, j) for grp in (small, large) for i in grp for j in grp if i != j]
        edges.append((0, 3))
        return Instance.from_edges(n, edges)
    if family is Family.RAND_TIGHT:
        if n < 5:
            raise ValueError("RandTight needs n >= 5")
        last = n - 1
        edges = [(0, 1), (1, 0)]
        clique = range(2, last)
        edges += [(i, j) for i in clique for j in clique if i != j]
        edges += [(i, last) for i in clique]
        edges += [(last, 0), (last, 2)]
        return Instance.from_edges(n, edges)
    if n < 4 or n % 2:
        raise ValueError("SymmetricTight needs an even n >= 4")
    edges = [(0, 1), (0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 1)]
    return Instance.from_mutual_edges(n, edges)


def gen_random(
    n: int,
    p: float | Fraction,
    symmetric: bool = False,
    ensure_friend: bool = True,
    seed: int = 0,
) -> Instance:
    """Random friendship relation drawn from ``random.Random(seed)`` (MT19937).

    Pairs are visited row-major, ``(i, j)`` with ``i != j`` for directed games
    and ``i < j`` for symmetric ones; each becomes an edge when ``random() < p``.
    Then, with ``ensure_friend``, every friendless agent in index order gets the
    friend ``randrange(n - 1)`` (skipping itself), mutual when symmetric.
    """
    if not 0 <= p <= 1:
        raise ValueError(f"probability must lie in [0, 1], got {p}")
    if n < 1:
        raise ValueError("n must be positive")
    if ensure_friend and n == 1:
        raise ValueError("a single agent cannot be given a friend")
    rng = random.Random(seed)
    friends: list[set[int]] = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1 if symmetric else 0, n):
            if i != j and rng.random() < p:
                friends[i].add(j)
                if symmetric:
                    friends[j].add(i)
    if ensure_friend:
        for i in range(n):
            if not friends[i]:
                j = rng.randrange(n - 1)
                j += j >= i
                friends[i].add(j)
                if symmetric:
                    friends[j].add(i)
    return Instance(n, friends)
