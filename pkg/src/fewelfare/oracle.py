"""Exhaustive ground-truth solvers.

Set partitions are enumerated as restricted-growth strings (agent ``k`` joins
one of the blocks opened so far or opens a new one), so the grand coalition
comes first and ties go to the earliest partition in that order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .graphs import UndirectedGraph
from .model import Instance, Model, Partition, SizeCapError, mutual_adjacency

DEFAULT_CAP = 12


@dataclass(frozen=True)
class OracleResult:
    best_partition: Partition
    best_value: Fraction
    explored: int
    optima: Optional[tuple[Partition, ...]] = field(default=None, compare=False)


def exact_max_esw(
    inst: Instance,
    model: Model,
    cap: int = DEFAULT_CAP,
    *,
    prune: bool = True,
    all_optima: bool = False,
) -> OracleResult:
    """Maximum egalitarian welfare by enumerating set partitions.

    With ``prune`` the search cuts any branch whose optimistic bound (every
    unplaced friend joins, no more enemies arrive) is already below the best
    value found, and under EA it only grows coalitions that stay mutual-friend
    cliques, since any other coalition makes the welfare negative while all
    singletons give 0. ``explored`` counts complete partitions evaluated.
    ``all_optima`` also returns every optimal partition in enumeration order.
    """
    n = inst.n
    if n > cap:
        raise SizeCapError(f"n={n} exceeds the oracle cap {cap}")
    model = Model(model)
    fa = model is Model.FA
    # scaled utilities: FA in units of 1/n, EA in whole units
    fw, ew = (n, 1) if fa else (1, n)
    scale = n if fa else 1
    friends = inst.friends
    is_friend = [[j in friends[i] for j in range(n)] for i in range(n)]
    mutual = mutual_adjacency(inst)
    ea_cliques = prune and not fa

    labels = [0] * n
    blocks: list[list[int]] = []
    f_in = [0] * n
    e_in = [0] * n
    f_later = [0] * n  # friends of i among agents not yet placed
    best = [None]
    found: list[list[int]] = []
    explored = [0]

    def bound(k: int) -> int:
        return min(fw * (f_in[i] + f_later[i]) - ew * e_in[i] for i in range(k + 1))

    def place(k: int, b: int) -> None:
        for m in blocks[b]:
            if is_friend[m][k]:
                f_in[m] += 1
            else:
                e_in[m] += 1
            if is_friend[k][m]:
                f_in[k] += 1
            else:
                e_in[k] += 1
        f_later[k] = sum(1 for j in friends[k] if j > k)
        for m in range(k):
            if is_friend[m][k]:
                f_later[m] -= 1
        blocks[b].append(k)
        labels[k] = b

    def unplace(k: int, b: int) -> None:
        blocks[b].pop()
        for m in range(k):
            if is_friend[m][k]:
                f_later[m] += 1
        for m in blocks[b]:
            if is_friend[m][k]:
                f_in[m] -= 1
            else:
                e_in[m] -= 1
        f_in[k] = e_in[k] = 0

    def visit(k: int) -> None:
        if k == n:
            explored[0] += 1
            value = bound(n - 1)
            if best[0] is None or value > best[0]:
                best[0] = value
                found.clear()
                found.append(labels[:])
            elif value == best[0] and (all_optima or not found):
                found.append(labels[:])
            return
        choices = range(len(blocks) + 1)
        for b in choices:
            if b == len(blocks):
                blocks.append([])
            elif ea_cliques and not all(m in mutual[k] for m in blocks[b]):
                continue
            place(k, b)
            if not (prune and best[0] is not None and bound(k) < best[0]):
                visit(k + 1)
            unplace(k, b)
            if not blocks[b]:
                blocks.pop()

    visit(0)
    value = Fraction(best[0], scale)
    optima = tuple(Partition.from_labels(lab) for lab in found)
    return OracleResult(optima[0], value, explored[0], optima if all_optima else None)


def _check_cap(g: UndirectedGraph, cap: int) -> None:
    if g.vertex_count > cap:
        raise SizeCapError(f"|V|={g.vertex_count} exceeds the cap {cap}")


def exact_pit(g: UndirectedGraph, cap: int = 15) -> bool:
    """Can the vertices be split into vertex-disjoint triangles?"""
    _check_cap(g, cap)
    if g.vertex_count % 3:
        return False
    adj = [set(a) for a in g.adjacency()]
    dead: set[frozenset[int]] = set()

    def search(rest: frozenset[int]) -> bool:
        if not rest:
            return True
        if rest in dead:
            return False
        v = min(rest)
        opts = sorted(adj[v] & rest)
        for a, u in enumerate(opts):
            for w in opts[a + 1:]:
                if w in adj[u] and search(rest - {v, u, w}):
                    return True
        dead.add(rest)
        return False

    return search(frozenset(range(g.vertex_count)))


def min_clique_partition(g: UndirectedGraph, cap: int = 12) -> list[list[int]]:
    """A clique partition with the fewest cliques (branch and bound)."""
    _check_cap(g, cap)
    n = g.vertex_count
    adj = [set(a) for a in g.adjacency()]
    best: list[list[list[int]]] = [[[v] for v in range(n)]]
    blocks: list[list[int]] = []

    def visit(v: int) -> None:
        if len(blocks) >= len(best[0]):
            return
        if v == n:
            best[0] = [b[:] for b in blocks]
            return
        for b in blocks:
            if all(u in adj[v] for u in b):
                b.append(v)
                visit(v + 1)
                b.pop()
        blocks.append([v])
        visit(v + 1)
        blocks.pop()

    visit(0)
    return best[0]


def exact_min_pc(g: UndirectedGraph, cap: int = 12) -> int:
    return len(min_clique_partition(g, cap))
