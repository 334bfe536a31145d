"""Friends-Appreciation solvers.

Under FA one friend outweighs every enemy combined (an enemy costs 1/n), so
the hard agents are those with very few friends, above all the agents with a
single friend.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .graphs import BMatchingProblem, b_matching_feasible, weakly_connected_components
from .model import (
    Instance,
    Model,
    Partition,
    PreconditionError,
    agent_classes,
    fa_utility,
    utilities,
)


def weakly_conn(inst: Instance) -> Partition:
    """One coalition per weakly connected component of the friendship digraph."""
    if inst.friendless():
        return Partition.singletons(inst.n)
    return weakly_connected_components(inst.n, inst.edges())


def one_weakly_conn(inst: Instance) -> Partition:
    """Components of the digraph that keeps only the edges leaving single-friend agents.

    This is the unique coarsest-necessary (minimal-by-refinement) partition in
    which every single-friend agent sits with its friend.
    """
    if inst.friendless():
        return Partition.singletons(inst.n)
    ones = agent_classes(inst).n_one
    kept = [(i, j) for i in sorted(ones) for j in inst.friends[i]]
    return weakly_connected_components(inst.n, kept)


@dataclass(frozen=True)
class RandomizedOutcome:
    """``WeaklyConn`` with probability ``alpha``, ``OneWeaklyConn`` otherwise.

    ``v`` is the smallest single-friend-agent utility under ``OneWeaklyConn``;
    it is None when no agent has exactly one friend.
    """

    branches: tuple[tuple[Partition, Fraction], tuple[Partition, Fraction]]
    alpha: Fraction
    v: Optional[Fraction]


def rand_algo(inst: Instance) -> RandomizedOutcome:
    wc = weakly_conn(inst)
    owc = one_weakly_conn(inst)
    ones = agent_classes(inst).n_one
    if inst.friendless() or not ones:
        alpha, v = Fraction(1), None
    else:
        v = min(fa_utility(inst, owc, i) for i in ones)
        alpha = v / (1 + Fraction(1, inst.n) + v)
    return RandomizedOutcome(((wc, alpha), (owc, 1 - alpha)), alpha, v)


def expected_utilities(inst: Instance, out: RandomizedOutcome) -> list[Fraction]:
    totals = [Fraction(0)] * inst.n
    for part, p in out.branches:
        if p:
            for i, u in enumerate(utilities(inst, part, Model.FA)):
                totals[i] += p * u
    return totals


def min_expected_utility(inst: Instance, out: RandomizedOutcome) -> Fraction:
    return min(expected_utilities(inst, out))


def sample(out: RandomizedOutcome, seed: int) -> Partition:
    """Draw one branch; an integer uniform on ``[0, den)`` keeps the draw exact."""
    rng = random.Random(seed)
    alpha = out.alpha
    if rng.randrange(alpha.denominator) < alpha.numerator:
        return out.branches[0][0]
    return out.branches[1][0]


@dataclass(frozen=True)
class SymmetricTrace:
    roots: frozenset[int]
    closed_ones: frozenset[int]
    stars: dict[int, frozenset[int]]
    lonely: frozenset[int]
    residual: frozenset[int]
    residual_final: frozenset[int]
    kappa: int


def balance(
    stars: Mapping[int, set[int] | frozenset[int]],
    lonely: set[int] | frozenset[int],
    adjacency: Mapping[int, set[int] | frozenset[int]],
) -> tuple[dict[int, frozenset[int]], int]:
    """Attach each lonely agent to an adjacent star, minimising the largest star.

    Scans the maximum star size ``kappa`` upwards and checks, via b-matching,
    whether the lonely agents fit with root ``r`` taking ``kappa - |S(r)|`` of them.
    """
    roots = sorted(stars)
    lonely = sorted(lonely)
    for i in lonely:
        if not adjacency.get(i):
            raise PreconditionError(f"lonely agent {i} is not adjacent to any star root")
    col = {r: k for k, r in enumerate(roots)}
    edges = frozenset((a, col[r]) for a, i in enumerate(lonely) for r in adjacency[i])
    start = max(len(s) for s in stars.values())
    total = sum(len(s) for s in stars.values()) + len(lonely)
    for kappa in range(start, total + 1):
        problem = BMatchingProblem(
            len(lonely), len(roots), edges, (1,) * len(lonely),
            tuple(kappa - len(stars[r]) for r in roots), len(lonely),
        )
        assignment = b_matching_feasible(problem)
        if assignment is not None:
            out = {r: set(stars[r]) for r in roots}
            for a, k in assignment.items():
                out[roots[k]].add(lonely[a])
            return {r: frozenset(s) for r, s in out.items()}, kappa
    raise PreconditionError("lonely agents cannot be placed")  # unreachable with valid adjacency


def symmetric_approx(inst: Instance) -> tuple[Partition, Optional[SymmetricTrace]]:
    """Deterministic (2 - 4/(n+2))-approximation for symmetric instances.

    Stage 1 forms a star around the unique friend of every single-friend agent,
    stage 2 spreads agents whose friends all lie in those stars with
    :func:`balance`, and stage 3 peels low-degree agents off the residual set
    while it is larger than n/2 + 1, then keeps the rest together.

    The trace is None when no stages run (a friendless agent, or no agent with
    exactly one friend, in which case the answer is :func:`weakly_conn`).
    """
    if not inst.is_symmetric():
        raise PreconditionError("instance is not symmetric")
    n = inst.n
    if inst.friendless():
        return Partition.singletons(n), None
    F = inst.friends
    ones = agent_classes(inst).n_one
    if not ones:
        return weakly_conn(inst), None

    roots = {next(iter(F[i])) for i in ones}
    closed = set(ones) | roots
    stars: dict[int, set[int]] = {}
    for r in sorted(roots):
        members = {r} | {i for i in ones if F[i] == {r}}
        # mutual single-friend pairs appear twice; keep the copy at the lower root
        if not any(set(s) == members for s in stars.values()):
            stars[r] = members

    U = set(range(n)) - closed
    lonely = {i for i in U if not (F[i] & U)}
    kappa = max(len(s) for s in stars.values())
    if lonely:
        U -= lonely
        adjacency = {i: {r for r in F[i] if r in stars} for i in lonely}
        balanced, kappa = balance(stars, lonely, adjacency)
        stars = {r: set(s) for r, s in balanced.items()}
    residual = frozenset(U)

    extra: list[set[int]] = []
    while 2 * len(U) > n + 2:
        low = [i for i in sorted(U) if len(F[i] & U) < 2]
        if not low:
            break
        i = low[0]
        inside = F[i] & U
        j = next(iter(inside)) if len(inside) == 1 else None
        U.discard(i)
        if j is not None and F[j] & (U | {i}) == {i}:
            U.discard(j)
            extra.append({i, j})
            continue
        home = next((s for r, s in sorted(stars.items()) if s & F[i]), None)
        if home is None:
            home = min((c for c in extra if c & F[i]), key=min)
        home.add(i)

    blocks = [s for s in stars.values()] + extra
    if U:
        blocks.append(set(U))
    trace = SymmetricTrace(
        frozenset(roots), frozenset(closed),
        {r: frozenset(s) for r, s in stars.items()},
        frozenset(lonely), residual, frozenset(U), kappa,
    )
    return Partition(blocks, n), trace


def _forest_order(inst: Instance) -> tuple[list[int], list[int]]:
    """BFS order and parent array of a forest, rooted at each component's smallest vertex."""
    n = inst.n
    parent = [-1] * n
    seen = [False] * n
    order: list[int] = []
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        k = 0
        while k < len(queue):
            v = queue[k]
            k += 1
            for u in sorted(inst.friends[v]):
                if u == parent[v]:
                    continue
                if seen[u]:
                    raise PreconditionError("the friendship graph contains a cycle")
                seen[u] = True
                parent[u] = v
                queue.append(u)
        order.extend(queue)
    return order, parent


def _star_cover(children: list[list[int]], order: list[int], parent: list[int], s: int):
    """Tree DP: can the forest be split into stars of sizes in [2, s]?

    Per vertex we record whether it can be covered inside its own subtree
    (``done``), whether it can hang as a leaf off its parent (``pend``), and
    the fewest child leaves it needs as a centre whose parent joins as a leaf
    (``cmin``, None if impossible). Returns the tables, or None if infeasible.
    """
    n = len(order)
    done = [False] * n
    pend = [False] * n
    cmin: list[Optional[int]] = [None] * n
    for v in reversed(order):
        kids = children[v]
        pend[v] = all(done[u] for u in kids)
        forced = sum(1 for u in kids if not done[u])
        if any(not done[u] and not pend[u] for u in kids):
            centre_ok = False
        else:
            flexible = sum(1 for u in kids if done[u] and pend[u])
            centre_ok = forced <= s - 1 and forced + flexible >= 1
            cmin[v] = forced if forced <= s - 2 else None
        leaf_ok = any(
            cmin[u] is not None and cmin[u] + 2 <= s and all(done[w] for w in kids if w != u)
            for u in kids
        )
        done[v] = centre_ok or leaf_ok
    roots = [v for v in order if parent[v] == -1]
    if not all(done[r] for r in roots):
        return None
    return done, pend, cmin


def _build_stars(children, order, parent, s, tables) -> list[set[int]]:
    done, pend, cmin = tables
    stars: list[set[int]] = []
    mode = {v: "done" for v in order if parent[v] == -1}
    for v in order:
        kids = children[v]
        m = mode[v]
        if m == "pend":
            for u in kids:
                mode[u] = "done"
            continue
        if m == "centre_with_parent":
            star = {v, parent[v]}
            for u in kids:
                if done[u]:
                    mode[u] = "done"
                else:
                    mode[u] = "pend"
                    star.add(u)
            stars.append(star)
            continue
        forced = [u for u in kids if not done[u]]
        flexible = [u for u in kids if done[u] and pend[u]]
        if all(done[u] or pend[u] for u in kids) and len(forced) <= s - 1 and forced + flexible:
            leaves = forced if forced else flexible[:1]
            for u in kids:
                mode[u] = "pend" if u in leaves else "done"
            stars.append({v, *leaves})
            continue
        host = next(
            u for u in kids
            if cmin[u] is not None and cmin[u] + 2 <= s and all(done[w] for w in kids if w != u)
        )
        for u in kids:
            mode[u] = "centre_with_parent" if u == host else "done"
    return stars


def fa_forest_opt(inst: Instance) -> Partition:
    """Exact FA optimum when the instance is symmetric and its friendship graph is a forest.

    Some optimum consists of stars only, and its welfare is set by the leaves of
    the biggest star, so we minimise the largest star size ``s`` (binary search,
    feasibility by tree DP) and get welfare ``1 - (s - 2)/n``.
    """
    if not inst.is_symmetric():
        raise PreconditionError("instance is not symmetric")
    if inst.friendless():
        return Partition.singletons(inst.n)
    order, parent = _forest_order(inst)
    children: list[list[int]] = [[] for _ in range(inst.n)]
    for v in order:
        if parent[v] != -1:
            children[parent[v]].append(v)
    lo, hi = 2, inst.n
    while lo < hi:
        mid = (lo + hi) // 2
        if _star_cover(children, order, parent, mid) is not None:
            hi = mid
        else:
            lo = mid + 1
    tables = _star_cover(children, order, parent, lo)
    return Partition(_build_stars(children, order, parent, lo, tables), inst.n)
