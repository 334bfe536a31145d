"""Enemies-Aversion solvers.

Under EA a single enemy in your coalition costs more than all friends are worth,
so only mutual friendships matter: welfare is nonnegative exactly when every
coalition is a clique of the mutual-friendship graph, and positive when in
addition no coalition is a singleton.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .graphs import UndirectedGraph, is_triangle_free, k2k3_factor, max_matching
from .model import Instance, Model, Partition, PreconditionError, mutual_adjacency, utilities


class Sign(str, Enum):
    NEGATIVE = "Negative"
    ZERO = "Zero"
    POSITIVE = "Positive"


@dataclass(frozen=True)
class EaClassification:
    sign: Sign
    witness: Optional[int]


def strong_graph(inst: Instance) -> UndirectedGraph:
    adj = mutual_adjacency(inst)
    return UndirectedGraph(inst.n, [(i, j) for i in range(inst.n) for j in adj[i] if i < j])


def ea_classify(inst: Instance, part: Partition) -> EaClassification:
    adj = mutual_adjacency(inst)
    cliques = all(
        all(b in adj[a] for a in c for b in c if a != b) for c in part.coalitions
    )
    if not cliques:
        sign = Sign.NEGATIVE
    elif any(len(c) == 1 for c in part.coalitions):
        sign = Sign.ZERO
    else:
        sign = Sign.POSITIVE
    us = utilities(inst, part, Model.EA)
    witness = min(range(inst.n), key=lambda i: (us[i], i))
    return EaClassification(sign, witness)


def ea_approx_solve(inst: Instance, max_component: int = 64) -> Partition:
    """Cover the mutual-friendship graph by pairs and triangles, else return singletons.

    Any such cover gives everyone utility at least 1 while nobody can exceed
    n - 1, hence the factor n - 1.
    """
    if inst.friendless():
        return Partition.singletons(inst.n)
    factor = k2k3_factor(strong_graph(inst), max_component)
    if factor is None:
        return Partition.singletons(inst.n)
    return Partition(factor, inst.n)


def ea_triangle_free_solve(inst: Instance) -> Partition:
    if inst.friendless():
        return Partition.singletons(inst.n)
    g = strong_graph(inst)
    if not is_triangle_free(g):
        raise PreconditionError("the mutual-friendship graph contains a triangle")
    matching = max_matching(g)
    if 2 * len(matching) == inst.n:
        return Partition(matching, inst.n)
    return Partition.singletons(inst.n)


def clique_size_profile(part: Partition) -> dict[int, int]:
    profile: dict[int, int] = {}
    for c in part.coalitions:
        profile[len(c)] = profile.get(len(c), 0) + 1
    return dict(sorted(profile.items()))
