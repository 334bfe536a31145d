from __future__ import annotations

import itertools
from fractions import Fraction

import networkx as nx
import pytest

from fewelfare import Instance, UndirectedGraph


def set_partitions(items):
    """All set partitions of ``items`` (independent of the package's enumerator)."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in set_partitions(rest):
        for k in range(len(smaller)):
            yield smaller[:k] + [[first] + smaller[k]] + smaller[k + 1:]
        yield [[first]] + smaller


def brute_utility(inst: Instance, block, agent: int, model: str) -> Fraction:
    n = inst.n
    friends = sum(1 for j in block if j != agent and j in inst.friends[agent])
    enemies = len(block) - 1 - friends
    if model == "fa":
        return friends - Fraction(enemies, n)
    return Fraction(friends - n * enemies)


def brute_esw(inst: Instance, blocks, model: str) -> Fraction:
    return min(brute_utility(inst, b, i, model) for b in blocks for i in b)


def brute_opt(inst: Instance, model: str) -> tuple[Fraction, list]:
    """Optimum value and every optimal partition, by plain enumeration."""
    best, optima = None, []
    for blocks in set_partitions(range(inst.n)):
        v = brute_esw(inst, blocks, model)
        if best is None or v > best:
            best, optima = v, [blocks]
        elif v == best:
            optima.append(blocks)
    return best, optima


def atlas_graphs(max_nodes: int):
    """All graphs up to isomorphism with 1..max_nodes vertices."""
    for g in nx.graph_atlas_g()[1:]:
        if g.number_of_nodes() <= max_nodes:
            yield UndirectedGraph(g.number_of_nodes(), g.edges())


def brute_max_matching_size(g: UndirectedGraph) -> int:
    edges = g.sorted_edges()
    for k in range(g.vertex_count // 2, 0, -1):
        for combo in itertools.combinations(edges, k):
            verts = [v for e in combo for v in e]
            if len(set(verts)) == len(verts):
                return k
    return 0


def brute_k2k3_exists(g: UndirectedGraph) -> bool:
    for blocks in set_partitions(range(g.vertex_count)):
        if all(len(b) in (2, 3) for b in blocks) and all(
            g.has_edge(u, v) for b in blocks for u, v in itertools.combinations(b, 2)
        ):
            return True
    return g.vertex_count == 0


@pytest.fixture
def example():
    from fewelfare import gen_paper_example

    return gen_paper_example()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
