"""Graph routines used by the solvers.

Matching on general graphs uses Edmonds' blossom contraction. The {K2,K3}-factor
search is exact but exponential in the worst case, so each connected component
is bounded by ``max_component`` vertices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .model import Partition, SizeCapError


@dataclass(frozen=True)
class UndirectedGraph:
    vertex_count: int
    edges: frozenset[frozenset[int]]

    def __init__(self, vertex_count: int, edges: Iterable[Iterable[int]] = ()):
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        es = set()
        for e in edges:
            u, v = tuple(e)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge {{{u}, {v}}} has an endpoint outside 0..{vertex_count - 1}")
            es.add(frozenset((u, v)))
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", frozenset(es))

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for e in self.edges:
            u, v = tuple(e)
            adj[u].append(v)
            adj[v].append(u)
        for nb in adj:
            nb.sort()
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)


def weakly_connected_components(n: int, directed_edges: Iterable[tuple[int, int]]) -> Partition:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in directed_edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    return Partition.from_labels([find(i) for i in range(n)])


def max_matching(g: UndirectedGraph) -> set[frozenset[int]]:
    """Maximum-cardinality matching on a general graph (Edmonds, O(V^3))."""
    n = g.vertex_count
    adj = g.adjacency()
    match = [-1] * n

    def augment_from(root: int) -> int:
        used = [False] * n
        prev = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = prev[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = prev[match[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                prev[v] = child
                child = match[v]
                v = prev[match[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and prev[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark(v, cur, to, blossom)
                    mark(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif prev[to] == -1:
                    prev[to] = v
                    if match[to] == -1:
                        return _flip(to, prev, match)
                    used[match[to]] = True
                    queue.append(match[to])
        return -1

    for v in range(n):
        if match[v] == -1 and adj[v]:
            augment_from(v)
    return {frozenset((v, match[v])) for v in range(n) if match[v] > v}


def _flip(end: int, prev: list[int], match: list[int]) -> int:
    v = end
    while v != -1:
        pv = prev[v]
        nxt = match[pv]
        match[v] = pv
        match[pv] = v
        v = nxt
    return end


def is_triangle_free(g: UndirectedGraph) -> bool:
    nbrs = [set(a) for a in g.adjacency()]
    return not any(nbrs[u] & nbrs[v] for u, v in g.sorted_edges())


def connected_components(g: UndirectedGraph) -> list[list[int]]:
    part = weakly_connected_components(g.vertex_count, g.sorted_edges())
    return [list(c) for c in part]


def k2k3_factor(g: UndirectedGraph, max_component: int = 64) -> Optional[list[tuple[int, ...]]]:
    """Partition the vertices into cliques of size 2 or 3, or return None if impossible.

    A perfect matching is tried first; otherwise each connected component is
    searched exhaustively with memoisation of dead vertex sets.

    Raises SizeCapError when a component that needs the search has more than
    ``max_component`` vertices.
    """
    matching = max_matching(g)
    if 2 * len(matching) == g.vertex_count:
        return sorted(tuple(sorted(e)) for e in matching)
    adj = [set(a) for a in g.adjacency()]
    blocks: list[tuple[int, ...]] = []
    for comp in connected_components(g):
        if len(comp) == 1:
            return None
        if len(comp) > max_component:
            raise SizeCapError(
                f"component of {len(comp)} vertices exceeds the factor-search cap {max_component}"
            )
        found = _factor_component(comp, adj)
        if found is None:
            return None
        blocks.extend(found)
    return sorted(blocks)


def _factor_component(comp: list[int], adj: list[set[int]]) -> Optional[list[tuple[int, ...]]]:
    dead: set[frozenset[int]] = set()

    def search(remaining: frozenset[int]) -> Optional[list[tuple[int, ...]]]:
        if not remaining:
            return []
        if remaining in dead:
            return None
        if any(not (adj[x] & remaining) for x in remaining):
            dead.add(remaining)
            return None
        v = min(remaining)
        options = sorted(adj[v] & remaining)
        for u in options:
            rest = search(remaining - {u, v})
            if rest is not None:
                return [(v, u)] + rest
        for a, u in enumerate(options):
            for w in options[a + 1:]:
                if w in adj[u]:
                    rest = search(remaining - {u, v, w})
                    if rest is not None:
                        return [(v, u, w)] + rest
        dead.add(remaining)
        return None

    return search(frozenset(comp))


@dataclass(frozen=True)
class BMatchingProblem:
    left_count: int
    right_count: int
    edges: frozenset[tuple[int, int]]
    left_caps: tuple[int, ...]
    right_caps: tuple[int, ...]
    target: int

    def __post_init__(self):
        if len(self.left_caps) != self.left_count or len(self.right_caps) != self.right_count:
            raise ValueError("one capacity per vertex is required")
        if any(c < 0 for c in self.left_caps + self.right_caps) or self.target < 0:
            raise ValueError("capacities and target must be nonnegative")
        if any(c > 1 for c in self.left_caps):
            raise ValueError("left capacities above 1 are not supported")
        for l, r in self.edges:
            if not (0 <= l < self.left_count and 0 <= r < self.right_count):
                raise ValueError(f"edge ({l}, {r}) outside the vertex ranges")


def b_matching_feasible(p: BMatchingProblem) -> Optional[dict[int, int]]:
    """Assign at least ``p.target`` left vertices to right vertices within capacities.

    Solved as a maximum flow with BFS augmenting paths; the returned assignment
    is a maximum one, or None if even that is below the target.
    """
    # nodes: source, left 0.., right .., sink
    L, R = p.left_count, p.right_count
    src, sink = L + R, L + R + 1
    cap: dict[tuple[int, int], int] = {}
    graph: list[list[int]] = [[] for _ in range(L + R + 2)]

    def add(u: int, v: int, c: int) -> None:
        if (u, v) not in cap:
            graph[u].append(v)
            graph[v].append(u)
            cap[(u, v)] = 0
            cap.setdefault((v, u), 0)
        cap[(u, v)] += c

    for l in range(L):
        add(src, l, p.left_caps[l])
    for l, r in sorted(p.edges):
        add(l, L + r, 1)
    for r in range(R):
        add(L + r, sink, p.right_caps[r])
    for nb in graph:
        nb.sort()

    flow = 0
    while True:
        prev = {src: src}
        queue = deque([src])
        while queue and sink not in prev:
            u = queue.popleft()
            for v in graph[u]:
                if v not in prev and cap[(u, v)] > 0:
                    prev[v] = u
                    queue.append(v)
        if sink not in prev:
            break
        v = sink
        while v != src:
            u = prev[v]
            cap[(u, v)] -= 1
            cap[(v, u)] += 1
            v = u
        flow += 1

    if flow < p.target:
        return None
    return {
        l: r
        for l, r in sorted(p.edges)
        if cap[(L + r, l)] > 0
    }
