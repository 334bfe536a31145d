"""
From graph puzzles to coalition games
=====================================

Two gadgets turn graph questions into welfare questions. Covering a graph
with few cliques maps to enemy-averse games; splitting a graph into
triangles maps to friend-appreciating games.
"""

from fractions import Fraction

from fewelfare import (
    Model, UndirectedGraph, esw, exact_max_esw, exact_min_pc, exact_pit,
    gen_ea_from_pc, gen_fa_from_pit, min_clique_partition,
)

# Clique cover: V plus an equally large clique V' wired to all of V.
c5 = UndirectedGraph(5, [(i, (i + 1) % 5) for i in range(5)])
inst, gmap, build = gen_ea_from_pc(c5)
cliques = min_clique_partition(c5)
part = build(cliques)
print("C5 needs", exact_min_pc(c5), "cliques:", cliques)
print("gadget partition", part.coalitions, "EA welfare", esw(inst, part, Model.EA))

# Triangles: every vertex becomes a hub z_v with three spokes a_v, b_v, c_v.
for edges in ([], [(0, 1)], [(0, 1), (1, 2)], [(0, 1), (1, 2), (0, 2)]):
    g = UndirectedGraph(3, edges)
    inst, gmap = gen_fa_from_pit(g)
    opt = exact_max_esw(inst, Model.FA, cap=12)
    print(f"{len(edges)} edges: triangles={exact_pit(g)!s:5} gadget optimum={opt.best_value}"
          f" (threshold {Fraction(7, 3)}, {opt.explored} partitions visited)")
