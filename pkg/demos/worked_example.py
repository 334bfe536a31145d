"""
Three agents, two ways to feel about each other
===============================================

A tiny game where agent 0 likes 1, agent 1 likes 2 and agent 2 likes 1.
We score a few partitions under both preference models and ask the
exhaustive solver for the best one.
"""

from fewelfare import Model, Partition, esw, exact_max_esw, gen_paper_example, utilities

inst = gen_paper_example()
print("friends:", [sorted(f) for f in inst.friends])

# Under friend appreciation a friend outweighs any number of enemies;
# under enemy aversion a single enemy outweighs every friend.
for part in (Partition.grand(3), Partition([[0], [1, 2]]), Partition.singletons(3)):
    fa = [str(u) for u in utilities(inst, part, Model.FA)]
    ea = [str(u) for u in utilities(inst, part, Model.EA)]
    print(f"{str(part.coalitions):22} FA {fa}  EA {ea}")

# The grand coalition is the only way to give every agent a friend.
for model in Model:
    best = exact_max_esw(inst, model, all_optima=True)
    print(model.name, "optimum", best.best_value, "reached by", [p.coalitions for p in best.optima])

print("welfare of all singletons:", esw(inst, Partition.singletons(3), Model.FA))
