"""
Where the approximation guarantees are met exactly
==================================================

Each family below is built so that one algorithm lands precisely on its
worst-case ratio. The optimum is certified by a hand-built partition that
reaches the upper bound ``f_min`` on any agent's welfare.
"""

from fractions import Fraction

from fewelfare import (
    Model, Partition, agent_classes, esw, gen_tight_family, min_expected_utility,
    rand_algo, symmetric_approx, weakly_conn,
)

print(f"{'family':15} {'n':>3} {'algorithm':>10} {'value':>8} {'opt':>4} {'ratio':>7}")

for n in (6, 8, 10, 12):
    inst = gen_tight_family("WeaklyFmin1", n)
    val = esw(inst, weakly_conn(inst), Model.FA)
    print(f"{'WeaklyFmin1':15} {n:3} {'weaklyconn':>10} {str(val):>8} {1:4} {str(1 / val):>7}")

    inst = gen_tight_family("WeaklyFmin2", n)
    val = esw(inst, weakly_conn(inst), Model.FA)
    assert esw(inst, Partition([range(3), range(3, n)]), Model.FA) == agent_classes(inst).f_min
    print(f"{'WeaklyFmin2':15} {n:3} {'weaklyconn':>10} {str(val):>8} {2:4} {str(2 / val):>7}")

# The randomized algorithm is judged by the smallest expected utility.
for n in (5, 6, 8, 12):
    inst = gen_tight_family("RandTight", n)
    out = rand_algo(inst)
    val = min_expected_utility(inst, out)
    print(f"{'RandTight':15} {n:3} {'randalgo':>10} {str(val):>8} {1:4} {str(1 / val):>7}  alpha={out.alpha}")

for n in (8, 12, 16):
    inst = gen_tight_family("SymmetricTight", n)
    part, trace = symmetric_approx(inst)
    val = esw(inst, part, Model.FA)
    print(f"{'SymmetricTight':15} {n:3} {'symmetric':>10} {str(val):>8} {1:4} {str(1 / val):>7}"
          f"  kept together={sorted(trace.residual_final)}")

print("bound 2 - 4/(n+2) at n=16:", 2 - Fraction(4, 18))
