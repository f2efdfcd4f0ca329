"""
The exceptional digraphs: generators and recognizers
=====================================================

Named digraphs D5 and D7, the three L1 variants, the parametric L2 family,
the K*_{m,m+1} sandwich and a 2-strong seven-vertex digraph whose
T-vertices lie on no common cycle.  Recognizers return witnesses rather
than booleans.
"""

import random

from cyclab import (
    L2Options,
    find_cycle_through,
    gen_d5,
    gen_d7,
    gen_l1,
    gen_l2,
    gen_remark3,
    gen_sandwich,
    hamiltonian_cycle,
    in_l2,
    in_sandwich,
    is_k_strong,
    matches_named_exception,
    t_vertices,
)
from cyclab.families import random_l2_options

for name, D in [("D5", gen_d5()), ("D7", gen_d7())] + [(f"L1 variant {v}", gen_l1(v)) for v in (1, 2, 3)]:
    print(f"{name}: {D.arc_count()} arcs, hamiltonian={hamiltonian_cycle(D) is not None}, "
          f"named match={matches_named_exception(D)}")

# L2 with m = 3: the free part is given explicitly
opts = random_l2_options(3, random.Random(1))
D = gen_l2(opts)
x, z = 6, 5
print("L2: 2-strong?", is_k_strong(D, 2), " cycle through x and x_2m:", find_cycle_through(D, [x, z]))
print("recognized after shuffling:", in_l2(D.relabel([3, 0, 6, 1, 5, 2, 4])))
print("fixed part only:", gen_l2(L2Options(2)).arc_count(), "arcs")

# sandwich: independent side of size m+1 joined both ways to the other side
S = gen_sandwich(3, {(0, 1)})
print("sandwich witness:", in_sandwich(S))

# seven vertices, 2-strong, five T-vertices that no single cycle covers;
# every pair of them does share a cycle
R = gen_remark3()
T = sorted(t_vertices(R))
print("T:", T, " 2-strong:", is_k_strong(R, 2), " cycle through all:", find_cycle_through(R, T))
