"""
Cycles of a given length, cycles through vertex sets, T-vertices
================================================================

All searches are exact backtracking over bitsets.  Witnesses come back as
``CycleWitness`` objects, rooted at their smallest vertex and able to
validate themselves against a digraph.
"""

from cyclab import (
    build_digraph,
    cycle_of_length,
    find_cycle_through,
    find_t_cycle,
    gen_d5,
    hamiltonian_cycle,
    longest_cycle_length,
    t_vertices,
)

D = gen_d5()
for k in range(2, D.n + 1):
    print(k, cycle_of_length(D, k))
print("longest:", longest_cycle_length(D), " hamiltonian:", hamiltonian_cycle(D))

# For odd order n = 2m+1, T-vertices have both semidegrees at least m.
# Every vertex of D5 qualifies, and no cycle holds them all.
print("T-vertices:", sorted(t_vertices(D)))
print("T-cycle:", find_t_cycle(D))

# a cycle through a prescribed set, when one exists
print("through {0, 3}:", find_cycle_through(D, [0, 3]))

# 2-cycles count as cycles
two = build_digraph(3, [(0, 1), (1, 0), (1, 2)])
w = find_cycle_through(two, [1])
print(w, "valid:", w.is_valid(two))
