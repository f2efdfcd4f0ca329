"""
Building digraphs and reading off degrees and connectivity
==========================================================

Digraphs are immutable.  Each row of the adjacency structure is a Python
int used as a bitset, and ``D.adj`` exposes a read-only numpy view.
"""

from cyclab import (
    build_digraph,
    canonical_form,
    converse,
    degree_toward,
    induced,
    is_isomorphic,
    is_k_strong,
    is_strong,
    semidegrees,
)

# a directed 5-cycle plus two chords
D = build_digraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (3, 1)])
print(D.adj.astype(int))

for v in range(D.n):
    print(v, "out/in:", semidegrees(D, v))

# d(x, A) counts arcs in both directions between x and the set A
print("d(0, {1,2,3}) =", degree_toward(D, 0, [1, 2, 3]))

# reversing every arc swaps the two semidegrees
C = converse(D)
print("converse semidegrees of 0:", semidegrees(C, 0))

print("strong:", is_strong(D), " 2-strong:", is_k_strong(D, 2))

# induced subdigraphs are relabeled 0..k-1 in ascending order
print("arcs on {1,2,3}:", induced(D, [1, 2, 3]).arcs())

# isomorphism through a canonical form; relabeling never changes it
E = D.relabel([4, 2, 0, 3, 1])
print("same canonical form:", canonical_form(D) == canonical_form(E))
print("D vs converse isomorphic:", is_isomorphic(D, C))
