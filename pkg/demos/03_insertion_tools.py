"""
Inserting a vertex into a path, and filling out cycle lengths
=============================================================

``lemma2_condition`` reports which degree condition a vertex ``x`` meets
with respect to a path ``P`` (here ``m`` is the number of path vertices).
Any condition other than ``NONE`` guarantees an index ``i`` with
``P[i] -> x -> P[i+1]``.

``lemma1_cycles`` takes a cycle ``C`` and an outside vertex with
``d(x, C) >= |C| + 1`` and returns a cycle of every length from 2 to
``|C| + 1`` inside ``V(C) + {x}``.
"""

import random

from cyclab import (
    CycleWitness,
    Lemma2Tag,
    PathWitness,
    build_digraph,
    insertion_index,
    lemma1_cycles,
    lemma2_condition,
)

# path 0 -> 1 -> 2 -> 3 and a vertex 4 with five arcs to it
D = build_digraph(5, [(0, 1), (1, 2), (2, 3), (4, 0), (1, 4), (4, 2), (3, 4), (4, 3)])
P = PathWitness((0, 1, 2, 3))
cond = lemma2_condition(D, P, 4)
print(cond)
i = insertion_index(D, P, 4)
print("insert at", i, "->", P.insert(i, 4))

# a quick empirical run: the guarantee never fails
rng = random.Random(0)
tried = 0
for _ in range(2000):
    n = 6
    arcs = {(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.5}
    arcs |= {(0, 1), (1, 2), (2, 3)}
    G = build_digraph(n, arcs)
    Q = PathWitness((0, 1, 2, 3))
    if lemma2_condition(G, Q, 5).tag is Lemma2Tag.NONE:
        continue
    tried += 1
    assert insertion_index(G, Q, 5) is not None
print(tried, "instances met a condition; all admitted an insertion")

# cycle-length spectrum around a 3-cycle
D = build_digraph(4, [(0, 1), (1, 2), (2, 0), (3, 0), (0, 3), (3, 1), (2, 3)])
for c in lemma1_cycles(D, CycleWitness((0, 1, 2)), 3):
    print(len(c), c.vertices)
