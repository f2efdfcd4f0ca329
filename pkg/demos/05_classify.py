"""
Classifying a digraph against the four outcomes
===============================================

For a strong digraph of odd order n with a cycle of length n-1, at least
one of these should hold:

  i    a cycle through every T-vertex
  ii   D5, D7, an L1 variant or an L2 member
  iii  K*_{m,m+1} <= D <= [K_m + empty_{m+1}]*
  iv   an (n-1)-cycle whose vertices non-adjacent to the outside vertex
       (at least three) are twins of it

All four are evaluated independently, so overlaps show up.
"""

from cyclab import classify_theorem2, gen_d5, gen_l2, gen_remark3, gen_sandwich, L2Options

for name, D in [("D5", gen_d5()), ("L2, m=3", gen_l2(L2Options(3))),
                ("K*_{2,3}", gen_sandwich(2)), ("K*_{3,4}", gen_sandwich(3))]:
    out = classify_theorem2(D)
    print(f"{name:10s} holds: {', '.join(out.labels)}")

# The seven-vertex digraph from the previous demo meets the hypothesis too
# (it has a 6-cycle) and satisfies none of the four outcomes.
out = classify_theorem2(gen_remark3())
print("seven-vertex example holds:", out.labels or "nothing")
