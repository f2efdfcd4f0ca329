"""Vertex insertion into paths and the cycle-length spectrum around a cycle.

Both tools reason about a path or cycle plus one outside vertex ``x``.  In
:func:`lemma2_condition` the letter ``m`` is the number of path vertices,
not ``(n-1)/2``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .cycles import CycleWitness, PathWitness, cycle_of_length
from .digraph import Digraph, DigraphError, degree_toward, induced

__all__ = [
    "Lemma2Tag",
    "Lemma2Condition",
    "lemma2_condition",
    "insertion_index",
    "lemma1_cycles",
]


class Lemma2Tag(enum.Enum):
    COND_I = "i"
    COND_II = "ii"
    COND_III = "iii"
    NONE = "none"


@dataclass(frozen=True)
class Lemma2Condition:
    tag: Lemma2Tag
    degree_toward_path: int


def _check_outside(D: Digraph, vertices: Sequence[int], x: int, what: str) -> None:
    if not 0 <= x < D.n:
        raise DigraphError(f"vertex {x} out of range [0, {D.n})")
    if x in vertices:
        raise DigraphError(f"vertex {x} lies on the {what}")


def lemma2_condition(D: Digraph, P: PathWitness, x: int) -> Lemma2Condition:
    """Strongest insertion hypothesis that ``x`` satisfies with respect to ``P``.

    With ``m = |P|`` and ``d = d(x, P)``:

    * ``COND_I``:   ``d >= m + 2``
    * ``COND_II``:  ``d >= m + 1`` and (``x -> x_1`` or ``x_m -> x`` is missing)
    * ``COND_III``: ``d >= m``, ``x -> x_1`` missing and ``x_m -> x`` missing

    The second alternative of ``COND_II`` is the arc from the last path
    vertex into ``x``.  With ``x_m -> x_1`` there instead, the path
    ``u -> v`` with arcs ``x -> u``, ``x -> v``, ``v -> x`` would qualify
    although ``x`` cannot be inserted.
    """
    vs = P.vertices
    if len(vs) < 2:
        raise DigraphError("path must have at least two vertices")
    _check_outside(D, vs, x, "path")
    m = len(vs)
    d = degree_toward(D, x, vs)
    first, last = vs[0], vs[-1]
    no_x_first = not D.has_arc(x, first)
    no_last_x = not D.has_arc(last, x)
    if d >= m + 2:
        tag = Lemma2Tag.COND_I
    elif d >= m + 1 and (no_x_first or no_last_x):
        tag = Lemma2Tag.COND_II
    elif d >= m and no_x_first and no_last_x:
        tag = Lemma2Tag.COND_III
    else:
        tag = Lemma2Tag.NONE
    return Lemma2Condition(tag, d)


def insertion_index(D: Digraph, P: PathWitness, x: int) -> Optional[int]:
    """Smallest 1-based ``i`` with ``P[i] -> x -> P[i+1]``, or ``None``.

    ``P.insert(i, x)`` is then the extended path.
    """
    vs = P.vertices
    _check_outside(D, vs, x, "path")
    into_x = D.inn[x]
    from_x = D.out[x]
    for i in range(len(vs) - 1):
        if into_x >> vs[i] & 1 and from_x >> vs[i + 1] & 1:
            return i + 1
    return None


def lemma1_cycles(D: Digraph, C: CycleWitness, x: int) -> list[CycleWitness]:
    """One cycle of every length ``2..|C|+1`` inside ``V(C) + {x}``.

    Requires ``d(x, C) >= |C| + 1``.  Cycles are returned in original labels,
    shortest first.  Should some length be missing the returned list is
    simply shorter; callers checking the guarantee compare lengths.
    """
    vs = C.vertices
    _check_outside(D, vs, x, "cycle")
    d = degree_toward(D, x, vs)
    if d < len(vs) + 1:
        raise DigraphError(
            f"d(x, C) = {d} is below the required {len(vs) + 1} for a cycle of length {len(vs)}"
        )
    support = sorted(vs + (x,))
    sub = induced(D, support)
    found = []
    for k in range(2, len(vs) + 2):
        cyc = cycle_of_length(sub, k)
        if cyc is not None:
            found.append(CycleWitness(tuple(support[v] for v in cyc.vertices)))
    return found
