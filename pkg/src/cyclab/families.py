"""Generators and recognizers for the exceptional digraphs.

Labeling conventions (name -> vertex index)::

    D5       x1 x2 x3 x  y             -> 0 1 2 3 4
    D7       x1 x2 x3 x4 x5 x  y       -> 0 1 2 3 4 5 6
    Remark3  x1 x2 x3 x4 x5 x  y       -> 0 1 2 3 4 5 6
    L2(m)    x1 ... x_{2m} x           -> 0 ... 2m-1, 2m
    sandwich side A (m vertices)       -> 0 ... m-1
             side B (m+1 vertices)     -> m ... 2m
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Optional

from .cycles import _bits
from .digraph import Digraph, DigraphError, build_digraph, mask_vertices, vertex_mask
from .iso import _signature, canonical_form

__all__ = [
    "D5_LABELS",
    "D7_LABELS",
    "REMARK3_LABELS",
    "gen_d5",
    "gen_d7",
    "gen_l1",
    "gen_remark3",
    "L2Options",
    "L2Witness",
    "gen_l2",
    "random_l2_options",
    "in_l2",
    "SandwichWitness",
    "gen_sandwich",
    "in_sandwich",
    "matches_named_exception",
    "NAMED_EXCEPTIONS",
]

D5_LABELS = {"x1": 0, "x2": 1, "x3": 2, "x": 3, "y": 4}
D7_LABELS = {"x1": 0, "x2": 1, "x3": 2, "x4": 3, "x5": 4, "x": 5, "y": 6}
REMARK3_LABELS = dict(D7_LABELS)

_D5_OUT = {
    "x1": ("x2", "y"),
    "x2": ("x3", "x"),
    "x3": ("x", "y"),
    "x": ("x1", "x2"),
    "y": ("x1", "x3"),
}

_D7_OUT = {
    "x1": ("x2", "x5", "y"),
    "x2": ("x3", "x4", "y"),
    "x3": ("x2", "x4", "x"),
    "x4": ("x3", "x5", "x"),
    "x5": ("x1", "x", "y"),
    "x": ("x1", "x2", "x3"),
    "y": ("x1", "x4", "x5"),
}

_REMARK3_OUT = {
    "x1": ("x2", "x4"),
    "x2": ("x", "y", "x3", "x5"),
    "x3": ("x1", "x2", "x4"),
    "x4": ("x", "y", "x5"),
    "x5": ("x", "y", "x3"),
    "x": ("x1", "x2", "x4"),
    "y": ("x1", "x2", "x4"),
}

# Without it x3 has in-degree 2 and is not a T-vertex; this is the only
# single arc whose addition gives T = {x, y, x2, x3, x4} while keeping the
# digraph 2-strong and that set acyclic.
_REMARK3_MISSING_ARC = ("x4", "x3")


def _from_out_lists(labels: dict[str, int], outs: dict[str, tuple[str, ...]]) -> Digraph:
    arcs = [(labels[u], labels[v]) for u, vs in outs.items() for v in vs]
    return build_digraph(len(labels), arcs)


def gen_d5() -> Digraph:
    return _from_out_lists(D5_LABELS, _D5_OUT)


def gen_d7() -> Digraph:
    return _from_out_lists(D7_LABELS, _D7_OUT)


def gen_remark3(literal: bool = False) -> Digraph:
    """2-strong digraph on 7 vertices whose five T-vertices share no cycle.

    The printed out-lists (``literal=True``, 21 arcs) leave ``x3`` with
    in-degree 2; the default adds ``x4 -> x3`` (22 arcs), after which
    ``x, y, x2, x3, x4`` are exactly the T-vertices.
    """
    outs = {k: tuple(v) for k, v in _REMARK3_OUT.items()}
    if not literal:
        u, v = _REMARK3_MISSING_ARC
        outs[u] = outs[u] + (v,)
    return _from_out_lists(REMARK3_LABELS, outs)


def gen_l1(variant: int) -> Digraph:
    """D5 plus ``x1 -> x3`` (1), ``x3 -> x1`` (2), or both (3)."""
    x1, x3 = D5_LABELS["x1"], D5_LABELS["x3"]
    extra = {1: [(x1, x3)], 2: [(x3, x1)], 3: [(x1, x3), (x3, x1)]}
    if variant not in extra:
        raise DigraphError(f"L1 variant must be 1, 2 or 3, got {variant!r}")
    return build_digraph(5, gen_d5().arcs() + extra[variant])


# ---------------------------------------------------------------- L2 family


@dataclass(frozen=True)
class L2Options:
    """Free part of an L2 member, in vertex indices (``x_i`` is ``i - 1``).

    ``inner_first`` lives on ``{x1..x_m}``, ``inner_second`` on
    ``{x_m..x_{2m-1}}`` and ``back_arcs`` go from ``{x_{m+1}..x_{2m-1}}``
    to ``{x1..x_m}``.  Arcs from ``{x1..x_{m-1}}`` to ``{x_{m+1}..x_{2m-1}}``
    cannot be expressed, so every valid options object yields a member.
    """

    m: int
    inner_first: frozenset = field(default_factory=frozenset)
    inner_second: frozenset = field(default_factory=frozenset)
    back_arcs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        m = self.m
        if m < 2:
            raise DigraphError(f"L2 needs m >= 2, got {m}")
        first = set(range(0, m))
        second = set(range(m - 1, 2 * m - 1))
        tail = set(range(m, 2 * m - 1))
        for name, arcs, src, dst in (
            ("inner_first", self.inner_first, first, first),
            ("inner_second", self.inner_second, second, second),
            ("back_arcs", self.back_arcs, tail, first),
        ):
            arcs = frozenset(tuple(a) for a in arcs)
            object.__setattr__(self, name, arcs)
            for u, v in arcs:
                if u == v:
                    raise DigraphError(f"{name}: loop ({u}, {v})")
                if u not in src or v not in dst:
                    raise DigraphError(f"{name}: arc ({u}, {v}) outside its allowed block")


def _l2_required_arcs(m: int) -> list[tuple[int, int]]:
    n2 = 2 * m
    x, last = n2, n2 - 1
    arcs = [(i, (i + 1) % n2) for i in range(n2)]
    for v in range(0, m):
        arcs += [(x, v), (last, v)]
    for v in range(m - 1, n2 - 1):
        arcs += [(v, x), (v, last)]
    return arcs


def gen_l2(opts: L2Options) -> Digraph:
    m = opts.m
    arcs = _l2_required_arcs(m)
    arcs += list(opts.inner_first) + list(opts.inner_second) + list(opts.back_arcs)
    return build_digraph(2 * m + 1, arcs)


def random_l2_options(m: int, rng: random.Random, density: float = 0.5) -> L2Options:
    def pick(src, dst):
        return frozenset(
            (u, v) for u in src for v in dst if u != v and rng.random() < density
        )

    first = range(0, m)
    second = range(m - 1, 2 * m - 1)
    tail = range(m, 2 * m - 1)
    return L2Options(m, pick(first, first), pick(second, second), pick(tail, first))


@dataclass(frozen=True)
class L2Witness:
    """``cycle[i]`` plays ``x_{i+1}``; ``outside`` plays ``x``."""

    cycle: tuple[int, ...]
    outside: int


def _l2_holds(D: Digraph, order: tuple[int, ...], x: int) -> bool:
    m = len(order) // 2
    z = order[-1]
    out = D.out
    for a, b in zip(order, order[1:] + order[:1]):
        if not out[a] >> b & 1:
            return False
    if out[x] >> z & 1 or out[z] >> x & 1:
        return False
    plus = vertex_mask(order[:m])
    minus = vertex_mask(order[m - 1 : 2 * m - 1])
    if not (out[x] == out[z] == plus and D.inn[x] == D.inn[z] == minus):
        return False
    head = vertex_mask(order[: m - 1])
    tail = vertex_mask(order[m : 2 * m - 1])
    return not any(out[u] & tail for u in mask_vertices(head))


def in_l2(D: Digraph) -> Optional[L2Witness]:
    """Labeling under which ``D`` is an L2 member, or ``None``.

    Candidates for ``x`` and ``x_{2m}`` are non-adjacent twins with ``m``
    out- and ``m`` in-neighbors sharing exactly one vertex (``x_m``); the
    remaining vertices are tried in every order compatible with that.
    """
    n = D.n
    if n < 5 or n % 2 == 0:
        return None
    m = (n - 1) // 2
    out, inn = D.out, D.inn
    for x in range(n):
        if out[x].bit_count() != m or inn[x].bit_count() != m:
            continue
        common = out[x] & inn[x]
        if common.bit_count() != 1:
            continue
        for z in range(n):
            if z == x or out[z] != out[x] or inn[z] != inn[x]:
                continue
            if out[x] >> z & 1 or out[z] >> x & 1:
                continue
            xm = common.bit_length() - 1
            heads = mask_vertices(out[x] & ~common)
            tails = mask_vertices(inn[x] & ~common)
            for h in permutations(heads):
                for t in permutations(tails):
                    order = h + (xm,) + t + (z,)
                    if _l2_holds(D, order, x):
                        return L2Witness(order, x)
    return None


# ---------------------------------------------------------- sandwich family


@dataclass(frozen=True)
class SandwichWitness:
    side_a: frozenset
    side_b: frozenset

    def validate(self, D: Digraph) -> None:
        a = vertex_mask(self.side_a)
        b = vertex_mask(self.side_b)
        if len(self.side_b) != len(self.side_a) + 1 or a & b or (a | b) != D.full_mask:
            raise DigraphError("sandwich sides must partition V into m and m+1 vertices")
        for v in self.side_b:
            if D.out[v] != a or D.inn[v] != a:
                raise DigraphError(f"vertex {v} of side B is not joined exactly to side A")


def gen_sandwich(m: int, inner_arcs: Iterable[tuple[int, int]] = ()) -> Digraph:
    """``K*_{m,m+1}`` plus ``inner_arcs`` on side A ``{0..m-1}``."""
    if m < 1:
        raise DigraphError(f"sandwich needs m >= 1, got {m}")
    arcs = []
    for u, v in inner_arcs:
        if not (0 <= u < m and 0 <= v < m):
            raise DigraphError(f"inner arc ({u}, {v}) leaves side A = [0, {m})")
        arcs.append((u, v))
    for a in range(m):
        for b in range(m, 2 * m + 1):
            arcs += [(a, b), (b, a)]
    return build_digraph(2 * m + 1, arcs)


def in_sandwich(D: Digraph) -> Optional[SandwichWitness]:
    """Partition with an independent side B of ``m+1`` vertices fully joined to A."""
    n = D.n
    if n % 2 == 0:
        return None
    m = (n - 1) // 2
    full = D.full_mask
    out, inn = D.out, D.inn
    # every B vertex has out = in = A, so the candidate A sets are rows of that shape
    for row in sorted({out[v] for v in range(n) if out[v] == inn[v] and out[v].bit_count() == m}):
        b = full & ~row
        if b.bit_count() != m + 1:
            continue
        if all(out[v] == row and inn[v] == row for v in _bits(b)):
            return SandwichWitness(frozenset(mask_vertices(row)), frozenset(mask_vertices(b)))
    return None


# ----------------------------------------------------------- named digraphs

NAMED_EXCEPTIONS = ("D5", "D7", "L1_1", "L1_2", "L1_3")


@lru_cache(maxsize=None)
def _named_references() -> tuple:
    refs = [("D5", gen_d5()), ("D7", gen_d7())]
    refs += [(f"L1_{k}", gen_l1(k)) for k in (1, 2, 3)]
    out = []
    for name, D in refs:
        sig = tuple(sorted(_signature(D, v) for v in range(D.n)))
        out.append((name, D.n, D.arc_count(), sig, canonical_form(D)))
    return tuple(out)


def matches_named_exception(D: Digraph) -> Optional[str]:
    """``"D5"``, ``"D7"``, ``"L1_1"``, ``"L1_2"``, ``"L1_3"`` or ``None`` (first iso match)."""
    if D.n not in (5, 7):
        return None
    arcs = D.arc_count()
    sig = None
    form = None
    for name, n, count, ref_sig, ref_form in _named_references():
        if n != D.n or count != arcs:
            continue
        if sig is None:
            sig = tuple(sorted(_signature(D, v) for v in range(D.n)))
        if sig != ref_sig:
            continue
        if form is None:
            form = canonical_form(D)
        if form == ref_form:
            return name
    return None
