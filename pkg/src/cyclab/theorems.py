"""Per-instance checkers for the cyclability statements."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Union

from .cycles import (
    CycleWitness,
    _bits,
    cycle_of_length,
    find_cycle_through,
    find_t_cycle,
    iter_cycles_of_length,
    t_vertex_mask,
)
from .digraph import Digraph, DigraphError, is_k_strong, is_strong, mask_vertices, vertex_mask
from .families import L2Witness, SandwichWitness, in_l2, in_sandwich, matches_named_exception

__all__ = [
    "HypothesisError",
    "is_meyniel_set",
    "check_theorem1_instance",
    "OutcomeIVWitness",
    "outcome_iv_witness",
    "Theorem2Outcome",
    "classify_theorem2",
    "theorem2_hypothesis",
]


class HypothesisError(DigraphError):
    """The digraph does not satisfy the statement being checked."""


def is_meyniel_set(D: Digraph, M: Iterable[int]) -> bool:
    """Every non-adjacent pair in ``M`` has total degree at least ``2n - 1``."""
    members = sorted(set(M))
    for v in members:
        if not 0 <= v < D.n:
            raise DigraphError(f"vertex {v} out of range [0, {D.n})")
    need = 2 * D.n - 1
    deg = {v: D.out[v].bit_count() + D.inn[v].bit_count() for v in members}
    for u, v in combinations(members, 2):
        if not (D.out[u] >> v & 1 or D.out[v] >> u & 1) and deg[u] + deg[v] < need:
            return False
    return True


def _require_odd(D: Digraph) -> None:
    if D.n < 3 or D.n % 2 == 0:
        raise HypothesisError(f"order must be odd and at least 3, got n={D.n}")


def check_theorem1_instance(D: Digraph) -> Optional[tuple[int, int]]:
    """First pair of T-vertices (lexicographically) sharing no cycle, or ``None``.

    Raises :class:`HypothesisError` unless ``D`` is 2-strong of odd order.
    """
    _require_odd(D)
    if not is_k_strong(D, 2):
        raise HypothesisError("digraph is not 2-strong")
    return _theorem1_failure(D)


def _theorem1_failure(D: Digraph) -> Optional[tuple[int, int]]:
    T = mask_vertices(t_vertex_mask(D))
    for u, v in combinations(T, 2):
        if find_cycle_through(D, (u, v)) is None:
            return u, v
    return None


@dataclass(frozen=True)
class OutcomeIVWitness:
    """An ``(n-1)``-cycle, the vertex off it, and positions (0-based) of its non-neighbors."""

    cycle: CycleWitness
    outside: int
    positions: tuple[int, ...]

    def validate(self, D: Digraph) -> None:
        c, x = self.cycle, self.outside
        c.validate(D)
        if len(c) != D.n - 1 or x in c.vertices:
            raise DigraphError("outcome iv needs an (n-1)-cycle missing the outside vertex")
        _check_outcome_iv(D, c.vertices, x, self.positions, strict=True)


def _check_outcome_iv(D: Digraph, cyc, x: int, positions, strict: bool = False) -> bool:
    out, inn = D.out, D.inn
    k = len(cyc)
    if len(positions) < 3:
        if strict:
            raise DigraphError("outcome iv needs at least three non-neighbors on the cycle")
        return False
    group = 1 << x
    for p in positions:
        v = cyc[p]
        prev, nxt = cyc[(p - 1) % k], cyc[(p + 1) % k]
        ok = (
            not (out[x] >> v & 1 or out[v] >> x & 1)
            and out[prev] >> x & 1
            and out[x] >> nxt & 1
            and out[v] == out[x]
            and inn[v] == inn[x]
        )
        if not ok:
            if strict:
                raise DigraphError(f"position {p} (vertex {v}) violates outcome iv")
            return False
        group |= 1 << v
    if any(out[v] & group for v in _bits(group)):
        if strict:
            raise DigraphError("outcome iv vertex group is not independent")
        return False
    return True


def outcome_iv_witness(D: Digraph) -> Optional[OutcomeIVWitness]:
    """Search every ``(n-1)``-cycle ``C`` and the vertex ``x`` off it.

    A witness needs the full set of cycle vertices non-adjacent to ``x`` to
    have at least three members, each flanked by ``pred -> x -> succ`` and
    sharing both neighborhoods with ``x``; the members plus ``x`` must be
    independent.  Returns the first hit over ``x`` ascending, cycles in
    lexicographic order.
    """
    n = D.n
    if n < 3:
        return None
    out, inn = D.out, D.inn
    full = D.full_mask
    for x in range(n):
        others = full & ~(1 << x)
        far = others & ~(out[x] | inn[x])
        if far.bit_count() < 3:
            continue
        # every far vertex needs identical neighborhoods to x
        if any(out[v] != out[x] or inn[v] != inn[x] for v in _bits(far)):
            continue
        for cyc in iter_cycles_of_length(D, n - 1, others):
            vs = cyc.vertices
            positions = tuple(i for i, v in enumerate(vs) if far >> v & 1)
            if _check_outcome_iv(D, vs, x, positions):
                return OutcomeIVWitness(cyc, x, positions)
    return None


@dataclass(frozen=True)
class Theorem2Outcome:
    holds_i: Optional[CycleWitness] = None
    holds_ii: Union[str, L2Witness, None] = None
    holds_iii: Optional[SandwichWitness] = None
    holds_iv: Optional[OutcomeIVWitness] = None

    @property
    def labels(self) -> tuple[str, ...]:
        names = ("i", "ii", "iii", "iv")
        vals = (self.holds_i, self.holds_ii, self.holds_iii, self.holds_iv)
        return tuple(k for k, v in zip(names, vals) if v is not None)

    @property
    def satisfied(self) -> bool:
        return bool(self.labels)


def theorem2_hypothesis(D: Digraph) -> bool:
    """Strong, odd order ``>= 3``, and containing a cycle on ``n - 1`` vertices."""
    if D.n < 3 or D.n % 2 == 0:
        return False
    return is_strong(D) and cycle_of_length(D, D.n - 1) is not None


def classify_theorem2(D: Digraph) -> Theorem2Outcome:
    """Evaluate all four outcomes independently and return every witness found."""
    _require_odd(D)
    if not is_strong(D):
        raise HypothesisError("digraph is not strong")
    if cycle_of_length(D, D.n - 1) is None:
        raise HypothesisError(f"digraph has no cycle of length {D.n - 1}")
    return _classify(D)


def _classify(D: Digraph) -> Theorem2Outcome:
    ii: Union[str, L2Witness, None] = matches_named_exception(D)
    if ii is None:
        ii = in_l2(D)
    return Theorem2Outcome(
        holds_i=find_t_cycle(D),
        holds_ii=ii,
        holds_iii=in_sandwich(D),
        holds_iv=outcome_iv_witness(D),
    )
