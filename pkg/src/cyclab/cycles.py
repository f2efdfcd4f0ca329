"""Exact cycle and path search on small digraphs.

All searches are exhaustive backtracking with bitmask visited sets.  Branching
goes through vertices in ascending order, so the same digraph always yields
the same witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .digraph import Digraph, DigraphError, mask_vertices, vertex_mask

__all__ = [
    "PathWitness",
    "CycleWitness",
    "WitnessError",
    "t_vertices",
    "cycle_of_length",
    "hamiltonian_cycle",
    "find_cycle_through",
    "find_t_cycle",
    "longest_cycle_length",
    "iter_cycles_of_length",
]


class WitnessError(ValueError):
    pass


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def validate(self, D: Digraph) -> None:
        vs = self.vertices
        if len(vs) < 2:
            raise WitnessError("a path needs at least two vertices")
        if len(set(vs)) != len(vs):
            raise WitnessError(f"path repeats a vertex: {vs}")
        for v in vs:
            if not 0 <= v < D.n:
                raise WitnessError(f"vertex {v} out of range")
        for a, b in zip(vs, vs[1:]):
            if not D.has_arc(a, b):
                raise WitnessError(f"missing arc {a}->{b}")

    def is_valid(self, D: Digraph) -> bool:
        try:
            self.validate(D)
        except WitnessError:
            return False
        return True

    def insert(self, index: int, x: int) -> "PathWitness":
        """Path with ``x`` placed between 1-based positions ``index`` and ``index+1``."""
        vs = self.vertices
        return PathWitness(vs[:index] + (x,) + vs[index:])


@dataclass(frozen=True)
class CycleWitness:
    """Closed walk ``v0 -> v1 -> ... -> v_{k-1} -> v0`` on distinct vertices."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, i: int) -> int:
        # subscripts wrap around the cycle
        return self.vertices[i % len(self.vertices)]

    @property
    def mask(self) -> int:
        return vertex_mask(self.vertices)

    def validate(self, D: Digraph) -> None:
        vs = self.vertices
        if len(vs) < 2:
            raise WitnessError("a cycle needs at least two vertices")
        if len(set(vs)) != len(vs):
            raise WitnessError(f"cycle repeats a vertex: {vs}")
        for v in vs:
            if not 0 <= v < D.n:
                raise WitnessError(f"vertex {v} out of range")
        for a, b in zip(vs, vs[1:] + vs[:1]):
            if not D.has_arc(a, b):
                raise WitnessError(f"missing arc {a}->{b}")

    def is_valid(self, D: Digraph) -> bool:
        try:
            self.validate(D)
        except WitnessError:
            return False
        return True


def _require_odd(D: Digraph) -> int:
    if D.n < 3 or D.n % 2 == 0:
        raise DigraphError(f"T-vertices are defined for odd order n >= 3, got n={D.n}")
    return (D.n - 1) // 2


def t_vertex_mask(D: Digraph) -> int:
    m = _require_odd(D)
    mask = 0
    for v in range(D.n):
        if D.out[v].bit_count() >= m and D.inn[v].bit_count() >= m:
            mask |= 1 << v
    return mask


def t_vertices(D: Digraph) -> frozenset[int]:
    """Vertices whose out- and in-degree are both at least ``(n-1)/2``."""
    return frozenset(mask_vertices(t_vertex_mask(D)))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _cycle_search(D: Digraph, start: int, allowed: int, length: int | None,
                  required: int) -> Optional[tuple[int, ...]]:
    """First cycle through ``start`` inside ``allowed`` covering ``required``.

    ``length`` fixes the vertex count when given.  Vertices outside
    ``allowed`` are never visited.
    """
    out = D.out
    back = D.inn[start]
    path = [start]

    def dfs(v: int, visited: int, missing: int) -> bool:
        k = len(path)
        if k >= 2 and not missing and out[v] >> start & 1 and (length is None or k == length):
            return True
        if length is not None and k >= length:
            return False
        cand = out[v] & allowed & ~visited
        if not cand:
            return False
        # the path must still be able to close: some vertex left must reach start
        if not (back & allowed & ~visited) and not (out[v] >> start & 1):
            return False
        for w in _bits(cand):
            path.append(w)
            if dfs(w, visited | (1 << w), missing & ~(1 << w)):
                return True
            path.pop()
        return False

    if dfs(start, 1 << start, required & ~(1 << start)):
        return tuple(path)
    return None


def cycle_of_length(D: Digraph, k: int) -> Optional[CycleWitness]:
    """A cycle on exactly ``k`` vertices, rooted at its smallest vertex, or ``None``."""
    if not 2 <= k <= D.n:
        raise DigraphError(f"cycle length must lie in [2, {D.n}], got {k}")
    full = D.full_mask
    for s in range(D.n - k + 1):
        allowed = full & ~((1 << s) - 1)
        found = _cycle_search(D, s, allowed, k, 0)
        if found is not None:
            return CycleWitness(found)
    return None


def iter_cycles_of_length(D: Digraph, k: int, allowed: int | None = None) -> Iterator[CycleWitness]:
    """Every ``k``-cycle once, rooted at its smallest vertex, in lexicographic order."""
    if allowed is None:
        allowed = D.full_mask
    out = D.out
    for s in _bits(allowed):
        inside = allowed & ~((1 << s) - 1)
        path = [s]

        def dfs(v: int, visited: int):
            if len(path) == k:
                if out[v] >> s & 1:
                    yield CycleWitness(tuple(path))
                return
            for w in _bits(out[v] & inside & ~visited):
                path.append(w)
                yield from dfs(w, visited | (1 << w))
                path.pop()

        yield from dfs(s, 1 << s)


def hamiltonian_cycle(D: Digraph) -> Optional[CycleWitness]:
    if D.n < 2:
        raise DigraphError("a Hamiltonian cycle needs n >= 2")
    return cycle_of_length(D, D.n)


def find_cycle_through(D: Digraph, S: Iterable[int]) -> Optional[CycleWitness]:
    """A cycle containing every vertex of ``S``, anchored at ``min(S)``."""
    req = vertex_mask(S)
    if req == 0:
        raise DigraphError("find_cycle_through needs a nonempty vertex set")
    if req & ~D.full_mask:
        raise DigraphError("vertex set is not contained in the vertex range")
    start = (req & -req).bit_length() - 1
    found = _cycle_search(D, start, D.full_mask, None, req)
    return None if found is None else CycleWitness(found)


def any_cycle(D: Digraph) -> Optional[CycleWitness]:
    for s in range(D.n):
        found = _cycle_search(D, s, D.full_mask & ~((1 << s) - 1), None, 0)
        if found is not None:
            return CycleWitness(found)
    return None


def find_t_cycle(D: Digraph) -> Optional[CycleWitness]:
    """A cycle through every T-vertex.

    With no T-vertices at all any cycle qualifies; the first one found by
    :func:`any_cycle` is returned.
    """
    T = t_vertex_mask(D)
    if T == 0:
        return any_cycle(D)
    return find_cycle_through(D, mask_vertices(T))


def longest_cycle_length(D: Digraph) -> Optional[int]:
    for k in range(D.n, 1, -1):
        if cycle_of_length(D, k) is not None:
            return k
    return None
