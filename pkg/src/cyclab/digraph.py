"""Dense loop-free digraphs on vertices ``0..n-1``.

Rows are stored as integer bitsets: bit ``j`` of ``out[i]`` is set iff the
arc ``i -> j`` exists, and ``inn`` holds the transpose.  Everything here is
immutable, so values can be shared freely between worker processes.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Digraph",
    "DigraphError",
    "build_digraph",
    "semidegrees",
    "degree_toward",
    "adjacency_count",
    "converse",
    "induced",
    "is_strong",
    "is_k_strong",
    "vertex_mask",
    "mask_vertices",
]


class DigraphError(ValueError):
    """Raised for malformed digraphs or out-of-range vertex arguments."""


def vertex_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def mask_vertices(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _transpose(n: int, rows: Sequence[int]) -> tuple[int, ...]:
    cols = [0] * n
    for i, row in enumerate(rows):
        bit = 1 << i
        j = 0
        while row:
            if row & 1:
                cols[j] |= bit
            row >>= 1
            j += 1
    return tuple(cols)


class Digraph:
    """Immutable digraph with bitset adjacency rows.

    Use :func:`build_digraph` or :meth:`from_matrix` to construct one; both
    reject loops and out-of-range vertices.
    """

    __slots__ = ("n", "out", "inn", "_hash")

    def __init__(self, n: int, out: Sequence[int], inn: Sequence[int] | None = None):
        if n < 1:
            raise DigraphError(f"vertex count must be >= 1, got {n}")
        if len(out) != n:
            raise DigraphError(f"expected {n} rows, got {len(out)}")
        full = (1 << n) - 1
        for i, row in enumerate(out):
            if row < 0 or row & ~full:
                raise DigraphError(f"row {i} references a vertex outside [0, {n})")
            if row >> i & 1:
                raise DigraphError(f"loop at vertex {i}")
        out = tuple(out)
        if inn is None:
            inn = _transpose(n, out)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "out", out)
        object.__setattr__(self, "inn", tuple(inn))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _trusted(cls, n: int, out: tuple[int, ...], inn: tuple[int, ...]) -> "Digraph":
        # hot-path constructor for enumeration; rows must already be valid
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "out", out)
        object.__setattr__(self, "inn", inn)
        object.__setattr__(self, "_hash", None)
        return self

    @classmethod
    def from_matrix(cls, matrix) -> "Digraph":
        a = np.asarray(matrix, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DigraphError(f"adjacency matrix must be square, got shape {a.shape}")
        n = a.shape[0]
        rows = [vertex_mask(np.flatnonzero(a[i]).tolist()) for i in range(n)]
        return cls(n, rows)

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.out == other.out

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, self.out)))
        return self._hash

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arcs()})"

    @property
    def adj(self) -> np.ndarray:
        """Read-only ``n x n`` boolean adjacency matrix."""
        a = np.zeros((self.n, self.n), dtype=bool)
        for i, row in enumerate(self.out):
            for j in mask_vertices(row):
                a[i, j] = True
        a.setflags(write=False)
        return a

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def arcs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in mask_vertices(self.out[i])]

    def arc_count(self) -> int:
        return sum(row.bit_count() for row in self.out)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return mask_vertices(self.out[v])

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return mask_vertices(self.inn[v])

    def relabel(self, perm: Sequence[int]) -> "Digraph":
        """Return the digraph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise DigraphError("relabeling must be a permutation of the vertex range")
        rows = [0] * self.n
        for i, j in self.arcs():
            rows[perm[i]] |= 1 << perm[j]
        return Digraph(self.n, rows)


def _check_vertex(D: Digraph, v: int) -> None:
    if not 0 <= v < D.n:
        raise DigraphError(f"vertex {v} out of range [0, {D.n})")


def build_digraph(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Digraph on ``n`` vertices with the given arcs; duplicates collapse."""
    if n < 1:
        raise DigraphError(f"vertex count must be >= 1, got {n}")
    rows = [0] * n
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise DigraphError(f"arc ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise DigraphError(f"loop ({u}, {v}) is not allowed")
        rows[u] |= 1 << v
    return Digraph(n, rows)


def semidegrees(D: Digraph, v: int) -> tuple[int, int]:
    """``(out_degree, in_degree)`` of ``v``."""
    _check_vertex(D, v)
    return D.out[v].bit_count(), D.inn[v].bit_count()


def degree_toward(D: Digraph, v: int, A: Iterable[int]) -> int:
    """Number of arcs between ``v`` and the vertex set ``A`` in either direction.

    ``v`` must lie outside ``A``.
    """
    _check_vertex(D, v)
    mask = vertex_mask(A)
    if mask & ~D.full_mask:
        raise DigraphError("vertex set is not contained in the vertex range")
    if mask >> v & 1:
        raise DigraphError(f"vertex {v} belongs to the target set")
    return (D.out[v] & mask).bit_count() + (D.inn[v] & mask).bit_count()


def adjacency_count(D: Digraph, u: int, v: int) -> int:
    """Number of arcs between ``u`` and ``v``: 0, 1 or 2."""
    _check_vertex(D, u)
    _check_vertex(D, v)
    if u == v:
        raise DigraphError("adjacency_count needs two distinct vertices")
    return (D.out[u] >> v & 1) + (D.out[v] >> u & 1)


def converse(D: Digraph) -> Digraph:
    return Digraph._trusted(D.n, D.inn, D.out)


def induced(D: Digraph, A: Iterable[int]) -> Digraph:
    """Subdigraph induced by ``A``, relabeled by ascending original label."""
    verts = sorted(set(A))
    if not verts:
        raise DigraphError("cannot induce on an empty vertex set")
    for v in verts:
        _check_vertex(D, v)
    pos = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = 0
        for w in mask_vertices(D.out[v]):
            if w in pos:
                row |= 1 << pos[w]
        rows.append(row)
    return Digraph(len(verts), rows)


def _reach(rows: Sequence[int], start: int, alive: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def strong_within(D: Digraph, alive: int) -> bool:
    """Is the subdigraph induced by the bitmask ``alive`` strongly connected?"""
    if alive == 0:
        return False
    start = (alive & -alive).bit_length() - 1
    return _reach(D.out, start, alive) == alive and _reach(D.inn, start, alive) == alive


def is_strong(D: Digraph) -> bool:
    return strong_within(D, D.full_mask)


def is_k_strong(D: Digraph, k: int) -> bool:
    """``n >= k+1`` and deleting any fewer than ``k`` vertices leaves a strong digraph."""
    if k < 1:
        raise DigraphError(f"k must be >= 1, got {k}")
    if D.n < k + 1:
        return False
    full = D.full_mask
    for size in range(k):
        for removed in combinations(range(D.n), size):
            if not strong_within(D, full & ~vertex_mask(removed)):
                return False
    return True
