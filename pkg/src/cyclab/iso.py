"""Canonical forms for small digraphs by branch-and-bound over vertex orders."""

from __future__ import annotations

from .digraph import Digraph, DigraphError

__all__ = ["canonical_form", "is_isomorphic", "MAX_CANONICAL_ORDER"]

MAX_CANONICAL_ORDER = 10


def _signature(D: Digraph, v: int) -> tuple[int, int, int]:
    # isomorphism-invariant vertex class: out-degree, in-degree, 2-cycle partners
    return D.out[v].bit_count(), D.inn[v].bit_count(), (D.out[v] & D.inn[v]).bit_count()


def canonical_form(D: Digraph, max_order: int = MAX_CANONICAL_ORDER) -> tuple:
    """Encoding equal for two digraphs iff they are isomorphic.

    Vertices are first split into classes by :func:`_signature`; the vertex
    order must list the classes in sorted order.  Among those orders we take
    the lexicographically smallest adjacency bit string, read position by
    position: when vertex ``k`` of the order is placed we append its arcs to
    and from the earlier vertices.  This reading order lets a partial order
    be discarded as soon as its prefix exceeds the best complete string.
    """
    n = D.n
    if n > max_order:
        raise DigraphError(f"canonical_form is limited to n <= {max_order}, got {n}")
    sigs = [_signature(D, v) for v in range(n)]
    slot_sig = sorted(sigs)
    out = D.out

    best: list[int] | None = None
    order: list[int] = []
    chunks: list[int] = []
    used = [False] * n

    def extend(k: int) -> None:
        nonlocal best
        if k == n:
            best = chunks.copy()
            return
        want = slot_sig[k]
        for v in range(n):
            if used[v] or sigs[v] != want:
                continue
            chunk = 0
            for u in order:
                chunk = (chunk << 2) | ((out[v] >> u & 1) << 1) | (out[u] >> v & 1)
            if best is not None and chunks == best[:k]:
                if chunk > best[k]:
                    continue
            used[v] = True
            order.append(v)
            chunks.append(chunk)
            extend(k + 1)
            chunks.pop()
            order.pop()
            used[v] = False

    # prefix pruning only kicks in once the partial string equals best's prefix;
    # any strictly smaller prefix replaces best when completed
    extend(0)
    assert best is not None
    return (n, tuple(slot_sig), tuple(best))


def is_isomorphic(D1: Digraph, D2: Digraph) -> bool:
    if D1.n != D2.n or D1.arc_count() != D2.arc_count():
        return False
    if sorted(_signature(D1, v) for v in range(D1.n)) != sorted(
        _signature(D2, v) for v in range(D2.n)
    ):
        return False
    return canonical_form(D1) == canonical_form(D2)
