"""Shared strategies and naive oracles.

The oracles below work on plain adjacency matrices and enumerate vertex
permutations directly; they share no search code with the package.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

import numpy as np
import pytest
from hypothesis import strategies as st

from cyclab import Digraph, build_digraph


@st.composite
def digraphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.lists(st.booleans(), min_size=n * n, max_size=n * n))
    arcs = [(i, j) for i in range(n) for j in range(n) if i != j and bits[i * n + j]]
    return build_digraph(n, arcs)


def random_digraph_py(n: int, p: float, rng: random.Random) -> Digraph:
    return build_digraph(n, [(i, j) for i in range(n) for j in range(n) if i != j and rng.random() < p])


def naive_cycles(adj) -> list[tuple[int, ...]]:
    """Every cycle once, rooted at its smallest vertex."""
    adj = np.asarray(adj, dtype=bool)
    n = adj.shape[0]
    found = []
    for k in range(2, n + 1):
        for subset in combinations(range(n), k):
            first, rest = subset[0], subset[1:]
            for order in permutations(rest):
                seq = (first,) + order
                if all(adj[seq[i], seq[(i + 1) % k]] for i in range(k)):
                    found.append(seq)
    return found


def naive_reach(adj) -> np.ndarray:
    adj = np.asarray(adj, dtype=bool)
    n = adj.shape[0]
    r = adj | np.eye(n, dtype=bool)
    for k in range(n):  # Warshall
        r = r | (r[:, [k]] & r[[k], :])
    return r


def naive_strong(adj) -> bool:
    return bool(naive_reach(adj).all())


def naive_k_strong(adj, k: int) -> bool:
    adj = np.asarray(adj, dtype=bool)
    n = adj.shape[0]
    if n < k + 1:
        return False
    for size in range(k):
        for removed in combinations(range(n), size):
            keep = [v for v in range(n) if v not in removed]
            if not naive_strong(adj[np.ix_(keep, keep)]):
                return False
    return True


def naive_isomorphic(a, b) -> bool:
    a = np.asarray(a, dtype=bool)
    b = np.asarray(b, dtype=bool)
    n = a.shape[0]
    if b.shape != a.shape or a.sum() != b.sum():
        return False
    for perm in permutations(range(n)):
        p = list(perm)
        if (a[np.ix_(p, p)] == b).all():
            return True
    return False


def naive_t_vertices(adj) -> set[int]:
    adj = np.asarray(adj, dtype=bool)
    n = adj.shape[0]
    m = (n - 1) // 2
    return {v for v in range(n) if adj[v].sum() >= m and adj[:, v].sum() >= m}


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
