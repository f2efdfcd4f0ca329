import random

import numpy as np
import pytest
from hypothesis import given, settings

from cyclab import (
    HypothesisError,
    L2Options,
    build_digraph,
    canonical_form,
    check_theorem1_instance,
    classify_theorem2,
    gen_d5,
    gen_d7,
    gen_l1,
    gen_l2,
    gen_remark3,
    gen_sandwich,
    hamiltonian_cycle,
    is_meyniel_set,
    is_strong,
    outcome_iv_witness,
)
from cyclab.families import D5_LABELS as L5
from cyclab.theorems import theorem2_hypothesis

from conftest import digraphs, naive_cycles, random_digraph_py


def complete(n):
    return build_digraph(n, [(i, j) for i in range(n) for j in range(n) if i != j])


def naive_outcome_iv(adj) -> bool:
    """Independent rescan: any (n-1)-cycle and outside x meeting the outcome-iv conditions."""
    a = np.asarray(adj, dtype=bool)
    n = a.shape[0]
    for cyc in naive_cycles(a):
        if len(cyc) != n - 1:
            continue
        (x,) = set(range(n)) - set(cyc)
        k = len(cyc)
        far = [i for i, v in enumerate(cyc) if not a[x, v] and not a[v, x]]
        if len(far) < 3:
            continue
        group = [cyc[i] for i in far] + [x]
        ok = all(
            a[cyc[i - 1], x] and a[x, cyc[(i + 1) % k]]
            and (a[cyc[i]] == a[x]).all() and (a[:, cyc[i]] == a[:, x]).all()
            for i in far
        )
        if ok and not a[np.ix_(group, group)].any():
            return True
    return False


class TestMeyniel:
    def test_complete(self):
        assert is_meyniel_set(complete(5), range(5))

    def test_d5_pair(self):
        assert not is_meyniel_set(gen_d5(), [L5["x1"], L5["x3"]])

    def test_vacuous(self):
        assert is_meyniel_set(gen_d5(), [])
        assert is_meyniel_set(gen_d5(), [2])

    @given(digraphs(min_n=2, max_n=6))
    def test_full_meyniel_strong_is_hamiltonian(self, D):
        if is_strong(D) and is_meyniel_set(D, range(D.n)):
            assert hamiltonian_cycle(D) is not None


class TestTheorem1:
    def test_d5(self):
        assert check_theorem1_instance(gen_d5()) is None

    def test_remark3(self):
        assert check_theorem1_instance(gen_remark3()) is None

    def test_l2_not_two_strong(self):
        with pytest.raises(HypothesisError, match="2-strong"):
            check_theorem1_instance(gen_l2(L2Options(2)))

    def test_even_order(self):
        with pytest.raises(HypothesisError):
            check_theorem1_instance(complete(4))

    def test_random_two_strong(self):
        rng = random.Random(1)
        checked = 0
        while checked < 100:
            D = random_digraph_py(7, 0.5, rng)
            try:
                assert check_theorem1_instance(D) is None
            except HypothesisError:
                continue
            checked += 1


class TestTheorem2:
    def test_d5(self):
        out = classify_theorem2(gen_d5())
        assert out.holds_ii == "D5"
        assert out.holds_i is None
        assert out.labels == ("ii",)

    def test_d5_tag_pins_the_digraph(self):
        rng = random.Random(2)
        perm = list(range(5))
        rng.shuffle(perm)
        D = gen_d5().relabel(perm)
        assert classify_theorem2(D).holds_ii == "D5"
        assert D.arc_count() == 10 and canonical_form(D) == canonical_form(gen_d5())

    def test_d7_and_l1(self):
        assert classify_theorem2(gen_d7()).holds_ii == "D7"
        assert classify_theorem2(gen_l1(3)).holds_ii == "L1_3"

    def test_l2_member(self):
        out = classify_theorem2(gen_l2(L2Options(3)))
        assert out.holds_ii is not None and out.holds_i is None

    def test_sandwich(self):
        out = classify_theorem2(gen_sandwich(2))
        assert out.holds_iii is not None
        assert out.holds_i is None
        out.holds_iii.validate(gen_sandwich(2))

    def test_hamiltonian_gives_t_cycle(self):
        rng = random.Random(3)
        seen = 0
        while seen < 50:
            D = random_digraph_py(5, 0.6, rng)
            if not theorem2_hypothesis(D) or hamiltonian_cycle(D) is None:
                continue
            seen += 1
            out = classify_theorem2(D)
            assert out.holds_i is not None
            out.holds_i.validate(D)

    def test_hypothesis_errors(self):
        with pytest.raises(HypothesisError, match="strong"):
            classify_theorem2(build_digraph(5, [(0, 1)]))
        # a strong 5-vertex digraph whose only cycle is Hamiltonian
        with pytest.raises(HypothesisError, match="length 4"):
            classify_theorem2(build_digraph(5, [(i, (i + 1) % 5) for i in range(5)]))

    def test_every_witness_validates(self):
        rng = random.Random(4)
        seen = 0
        while seen < 60:
            D = random_digraph_py(7, 0.35, rng)
            if not theorem2_hypothesis(D):
                continue
            seen += 1
            out = classify_theorem2(D)
            assert out.satisfied
            if out.holds_i is not None:
                out.holds_i.validate(D)
            if out.holds_iii is not None:
                out.holds_iii.validate(D)
            if out.holds_iv is not None:
                out.holds_iv.validate(D)


class TestOutcomeIV:
    def test_sandwich_m3(self):
        D = gen_sandwich(3)
        w = outcome_iv_witness(D)
        assert w is not None
        w.validate(D)
        assert len(w.positions) == 3
        assert w.outside >= 3  # a side-B vertex
        assert naive_outcome_iv(D.adj)

    def test_d5_impossible(self):
        assert outcome_iv_witness(gen_d5()) is None

    def test_against_bruteforce_rescan(self):
        rng = random.Random(5)
        hits = 0
        for trial in range(120):
            if trial % 3 == 0:
                # start from a sandwich and perturb it, so positive cases occur
                pairs = [(u, v) for u in range(3) for v in range(3) if u != v]
                D = gen_sandwich(3, {p for p in pairs if rng.random() < 0.5})
                arcs = set(D.arcs())
                for _ in range(rng.randint(0, 2)):
                    u, v = rng.sample(range(7), 2)
                    arcs ^= {(u, v)}
                D = build_digraph(7, arcs)
            else:
                D = random_digraph_py(7, rng.choice([0.3, 0.5, 0.7]), rng)
            found = outcome_iv_witness(D)
            assert (found is not None) == naive_outcome_iv(D.adj)
            if found is not None:
                found.validate(D)
                hits += 1
        assert hits > 0


class TestRepairedSevenVertexExample:
    """The 2-strong digraph from gen_remark3() meets the hypothesis yet no outcome holds.

    Checked here against brute force so the disagreement is pinned rather
    than hidden.
    """

    def test_no_outcome_holds(self):
        D = gen_remark3()
        assert theorem2_hypothesis(D)
        out = classify_theorem2(D)
        assert out.labels == ()

    def test_bruteforce_confirmation(self):
        D = gen_remark3()
        a = D.adj
        cycles = naive_cycles(a)
        assert 6 in {len(c) for c in cycles}
        T = {v for v in range(7) if a[v].sum() >= 3 and a[:, v].sum() >= 3}
        assert len(T) == 5
        assert not any(T <= set(c) for c in cycles)
        # 22 arcs rules out the 21-arc named digraph; 2-strong rules out L2
        assert D.arc_count() == 22
        # no vertex has three non-neighbors, so outcome iv cannot apply
        und = a | a.T
        assert max(6 - und[v].sum() for v in range(7)) == 2
        assert not naive_outcome_iv(a)

    def test_literal_lists_have_a_t_cycle(self):
        assert classify_theorem2(gen_remark3(literal=True)).labels == ("i",)
