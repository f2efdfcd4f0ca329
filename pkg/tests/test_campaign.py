import json
import math
from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from cyclab import (
    CampaignConfig,
    CampaignError,
    digraph_from_index,
    enumerate_digraphs,
    is_strong,
    random_digraph,
    run_campaign,
)
from cyclab.campaign import _maximal_meyniel_sets
from cyclab.rng import SplitMix64, parse_probability, sample_rng
from cyclab.theorems import is_meyniel_set

from conftest import naive_strong

# published SplitMix64 output for seed 1234567
SPLITMIX_REFERENCE = [
    6457827717110365317,
    3203168211198807973,
    9817491932198370423,
    4593380528125082431,
    16408922859458223821,
]


class TestRng:
    def test_reference_vector(self):
        r = SplitMix64(1234567)
        assert [r.next_u64() for _ in range(5)] == SPLITMIX_REFERENCE

    def test_below_range(self):
        r = SplitMix64(9)
        draws = [r.below(3) for _ in range(3000)]
        assert set(draws) == {0, 1, 2}
        assert all(abs(draws.count(v) - 1000) < 150 for v in range(3))

    def test_sample_streams_differ(self):
        assert sample_rng(0, 0).next_u64() != sample_rng(0, 1).next_u64()

    @pytest.mark.parametrize("text, value", [("1/2", Fraction(1, 2)), ("3/7", Fraction(3, 7)), ((1, 3), Fraction(1, 3))])
    def test_parse_probability(self, text, value):
        assert parse_probability(text) == value

    @pytest.mark.parametrize("bad", ["0/1", "1/1", "3/2", "0.5", "a/b"])
    def test_parse_probability_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_probability(bad)


class TestRandomDigraph:
    def test_deterministic(self):
        assert random_digraph(7, "1/2", 42) == random_digraph(7, "1/2", 42)
        assert random_digraph(7, "1/2", 42) != random_digraph(7, "1/2", 43)

    def test_mean_arc_count(self):
        counts = [random_digraph(7, "1/2", seed).arc_count() for seed in range(10_000)]
        sigma = math.sqrt(42 * 0.25 / len(counts))
        assert abs(np.mean(counts) - 21) < 3 * sigma

    def test_sparse_probability(self):
        counts = [random_digraph(5, "1/10", seed).arc_count() for seed in range(2000)]
        assert abs(np.mean(counts) - 2.0) < 3 * math.sqrt(20 * 0.09 / 2000)


class TestEnumeration:
    def test_n2(self):
        graphs = list(enumerate_digraphs(2))
        assert len(graphs) == 4
        assert len(set(graphs)) == 4

    def test_index_bit_order(self):
        # bit k is the k-th off-diagonal pair in row-major order
        pairs = [(i, j) for i in range(4) for j in range(4) if i != j]
        for k, pair in enumerate(pairs):
            assert digraph_from_index(4, 1 << k).arcs() == [pair]

    def test_n3_strong_census(self):
        naive = 0
        for bits in product([0, 1], repeat=6):
            a = np.zeros((3, 3), dtype=bool)
            for (i, j), b in zip([(i, j) for i in range(3) for j in range(3) if i != j], bits):
                a[i, j] = b
            naive += naive_strong(a)
        assert naive == 18
        assert sum(1 for _ in enumerate_digraphs(3, is_strong)) == naive

    def test_too_large(self):
        with pytest.raises(CampaignError):
            next(enumerate_digraphs(6))


class TestMaximalMeyniel:
    def test_every_meyniel_set_is_covered(self):
        for index in range(0, 1 << 12, 37):
            D = digraph_from_index(4, index)
            maximal = _maximal_meyniel_sets(D)
            for S in range(1, 1 << 4):
                members = [v for v in range(4) if S >> v & 1]
                if is_meyniel_set(D, members):
                    assert any(S & ~F == 0 for F in maximal)
            for F in maximal:
                assert is_meyniel_set(D, [v for v in range(4) if F >> v & 1])


class TestConfig:
    @pytest.mark.parametrize("kwargs", [
        dict(theorem="3", n=5),
        dict(theorem="2", n=4),
        dict(theorem="2", n=7, mode="exhaustive"),
        dict(theorem="2", n=5, mode="random", sample_count=0),
        dict(theorem="2", n=5, mode="random", sample_count=5, arc_probability="1/1"),
        dict(theorem="2", n=5, mode="bogus"),
        dict(theorem="1", n=5, seed=-1),
        dict(theorem="1", n=5, parallelism=0),
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(CampaignError):
            CampaignConfig(**kwargs)

    def test_lowercase_c(self):
        assert CampaignConfig(theorem="c", n=3).theorem == "C"


class TestCampaigns:
    def test_theorem2_n3(self):
        r = run_campaign(CampaignConfig("2", 3))
        assert r.instances_generated == 64
        assert r.instances_passing_hypothesis == 16
        assert r.counterexamples == []
        assert r.outcome_histogram == {"i": 13, "ii": 0, "iii": 3, "iv": 0}

    def test_theorem1_n3(self):
        r = run_campaign(CampaignConfig("1", 3))
        assert r.instances_passing_hypothesis == 1 and r.ok

    def test_theorem_c_n3(self):
        r = run_campaign(CampaignConfig("C", 3))
        assert r.instances_passing_hypothesis == 18 and r.ok
        assert r.outcome_histogram == {}

    def test_lemma_campaigns(self):
        for theorem, n in (("L2_LEMMA", 4), ("L1_LEMMA", 4)):
            r = run_campaign(CampaignConfig(theorem, n))
            assert r.ok and r.instances_passing_hypothesis > 0
            r = run_campaign(CampaignConfig(theorem, 7, mode="random", sample_count=200, seed=3))
            assert r.ok and r.instances_passing_hypothesis == 200

    def test_random_counts(self):
        r = run_campaign(CampaignConfig("1", 7, mode="random", sample_count=50, seed=1))
        assert r.instances_passing_hypothesis == 50
        assert r.instances_generated >= 50

    def test_report_schema(self):
        r = run_campaign(CampaignConfig("2", 5, mode="random", sample_count=30, seed=7,
                                        arc_probability="2/3"))
        doc = json.loads(r.to_json())
        assert list(doc) == [
            "schema_version", "campaign", "n", "mode", "seed", "arc_probability",
            "instances_generated", "instances_passing_hypothesis", "outcome_histogram",
            "counterexamples", "parallelism",
        ]
        assert doc["schema_version"] == "1"
        assert doc["campaign"] == "theorem2"
        assert doc["arc_probability"] == "2/3"
        assert doc["seed"] == 7
        assert set(doc["outcome_histogram"]) >= {"i", "ii", "iii", "iv"}
        assert r.to_json().endswith("}\n")

    def test_exhaustive_report_nulls(self):
        doc = run_campaign(CampaignConfig("1", 3)).to_document()
        assert doc["seed"] is None and doc["arc_probability"] is None

    def test_rerun_identical(self):
        cfg = CampaignConfig("2", 7, mode="random", sample_count=300, seed=11)
        assert run_campaign(cfg).to_json() == run_campaign(cfg).to_json()

    def test_parallel_matches_serial(self):
        base = dict(theorem="2", n=7, mode="random", sample_count=1200, seed=5)
        serial = run_campaign(CampaignConfig(**base))
        parallel = run_campaign(CampaignConfig(**base, parallelism=2))
        assert serial.to_json() == parallel.to_json()
        assert serial.to_document()["parallelism"] == 3  # 1200 samples in ranges of 500
