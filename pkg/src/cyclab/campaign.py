"""Exhaustive and sampled verification campaigns.

A campaign walks a stream of instances, keeps those satisfying the selected
statement's hypothesis and runs its checker on each.  Instances are
addressed by index: exhaustive runs decode the index as an arc bit pattern,
random runs seed a private generator from ``(seed, index)``.  Work is split
into fixed index ranges, so the merged report never depends on the number
of workers.
"""

from __future__ import annotations

import json
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, Optional

from .cycles import CycleWitness, PathWitness, find_cycle_through, t_vertices
from .digraph import Digraph, _transpose, is_k_strong, is_strong, mask_vertices, vertex_mask
from .lemmas import Lemma2Tag, insertion_index, lemma1_cycles, lemma2_condition
from .rng import SplitMix64, parse_probability, sample_rng
from .textformat import serialize_digraph
from .theorems import _classify, _theorem1_failure, is_meyniel_set, theorem2_hypothesis

log = logging.getLogger(__name__)

__all__ = [
    "CampaignError",
    "CampaignConfig",
    "VerificationReport",
    "enumerate_digraphs",
    "digraph_from_index",
    "random_digraph",
    "run_campaign",
    "THEOREMS",
]

THEOREMS = ("1", "2", "C", "L1_LEMMA", "L2_LEMMA")
CAMPAIGN_TAGS = {"1": "theorem1", "2": "theorem2", "C": "theoremC",
                 "L1_LEMMA": "lemma1", "L2_LEMMA": "lemma2"}
MAX_EXHAUSTIVE_N = 5
MAX_LEMMA_STRUCTURE = 4
MEYNIEL_SUBSETS = 10
MAX_DRAWS_PER_SAMPLE = 100_000
SCHEMA_VERSION = "1"

_EXHAUSTIVE_CHUNK = 1 << 14
_RANDOM_CHUNK = 500


class CampaignError(ValueError):
    pass


# ------------------------------------------------------------------ config


@dataclass(frozen=True)
class CampaignConfig:
    """What to verify and over which instances.

    ``theorem`` is one of ``"1"``, ``"2"``, ``"C"``, ``"L1_LEMMA"``,
    ``"L2_LEMMA"``.  Theorem campaigns need odd ``n >= 3`` and allow
    exhaustive mode only up to ``n = 5``.  Lemma campaigns in exhaustive
    mode enumerate every configuration of a path/cycle on
    ``k <= min(n-1, 4)`` vertices plus one outside vertex.
    """

    theorem: str
    n: int
    mode: str = "exhaustive"
    sample_count: int = 0
    arc_probability: Fraction = Fraction(1, 2)
    seed: int = 0
    parallelism: int = 1

    def __post_init__(self):
        theorem = str(self.theorem).upper()
        if theorem not in THEOREMS:
            raise CampaignError(f"unknown theorem {self.theorem!r}; choose from {THEOREMS}")
        object.__setattr__(self, "theorem", theorem)
        try:
            object.__setattr__(self, "arc_probability", parse_probability(self.arc_probability))
        except (ValueError, ZeroDivisionError) as exc:
            raise CampaignError(str(exc)) from None
        if self.mode not in ("exhaustive", "random"):
            raise CampaignError(f"mode must be 'exhaustive' or 'random', got {self.mode!r}")
        if self.is_lemma:
            if self.n < 3:
                raise CampaignError(f"lemma campaigns need n >= 3, got {self.n}")
        else:
            if self.n < 3 or self.n % 2 == 0:
                raise CampaignError(f"n must be odd and at least 3, got {self.n}")
            if self.mode == "exhaustive" and self.n > MAX_EXHAUSTIVE_N:
                raise CampaignError(
                    f"exhaustive mode is limited to n <= {MAX_EXHAUSTIVE_N}, got {self.n}"
                )
        if self.mode == "random" and self.sample_count < 1:
            raise CampaignError("random mode needs sample_count >= 1")
        if not 0 <= self.seed < 1 << 64:
            raise CampaignError("seed must be an unsigned 64-bit integer")
        if self.parallelism < 1:
            raise CampaignError("parallelism must be at least 1")

    @property
    def is_lemma(self) -> bool:
        return self.theorem.endswith("_LEMMA")


# ---------------------------------------------------------------- instances


@lru_cache(maxsize=None)
def _row_tables(n: int) -> tuple:
    # row i takes n-1 consecutive index bits; re-insert the zero diagonal
    tables = []
    for i in range(n):
        low = (1 << i) - 1
        tables.append(tuple((s & low) | ((s & ~low) << 1) for s in range(1 << (n - 1))))
    return tuple(tables)


def digraph_from_index(n: int, index: int) -> Digraph:
    """Digraph whose arcs are the set bits of ``index``.

    Bit ``k`` stands for the ``k``-th ordered pair ``(i, j)``, ``i != j``,
    in row-major order.
    """
    tables = _row_tables(n)
    width = n - 1
    seg = (1 << width) - 1
    rows = tuple(tables[i][(index >> (i * width)) & seg] for i in range(n))
    return Digraph._trusted(n, rows, _transpose(n, rows))


def enumerate_digraphs(n: int, hypothesis: Optional[Callable[[Digraph], bool]] = None
                       ) -> Iterator[Digraph]:
    """All ``2**(n(n-1))`` labeled digraphs in ascending bit-pattern order."""
    if not 1 <= n <= MAX_EXHAUSTIVE_N:
        raise CampaignError(f"full enumeration is limited to 1 <= n <= {MAX_EXHAUSTIVE_N}")
    for index in range(1 << (n * (n - 1))):
        D = digraph_from_index(n, index)
        if hypothesis is None or hypothesis(D):
            yield D


def _draw_digraph(rng: SplitMix64, n: int, p: Fraction) -> Digraph:
    rows = [0] * n
    num, den = p.numerator << 64, p.denominator
    for i in range(n):
        row = 0
        for j in range(n):
            if j != i and rng.next_u64() * den < num:
                row |= 1 << j
        rows[i] = row
    rows = tuple(rows)
    return Digraph._trusted(n, rows, _transpose(n, rows))


def random_digraph(n: int, arc_probability, seed: int) -> Digraph:
    """Each ordered pair in row-major order becomes an arc with the given probability.

    One SplitMix64 draw per pair, seeded directly with ``seed``.
    """
    p = parse_probability(arc_probability)
    return _draw_digraph(SplitMix64(seed), n, p)


# ---------------------------------------------------------------- checkers
#
# Each kind provides hypothesis(inst) -> bool and check(inst, rng, tally)
# -> (detail or None, outcome labels).  ``inst`` is a Digraph for theorem
# campaigns and (Digraph, structure, x) for lemma campaigns.


def _t1_check(D: Digraph, rng, tally):
    bad = _theorem1_failure(D)
    if bad is None:
        return None, ()
    T = sorted(t_vertices(D))
    return f"T-vertices {bad[0]} and {bad[1]} lie on no common cycle; T = {T}", ()


def _t2_check(D: Digraph, rng, tally):
    outcome = _classify(D)
    labels = outcome.labels
    if labels:
        return None, labels
    return f"no outcome i-iv holds; T = {sorted(t_vertices(D))}", ()


def _maximal_meyniel_sets(D: Digraph) -> list[int]:
    n = D.n
    need = 2 * n - 1
    deg = [D.out[v].bit_count() + D.inn[v].bit_count() for v in range(n)]
    compat = [0] * n
    for u in range(n):
        for v in range(n):
            if u != v and (D.out[u] >> v & 1 or D.out[v] >> u & 1 or deg[u] + deg[v] >= need):
                compat[u] |= 1 << v
    found: list[int] = []
    for S in sorted(range(1, 1 << n), key=lambda s: (-s.bit_count(), s)):
        if any(S & ~F == 0 for F in found):
            continue
        if all(S & ~(compat[v] | 1 << v) == 0 for v in mask_vertices(S)):
            found.append(S)
    return found


def _tc_check(D: Digraph, rng, tally):
    full = D.full_mask
    if rng is None:
        candidates = _maximal_meyniel_sets(D)
    else:
        candidates = [full] + [rng.next_u64() & full for _ in range(MEYNIEL_SUBSETS)]
    for S in candidates:
        if S == 0:
            continue
        members = mask_vertices(S)
        if not is_meyniel_set(D, members):
            continue
        tally["meyniel_sets_checked"] += 1
        if S == full:
            tally["meyniel_full_vertex_set"] += 1
        if find_cycle_through(D, members) is None:
            kind = "Hamiltonian cycle missing for Meyniel vertex set" if S == full else "Meyniel set lies on no cycle"
            return f"{kind}: M = {list(members)}", ()
    return None, ()


def _lemma2_hyp(inst) -> bool:
    D, seq, x = inst
    P = PathWitness(seq)
    return P.is_valid(D) and lemma2_condition(D, P, x).tag is not Lemma2Tag.NONE


def _lemma2_check(inst, rng, tally):
    D, seq, x = inst
    P = PathWitness(seq)
    cond = lemma2_condition(D, P, x)
    tally[f"condition_{cond.tag.value}"] += 1
    i = insertion_index(D, P, x)
    if i is None or not P.insert(i, x).is_valid(D):
        return f"condition {cond.tag.value} holds (d={cond.degree_toward_path}) for path {list(seq)} and x={x} but no insertion", ()
    return None, ()


def _lemma1_hyp(inst) -> bool:
    D, seq, x = inst
    C = CycleWitness(seq)
    if not C.is_valid(D):
        return False
    mask = vertex_mask(seq)
    d = (D.out[x] & mask).bit_count() + (D.inn[x] & mask).bit_count()
    return d >= len(seq) + 1


def _lemma1_check(inst, rng, tally):
    D, seq, x = inst
    cycles = lemma1_cycles(D, CycleWitness(seq), x)
    support = set(seq) | {x}
    lengths = [len(c) for c in cycles]
    ok = lengths == list(range(2, len(seq) + 2)) and all(
        c.is_valid(D) and set(c.vertices) <= support for c in cycles
    )
    if not ok:
        return f"cycle {list(seq)} with x={x}: lengths found {lengths}", ()
    return None, ()


_KINDS = {
    "1": (lambda D: is_k_strong(D, 2), _t1_check),
    "2": (theorem2_hypothesis, _t2_check),
    "C": (is_strong, _tc_check),
    "L1_LEMMA": (_lemma1_hyp, _lemma1_check),
    "L2_LEMMA": (_lemma2_hyp, _lemma2_check),
}


@lru_cache(maxsize=None)
def _lemma_blocks(theorem: str, n: int) -> tuple:
    """Per structure size ``k``: (k, structure rows, free pairs, block size)."""
    blocks = []
    for k in range(2, min(n - 1, MAX_LEMMA_STRUCTURE) + 1):
        closing = theorem == "L1_LEMMA"
        fixed = {(i, i + 1) for i in range(k - 1)}
        if closing:
            fixed.add((k - 1, 0))
        rows = [0] * (k + 1)
        for u, v in fixed:
            rows[u] |= 1 << v
        free = tuple((i, j) for i in range(k + 1) for j in range(k + 1)
                     if i != j and (i, j) not in fixed)
        blocks.append((k, tuple(rows), free, 1 << len(free)))
    return tuple(blocks)


def _lemma_instance(theorem: str, n: int, index: int):
    for k, base, free, size in _lemma_blocks(theorem, n):
        if index < size:
            rows = list(base)
            b = 0
            while index:
                if index & 1:
                    i, j = free[b]
                    rows[i] |= 1 << j
                index >>= 1
                b += 1
            rows = tuple(rows)
            D = Digraph._trusted(k + 1, rows, _transpose(k + 1, rows))
            return D, tuple(range(k)), k
        index -= size
    raise IndexError(index)


def _total_exhaustive(config: CampaignConfig) -> int:
    if config.is_lemma:
        return sum(b[3] for b in _lemma_blocks(config.theorem, config.n))
    return 1 << (config.n * (config.n - 1))


def _draw_instance(config: CampaignConfig, rng: SplitMix64):
    D = _draw_digraph(rng, config.n, config.arc_probability)
    if not config.is_lemma:
        return D
    n = config.n
    k = 2 + rng.below(n - 2)
    perm = list(range(n))
    rng.shuffle(perm)
    return D, tuple(perm[:k]), perm[k]


def _instance_digraph(inst) -> Digraph:
    return inst if isinstance(inst, Digraph) else inst[0]


# ------------------------------------------------------------------ report


@dataclass
class _Partial:
    generated: int = 0
    passing: int = 0
    histogram: Counter = field(default_factory=Counter)
    tally: Counter = field(default_factory=Counter)
    counterexamples: list = field(default_factory=list)

    def merge(self, other: "_Partial") -> None:
        self.generated += other.generated
        self.passing += other.passing
        self.histogram.update(other.histogram)
        self.tally.update(other.tally)
        self.counterexamples.extend(other.counterexamples)


def _run_chunk(config: CampaignConfig, start: int, stop: int) -> _Partial:
    hypothesis, check = _KINDS[config.theorem]
    part = _Partial()

    def record(inst, rng):
        detail, labels = check(inst, rng, part.tally)
        if labels:
            for lab in labels:
                part.histogram[lab] += 1
            if len(labels) > 1:
                part.histogram["+".join(labels)] += 1
        if detail is not None:
            part.counterexamples.append((serialize_digraph(_instance_digraph(inst)), detail))

    if config.mode == "exhaustive":
        n = config.n
        for index in range(start, stop):
            if config.is_lemma:
                inst = _lemma_instance(config.theorem, n, index)
            else:
                inst = digraph_from_index(n, index)
            part.generated += 1
            if hypothesis(inst):
                part.passing += 1
                record(inst, None)
    else:
        for index in range(start, stop):
            rng = sample_rng(config.seed, index)
            for _ in range(MAX_DRAWS_PER_SAMPLE):
                inst = _draw_instance(config, rng)
                part.generated += 1
                if hypothesis(inst):
                    break
            else:
                raise CampaignError(
                    f"sample {index}: no instance satisfied the hypothesis in "
                    f"{MAX_DRAWS_PER_SAMPLE} draws"
                )
            part.passing += 1
            record(inst, rng)
    return part


def _run_chunk_args(args) -> _Partial:
    return _run_chunk(*args)


@dataclass
class VerificationReport:
    """Merged campaign outcome.

    ``tallies`` carries campaign-specific counters (Meyniel sets checked,
    lemma condition counts) that are not part of the serialized document.
    The document's ``parallelism`` entry is ``work_units``, the number of
    independent index ranges the campaign was split into.  It depends only
    on the instance count, so any worker count yields the same bytes.
    """

    config: CampaignConfig
    instances_generated: int
    instances_passing_hypothesis: int
    counterexamples: list[tuple[str, str]]
    outcome_histogram: dict[str, int]
    deterministic: bool = True
    tallies: dict[str, int] = field(default_factory=dict)
    work_units: int = 1

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_document(self) -> dict:
        c = self.config
        random_mode = c.mode == "random"
        return {
            "schema_version": SCHEMA_VERSION,
            "campaign": CAMPAIGN_TAGS[c.theorem],
            "n": c.n,
            "mode": c.mode,
            "seed": c.seed if random_mode else None,
            "arc_probability": (
                f"{c.arc_probability.numerator}/{c.arc_probability.denominator}"
                if random_mode else None
            ),
            "instances_generated": self.instances_generated,
            "instances_passing_hypothesis": self.instances_passing_hypothesis,
            "outcome_histogram": dict(self.outcome_histogram),
            "counterexamples": [{"digraph": g, "detail": d} for g, d in self.counterexamples],
            "parallelism": self.work_units,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_document(), indent=2, ensure_ascii=True) + "\n"


def _histogram(config: CampaignConfig, counts: Counter) -> dict[str, int]:
    if config.theorem != "2":
        return {}
    hist = {k: counts.get(k, 0) for k in ("i", "ii", "iii", "iv")}
    for key in sorted(k for k in counts if "+" in k):
        hist[key] = counts[key]
    return hist


def run_campaign(config: CampaignConfig) -> VerificationReport:
    if config.mode == "exhaustive":
        total, chunk = _total_exhaustive(config), _EXHAUSTIVE_CHUNK
    else:
        total, chunk = config.sample_count, _RANDOM_CHUNK
    ranges = [(config, a, min(a + chunk, total)) for a in range(0, total, chunk)]
    log.info("campaign %s n=%d %s: %d instances in %d chunks",
             config.theorem, config.n, config.mode, total, len(ranges))

    merged = _Partial()
    if config.parallelism == 1 or len(ranges) == 1:
        for args in ranges:
            merged.merge(_run_chunk(*args))
    else:
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            for part in pool.map(_run_chunk_args, ranges):
                merged.merge(part)

    return VerificationReport(
        config=config,
        instances_generated=merged.generated,
        instances_passing_hypothesis=merged.passing,
        counterexamples=sorted(merged.counterexamples),
        outcome_histogram=_histogram(config, merged.histogram),
        deterministic=True,
        tallies=dict(sorted(merged.tally.items())),
        work_units=len(ranges),
    )
