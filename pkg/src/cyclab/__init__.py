"""Cyclability of high-semidegree vertex sets in small digraphs.

The package is organized bottom-up: :mod:`.digraph` and :mod:`.iso` hold the
representation, :mod:`.cycles` the exact searches, :mod:`.lemmas` the
insertion tools, :mod:`.families` the exceptional digraphs,
:mod:`.theorems` per-instance checkers and :mod:`.campaign` the exhaustive
and sampled verification runs.
"""

from .campaign import (
    CampaignConfig,
    CampaignError,
    VerificationReport,
    digraph_from_index,
    enumerate_digraphs,
    random_digraph,
    run_campaign,
)
from .cycles import (
    CycleWitness,
    PathWitness,
    WitnessError,
    cycle_of_length,
    find_cycle_through,
    find_t_cycle,
    hamiltonian_cycle,
    longest_cycle_length,
    t_vertices,
)
from .digraph import (
    Digraph,
    DigraphError,
    adjacency_count,
    build_digraph,
    converse,
    degree_toward,
    induced,
    is_k_strong,
    is_strong,
    semidegrees,
)
from .families import (
    L2Options,
    L2Witness,
    SandwichWitness,
    gen_d5,
    gen_d7,
    gen_l1,
    gen_l2,
    gen_remark3,
    gen_sandwich,
    in_l2,
    in_sandwich,
    matches_named_exception,
)
from .iso import canonical_form, is_isomorphic
from .lemmas import Lemma2Condition, Lemma2Tag, insertion_index, lemma1_cycles, lemma2_condition
from .textformat import FormatError, parse_digraph, serialize_digraph
from .theorems import (
    HypothesisError,
    OutcomeIVWitness,
    Theorem2Outcome,
    check_theorem1_instance,
    classify_theorem2,
    is_meyniel_set,
    outcome_iv_witness,
)

__version__ = "0.1.0"
