"""Semigroups of contraction mappings on a finite chain.

Five nested families of full maps on {1, ..., n} (all maps, the
contractions, and their order-respecting subfamilies), with Green's and
starred relations, abundance, rank certificates, and the natural
partial order.
"""

from .chain_maps import (
    FAMILY_TAGS,
    BlockForm,
    ChainMap,
    Transversal,
    TransversalChecks,
    chain_map,
    compose,
    constant,
    format_block_form,
    format_chain_map,
    from_block_form,
    identity,
    is_contraction,
    is_isometry,
    is_order_decreasing,
    is_order_preserving,
    is_order_reversing,
    membership,
    parse_block_form,
    parse_chain_map,
    to_block_form,
    transversal_checks,
)
from .errors import CapacityError, ScopeError
from .family_enumeration import (
    DIRECT_CEILING,
    FILTER_CEILING,
    FamilySpec,
    enumerate_ODCT_direct,
    enumerate_filtered,
    idempotent_ODCT,
    is_ORCT_idempotent_form,
    iter_filtered,
)
from .natural_order import (
    OctOrderConditions,
    OrderWitness,
    RelationSet,
    construct_witnesses,
    leq_ODCT_theorem,
    leq_OCT_theorem,
    leq_Pn_criterion,
    leq_definitional,
    oct_order_conditions,
    order_table,
    relation_sets,
)
from .rank_analysis import (
    GenSetCertificate,
    RankLadder,
    exhaustive_minimum_search,
    generated_index_set,
    irreducible_indices,
    lift_decomposition,
    rank_exact,
    rank_ladder,
    tau,
)
from .semigroup_engine import (
    VIRTUAL_IDENTITY,
    EquivPartition,
    FiniteSemigroup,
    closure,
    family_semigroup,
    greens_partitions,
    idempotents,
    is_J_trivial,
    is_semilattice,
    regular_elements,
)
from .starred_relations import (
    StarReport,
    abundance_report,
    dstar_partition,
    hstar_partition,
    jstar_ideals,
    jstar_partition,
    lstar_definitional,
    lstar_partition,
    lstar_theorem,
    rstar_definitional,
    rstar_partition,
    rstar_theorem,
)
from .verification import CheckResult, run_all_checks

__version__ = "0.1.0"

__all__ = [
    "BlockForm",
    "CapacityError",
    "ChainMap",
    "CheckResult",
    "DIRECT_CEILING",
    "EquivPartition",
    "FAMILY_TAGS",
    "FILTER_CEILING",
    "FamilySpec",
    "FiniteSemigroup",
    "GenSetCertificate",
    "OctOrderConditions",
    "OrderWitness",
    "RankLadder",
    "RelationSet",
    "ScopeError",
    "StarReport",
    "Transversal",
    "TransversalChecks",
    "VIRTUAL_IDENTITY",
    "abundance_report",
    "chain_map",
    "closure",
    "compose",
    "constant",
    "construct_witnesses",
    "dstar_partition",
    "enumerate_ODCT_direct",
    "enumerate_filtered",
    "exhaustive_minimum_search",
    "family_semigroup",
    "format_block_form",
    "format_chain_map",
    "from_block_form",
    "generated_index_set",
    "greens_partitions",
    "hstar_partition",
    "idempotent_ODCT",
    "idempotents",
    "identity",
    "irreducible_indices",
    "is_J_trivial",
    "is_ORCT_idempotent_form",
    "is_contraction",
    "is_isometry",
    "is_order_decreasing",
    "is_order_preserving",
    "is_order_reversing",
    "is_semilattice",
    "iter_filtered",
    "jstar_ideals",
    "jstar_partition",
    "leq_ODCT_theorem",
    "leq_OCT_theorem",
    "leq_Pn_criterion",
    "leq_definitional",
    "lift_decomposition",
    "lstar_definitional",
    "lstar_partition",
    "lstar_theorem",
    "membership",
    "oct_order_conditions",
    "order_table",
    "parse_block_form",
    "parse_chain_map",
    "rank_exact",
    "rank_ladder",
    "regular_elements",
    "relation_sets",
    "rstar_definitional",
    "rstar_partition",
    "rstar_theorem",
    "run_all_checks",
    "tau",
    "to_block_form",
    "transversal_checks",
]
