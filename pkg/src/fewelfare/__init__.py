"""Egalitarian welfare in friends-and-enemies hedonic games."""

from .ea import EaClassification, Sign, ea_approx_solve, ea_classify, ea_triangle_free_solve
from .fa import (
    RandomizedOutcome,
    SymmetricTrace,
    balance,
    expected_utilities,
    fa_forest_opt,
    min_expected_utility,
    one_weakly_conn,
    rand_algo,
    sample,
    symmetric_approx,
    weakly_conn,
)
from .generators import (
    Family,
    GadgetMap,
    gen_ea_from_pc,
    gen_fa_from_pit,
    gen_paper_example,
    gen_random,
    gen_tight_family,
)
from .graphs import (
    BMatchingProblem,
    UndirectedGraph,
    b_matching_feasible,
    is_triangle_free,
    k2k3_factor,
    max_matching,
    weakly_connected_components,
)
from .model import (
    AgentClasses,
    Bounds,
    FriendshipViews,
    Guarantee,
    Instance,
    Model,
    Partition,
    PreconditionError,
    SizeCapError,
    agent_classes,
    check_guarantee,
    derive_views,
    ea_utility,
    esw,
    fa_opt_bounds,
    fa_utility,
    is_minimal_one_f,
    utilities,
)
from .oracle import OracleResult, exact_max_esw, exact_min_pc, exact_pit, min_clique_partition

__version__ = "0.1.0"
