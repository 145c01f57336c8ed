"""Reconfiguration graphs of graph colourings: exhaustive exploration and constructive recolouring."""

from .colouring import Lists, Uniform, colour_classes, is_frozen, is_proper, respects_lists, same_partition
from .explorer import (
    BudgetExhausted,
    RecolouringSequence,
    StateSpace,
    components,
    distance,
    enumerate_colourings,
    hamiltonian_cycle,
    metrics,
    neighbours,
    verify_sequence,
)
from .graph_core import (
    Graph,
    ParseError,
    complete_bipartite,
    complete_bipartite_minus_matching,
    degeneracy,
    forcing_gadget,
    frozen_list_instance,
    graph_stats,
    k18_list_instance,
    layered_example,
    matching_number,
    path,
    path_plus_chain,
)
from .kpq_theory import (
    KpqInstance,
    diameter_interval,
    extremal_pair,
    recolour_kpq,
    regime_table,
    spare_colour_sequence,
    split_swap_sequence,
    upper_bound_formula,
)
from .renaming import optimal_renaming

__version__ = "0.1.0"
