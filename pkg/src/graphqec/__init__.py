"""Graphical stabilizer codes on 4-valent graphs and Cayley graphs."""

__version__ = "0.1.0"

from .f2 import BitVec, Subspace, min_generator_count, orthogonal_complement, rref
from .graph import (
    QuantizedGraph,
    cut_space,
    cycle_space,
    essential_length,
    even_space,
    is_bipartite_set,
    pair_generators,
    random_regular_multigraph,
    validate,
)
from .codespace import (
    ChargeClass,
    GraphicalCode,
    check_matrix,
    classify,
    close_cycles,
    code_from_charges,
    code_from_cycles,
    perp_charges,
    perp_cycles,
)
from .metrics import (
    DistanceReport,
    bipartite_weight,
    distance,
    ell_of_set,
    essential_girth,
    graph_code_distance,
    gv_bound,
    gv_bound_improved,
    optimal_function,
    optimal_profile,
    threshold_sets,
    weight_w,
)
from .pauli import (
    PairingConvention,
    PauliString,
    StabilizerGroup,
    convention_search,
    css_check,
    cycle_to_pauli,
    kernel_check,
    knill_laflamme_check,
    oracle_distance,
    pauli_to_charge_class,
    stabilizers,
    symplectic_check_matrix,
)
from .cayley import (
    GroupSpec,
    Presentation,
    cayley_graph,
    code_from_group,
    ldpc_report,
    relation_cycle,
    triangle_presentation,
)
from .families import (
    FamilyInstance,
    build_family,
    five_one_three,
    klein,
    mobius,
    shor_913,
    shor_repetition,
    toric,
    wen,
)
from .model import (
    HamiltonianSpec,
    SpectrumReport,
    exact_diag_oracle,
    gap_trend,
    partition_function,
    spectrum,
)
