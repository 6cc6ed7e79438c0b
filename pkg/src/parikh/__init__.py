"""Parikh images of finite automata as semilinear sets, their normal form,
and membership / integer-program feasibility checks built on it."""

from .automata import (
    BoolMatrix,
    CycleTypeTable,
    Nfa,
    bool_mul,
    bool_or,
    cycle_type_table,
    gamma_sets,
    parikh_image,
    parikh_of_word,
    path_length_cap,
)
from .decision import (
    Feasibility,
    IpInstance,
    enumerate_member,
    ip_feasible,
    linear_member,
    nfa_member,
    reachable_by_moves,
    semilinear_member,
)
from .errors import (
    DependentGeneratorsError,
    DimensionError,
    ExactModeTooLarge,
    FormatError,
    Inconclusive,
    ParikhError,
)
from .estimators import ConeMembership, ParikhImage, SemilinearNormalizer
from .fixtures import (
    Graph,
    UnaryCfg,
    gen_doubling_cfg,
    gen_hamiltonian_dfa,
    gen_partition_dfa,
    gen_quadratic_dfa,
    hamiltonian_query,
    unary_cfg_lengths,
)
from .geometry import (
    GeneratorSet,
    LinearBasis,
    SemilinearBasis,
    caratheodory_subcones,
    cone_contains,
    dominates,
    rank,
    solve_in_span,
    sum_semilinear,
    union_semilinear,
)
from .normalform import (
    EXACT,
    Bounds,
    ConeDecomposition,
    NormalizeMode,
    bounded_cone_points,
    canonical_vectors,
    cone_normal_form,
    decompose,
    minimal_vectors,
    normalize_cone,
    normalize_semilinear,
    theoretical_bounds,
)
from .oracle import (
    Box,
    compare_on_box,
    oracle_cone_points,
    oracle_parikh_points,
    oracle_semilinear_points,
)

__version__ = "0.1.0"
