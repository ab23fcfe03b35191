"""Geodesic counting in graphs, Cayley balls of groups, ladder-like
structure bounds, and geodesic-language analysis."""

from .graphs import (
    Graph,
    GraphFormatError,
    PathSeq,
    SaturationError,
    UnreachablePairError,
    build_graph,
    count_geodesics,
    enumerate_geodesics,
    format_graph,
    graph_to_dot,
    is_complete_bipartite,
    is_k_geodetic,
    min_geodetic_k,
    parse_graph,
)
from .words import (
    Alphabet,
    LSDecomposition,
    Word,
    WordEquationError,
    commuting_common_root,
    format_word,
    free_reduce,
    parse_word,
    primed_alphabet,
    primitive_root,
    solve_zx_eq_yz,
)
from .groups import (
    BallBudgetError,
    CayleyBall,
    CyclicSpec,
    GenSet,
    GenSetError,
    GroupSpec,
    GroupSpecError,
    PlainSpec,
    ProductSpec,
    TableSpec,
    cayley_ball,
    element_norm,
    parse_group_file,
    validate_genset,
    word_to_element,
)
from .geometry import (
    Bigon,
    GeodesicTriangle,
    LadderReport,
    LadderScan,
    PairStats,
    SearchScope,
    close_bound_C,
    enumerate_bigons,
    enumerate_triangles,
    fellow_travel_bound,
    find_ladders,
    is_geodesic_path,
    iter_disjoint_pairs,
    ladder_bound_A,
    pad,
    pair_stats,
    shorten_paths,
    validate_path,
)
from .lang import (
    BallRangeError,
    FactorAutomaton,
    FiniteOrderError,
    ForbiddenSet,
    PowerLanguageReport,
    Stabilization,
    build_factor_automaton,
    centraliser_in_ball,
    check_locally_excluding,
    is_geodesic_word,
    minimal_forbidden_factors,
    power_language,
)

__version__ = "0.1.0"
