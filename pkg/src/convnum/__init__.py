"""Exact distributions of cyclic autocorrelation for fixed-weight binary sequences."""
from .bivariate import JointCount, joint_count, joint_table, pair_feasible
from .core import (
    AutocorrProfile,
    BinarySequence,
    autocorrelation,
    binom_conv,
    format_sequence,
    parse_sequence,
)
from .feasibility import (
    HeuristicParams,
    SearchOutcome,
    TargetSpec,
    Verdict,
    check_necessary,
    search_exact,
    search_heuristic,
    supplement_search,
)
from .hadamard import (
    GsQuadruple,
    build_goethals_seidel,
    decode_coded_triple,
    deficit,
    gs_condition,
    paf,
    quadratic_residue_sequence,
    verify_hadamard,
)
from .marginals import (
    MarginalTable,
    OrbitRefinement,
    catalan_orbit,
    marginal,
    marginal_coprime,
    marginal_divisor,
    marginal_table,
    mode_analysis,
    narayana,
    orbit_refinement,
)
from .oracle import enumerate_joint, marginal_from_joint, bivariate_from_joint, support
from .orbits import (
    count_ascents,
    count_descents,
    is_path,
    orbit_count,
    path_representative,
    run_decomposition,
)

__version__ = "0.1.0"
