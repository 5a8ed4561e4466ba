"""Coset graphs of groups: construction, analysis, recognition, spectra."""

from .analysis import StructureReport, analyze, check_subgroup_subgraph, structure_report
from .characterize import (
    ACCEPT,
    REFUSE,
    UNDETERMINED,
    CharacterizationVerdict,
    characterize,
    characterize_bipartite,
    turan_verdict,
    witness_search,
)
from .errors import (
    ClosureOverflowError,
    GGraphError,
    InvalidInputError,
    InvalidMatrixError,
    InvalidPairError,
    InvalidParameterError,
    InvalidPartitionError,
    NotAGeneratingSetError,
    SizeLimitError,
    TooLargeError,
)
from .ggraph import GGraph, PredictedStats, build_ggraph, predicted_stats
from .groups import (
    Coset,
    GenSequence,
    GroupTable,
    closure_from_permutations,
    element_order,
    make_alternating,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    make_gen_sequence,
    make_generalized_quaternion,
    make_klein,
    make_semidihedral,
    make_symmetric,
    make_trivial,
    right_cosets,
)
from .infinite import (
    INFINITE,
    AffElem,
    BallGraph,
    Mat2Z,
    affine_ball,
    is_locally_finite,
    sl2z_ball,
)
from .iso import CanonicalForm, FamilyTag, are_isomorphic, canonical_form, recognize_family
from .multigraph import Multigraph
from .spectral import (
    AdjMatrix,
    MatrixDiagnostics,
    SpectrumReport,
    adjacency_from_multigraph,
    adjacency_matrix,
    matrix_csv,
    matrix_diagnostics,
    spectrum,
)

__version__ = "0.1.0"
