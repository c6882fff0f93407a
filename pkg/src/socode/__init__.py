"""Self-orthogonality checks and shortest self-orthogonal embeddings of binary linear codes."""

__version__ = "0.1.0"

from ._backend import USE_NUMBA, backend_name
from .code import (
    LinearCode,
    dual,
    griesmer_upper,
    is_self_orthogonal_oracle,
    min_distance,
    puncture,
    shorten,
    weight_distribution,
)
from .embedding import (
    CosetLeaderTable,
    EmbeddingReport,
    build_coset_table,
    coset_leader,
    coset_table,
    covering_radius,
    embed,
    minimal_embedding_oracle,
)
from .gf2 import BitMatrix, BitVector, mat_mul, nullspace, rank, rref
from .quantum import QuantumParams, css_params, css_params_nested
from .reed_muller import rm_generator, simplex_matrix, so_matrix
from .search import SearchRecord, assess_optimality, conjecture_scan, puncture_embed_search
from .so_analysis import EllVector, Syndrome, ell_vector, ij_multiset_oracle, so_check, syndrome

__all__ = [
    "USE_NUMBA",
    "backend_name",
    "BitMatrix",
    "BitVector",
    "rank",
    "rref",
    "mat_mul",
    "nullspace",
    "LinearCode",
    "dual",
    "min_distance",
    "weight_distribution",
    "puncture",
    "shorten",
    "griesmer_upper",
    "is_self_orthogonal_oracle",
    "simplex_matrix",
    "rm_generator",
    "so_matrix",
    "EllVector",
    "Syndrome",
    "ell_vector",
    "syndrome",
    "so_check",
    "ij_multiset_oracle",
    "CosetLeaderTable",
    "EmbeddingReport",
    "build_coset_table",
    "coset_table",
    "coset_leader",
    "covering_radius",
    "embed",
    "minimal_embedding_oracle",
    "QuantumParams",
    "css_params",
    "css_params_nested",
    "SearchRecord",
    "puncture_embed_search",
    "assess_optimality",
    "conjecture_scan",
]
