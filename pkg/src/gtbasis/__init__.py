"""Exact Gelfand-Tsetlin bases for polynomial representations of gl(n), and their
stability under the embeddings gl(n) -> gl(n+1)."""

from .combinatorics import (
    SSYT,
    GTPattern,
    InfiniteGTPattern,
    conjugate,
    degree_strata,
    enumerate_infinite_patterns,
    enumerate_patterns,
    enumerate_tableaux,
    highest_weight,
    partitions,
    pattern_degree,
    pattern_to_tableau,
    pattern_weight,
    tableau_to_pattern,
    validate_pattern,
    weyl_dimension,
)
from .errors import *  # noqa: F401,F403
from .linalg import EchelonBasis, rank
from .operators import (
    EigenvaluePolynomial,
    SpectralReport,
    UPolyVector,
    eigenvalue_signature,
    gt_basis,
    gt_basis_vector,
    gz_centrality_check,
    lowering_z,
    quantum_minor_apply,
    spectral_check,
)
from .tower import FundamentalElement, TowerVector, fundamental_basis, stability_check, stable_basis_vector
from .weyl_module import (
    ModuleVector,
    act_E,
    cyclic_span_dimension,
    embed,
    exchange_relation,
    exchange_terms,
    highest_weight_vector,
    normalize_monomial,
    semistandard_monomials,
    straighten,
    weight_of,
)

__version__ = "0.1.0"
