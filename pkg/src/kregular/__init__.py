"""Exact-arithmetic certificates for K-regularity and the K-unstable cone
of a complexified Cartan decomposition g = k + p.

Everything is computed over the Gaussian rationals: ranks are certified
by fraction-free elimination with explicit nonsingular-minor witnesses,
and nullcone membership by the vanishing of an exact Gram matrix of
Lyndon-word evaluations together with nilpotency of the adjoint actions.
"""

from .scalar import Scalar
from .linalg import MatrixQ, EchelonSpan, rank_of, rank_profile, nullspace_of
from .algebra import (
    CartanDecomposition,
    ElementZ,
    LieAlgebra,
    ValidationReport,
    bracket,
    ad_matrix,
    killing_pair,
    decompose,
    validate,
)
from .catalog import catalog_build, parse_algebra_name
from .words import (
    LyndonWord,
    WordEvaluator,
    evaluate_word,
    evaluate_word_dual,
    is_lyndon,
    lyndon_basis,
    lyndon_words_of_degree,
    witt_dimension,
)
from .certify import (
    DegreeBounds,
    GramCertificate,
    SubalgebraReport,
    centralizer_in_k,
    degree_bounds,
    derived_series,
    full_gram_side,
    generated_subalgebra,
    gram_matrix,
    invariant_value,
    is_k_regular,
    is_solvable,
    lie_derivative_residual,
    nilcone_test,
    power_trace,
    separation_probe,
)
from .roots import (
    RestrictedRoot,
    RestrictedRootDatum,
    catalog_datum,
    choose_x0,
    choose_y,
    construct_regular,
    validate_datum,
    zeta_value,
)
from .verify import SUITES, VerifyReport, verify_suite
from .errors import (
    CatalogError,
    DegreeBoundError,
    GramSizeError,
    KregularError,
    SchemaError,
    ValidationFailure,
)

__version__ = "0.1.0"

__all__ = [
    "Scalar", "MatrixQ", "EchelonSpan", "rank_of", "rank_profile",
    "nullspace_of",
    "CartanDecomposition", "ElementZ", "LieAlgebra", "ValidationReport",
    "bracket", "ad_matrix", "killing_pair", "decompose", "validate",
    "catalog_build", "parse_algebra_name",
    "LyndonWord", "WordEvaluator", "evaluate_word", "evaluate_word_dual",
    "is_lyndon", "lyndon_basis", "lyndon_words_of_degree", "witt_dimension",
    "DegreeBounds", "GramCertificate", "SubalgebraReport",
    "centralizer_in_k", "degree_bounds", "derived_series", "full_gram_side",
    "generated_subalgebra", "gram_matrix", "invariant_value", "is_k_regular",
    "is_solvable", "lie_derivative_residual", "nilcone_test", "power_trace",
    "separation_probe",
    "RestrictedRoot", "RestrictedRootDatum", "catalog_datum", "choose_x0",
    "choose_y", "construct_regular", "validate_datum", "zeta_value",
    "SUITES", "VerifyReport", "verify_suite",
    "CatalogError", "DegreeBoundError", "GramSizeError", "KregularError",
    "SchemaError", "ValidationFailure",
    "__version__",
]
