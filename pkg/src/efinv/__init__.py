"""Dense generalized-inverse engine.

Computes the classical generalized inverses (Moore-Penrose, Drazin, group,
outer with prescribed range and nullspace), the inverse prescribed by a
projector pair (E, F) with its existence test and SVD canonical form, the
constrained and along-a-matrix inverses it unifies, bilateral compositions,
and a catalog of named composite inverses -- every result accompanied by a
machine-checkable residual certificate.
"""

__version__ = "0.1.0"

from .core import (
    DEFAULT_TOL,
    SvdFactorization,
    Tolerances,
    as_matrix,
    frobenius_distance,
    matrix_index,
    numerical_rank,
    svd,
)
from .errors import (
    BadParams,
    FactorizationFailure,
    GeneralizedInverseError,
    IndexTooLarge,
    NotComplementary,
    NotExistent,
    NotInner,
    NotOuter,
    NotSquare,
    ShapeMismatch,
)
from .subspaces import (
    Subspace,
    is_direct_sum,
    nullspace_of,
    oblique_projector,
    orthogonal_projector,
    range_of,
)
from .equations import SolutionFamily, common_solution, solve_axb
from .classical import (
    InnerInverseSampler,
    drazin,
    group_inverse,
    inner_inverse_sampler,
    moore_penrose,
    outer_prescribed,
    sample_inner_inverse,
)
from .ef import (
    Certificate,
    ExistenceReport,
    bc_to_ef,
    bilateral_inverse,
    crcr_inverse,
    ef_canonical_form,
    ef_exists,
    ef_from_outer_pair,
    ef_inverse,
    ef_is_inner,
    ef_verify,
    mary_inverse,
)
from .catalog import (
    CATALOG_NAMES,
    TABLE1_NAMES,
    TABLE2_NAMES,
    CatalogEntry,
    CatalogResult,
    CrosscheckReport,
    canonical_name,
    catalog_crosscheck,
    named_inverse,
)
from .io import (
    load_matrix,
    matrix_from_json_dict,
    matrix_to_json_dict,
    read_matrix_json,
    read_matrix_market,
    save_matrix,
    write_matrix_json,
    write_matrix_market,
)

__all__ = [
    "__version__",
    "DEFAULT_TOL",
    "SvdFactorization",
    "Tolerances",
    "as_matrix",
    "frobenius_distance",
    "matrix_index",
    "numerical_rank",
    "svd",
    "GeneralizedInverseError",
    "BadParams",
    "FactorizationFailure",
    "IndexTooLarge",
    "NotComplementary",
    "NotExistent",
    "NotInner",
    "NotOuter",
    "NotSquare",
    "ShapeMismatch",
    "Subspace",
    "is_direct_sum",
    "nullspace_of",
    "oblique_projector",
    "orthogonal_projector",
    "range_of",
    "SolutionFamily",
    "common_solution",
    "solve_axb",
    "InnerInverseSampler",
    "drazin",
    "group_inverse",
    "inner_inverse_sampler",
    "moore_penrose",
    "outer_prescribed",
    "sample_inner_inverse",
    "Certificate",
    "ExistenceReport",
    "bc_to_ef",
    "bilateral_inverse",
    "crcr_inverse",
    "ef_canonical_form",
    "ef_exists",
    "ef_from_outer_pair",
    "ef_inverse",
    "ef_is_inner",
    "ef_verify",
    "mary_inverse",
    "CATALOG_NAMES",
    "TABLE1_NAMES",
    "TABLE2_NAMES",
    "CatalogEntry",
    "CatalogResult",
    "CrosscheckReport",
    "canonical_name",
    "catalog_crosscheck",
    "named_inverse",
    "load_matrix",
    "matrix_from_json_dict",
    "matrix_to_json_dict",
    "read_matrix_json",
    "read_matrix_market",
    "save_matrix",
    "write_matrix_json",
    "write_matrix_market",
]
