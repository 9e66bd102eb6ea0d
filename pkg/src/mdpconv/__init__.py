"""Exact algebra for MDP convolutional codes over finite fields."""

from .finite_field import GF, FieldElement, field_arith, field_from_order, find_irreducible
from .poly import Poly, poly_gcd
from .poly_matrix import (
    PolyMatrix,
    RankDeficientError,
    coefficient_slice,
    determinant,
    hermite,
    is_left_prime,
    left_prime_factorization,
    minor,
    rank_rational,
    right_inverse,
    row_equivalent,
    row_reduce,
    smith,
)
from .conv_code import (
    CodeParams,
    ConvCode,
    check_mdp_criterion,
    code_degree,
    column_bound,
    column_distance,
    column_distances,
    derive_params,
    free_distance,
    is_mdp,
    mdp_index_sets,
    right_kernel_generator,
    singleton_bound,
    sliding,
)
from .theorems import (
    build_stacked,
    corollary_audit,
    epsilon_condition,
    r_feasible_range,
    verify_sufficiency,
)
from .constructions import (
    SearchConfig,
    all_minors_nonzero,
    cauchy_matrix,
    counterexample_L0,
    paper_example_3_1,
    search_mdp,
)

__all__ = [
    "GF",
    "FieldElement",
    "field_arith",
    "field_from_order",
    "find_irreducible",
    "Poly",
    "poly_gcd",
    "PolyMatrix",
    "RankDeficientError",
    "coefficient_slice",
    "determinant",
    "hermite",
    "is_left_prime",
    "left_prime_factorization",
    "minor",
    "rank_rational",
    "right_inverse",
    "row_equivalent",
    "row_reduce",
    "smith",
    "CodeParams",
    "ConvCode",
    "check_mdp_criterion",
    "code_degree",
    "column_bound",
    "column_distance",
    "column_distances",
    "derive_params",
    "free_distance",
    "is_mdp",
    "mdp_index_sets",
    "right_kernel_generator",
    "singleton_bound",
    "sliding",
    "build_stacked",
    "corollary_audit",
    "epsilon_condition",
    "r_feasible_range",
    "verify_sufficiency",
    "SearchConfig",
    "all_minors_nonzero",
    "cauchy_matrix",
    "counterexample_L0",
    "paper_example_3_1",
    "search_mdp",
]

__version__ = "0.1.0"
