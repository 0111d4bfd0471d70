"""Exact Moore-Penrose inverses of set, subspace, and design incidence matrices.

Everything is computed over exact rationals (or GF(p) where admissible);
there are no tolerances anywhere. Closed-form inverses are cross-checked
against an independent full-rank-factorization oracle in the test suite.
"""

from .combinat import (
    binomial,
    gauss_binomial_formula_check,
    gaussian_binomial,
    int_polynomial,
    poly_degree,
    poly_eval,
    q_integer,
    q_ruiz_sum,
    ruiz_sum,
)
from .designs import (
    Design,
    SurveyReport,
    ValidationResult,
    build_design_incidence,
    entry_classes,
    lambda_s,
    m1_mpinv_closed_form,
    ms_mpinv_oracle,
    parse_design,
    survey_designs,
    validate_design,
    validated_design,
    xI_yJ_inverse,
)
from .formats import (
    format_rational,
    parse_csv,
    parse_json,
    parse_mtx,
    parse_rational,
    write_csv,
    write_json,
    write_mtx,
)
from .errors import (
    CharacteristicError,
    DesignParseError,
    InvalidFieldError,
    MpincError,
    NoInverseError,
    NotReducibleError,
    ParameterError,
    ShapeError,
    SingularError,
    ZeroMatrixError,
)
from .gf import (
    FieldSpec,
    GFMatrix,
    build_field,
    gf_add,
    gf_inv,
    gf_mul,
    gf_neg,
    render_element,
    rref_gf,
)
from .linalg import (
    IncidenceMatrix,
    PenroseReport,
    RatMatrix,
    first_difference,
    full_rank_factorization,
    penrose_check,
    penrose_check_mod_p,
    pseudoinverse_oracle,
    rat_matrix_mod_p,
    rref_rational,
)
from .rationals import (
    ExactRational,
    ModResidue,
    is_prime,
    mod_inverse,
    rat_mod_p,
    rational,
)
from .subsets import (
    ClassMatrix,
    all_subsets,
    build_set_incidence,
    char_p_admissible_set,
    char_p_obstruction_set,
    expand_class_matrix,
    set_class_matrix,
    set_mpinv_class_values,
    subset_rank,
    subset_unrank,
)
from .subspaces import (
    QClassMatrix,
    SubspaceBasis,
    build_subspace_incidence,
    char_p_admissible_subspace,
    char_p_obstruction_subspace,
    count_contained_with_intersection,
    count_containing_with_intersection,
    enumerate_subspaces,
    expand_qclass_matrix,
    intersection_dim,
    subspace_class_matrix,
    subspace_mpinv_class_values,
)

__version__ = "0.1.0"

__all__ = [
    "ExactRational",
    "ModResidue",
    "rational",
    "is_prime",
    "mod_inverse",
    "rat_mod_p",
    "binomial",
    "q_integer",
    "gaussian_binomial",
    "int_polynomial",
    "poly_degree",
    "poly_eval",
    "ruiz_sum",
    "q_ruiz_sum",
    "gauss_binomial_formula_check",
    "FieldSpec",
    "GFMatrix",
    "build_field",
    "gf_add",
    "gf_neg",
    "gf_mul",
    "gf_inv",
    "render_element",
    "rref_gf",
    "RatMatrix",
    "IncidenceMatrix",
    "PenroseReport",
    "rref_rational",
    "full_rank_factorization",
    "pseudoinverse_oracle",
    "penrose_check",
    "penrose_check_mod_p",
    "rat_matrix_mod_p",
    "first_difference",
    "subset_rank",
    "subset_unrank",
    "all_subsets",
    "build_set_incidence",
    "set_mpinv_class_values",
    "set_class_matrix",
    "ClassMatrix",
    "expand_class_matrix",
    "char_p_admissible_set",
    "char_p_obstruction_set",
    "SubspaceBasis",
    "QClassMatrix",
    "enumerate_subspaces",
    "intersection_dim",
    "build_subspace_incidence",
    "subspace_mpinv_class_values",
    "subspace_class_matrix",
    "expand_qclass_matrix",
    "count_containing_with_intersection",
    "count_contained_with_intersection",
    "char_p_admissible_subspace",
    "char_p_obstruction_subspace",
    "Design",
    "SurveyReport",
    "ValidationResult",
    "parse_design",
    "validate_design",
    "validated_design",
    "lambda_s",
    "build_design_incidence",
    "xI_yJ_inverse",
    "m1_mpinv_closed_form",
    "ms_mpinv_oracle",
    "entry_classes",
    "survey_designs",
    "format_rational",
    "parse_rational",
    "write_csv",
    "parse_csv",
    "write_json",
    "parse_json",
    "write_mtx",
    "parse_mtx",
    "MpincError",
    "ParameterError",
    "ShapeError",
    "NoInverseError",
    "NotReducibleError",
    "InvalidFieldError",
    "ZeroMatrixError",
    "SingularError",
    "DesignParseError",
    "CharacteristicError",
]
