"""Exact tools for the two-parameter quantum Heisenberg algebra at roots of unity."""

from .arith import (
    AlgebraParams,
    InvalidParameters,
    OrderReport,
    classify_pair,
    derive_params,
    ord_formula,
    ord_pq,
    pair_rs,
    pi_degree,
    pi_degree_snf,
    relation_matrix,
    scan_orders,
    smith_normal_form,
    valid_pairs,
)
from .cyclotomic import (
    ConductorMismatch,
    CycNumber,
    Rational,
    cyclotomic_polynomial,
    euler_phi,
    order_of_unit,
    zeta_power,
)
from .linalg import (
    FieldMatrix,
    algebra_span_dim,
    is_invertible,
    kernel_vector,
    matrix_hom_space,
    row_reduce,
    scalar_of,
)
from .pbw import (
    PbwElement,
    center_generators,
    commutation_twist,
    generators,
    is_central,
    omega,
    pq_number,
    product,
    product_via_rewriting,
    theta,
)
from .reps import (
    KIND_ONE_DIM,
    KIND_QPLANE_THETA,
    KIND_QPLANE_Z,
    KIND_V1,
    KIND_V2,
    KIND_V3,
    THETA_TORSION,
    Z_TORSION,
    MatrixRep,
    ModuleDescriptor,
    RelationCheck,
    build_from_descriptor,
    build_one_dim,
    build_qplane,
    build_v1,
    build_v2,
    build_v3,
    classify,
    direct_sum,
    find_intertwiner,
    intertwiner,
    is_simple,
    iso_test,
    theta_matrix,
    verify_relations,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraParams",
    "ConductorMismatch",
    "CycNumber",
    "FieldMatrix",
    "InvalidParameters",
    "KIND_ONE_DIM",
    "KIND_QPLANE_THETA",
    "KIND_QPLANE_Z",
    "KIND_V1",
    "KIND_V2",
    "KIND_V3",
    "MatrixRep",
    "ModuleDescriptor",
    "OrderReport",
    "PbwElement",
    "Rational",
    "RelationCheck",
    "THETA_TORSION",
    "Z_TORSION",
    "algebra_span_dim",
    "build_from_descriptor",
    "build_one_dim",
    "build_qplane",
    "build_v1",
    "build_v2",
    "build_v3",
    "center_generators",
    "classify",
    "classify_pair",
    "commutation_twist",
    "cyclotomic_polynomial",
    "derive_params",
    "direct_sum",
    "euler_phi",
    "find_intertwiner",
    "generators",
    "intertwiner",
    "is_central",
    "is_invertible",
    "is_simple",
    "iso_test",
    "kernel_vector",
    "matrix_hom_space",
    "omega",
    "ord_formula",
    "ord_pq",
    "order_of_unit",
    "pair_rs",
    "pi_degree",
    "pi_degree_snf",
    "pq_number",
    "product",
    "product_via_rewriting",
    "relation_matrix",
    "row_reduce",
    "scalar_of",
    "scan_orders",
    "smith_normal_form",
    "theta",
    "theta_matrix",
    "valid_pairs",
    "verify_relations",
    "zeta_power",
]
