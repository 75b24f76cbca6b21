"""Finite-field toolkit for MDS evaluation codes, their one- and two-column
extensions, and hyperoval/o-monomial characterizations, with certificate
output suitable for batch verification."""

__version__ = "0.1.0"

from .fields import (
    BinaryField,
    Field,
    FieldElement,
    PrimeField,
    binary_field,
    field_from_spec,
    prime_field,
)
from .symfunc import (
    EvalSet,
    complete_homogeneous,
    dual_weights,
    elementary_symmetric,
    parity_weight,
)
from .linalg import (
    Matrix,
    row_space_equal,
    vandermonde,
    vandermonde_dropped_row,
    vandermonde_power_row,
)
from .codes import (
    INFINITY,
    Certificate,
    GuardError,
    LinearCode,
    grs_generator,
)
from .constructions import (
    ConstructionParams,
    DeltaSweep,
    admissible_deltas,
    check_condition,
    code,
    encode_polynomial,
    extension_vector,
    generator_matrix,
    mds_condition_names,
    parity_matrix,
    search_eval_sets,
)
from .hyperovals import (
    OMonomialReport,
    enumerate_o_monomials,
    hyperoval_matrix,
    is_o_monomial,
    is_o_polynomial,
    monomial_table,
)

__all__ = [
    "BinaryField",
    "Certificate",
    "ConstructionParams",
    "DeltaSweep",
    "EvalSet",
    "Field",
    "FieldElement",
    "GuardError",
    "INFINITY",
    "LinearCode",
    "Matrix",
    "OMonomialReport",
    "PrimeField",
    "admissible_deltas",
    "binary_field",
    "check_condition",
    "code",
    "complete_homogeneous",
    "dual_weights",
    "elementary_symmetric",
    "encode_polynomial",
    "enumerate_o_monomials",
    "extension_vector",
    "field_from_spec",
    "generator_matrix",
    "grs_generator",
    "hyperoval_matrix",
    "is_o_monomial",
    "is_o_polynomial",
    "mds_condition_names",
    "monomial_table",
    "parity_matrix",
    "parity_weight",
    "prime_field",
    "row_space_equal",
    "search_eval_sets",
    "vandermonde",
    "vandermonde_dropped_row",
    "vandermonde_power_row",
]
