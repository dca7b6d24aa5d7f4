"""Independent Ext computations from the normalized bar resolution."""
from .bar import (BarCochainComplex, OracleLimits, ResourceLimitError, build_complex,
                  check_d_squared, cohomology_dims, ext_dimensions, ext_lambda_dimensions,
                  ext_lambda_lambda, ext_mixed_dimensions, report)
from .classes import (ExtBasis, action_on_cohomology, canonical_cocycle, character_table,
                      closed_form_matrix)
from .linalg import RationalMatrix
from .yoneda import YonedaOracle, yoneda_product

__all__ = [
    "BarCochainComplex", "OracleLimits", "ResourceLimitError", "build_complex",
    "check_d_squared", "cohomology_dims", "ext_dimensions", "ext_lambda_dimensions",
    "ext_lambda_lambda", "ext_mixed_dimensions", "report", "ExtBasis",
    "action_on_cohomology", "canonical_cocycle", "character_table", "closed_form_matrix",
    "RationalMatrix", "YonedaOracle", "yoneda_product",
]
