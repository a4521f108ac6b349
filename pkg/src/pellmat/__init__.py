"""Exact Gaussian-integer determinants and Pell-number identity checks."""
from .gaussint import GaussInt, UnitPhase, classify_unit, gi_add, gi_mul, strip_unit, unit_pow_i
from .matrix import (
    DenseMatrix,
    IndexSet,
    TridiagSpec,
    build_pell_matrix,
    complementary_minor,
    cofactor_sign,
    materialize,
    submatrix,
)
from .determinant import (
    RowExpansion,
    det_bareiss,
    det_continuant,
    det_permutation,
    generalized_cofactor,
    laplace_expand,
)
from .pell import (
    IdentityReport,
    pell_via_det,
    unit_multiplier,
    verify_cofactor_tables,
    verify_convolution,
    verify_det_equation,
    verify_doubling,
)

__version__ = "0.1.0"
