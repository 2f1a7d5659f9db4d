"""Exact Patalan, super Catalan and super Patalan numbers and their identities."""

from .checks import CheckResult
from .exact import Params, as_integer, binom_integer, binom_rational
from .matrixlab import (
    ExactMatrix,
    diag_G,
    hadamard_inverse_matrix,
    involution_matrix,
    matrix_inverse,
    matrix_mul,
    pascal_matrix,
    reciprocal_pascal,
    verify_factorization,
    verify_hadamard_inverse_integral,
    verify_involution,
)
from .oeis import BFile, CheckConfig, cross_check, read_bfile, write_bfile
from .powerseries import (
    BivariateSeries,
    TruncatedSeries,
    patalan_gf,
    patalan_via_convolution,
    series_binomial,
    series_comp_inverse,
    series_compose,
    series_mul,
    verify_rubenstein_recurrence,
    verify_two_var_gf,
)
from .sequences import (
    NumberTable,
    SequenceSlice,
    extended_entry,
    patalan_seq,
    pq_patalan_seq,
    super_catalan,
    super_patalan_closed,
    super_patalan_table,
    twisted_transpose_check,
)

__version__ = "0.1.0"
