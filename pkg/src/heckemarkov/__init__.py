"""Exact-arithmetic Hecke character tables, twisted Markov traces, and
graded tensor-multiplication (Molien) matrices for the symmetric group.

All computations are carried out over the field of rational functions in
two parameters q and r with exact rational coefficients; every identity
is checked by cross-multiplication, never numerically.
"""

from .characters import (
    example_checks,
    hecke_char_table,
    kronecker,
    sn_char_table,
    sn_character,
    tensor_matrix,
)
from .graded import (
    coinvariant_character,
    coinvariant_matrix,
    graded_matrix,
    invariant_degrees,
    invariant_hilbert_series,
    poincare_row,
)
from .partitions import (
    conjugate,
    coxeter_length,
    enumerate_partitions,
    format_partition,
    parse_partition,
    z_mu,
)
from .ratfun import ONE, Q, R, ZERO, BivarPoly, PoleError, RatFun, ratfun_eq
from .tables import PartitionTable, Report
from .traces import (
    dual_character,
    limit_n_spec,
    markov_trace_table,
    verify_duality,
    verify_example1_rows,
    verify_example2_trace,
    verify_limit,
    verify_prop3,
    verify_starkey,
    verify_super_frobenius,
)

__version__ = "0.1.0"

__all__ = [
    "BivarPoly",
    "ONE",
    "PartitionTable",
    "PoleError",
    "Q",
    "R",
    "RatFun",
    "Report",
    "ZERO",
    "coinvariant_character",
    "coinvariant_matrix",
    "conjugate",
    "coxeter_length",
    "dual_character",
    "enumerate_partitions",
    "example_checks",
    "format_partition",
    "graded_matrix",
    "hecke_char_table",
    "invariant_degrees",
    "invariant_hilbert_series",
    "kronecker",
    "limit_n_spec",
    "markov_trace_table",
    "parse_partition",
    "poincare_row",
    "ratfun_eq",
    "sn_char_table",
    "sn_character",
    "tensor_matrix",
    "verify_duality",
    "verify_example1_rows",
    "verify_example2_trace",
    "verify_limit",
    "verify_prop3",
    "verify_starkey",
    "verify_super_frobenius",
    "z_mu",
]
