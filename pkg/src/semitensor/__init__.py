"""Semi-tensor product/addition algebra on identity-equivalence quotient spaces."""

from .matrix import (
    ABS_FLOOR,
    DEFAULT_RTOL,
    FLOAT64,
    RATIONAL,
    Matrix,
    add,
    allocated_elems,
    e_matrix,
    eq_within,
    frobenius_inner,
    from_rows,
    identity,
    kron,
    matmul,
    neg,
    scale,
    sub,
    to_float,
    to_rational,
    zeros,
)
from .stp import lminus, lplus, ltimes, ratio_of, rminus, rplus, rtimes
from .quotient import (
    MatrixClass,
    canonicalize,
    class_add,
    class_mul,
    class_sub,
    equivalent,
    is_reducible,
    lie_bracket,
    scalar_mul,
    try_unkron,
    zero_class,
)
from .basis import (
    BasisElement,
    Coordinates,
    GcdChain,
    decompose_class,
    decompose_unit,
    enumerate_basis,
    gcd_chain,
    in_span,
    independent,
    reconstruct,
    unit_class,
)
from .metric import (
    CauchyConfig,
    GapReport,
    cauchy_sequence,
    delta_n,
    dist,
    fill_value,
    gap_reports,
    inner,
    nonconvergence_probe,
    norm,
    predicted_gap,
    tail_bound,
)
from .kernels import BenchConfig, bench, ltimes_fast

__all__ = [name for name in dir() if not name.startswith("_")]
