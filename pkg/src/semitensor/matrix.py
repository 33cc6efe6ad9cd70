"""Dense matrices over exact rationals or binary64 floats.

Entries live in a flat row-major tuple. Exact mode keeps every entry a
``Fraction`` (lowest terms for free); float mode stores binary64 and all
tolerant comparisons go through a relative tolerance with an absolute
floor. Every value is immutable, every operation is a pure function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

RATIONAL = "rational"
FLOAT64 = "float64"

DEFAULT_RTOL = 1e-9
ABS_FLOOR = 1e-15

Scalar = Union[Fraction, float]

# Running count of matrix entries ever constructed. Purely bench
# instrumentation: lets the kernel harness show that the fast product
# path allocates only its output while the naive path materializes
# Kronecker lifts.
_alloc_elems = 0


def allocated_elems() -> int:
    """Total matrix entries allocated so far in this process."""
    return _alloc_elems


def as_scalar(value, kind: str) -> Scalar:
    """Coerce a number (or 'num/den' string) into the given scalar kind."""
    if kind == RATIONAL:
        if isinstance(value, float):
            raise ValueError(
                "refusing implicit float -> rational conversion; use to_rational()"
            )
        return Fraction(value)
    if kind == FLOAT64:
        return float(value)
    raise ValueError(f"unknown scalar kind {kind!r}")


def scalar_eq(a: Scalar, b: Scalar, kind: str, rtol: float | None = None) -> bool:
    """Equality for one entry. rtol=0 means exact even in float mode."""
    if kind == RATIONAL:
        return a == b
    if rtol is None:
        rtol = DEFAULT_RTOL
    if rtol == 0.0:
        return a == b
    return abs(a - b) <= max(rtol * max(abs(a), abs(b)), ABS_FLOOR)


@dataclass(frozen=True)
class Matrix:
    """An m x n matrix with uniform scalar kind, row-major storage."""

    rows: int
    cols: int
    data: tuple
    scalar: str = RATIONAL

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"shape must be positive, got {self.rows}x{self.cols}")
        if len(self.data) != self.rows * self.cols:
            raise ValueError(
                f"data length {len(self.data)} != {self.rows}*{self.cols}"
            )
        if self.scalar == RATIONAL:
            if not all(isinstance(v, Fraction) for v in self.data):
                raise ValueError("rational matrix entries must be Fraction")
        elif self.scalar == FLOAT64:
            if not all(isinstance(v, float) for v in self.data):
                raise ValueError("float64 matrix entries must be float")
        else:
            raise ValueError(f"unknown scalar kind {self.scalar!r}")
        global _alloc_elems
        _alloc_elems += self.rows * self.cols

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def entry(self, i: int, j: int) -> Scalar:
        """Entry at 0-based (i, j)."""
        return self.data[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.data[i * self.cols : (i + 1) * self.cols]

    def to_lists(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __str__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in self.row(i)) for i in range(self.rows))
        return f"[{body}]"


def from_rows(rows: Sequence[Sequence], scalar: str = RATIONAL) -> Matrix:
    """Build a matrix from nested sequences, coercing entries."""
    m = len(rows)
    if m == 0:
        raise ValueError("matrix needs at least one row")
    n = len(rows[0])
    for r in rows:
        if len(r) != n:
            raise ValueError("ragged rows")
    data = tuple(as_scalar(v, scalar) for r in rows for v in r)
    return Matrix(m, n, data, scalar)


def _zero(kind: str) -> Scalar:
    return Fraction(0) if kind == RATIONAL else 0.0


def _one(kind: str) -> Scalar:
    return Fraction(1) if kind == RATIONAL else 1.0


def zeros(m: int, n: int, scalar: str = RATIONAL) -> Matrix:
    return Matrix(m, n, (_zero(scalar),) * (m * n), scalar)


def identity(n: int, scalar: str = RATIONAL) -> Matrix:
    z, o = _zero(scalar), _one(scalar)
    data = tuple(o if i == j else z for i in range(n) for j in range(n))
    return Matrix(n, n, data, scalar)


def e_matrix(m: int, n: int, i: int, j: int, scalar: str = RATIONAL) -> Matrix:
    """Single-entry matrix: 1 at 0-based (i, j), 0 elsewhere."""
    if not (0 <= i < m and 0 <= j < n):
        raise ValueError(f"entry ({i},{j}) outside {m}x{n}")
    z, o = _zero(scalar), _one(scalar)
    data = tuple(o if (r == i and c == j) else z for r in range(m) for c in range(n))
    return Matrix(m, n, data, scalar)


def _require_same_kind(A: Matrix, B: Matrix) -> None:
    if A.scalar != B.scalar:
        raise ValueError(f"scalar kinds differ: {A.scalar} vs {B.scalar}")


def kron(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product: block (i, j) equals a_ij * B."""
    _require_same_kind(A, B)
    m, n, p, q = A.rows, A.cols, B.rows, B.cols
    out = [None] * (m * p * n * q)
    ocols = n * q
    for i in range(m):
        for j in range(n):
            a = A.data[i * n + j]
            for r in range(p):
                base = (i * p + r) * ocols + j * q
                brow = r * q
                for c in range(q):
                    out[base + c] = a * B.data[brow + c]
    return Matrix(m * p, n * q, tuple(out), A.scalar)


def matmul(A: Matrix, B: Matrix) -> Matrix:
    _require_same_kind(A, B)
    if A.cols != B.rows:
        raise ValueError(f"cannot multiply {A.shape} by {B.shape}")
    m, n, q = A.rows, A.cols, B.cols
    z = _zero(A.scalar)
    out = [z] * (m * q)
    for i in range(m):
        arow = i * n
        for k in range(n):
            a = A.data[arow + k]
            if a == 0:
                continue
            brow = k * q
            crow = i * q
            for j in range(q):
                out[crow + j] += a * B.data[brow + j]
    return Matrix(m, q, tuple(out), A.scalar)


def add(A: Matrix, B: Matrix) -> Matrix:
    _require_same_kind(A, B)
    if A.shape != B.shape:
        raise ValueError(f"cannot add {A.shape} and {B.shape}")
    return Matrix(A.rows, A.cols, tuple(a + b for a, b in zip(A.data, B.data)), A.scalar)


def sub(A: Matrix, B: Matrix) -> Matrix:
    _require_same_kind(A, B)
    if A.shape != B.shape:
        raise ValueError(f"cannot subtract {A.shape} and {B.shape}")
    return Matrix(A.rows, A.cols, tuple(a - b for a, b in zip(A.data, B.data)), A.scalar)


def scale(c, A: Matrix) -> Matrix:
    c = as_scalar(c, A.scalar)
    return Matrix(A.rows, A.cols, tuple(c * v for v in A.data), A.scalar)


def neg(A: Matrix) -> Matrix:
    return Matrix(A.rows, A.cols, tuple(-v for v in A.data), A.scalar)


def frobenius_inner(A: Matrix, B: Matrix) -> Scalar:
    """Sum of entrywise products of two same-shape matrices."""
    _require_same_kind(A, B)
    if A.shape != B.shape:
        raise ValueError(f"shape mismatch: {A.shape} vs {B.shape}")
    if A.scalar == FLOAT64:
        return math.fsum(a * b for a, b in zip(A.data, B.data))
    return sum((a * b for a, b in zip(A.data, B.data)), Fraction(0))


def eq_within(A: Matrix, B: Matrix, rtol: float | None = None) -> bool:
    """Same shape and kind, entries equal (exactly, or within tolerance)."""
    if A.scalar != B.scalar or A.shape != B.shape:
        return False
    return all(scalar_eq(a, b, A.scalar, rtol) for a, b in zip(A.data, B.data))


def to_rational(A: Matrix, max_denominator: int = 10**12) -> Matrix:
    """Rationalize a float64 matrix, bounding denominators explicitly."""
    if A.scalar == RATIONAL:
        return A
    data = tuple(Fraction(v).limit_denominator(max_denominator) for v in A.data)
    return Matrix(A.rows, A.cols, data, RATIONAL)


def to_float(A: Matrix) -> Matrix:
    if A.scalar == FLOAT64:
        return A
    return Matrix(A.rows, A.cols, tuple(float(v) for v in A.data), FLOAT64)
