"""Left/right semi-tensor product and semi-tensor addition on raw matrices.

The product is total: for A (m x n) and B (p x q), both operands are
lifted by Kronecker identities to the lcm of the inner dimensions before
the ordinary product. The addition is defined only within one row/column
ratio and lifts to the lcm of the row counts.

These are the reference implementations that materialize the lifts in
full; ``kernels.ltimes_fast`` is the structure-exploiting path and must
agree bit-exactly with ``ltimes`` in exact mode.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .matrix import Matrix, identity, kron, matmul, add, neg


def ratio_of(A: Matrix) -> Fraction:
    """Row/column ratio of A as a reduced rational."""
    return Fraction(A.rows, A.cols)


def ltimes(A: Matrix, B: Matrix) -> Matrix:
    """Left semi-tensor product (A x I_{t/n}) (B x I_{t/p}), t = lcm(n, p)."""
    t = lcm(A.cols, B.rows)
    left = kron(A, identity(t // A.cols, A.scalar))
    right = kron(B, identity(t // B.rows, B.scalar))
    return matmul(left, right)


def rtimes(A: Matrix, B: Matrix) -> Matrix:
    """Right semi-tensor product (I_{t/n} x A) (I_{t/p} x B), t = lcm(n, p)."""
    t = lcm(A.cols, B.rows)
    left = kron(identity(t // A.cols, A.scalar), A)
    right = kron(identity(t // B.rows, B.scalar), B)
    return matmul(left, right)


def _require_same_ratio(A: Matrix, B: Matrix) -> None:
    # Addition across different ratios is undefined, not silently lifted.
    if ratio_of(A) != ratio_of(B):
        raise ValueError(
            f"semi-tensor addition needs equal row/column ratios, "
            f"got {ratio_of(A)} and {ratio_of(B)}"
        )


def lplus(A: Matrix, B: Matrix) -> Matrix:
    """Left semi-tensor addition (A x I_{t/m}) + (B x I_{t/p}), t = lcm(m, p)."""
    _require_same_ratio(A, B)
    t = lcm(A.rows, B.rows)
    return add(
        kron(A, identity(t // A.rows, A.scalar)),
        kron(B, identity(t // B.rows, B.scalar)),
    )


def lminus(A: Matrix, B: Matrix) -> Matrix:
    return lplus(A, neg(B))


def rplus(A: Matrix, B: Matrix) -> Matrix:
    """Right semi-tensor addition (I_{t/m} x A) + (I_{t/p} x B)."""
    _require_same_ratio(A, B)
    t = lcm(A.rows, B.rows)
    return add(
        kron(identity(t // A.rows, A.scalar), A),
        kron(identity(t // B.rows, B.scalar), B),
    )


def rminus(A: Matrix, B: Matrix) -> Matrix:
    return rplus(A, neg(B))
