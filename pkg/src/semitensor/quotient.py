"""Identity-equivalence classes of matrices.

Two matrices are equivalent when some Kronecker identity lifts of them
coincide: A x I_s = B x I_t. Each class contains exactly one matrix that
is not itself a lift (the irreducible representative), and a class is
stored by that representative. Addition, scaling, product and the Lie
bracket all descend to classes because equivalence is a congruence for
the semi-tensor operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .matrix import RATIONAL, Matrix, scalar_eq, scale, zeros
from .stp import lminus, lplus, ltimes, ratio_of


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def try_unkron(A: Matrix, s: int, rtol: float | None = None) -> Matrix | None:
    """If A = B x I_s, return B; otherwise None.

    Viewing A as an (m/s) x (n/s) grid of s x s blocks, the factorization
    holds iff every block is a scalar multiple of I_s. rtol applies only
    in float mode; rtol=0 forces exact float comparison.
    """
    if s < 2 or A.rows % s or A.cols % s:
        return None
    m, n = A.rows // s, A.cols // s
    kind = A.scalar
    vals = []
    for i in range(m):
        for j in range(n):
            d = A.entry(i * s, j * s)
            for a in range(s):
                base = (i * s + a) * A.cols + j * s
                for b in range(s):
                    v = A.data[base + b]
                    want = d if a == b else (Fraction(0) if kind == RATIONAL else 0.0)
                    if not scalar_eq(v, want, kind, rtol):
                        return None
            vals.append(d)
    return Matrix(m, n, tuple(vals), kind)


def is_reducible(A: Matrix, rtol: float | None = None) -> tuple[bool, int | None]:
    """Whether A = B x I_s for some s >= 2; witness is the largest such s."""
    g = gcd(A.rows, A.cols)
    for s in sorted(_divisors(g), reverse=True):
        if s < 2:
            break
        if try_unkron(A, s, rtol) is not None:
            return True, s
    return False, None


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


@dataclass(frozen=True)
class MatrixClass:
    """An equivalence class, stored by its irreducible representative.

    Construct through :func:`canonicalize`; the direct constructor only
    checks that the stored ratio matches the representative's shape.
    """

    mu: Fraction
    rep: Matrix

    def __post_init__(self):
        if ratio_of(self.rep) != self.mu:
            raise ValueError(
                f"representative shape {self.rep.shape} has ratio "
                f"{ratio_of(self.rep)}, not {self.mu}"
            )

    @property
    def k0(self) -> int:
        """Lift level of the representative: rep is k0*p x k0*q."""
        return self.rep.rows // self.mu.numerator

    @property
    def scalar(self) -> str:
        return self.rep.scalar


def canonicalize(A: Matrix, rtol: float | None = None) -> MatrixClass:
    """Class of A: peel identity factors until irreducible.

    Peels one prime factor of gcd(rows, cols) at a time; the result is
    independent of peel order because the irreducible representative is
    unique. Float-mode peeling is tolerance-dependent (pass rtol=0 for
    exact comparisons).
    """
    rep = A
    while True:
        g = gcd(rep.rows, rep.cols)
        for s in _prime_factors(g):
            peeled = try_unkron(rep, s, rtol)
            if peeled is not None:
                rep = peeled
                break
        else:
            break
    return MatrixClass(ratio_of(A), rep)


def equivalent(A: Matrix, B: Matrix, rtol: float | None = None) -> bool:
    """Whether A and B are identity-equivalent (equal canonical reps)."""
    x = canonicalize(A, rtol)
    y = canonicalize(B, rtol)
    return x.mu == y.mu and x.rep == y.rep


def zero_class(mu: Fraction, scalar: str = RATIONAL) -> MatrixClass:
    """The class of the zero matrix in the space of ratio mu."""
    mu = Fraction(mu)
    return MatrixClass(mu, zeros(mu.numerator, mu.denominator, scalar))


def _require_same_mu(x: MatrixClass, y: MatrixClass) -> None:
    if x.mu != y.mu:
        raise ValueError(f"classes live in different spaces: {x.mu} vs {y.mu}")


def class_add(x: MatrixClass, y: MatrixClass, rtol: float | None = None) -> MatrixClass:
    _require_same_mu(x, y)
    return canonicalize(lplus(x.rep, y.rep), rtol)


def class_sub(x: MatrixClass, y: MatrixClass, rtol: float | None = None) -> MatrixClass:
    _require_same_mu(x, y)
    return canonicalize(lminus(x.rep, y.rep), rtol)


def scalar_mul(c, x: MatrixClass, rtol: float | None = None) -> MatrixClass:
    # c != 0 keeps the representative irreducible; c = 0 collapses to the
    # zero class, which canonicalize handles by peeling all the way down.
    return canonicalize(scale(c, x.rep), rtol)


def class_mul(x: MatrixClass, y: MatrixClass, rtol: float | None = None) -> MatrixClass:
    """Semi-tensor product of classes; lands in the space of ratio mu_x*mu_y."""
    return canonicalize(ltimes(x.rep, y.rep), rtol)


def lie_bracket(x: MatrixClass, y: MatrixClass, rtol: float | None = None) -> MatrixClass:
    """[x, y] = x*y - y*x on the ratio-1 space."""
    if x.mu != 1 or y.mu != 1:
        raise ValueError(f"bracket needs ratio 1, got {x.mu} and {y.mu}")
    return class_sub(class_mul(x, y, rtol), class_mul(y, x, rtol), rtol)
