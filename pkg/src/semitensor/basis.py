"""Constructive basis of the quotient spaces and coordinate decomposition.

The basis consists of classes of single-entry Kronecker units
E(p x q; k, l) x E(i x i; j1, j2) subject to coprimality: gcd(i, j1) = 1
on the diagonal (j1 = j2), and gcd(i, j1, j2) = 1 with i >= 2 off it.
A general unit with gcd > 1 telescopes into such elements through greedy
gcd chains: the plus-chain walks j down to 0 in steps f_n = gcd(i, rest),
the minus-chain walks j-1 down to 0, and the signed sum of the emitted
coprime units reproduces the original unit after lifting.

Span and independence questions are decided exactly by lifting every
representative to the lcm of their sizes and solving the resulting
linear system over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .matrix import RATIONAL, Matrix, e_matrix, identity, kron
from .quotient import MatrixClass, canonicalize, zero_class


@dataclass(frozen=True)
class BasisElement:
    """Index tuple naming the class of E(p x q; k, l) x E(i x i; j1, j2).

    All indices are 1-based. mu = p/q must be reduced (Fraction enforces
    this); k <= p, l <= q, and j1, j2 <= i with the coprimality condition
    of the diagonal or off-diagonal family.
    """

    mu: Fraction
    k: int
    l: int
    i: int
    j1: int
    j2: int

    def __post_init__(self):
        p, q = self.mu.numerator, self.mu.denominator
        if not (1 <= self.k <= p and 1 <= self.l <= q):
            raise ValueError(f"(k, l)=({self.k},{self.l}) outside {p}x{q}")
        if not (1 <= self.j1 <= self.i and 1 <= self.j2 <= self.i):
            raise ValueError(f"(j1, j2)=({self.j1},{self.j2}) outside 1..{self.i}")
        if self.j1 == self.j2:
            if gcd(self.i, self.j1) != 1:
                raise ValueError(f"diagonal element needs gcd(i, j)=1, got ({self.i},{self.j1})")
        else:
            if self.i < 2:
                raise ValueError("off-diagonal element needs i >= 2")
            if gcd(self.i, self.j1, self.j2) != 1:
                raise ValueError(
                    f"off-diagonal element needs gcd(i, j1, j2)=1, "
                    f"got ({self.i},{self.j1},{self.j2})"
                )

    @property
    def kind(self) -> str:
        """'D' for diagonal (j1 = j2), 'N' otherwise."""
        return "D" if self.j1 == self.j2 else "N"

    def sort_key(self) -> tuple[int, int, int, int, int]:
        return (self.i, self.j1, self.j2, self.k, self.l)


@dataclass(frozen=True)
class GcdChain:
    """Greedy gcd chains: f partial-sums to the target index, g to target-1."""

    f: tuple[int, ...]
    g: tuple[int, ...]


@dataclass
class Coordinates:
    """Finite-support expansion of a class over basis elements.

    Only nonzero rational coefficients are stored, all keys share mu.
    """

    mu: Fraction
    terms: dict[BasisElement, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        for e, c in self.terms.items():
            if e.mu != self.mu:
                raise ValueError(f"term {e} has ratio {e.mu}, expected {self.mu}")
            if c == 0:
                raise ValueError("zero coefficients must not be stored")


def unit_class(e: BasisElement) -> MatrixClass:
    """The class named by a basis element; its representative is the unit itself."""
    p, q = e.mu.numerator, e.mu.denominator
    rep = kron(e_matrix(p, q, e.k - 1, e.l - 1), e_matrix(e.i, e.i, e.j1 - 1, e.j2 - 1))
    return canonicalize(rep)


def _chain(i: int, targets: tuple[int, ...]) -> list[int]:
    # Greedy walk: each step removes gcd(i, remainders) from every
    # remainder; stops when the first target hits zero. Terminates since
    # each step divides (hence is <=) the first remainder.
    rest = list(targets)
    steps = []
    while rest[0] > 0:
        s = gcd(i, *rest)
        steps.append(s)
        rest = [r - s for r in rest]
    return steps


def gcd_chain(i: int, j1: int, j2: int | None = None) -> GcdChain:
    """Both greedy chains for a unit index: f targets j1, g targets j1 - 1.

    For the off-diagonal form pass j2 with j1 < j2 <= i; the gcd at each
    step then takes both shifted indices into account.
    """
    if not (1 <= j1 <= i):
        raise ValueError(f"need 1 <= j1 <= i, got j1={j1}, i={i}")
    if j2 is not None and not (j1 < j2 <= i):
        raise ValueError(f"need j1 < j2 <= i, got j1={j1}, j2={j2}, i={i}")
    if j2 is None:
        f = _chain(i, (j1,))
        g = _chain(i, (j1 - 1,)) if j1 > 1 else []
    else:
        f = _chain(i, (j1, j2))
        g = _chain(i, (j1 - 1, j2 - 1)) if j1 > 1 else []
    return GcdChain(tuple(f), tuple(g))


def _merge(acc: dict[BasisElement, Fraction], e: BasisElement, c: Fraction) -> None:
    new = acc.get(e, Fraction(0)) + c
    if new == 0:
        acc.pop(e, None)
    else:
        acc[e] = new


def decompose_unit(mu: Fraction, k: int, l: int, i: int, j1: int, j2: int) -> Coordinates:
    """Expand the class of E(p x q; k, l) x E(i x i; j1, j2) over the basis.

    When the coprimality condition already holds this is a single term;
    otherwise the plus-chain terms enter with +1 and the minus-chain
    terms with -1. Every emitted index is coprime by construction
    (dividing a gcd out of its own arguments leaves gcd 1), which the
    BasisElement validator re-checks.
    """
    mu = Fraction(mu)
    p, q = mu.numerator, mu.denominator
    if not (1 <= k <= p and 1 <= l <= q and 1 <= j1 <= i and 1 <= j2 <= i):
        raise ValueError(f"indices (k={k}, l={l}, i={i}, j1={j1}, j2={j2}) out of range")

    if j1 == j2:
        if gcd(i, j1) == 1:
            return Coordinates(mu, {BasisElement(mu, k, l, i, j1, j2): Fraction(1)})
        chain = gcd_chain(i, j1)
        lo = hi = j1
        swapped = False
    else:
        if gcd(i, j1, j2) == 1:
            return Coordinates(mu, {BasisElement(mu, k, l, i, j1, j2): Fraction(1)})
        lo, hi = min(j1, j2), max(j1, j2)
        swapped = j1 > j2
        chain = gcd_chain(i, lo, hi)

    acc: dict[BasisElement, Fraction] = {}
    for steps, start_lo, start_hi, sign in (
        (chain.f, lo, hi, Fraction(1)),
        (chain.g, lo - 1, hi - 1, Fraction(-1)),
    ):
        pre = 0
        for s in steps:
            x = (start_lo - pre) // s
            y = (start_hi - pre) // s
            a, b = (y, x) if swapped else (x, y)
            _merge(acc, BasisElement(mu, k, l, i // s, a, b), sign)
            pre += s
    return Coordinates(mu, acc)


def decompose_class(x: MatrixClass) -> Coordinates:
    """Coordinates of a class: expand each nonzero entry of the representative.

    The representative of shape k0*p x k0*q is read as a p x q grid of
    k0 x k0 cells; the entry at 1-based (I, J) is the unit
    E(p x q; k, l) x E(k0 x k0; j1, j2) with I = (k-1)k0 + j1 and
    J = (l-1)k0 + j2, which then telescopes through decompose_unit.
    """
    if x.scalar != RATIONAL:
        raise ValueError("coordinates are exact-rational; rationalize the class first")
    k0 = x.k0
    acc: dict[BasisElement, Fraction] = {}
    rep = x.rep
    for idx, a in enumerate(rep.data):
        if a == 0:
            continue
        big_i, big_j = divmod(idx, rep.cols)
        k, j1 = divmod(big_i, k0)
        l, j2 = divmod(big_j, k0)
        part = decompose_unit(x.mu, k + 1, l + 1, k0, j1 + 1, j2 + 1)
        for e, c in part.terms.items():
            _merge(acc, e, a * c)
    return Coordinates(x.mu, acc)


def reconstruct(c: Coordinates) -> MatrixClass:
    """Class summing coeff * unit over all terms; empty coordinates give zero.

    Equivalent to folding class additions over the terms, but computed in
    one pass: every unit has a single nonzero entry, so its lift to the
    common size lands on an explicit diagonal run of positions.
    """
    p, q = c.mu.numerator, c.mu.denominator
    if not c.terms:
        return zero_class(c.mu)
    R = 1
    for e in c.terms:
        R = lcm(R, p * e.i)
    cols = R * q // p
    acc = [Fraction(0)] * (R * cols)
    for e, coeff in c.terms.items():
        s = R // (p * e.i)
        row0 = ((e.k - 1) * e.i + e.j1 - 1) * s
        col0 = ((e.l - 1) * e.i + e.j2 - 1) * s
        for d in range(s):
            acc[(row0 + d) * cols + (col0 + d)] += coeff
    return canonicalize(Matrix(R, cols, tuple(acc), RATIONAL))


def _lift_vector(x: MatrixClass, R: int) -> tuple:
    lifted = kron(x.rep, identity(R // x.rep.rows, RATIONAL))
    return lifted.data


def _row_echelon(rows: list[list[Fraction]]) -> int:
    """In-place elimination; returns the rank."""
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _require_exact_same_mu(classes: list[MatrixClass], mu: Fraction) -> None:
    for x in classes:
        if x.scalar != RATIONAL:
            raise ValueError("span checks need exact-rational classes")
        if x.mu != mu:
            raise ValueError(f"mixed ratios: {x.mu} vs {mu}")


def in_span(target: MatrixClass, classes: list[MatrixClass]) -> bool:
    """Whether target is a rational combination of the given classes.

    All representatives are lifted to the lcm of their row counts and
    vectorized; membership is consistency of the exact linear system.
    """
    _require_exact_same_mu([target] + list(classes), target.mu)
    R = target.rep.rows
    for x in classes:
        R = lcm(R, x.rep.rows)
    cols = [_lift_vector(x, R) for x in classes]
    t = _lift_vector(target, R)
    plain = [[col[r] for col in cols] for r in range(len(t))]
    augmented = [[col[r] for col in cols] + [t[r]] for r in range(len(t))]
    return _row_echelon(plain) == _row_echelon(augmented)


def independent(classes: list[MatrixClass]) -> bool:
    """Whether the classes are linearly independent (exact rank check)."""
    if not classes:
        return True
    _require_exact_same_mu(list(classes), classes[0].mu)
    R = 1
    for x in classes:
        R = lcm(R, x.rep.rows)
    cols = [_lift_vector(x, R) for x in classes]
    rows = [[col[r] for col in cols] for r in range(len(cols[0]))]
    return _row_echelon(rows) == len(classes)


def enumerate_basis(mu: Fraction, i_max: int) -> list[BasisElement]:
    """All basis elements with i <= i_max, ordered by (i, j1, j2, k, l)."""
    if i_max < 1:
        raise ValueError("i_max must be >= 1")
    mu = Fraction(mu)
    p, q = mu.numerator, mu.denominator
    out = []
    for i in range(1, i_max + 1):
        for j1 in range(1, i + 1):
            for j2 in range(1, i + 1):
                if j1 == j2:
                    ok = gcd(i, j1) == 1
                else:
                    ok = i >= 2 and gcd(i, j1, j2) == 1
                if not ok:
                    continue
                for k in range(1, p + 1):
                    for l in range(1, q + 1):
                        out.append(BasisElement(mu, k, l, i, j1, j2))
    return out
