"""Exact integer and rational linear algebra.

Vectors are plain tuples: ``IntVector`` holds Python ints, ``RatVector`` holds
:class:`fractions.Fraction`. Matrices are tuples of row tuples. Everything here
is exact; nothing touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import NotIndependent, RankMismatch, ZeroVector

Rat = Fraction
IntVector = tuple  # tuple[int, ...]
RatVector = tuple  # tuple[Fraction, ...]
IntMatrix = tuple  # tuple[IntVector, ...]


def rat(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: they would silently import rounding error.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if "/" in s:
            p, q = s.split("/", 1)
            p, q = int(p), int(q)
            if q == 0:
                raise ZeroDivisionError(f"zero denominator in {x!r}")
            return Fraction(p, q)
        return Fraction(int(s))
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def rat_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rvec(xs: Iterable) -> RatVector:
    return tuple(rat(x) for x in xs)


def ivec(xs: Iterable) -> IntVector:
    out = []
    for x in xs:
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not integral")
            x = x.numerator
        out.append(int(x))
    return tuple(out)


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), 0)


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v):
    return tuple(c * a for a in v)


def vgcd(v: Sequence[int]) -> int:
    g = 0
    for a in v:
        g = gcd(g, int(a))
    return g


def primitive(v: Sequence) -> IntVector:
    """Positive multiple of a rational vector that is a primitive integer vector."""
    v = [Fraction(a) for a in v]
    if all(a == 0 for a in v):
        raise ZeroVector("zero vector has no primitive multiple")
    den = 1
    for a in v:
        den = den * a.denominator // gcd(den, a.denominator)
    ints = [int(a * den) for a in v]
    g = vgcd(ints)
    return tuple(a // g for a in ints)


def is_primitive(xi: Sequence[int]) -> bool:
    """True iff ``xi`` is not a proper integer multiple of another lattice vector."""
    if all(a == 0 for a in xi):
        raise ZeroVector("primitivity is undefined for the zero vector")
    return vgcd(xi) == 1


# -- rational elimination ---------------------------------------------------

def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q. Returns (nonzero rows, pivot columns)."""
    m = [[Fraction(a) for a in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [a * inv for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[IntVector]:
    """Integer (primitive) basis of the rational kernel {x : r.x = 0 for r in rows}."""
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            x[pc] = -row[f]
        basis.append(primitive(x))
    return basis


def solve_in_span(basis: Sequence[Sequence], x: Sequence) -> list[Fraction] | None:
    """Coefficients c with sum c_i basis_i = x, or None if x is outside the span.

    ``basis`` must be linearly independent.
    """
    if not basis:
        return [] if all(a == 0 for a in x) else None
    k = len(x)
    # columns = basis vectors, augmented with x
    aug = [[Fraction(b[j]) for b in basis] + [Fraction(x[j])] for j in range(k)]
    red, pivots = rref(aug)
    n = len(basis)
    if n in pivots:
        return None
    coeffs = [Fraction(0)] * n
    for row, pc in zip(red, pivots):
        coeffs[pc] = row[n]
    return coeffs


def det(M: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss, fraction-free)."""
    n = len(M)
    if n == 0:
        return 1
    a = [list(map(int, r)) for r in M]
    if any(len(r) != n for r in a):
        raise RankMismatch("determinant needs a square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if p is None:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# -- integer normal forms ---------------------------------------------------

def hnf(M: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``H = U @ M``. ``H`` is in row
    echelon form, pivots are positive, entries above a pivot lie in
    ``[0, pivot)`` and zero rows sit at the bottom.
    """
    H = [list(map(int, r)) for r in M]
    m = len(H)
    n = len(H[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap(i, j):
        H[i], H[j] = H[j], H[i]
        U[i], U[j] = U[j], U[i]

    def axpy(i, q, j):  # row_i -= q * row_j
        H[i] = [a - q * b for a, b in zip(H[i], H[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(H[i][c]))
            swap(r, p)
            done = True
            for i in range(r + 1, m):
                if H[i][c] != 0:
                    axpy(i, H[i][c] // H[r][c], r)
                    if H[i][c] != 0:
                        done = False
            if done:
                break
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-a for a in H[r]]
            U[r] = [-a for a in U[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                axpy(i, q, r)
        r += 1
    return tuple(map(tuple, H)), tuple(map(tuple, U))


def left_kernel(M: Sequence[Sequence[int]]) -> list[IntVector]:
    """Z-basis of {y in Z^m : y @ M = 0} for an m x n integer matrix."""
    H, U = hnf(M)
    return [U[i] for i in range(len(H)) if all(a == 0 for a in H[i])]


def smith_diagonal(M: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero Smith invariants, via determinantal divisors of the row lattice.

    Only used for small diagnostic matrices, so the naive minor-gcd route is fine.
    """
    from itertools import combinations

    rows = [tuple(r) for r in M if any(r)]
    if not rows:
        return []
    r = rank(rows)
    n = len(rows[0])
    divisors = [1]
    for t in range(1, r + 1):
        g = 0
        for ri in combinations(range(len(rows)), t):
            for ci in combinations(range(n), t):
                g = gcd(g, det([[rows[i][j] for j in ci] for i in ri]))
        divisors.append(g)
    return [divisors[t] // divisors[t - 1] for t in range(1, r + 1)]


# -- sublattices ------------------------------------------------------------

@dataclass(frozen=True)
class Sublattice:
    """A sublattice of Z^k given by a Q-linearly independent basis.

    ``index`` is the index of the lattice the caller started from inside this
    one; :func:`saturate` fills it in, everything else leaves it at 1.
    """

    basis: tuple
    ambient_rank: int
    index: int = field(default=1, compare=False)

    def __post_init__(self):
        b = tuple(ivec(v) for v in self.basis)
        if any(len(v) != self.ambient_rank for v in b):
            raise RankMismatch("basis vector length differs from ambient rank")
        if rank(b) != len(b):
            raise NotIndependent("sublattice basis is linearly dependent")
        object.__setattr__(self, "basis", b)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def canonical(self) -> IntMatrix:
        if not self.basis:
            return ()
        H, _ = hnf(self.basis)
        return tuple(r for r in H if any(r))

    def __eq__(self, other):
        if not isinstance(other, Sublattice):
            return NotImplemented
        return self.ambient_rank == other.ambient_rank and self.canonical() == other.canonical()

    def __hash__(self):
        return hash((self.ambient_rank, self.canonical()))

    def contains(self, x: Sequence[int]) -> bool:
        c = solve_in_span(self.basis, x)
        return c is not None and all(a.denominator == 1 for a in c)


def _ambient(vectors, ambient_rank):
    if ambient_rank is not None:
        return ambient_rank
    if not vectors:
        raise RankMismatch("ambient rank needed for an empty vector list")
    return len(vectors[0])


def saturate(vectors: Sequence[Sequence[int]], ambient_rank: int | None = None) -> Sublattice:
    """The saturation Z^k ∩ span_R(vectors).

    The returned sublattice records in ``index`` the (finite) index of the
    lattice generated by ``vectors`` inside the saturation.
    """
    vectors = [ivec(v) for v in vectors if any(v)]
    k = _ambient(vectors, ambient_rank)
    if not vectors:
        return Sublattice((), k)
    # integer annihilator of the span, then its integer annihilator
    ann = left_kernel([list(col) for col in zip(*vectors)]) if vectors else []
    if ann:
        sat = left_kernel([list(col) for col in zip(*ann)])
    else:
        sat = [tuple(int(i == j) for j in range(k)) for i in range(k)]
    H, _ = hnf(sat)
    basis = [r for r in H if any(r)]
    gen = Sublattice(tuple(r for r in hnf(vectors)[0] if any(r)), k)
    coeffs = [solve_in_span(basis, v) for v in gen.basis]
    index = abs(det([[int(c) for c in row] for row in coeffs]))
    return Sublattice(tuple(basis), k, index=index)


def is_z_basis(vectors: Sequence[Sequence[int]], ambient_rank: int | None = None) -> bool:
    """True iff the vectors form a Z-basis of Z^k (square, determinant ±1)."""
    k = _ambient(vectors, ambient_rank)
    if len(vectors) != k:
        raise RankMismatch(f"expected {k} vectors, got {len(vectors)}")
    return abs(det(vectors)) == 1


def same_lattice(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    """Lattice equality by comparing row Hermite normal forms."""
    def canon(vs):
        vs = [v for v in vs if any(v)]
        if not vs:
            return ()
        return tuple(r for r in hnf(vs)[0] if any(r))
    return canon(a) == canon(b)


def direct_sum_equals_saturation(part_a: Sublattice, gens_b: Sequence[Sequence[int]]) -> bool:
    """Does ``part_a ⊕ ⊕ Z·b`` already equal Z^k ∩ its real span?

    ``part_a``'s basis together with ``gens_b`` must be Q-independent.
    """
    combined = list(part_a.basis) + [ivec(g) for g in gens_b]
    if not combined:
        return True
    if rank(combined) != len(combined):
        raise NotIndependent("part_a and gens_b are linearly dependent")
    sat = saturate(combined, part_a.ambient_rank)
    return same_lattice(sat.basis, combined)
