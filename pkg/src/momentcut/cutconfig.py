"""Cutting data, the induced subdivision of a polytope, and quasi-regularity.

Cut indices are 1-based throughout (``[N] = {1, ..., N}``), and an index set
``I`` is a ``frozenset`` of them. Each datum ``(xi, eps)`` defines the affine
function ``L(eta) = <eta, xi> - eps``; piece ``i`` is where ``L_i`` is minimal.

Two routes to quasi-regularity are provided and are meant to agree:

* the definition: Delzant pieces, primitive ``xi_i - xi_j`` on nonempty walls,
  and, at every vertex of every piece, no more active cuts than the
  dimension of the minimal face through it plus one;
* the lattice route: exact rank conditions on the span of the active
  differences against the annihilator of the minimal face through ``v``, then
  a saturation test of their direct sum.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from . import lattice as lat
from .delzant import is_delzant
from .errors import DimensionMismatch, NotACocycle, NotContained, RankPreconditionFailed
from .polytope import HalfSpace, Polytope, intersect, minimal_face


@dataclass(frozen=True)
class CutDatum:
    xi: tuple
    eps: Fraction

    def __post_init__(self):
        object.__setattr__(self, "xi", lat.ivec(self.xi))
        object.__setattr__(self, "eps", lat.rat(self.eps))

    def __call__(self, eta) -> Fraction:
        return eval_L(self, eta)


class CutData(tuple):
    """Tuple of :class:`CutDatum`, at least one, all of one rank."""

    def __new__(cls, data):
        items = [d if isinstance(d, CutDatum) else CutDatum(*d) for d in data]
        if not items:
            raise ValueError("cut data needs N >= 1")
        if len({len(d.xi) for d in items}) != 1:
            raise DimensionMismatch("cut vectors of differing rank")
        return super().__new__(cls, items)

    @property
    def N(self) -> int:
        return len(self)

    @property
    def rank(self) -> int:
        return len(self[0].xi)

    def datum(self, i: int) -> CutDatum:
        """1-based access."""
        return self[i - 1]

    def xi_diff(self, i: int, j: int) -> tuple:
        """xi_ij = xi_i - xi_j."""
        return lat.sub(self.datum(i).xi, self.datum(j).xi)

    def shifted(self, xi, eps) -> "CutData":
        return CutData(CutDatum(lat.add(d.xi, xi), d.eps + lat.rat(eps)) for d in self)


def eval_L(d: CutDatum, eta) -> Fraction:
    if len(eta) != len(d.xi):
        raise DimensionMismatch(f"point of length {len(eta)} against xi of length {len(d.xi)}")
    return lat.dot(d.xi, lat.rvec(eta)) - d.eps


def min_L(C: CutData, eta) -> Fraction:
    return min(eval_L(d, eta) for d in C)


# -- subdivision -------------------------------------------------------------

@dataclass
class Subdivision:
    ambient: Polytope
    cuts: CutData
    pieces: dict  # frozenset -> Polytope | None

    def piece(self, *I) -> Polytope | None:
        return self.pieces[frozenset(I)]

    def nonempty(self) -> dict:
        return {I: p for I, p in self.pieces.items() if p is not None}

    @property
    def singles(self) -> dict:
        return {i: self.pieces[frozenset({i})] for i in range(1, self.cuts.N + 1)}

    @property
    def empty_indices(self) -> list[int]:
        return [i for i, p in self.singles.items() if p is None]

    @property
    def degenerate_indices(self) -> list[int]:
        return [i for i, p in self.singles.items() if p is not None and p.dim < self.ambient.dim]

    def test_vertices(self) -> list:
        """Vertices of all nonempty single pieces, deduplicated and sorted."""
        vs = set()
        for p in self.singles.values():
            if p is not None:
                vs.update(p.vertices)
        return sorted(vs)


def _wall(C: CutData, i: int, j: int):
    """Halfspace L_i <= L_j, i.e. <eta, xi_j - xi_i> >= eps_j - eps_i.

    Returns True when it holds everywhere, False when it holds nowhere.
    """
    n = lat.sub(C.datum(j).xi, C.datum(i).xi)
    b = C.datum(j).eps - C.datum(i).eps
    if not any(n):
        return b <= 0
    return HalfSpace(n, b)


def region(P: Polytope, C: CutData, I) -> Polytope | None:
    """Points of P where every cut in I attains the minimum of all L_j."""
    hs = []
    for i in sorted(I):
        for j in range(1, C.N + 1):
            if j == i:
                continue
            w = _wall(C, i, j)
            if w is False:
                return None
            if w is not True:
                hs.append(w)
    if not hs:
        return P
    return intersect(P, hs)


def subdivide(P: Polytope, C: CutData) -> Subdivision:
    if P.ambient_rank != C.rank:
        raise DimensionMismatch("polytope and cut data have different ranks")
    pieces: dict = {}
    for size in range(1, C.N + 1):
        for I in combinations(range(1, C.N + 1), size):
            I = frozenset(I)
            # a superset of an empty index set is empty: its constraints only grow
            if size > 1 and any(pieces[I - {x}] is None for x in I):
                pieces[I] = None
            else:
                pieces[I] = region(P, C, I)
    return Subdivision(P, C, pieces)


def active_set(C: CutData, v, P: Polytope) -> frozenset:
    """Indices whose L attains the minimum at v."""
    v = lat.rvec(v)
    if not P.contains(v):
        raise NotContained(f"{v} is not in the polytope")
    vals = [eval_L(d, v) for d in C]
    m = min(vals)
    return frozenset(i + 1 for i, x in enumerate(vals) if x == m)


# -- definitional checks -----------------------------------------------------

@dataclass(frozen=True)
class DetransViolation:
    vertex: tuple
    active_size: int
    face_dim: int


def check_detrans(P: Polytope, C: CutData, S: Subdivision | None = None) -> list[DetransViolation]:
    """Vertices of the pieces with more active cuts than (minimal face dim) + 1."""
    S = S or subdivide(P, C)
    out = []
    for v in S.test_vertices():
        n = len(active_set(C, v, P))
        d = minimal_face(P, v).dim
        if n > d + 1:
            out.append(DetransViolation(v, n, d))
    return out


@dataclass(frozen=True)
class QuasiRegularityReport:
    is_quasi_regular: bool
    delzant_failures: tuple = ()  # (index, reason)
    primitivity_failures: tuple = ()  # (i, j)
    detrans_failures: tuple = ()
    empty_pieces: tuple = ()
    degenerate_pieces: tuple = ()
    base_is_delzant: bool = True

    def __bool__(self):
        return self.is_quasi_regular


def _is_shared_face(S: Subdivision, i: int) -> bool:
    piece = S.singles[i]
    face = minimal_face(S.ambient, piece.interior_point())
    if Polytope.from_vertices(face.vertices, S.ambient.ambient_rank) != piece:
        return False
    return any(
        q is not None and q.dim == S.ambient.dim and all(q.contains(v) for v in piece.vertices)
        for j, q in S.singles.items() if j != i
    )


def is_quasi_regular(P: Polytope, C: CutData, S: Subdivision | None = None) -> QuasiRegularityReport:
    """Definitional quasi-regularity with every failure listed."""
    S = S or subdivide(P, C)
    base_ok = bool(is_delzant(P))
    if not base_ok:
        warnings.warn("ambient polytope is not Delzant", stacklevel=2)

    delzant_failures = []
    for i, piece in S.singles.items():
        if piece is None:
            continue
        if piece.dim < P.dim and not _is_shared_face(S, i):
            delzant_failures.append((i, "Degenerate"))
        elif not is_delzant(piece):
            delzant_failures.append((i, "NotDelzant"))

    prim = []
    for i, j in combinations(range(1, C.N + 1), 2):
        if S.piece(i, j) is None:
            continue
        d = C.xi_diff(i, j)
        if not any(d) or not lat.is_primitive(d):
            prim.append((i, j))

    detrans = check_detrans(P, C, S)
    ok = not delzant_failures and not prim and not detrans
    return QuasiRegularityReport(ok, tuple(delzant_failures), tuple(prim), tuple(detrans),
                                 tuple(S.empty_indices), tuple(S.degenerate_indices), base_ok)


# -- rank and lattice route ---------------------------------------------------

def annihilator(P: Polytope, v) -> list:
    """Integer basis of the covectors killing the directions of the minimal face at v."""
    face = minimal_face(P, v)
    v0 = face.vertices[0]
    dirs = [lat.sub(w, v0) for w in face.vertices[1:]]
    return lat.nullspace(dirs, P.ambient_rank)


@dataclass(frozen=True)
class RankCheck:
    holds: bool
    span_rank: int
    expected_rank: int
    tv_dim: int
    meets_trivially: bool


def rank_check_at(P: Polytope, C: CutData, v) -> RankCheck:
    I = sorted(active_set(C, v, P))
    diffs = [C.xi_diff(I[0], j) for j in I[1:]]
    span = lat.rank(diffs)
    tv = annihilator(P, v)
    meets = lat.rank(tv + [d for d in diffs if any(d)]) == len(tv) + span
    return RankCheck(span == len(I) - 1 and meets, span, len(I) - 1, len(tv), meets)


def check_rank_criterion(P: Polytope, C: CutData, S: Subdivision | None = None) -> dict:
    """Both rank equalities, evaluated at every vertex of every piece."""
    S = S or subdivide(P, C)
    return {v: rank_check_at(P, C, v) for v in S.test_vertices()}


def lattice_criterion_at(P: Polytope, C: CutData, v, base: int | None = None) -> bool:
    """Do the annihilator lattice at v and the active differences xi_i - xi_j
    together span a saturated sublattice?

    ``base`` picks the reference index i among the active ones (default: the
    smallest).
    """
    v = lat.rvec(v)
    rc = rank_check_at(P, C, v)
    if not rc.holds:
        raise RankPreconditionFailed(f"rank conditions fail at {v}")
    I = sorted(active_set(C, v, P))
    i = I[0] if base is None else base
    if i not in I:
        raise ValueError(f"base index {i} is not active at {v}")
    part_a = lat.saturate(annihilator(P, v), P.ambient_rank)
    gens = [C.xi_diff(i, j) for j in I if j != i]
    return lat.direct_sum_equals_saturation(part_a, gens)


def lattice_criterion_quasi_regular(P: Polytope, C: CutData, S: Subdivision | None = None) -> dict:
    S = S or subdivide(P, C)
    return {v: lattice_criterion_at(P, C, v) for v in S.test_vertices()}


@dataclass(frozen=True)
class LatticeVerdict:
    holds: bool
    base_is_delzant: bool
    rank_failures: tuple = ()
    lattice_failures: tuple = ()


def lattice_verdict(P: Polytope, C: CutData, S: Subdivision | None = None) -> LatticeVerdict:
    """Quasi-regularity decided through ranks and saturation only.

    Smoothness of the ambient polytope is part of the verdict: the lattice
    route reads smoothness of the pieces off the ambient lattice structure.
    """
    S = S or subdivide(P, C)
    base_ok = bool(is_delzant(P))
    ranks = check_rank_criterion(P, C, S)
    rank_fail = tuple(v for v, r in ranks.items() if not r.holds)
    lat_fail = tuple(v for v, r in ranks.items() if r.holds and not lattice_criterion_at(P, C, v))
    return LatticeVerdict(base_ok and not rank_fail and not lat_fail, base_ok, rank_fail, lat_fail)


# -- cocycles ------------------------------------------------------------------

def cobound(cocycle: Mapping) -> CutData:
    """A tuple (xi_i, eps_i) with (xi_ij, eps_ij) = (xi_j, eps_j) - (xi_i, eps_i).

    ``cocycle`` maps ordered pairs ``(i, j)`` (1-based) to ``(xi, eps)``.
    Missing reversed pairs are filled by antisymmetry. The result is normalized
    by (xi_1, eps_1) = (0, 0); any other coboundary differs by a constant shift.
    """
    table = {}
    for (i, j), (xi, eps) in cocycle.items():
        val = (lat.ivec(xi), lat.rat(eps))
        for key, entry in (((i, j), val), ((j, i), (tuple(-a for a in val[0]), -val[1]))):
            if key in table and table[key] != entry:
                raise NotACocycle((key[0], key[1], key[0]), f"antisymmetry fails for {key}")
            table[key] = entry
    if not table:
        raise ValueError("empty cocycle")
    idx = sorted({i for pair in table for i in pair})
    N = idx[-1]
    if idx != list(range(1, N + 1)):
        raise ValueError("cocycle indices must be 1..N")
    k = len(next(iter(table.values()))[0])
    zero = (tuple(0 for _ in range(k)), Fraction(0))
    for i in idx:
        if table.setdefault((i, i), zero) != zero:
            raise NotACocycle((i, i, i))
    for i, j in combinations(idx, 2):
        if (i, j) not in table:
            raise ValueError(f"cocycle has no entry for ({i}, {j})")
    for i in idx:
        for j in idx:
            for m in idx:
                a, b, c = table[i, j], table[j, m], table[i, m]
                if lat.add(a[0], b[0]) != c[0] or a[1] + b[1] != c[1]:
                    raise NotACocycle((i, j, m))
    return CutData(CutDatum(*table[1, j]) for j in idx)


def coboundary(C: CutData) -> dict:
    """The cocycle (xi_ij, eps_ij) = (xi_j, eps_j) - (xi_i, eps_i) of a tuple."""
    out = {}
    for i in range(1, C.N + 1):
        for j in range(1, C.N + 1):
            if i != j:
                di, dj = C.datum(i), C.datum(j)
                out[i, j] = (lat.sub(dj.xi, di.xi), dj.eps - di.eps)
    return out
