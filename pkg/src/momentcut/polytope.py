"""Compact rational polytopes with paired H- and V-representations.

A :class:`Polytope` always carries its vertices, its affine hull (as a list of
equations) and an irredundant list of facet inequalities relative to that
hull. Lower-dimensional polytopes are first-class: pieces of a subdivision are
often segments or points.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from . import lattice as lat
from .dd import cone_generators
from .errors import Empty, NotContained, NotVertex, RankLimitExceeded, Unbounded, ZeroVector


def max_rank() -> int:
    return int(os.environ.get("MOMENTCUT_MAX_RANK", "8"))


def _check_rank(k: int):
    if k > max_rank():
        raise RankLimitExceeded(f"ambient rank {k} exceeds MOMENTCUT_MAX_RANK={max_rank()}")


@dataclass(frozen=True)
class HalfSpace:
    """The set {eta : <eta, normal> >= offset}; the normal is kept primitive."""

    normal: tuple
    offset: Fraction

    def __post_init__(self):
        n = lat.ivec(self.normal)
        if not any(n):
            raise ZeroVector("halfspace normal must be nonzero")
        g = lat.vgcd(n)
        object.__setattr__(self, "normal", tuple(a // g for a in n))
        object.__setattr__(self, "offset", lat.rat(self.offset) / g)

    def value(self, eta) -> Fraction:
        return lat.dot(self.normal, eta) - self.offset

    def contains(self, eta) -> bool:
        return self.value(eta) >= 0

    def tight(self, eta) -> bool:
        return self.value(eta) == 0

    @classmethod
    def from_rational(cls, normal, offset) -> "HalfSpace":
        """Build from a rational normal by clearing denominators."""
        normal = [Fraction(a) for a in normal]
        p = lat.primitive(normal)
        # p = s * normal for some s > 0
        i = next(i for i, a in enumerate(normal) if a != 0)
        s = Fraction(p[i]) / normal[i]
        return cls(p, Fraction(offset) * s)


@dataclass(frozen=True)
class Face:
    active: frozenset  # indices into Polytope.halfspaces
    vertices: tuple
    dim: int


@dataclass(frozen=True)
class EdgeAtVertex:
    direction: tuple  # primitive, pointing away from the vertex
    length: Fraction  # other_vertex = vertex + length * direction
    other_vertex: tuple


def affine_dim(points: Sequence[Sequence]) -> int:
    if not points:
        return -1
    p0 = points[0]
    return lat.rank([lat.sub(p, p0) for p in points[1:]])


class Polytope:
    """Immutable compact rational polytope. Build with the ``from_*`` helpers."""

    __slots__ = ("ambient_rank", "vertices", "halfspaces", "equations", "dim", "_incidence")

    def __init__(self, ambient_rank, vertices, halfspaces, equations, dim):
        self.ambient_rank = ambient_rank
        self.vertices = vertices
        self.halfspaces = halfspaces
        self.equations = equations  # tuple of (normal IntVector, offset Rat): <eta, n> = offset
        self.dim = dim
        self._incidence = tuple(
            frozenset(i for i, h in enumerate(halfspaces) if h.tight(v)) for v in vertices
        )

    # -- construction -----------------------------------------------------

    @classmethod
    def from_vertices(cls, points: Iterable[Sequence], rank: int | None = None) -> "Polytope":
        pts = sorted({lat.rvec(p) for p in points})
        if not pts:
            raise Empty("no points given")
        k = len(pts[0]) if rank is None else rank
        _check_rank(k)
        if any(len(p) != k for p in pts):
            raise lat.RankMismatch("points of differing dimension")
        d = affine_dim(pts)
        # dual cone of cone{(v, 1)}: y = (n, -b) with <n, v> >= b for all v
        lin, rays = cone_generators([tuple(p) + (Fraction(1),) for p in pts], k + 1)
        eqs = _canonical_equations(lin, k)
        if d == 0:
            verts = (pts[0],)
            return cls(k, verts, (), eqs, 0)
        eq_normals = [e[0] for e in eqs]
        hs = []
        for r in rays:
            n, b = r[:k], -Fraction(r[k])
            if eq_normals:
                n = _project_out(n, eq_normals)
            if not any(n):
                continue  # the trivial inequality 1 >= 0
            h = HalfSpace.from_rational(n, 0)
            off = min(lat.dot(h.normal, p) for p in pts)
            hs.append(HalfSpace(h.normal, off))
        hs = sorted(set(hs), key=lambda h: (h.normal, h.offset))
        verts = [p for p in pts if _is_vertex(p, pts, hs, d)]
        return cls(k, tuple(verts), tuple(hs), eqs, d)

    @classmethod
    def from_halfspaces(cls, halfspaces: Sequence[HalfSpace], rank: int | None = None,
                        equations: Sequence = ()) -> "Polytope":
        """Exact vertex enumeration of a bounded intersection of halfspaces.

        ``equations`` are optional ``(normal, offset)`` affine equalities.
        Raises :class:`Unbounded` or :class:`Empty`.
        """
        if not halfspaces and not equations:
            raise Unbounded("no constraints")
        if rank is not None:
            k = rank
        elif halfspaces:
            k = len(halfspaces[0].normal)
        else:
            k = len(equations[0][0])
        _check_rank(k)
        cons = []
        for h in halfspaces:
            cons.append(tuple(Fraction(a) for a in h.normal) + (-Fraction(h.offset),))
        for n, b in equations:
            row = tuple(Fraction(a) for a in n) + (-Fraction(b),)
            cons.append(row)
            cons.append(tuple(-a for a in row))
        cons.append(tuple(Fraction(0) for _ in range(k)) + (Fraction(1),))
        lin, rays = cone_generators(cons, k + 1)
        pts = [tuple(Fraction(a) / r[k] for a in r[:k]) for r in rays if r[k] > 0]
        if not pts:
            raise Empty("halfspaces have empty intersection")
        if lin or any(r[k] == 0 for r in rays):
            raise Unbounded("feasible set has a nontrivial recession cone")
        return cls.from_vertices(pts, k)

    # -- basic queries ----------------------------------------------------

    def __repr__(self):
        vs = ", ".join("(" + ",".join(lat.rat_str(a) for a in v) + ")" for v in self.vertices)
        return f"Polytope(dim={self.dim}, vertices=[{vs}])"

    def __eq__(self, other):
        if not isinstance(other, Polytope):
            return NotImplemented
        return self.ambient_rank == other.ambient_rank and self.vertices == other.vertices

    def __hash__(self):
        return hash((self.ambient_rank, self.vertices))

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_rank

    def contains(self, eta) -> bool:
        eta = lat.rvec(eta)
        if len(eta) != self.ambient_rank:
            raise lat.RankMismatch("point has wrong length")
        return (all(lat.dot(n, eta) == b for n, b in self.equations)
                and all(h.contains(eta) for h in self.halfspaces))

    def tight_set(self, eta) -> frozenset:
        return frozenset(i for i, h in enumerate(self.halfspaces) if h.tight(eta))

    def vertex_index(self, v) -> int:
        v = lat.rvec(v)
        try:
            return self.vertices.index(v)
        except ValueError:
            raise NotVertex(f"{v} is not a vertex") from None

    def face(self, active: Iterable[int]) -> Face:
        active = frozenset(active)
        vs = tuple(v for v, z in zip(self.vertices, self._incidence) if active <= z)
        return Face(active, vs, affine_dim(vs))

    def direction_space(self) -> list:
        """Integer basis of the linear span of P - P."""
        v0 = self.vertices[0]
        diffs = [lat.sub(v, v0) for v in self.vertices[1:]]
        red, _ = lat.rref(diffs)
        return [lat.primitive(r) for r in red]

    def facets(self) -> list[Face]:
        return [self.face({i}) for i in range(len(self.halfspaces))]

    def edges(self) -> list[tuple[int, int]]:
        """Vertex index pairs spanning the 1-dimensional faces."""
        if self.dim < 1:
            return []
        if self.dim == 1:
            return [(0, 1)]
        out = []
        for i, j in combinations(range(len(self.vertices)), 2):
            common = self._incidence[i] & self._incidence[j]
            f = self.face(common)
            if f.dim == 1 and len(f.vertices) == 2:
                out.append((i, j))
        return out

    def project(self, coords: Sequence[int]) -> "Polytope":
        return Polytope.from_vertices([tuple(v[c] for c in coords) for v in self.vertices])

    def translate(self, t) -> "Polytope":
        return Polytope.from_vertices([lat.add(v, t) for v in self.vertices], self.ambient_rank)

    def linear_image(self, M) -> "Polytope":
        """Image under eta -> M eta for a square integer matrix M (rows)."""
        return Polytope.from_vertices(
            [tuple(lat.dot(row, v) for row in M) for v in self.vertices], self.ambient_rank)

    def interior_point(self):
        """Vertex barycenter; lies in the relative interior."""
        n = len(self.vertices)
        return tuple(sum(v[c] for v in self.vertices) / n for c in range(self.ambient_rank))


def _canonical_equations(lin, k):
    if not lin:
        return ()
    red, _ = lat.rref(lin)
    eqs = []
    for row in red:
        p = lat.primitive(row)
        n, b = p[:k], -Fraction(p[k])
        s = next(a for a in n if a != 0)
        if s < 0:
            n, b = tuple(-a for a in n), -b
        eqs.append((n, b))
    return tuple(eqs)


def _project_out(n, eq_normals):
    """Orthogonal projection of n onto the complement of span(eq_normals)."""
    E = [tuple(Fraction(a) for a in e) for e in eq_normals]
    G = [[lat.dot(a, b) for b in E] for a in E]
    rhs = [lat.dot(a, n) for a in E]
    aug = [G[i] + [rhs[i]] for i in range(len(E))]
    red, piv = lat.rref(aug)
    c = [Fraction(0)] * len(E)
    for row, p in zip(red, piv):
        c[p] = row[-1]
    out = list(Fraction(a) for a in n)
    for ci, e in zip(c, E):
        out = [a - ci * b for a, b in zip(out, e)]
    return tuple(out)


def _is_vertex(p, pts, hs, d):
    tight = [h.normal for h in hs if h.tight(p)]
    return lat.rank(tight) == d


def minimal_face(P: Polytope, v) -> Face:
    """The smallest face of P containing v (all halfspaces tight at v)."""
    v = lat.rvec(v)
    if not P.contains(v):
        raise NotContained(f"{v} is not in the polytope")
    return P.face(P.tight_set(v))


def edges_at_vertex(P: Polytope, v) -> list[EdgeAtVertex]:
    i = P.vertex_index(v)
    out = []
    for a, b in P.edges():
        if i not in (a, b):
            continue
        w = P.vertices[b if a == i else a]
        d = lat.sub(w, P.vertices[i])
        u = lat.primitive(d)
        j = next(c for c, x in enumerate(u) if x != 0)
        out.append(EdgeAtVertex(u, d[j] / u[j], w))
    return sorted(out, key=lambda e: e.direction)


def intersect(P: Polytope, extra: Sequence[HalfSpace]) -> Polytope | None:
    """P cut by extra halfspaces; ``None`` when the result is empty."""
    try:
        return Polytope.from_halfspaces(list(P.halfspaces) + list(extra), P.ambient_rank,
                                        equations=P.equations)
    except Empty:
        return None


def meet(P: Polytope, Q: Polytope) -> Polytope | None:
    """P ∩ Q, or ``None`` when disjoint."""
    try:
        return Polytope.from_halfspaces(list(P.halfspaces) + list(Q.halfspaces), P.ambient_rank,
                                        equations=list(P.equations) + list(Q.equations))
    except Empty:
        return None


def box(lo: Sequence, hi: Sequence) -> Polytope:
    """Axis-parallel box [lo_1, hi_1] x ... x [lo_k, hi_k]."""
    k = len(lo)
    hs = []
    for c in range(k):
        e = tuple(int(i == c) for i in range(k))
        hs.append(HalfSpace(e, lat.rat(lo[c])))
        hs.append(HalfSpace(tuple(-a for a in e), -lat.rat(hi[c])))
    return Polytope.from_halfspaces(hs, k)
