"""The lifted polytope between the graph of -min L_i and the level u = a.

For cutting data on a polytope P in rank k, the lift lives in rank k + 1 with
the new coordinate ``u`` last::

    {(eta, u) : eta in P, -min_i L_i(eta) <= u <= a}

Its lower boundary is made of one graph face per nonempty piece, its top face
is a copy of P, and its normal fan maps onto the fan of P^1 by the last
coordinate.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import lattice as lat
from .cutconfig import CutData, eval_L, min_L, subdivide
from .delzant import is_delzant
from .errors import BoundViolated, DimensionMismatch, NotDelzant
from .polytope import Face, HalfSpace, Polytope, affine_dim


def min_a_bound(P: Polytope, C: CutData) -> Fraction:
    """-min over P of min_i L_i; an affine minimum is attained at a vertex."""
    return -min(min_L(C, v) for v in P.vertices)


def critical_values(P: Polytope, C: CutData) -> set:
    """Heights of the lower-boundary vertices of the lift.

    A top level equal to one of these would make the top face touch the
    graph. All of them are <= :func:`min_a_bound`, so an admissible ``a`` is
    never critical; the set is kept as an explicit check.
    """
    S = subdivide(P, C)
    return {-min_L(C, v) for v in S.test_vertices()}


@dataclass(frozen=True)
class LiftedPolytope:
    polytope: Polytope
    a: Fraction
    base: Polytope
    cuts: CutData
    piece_faces: dict  # cut index -> Face, or None for an empty piece
    top_face: Face


def _face_of(Q: Polytope, pred) -> Face | None:
    idx = [i for i, w in enumerate(Q.vertices) if pred(w)]
    if not idx:
        return None
    active = frozenset.intersection(*(Q._incidence[i] for i in idx))
    f = Q.face(active)
    if len(f.vertices) != len(idx):  # the predicate cut out something that is not a face
        vs = tuple(Q.vertices[i] for i in idx)
        return Face(active, vs, affine_dim(vs))
    return f


def lift(P: Polytope, C: CutData, a) -> LiftedPolytope:
    a = lat.rat(a)
    if P.ambient_rank != C.rank:
        raise DimensionMismatch("polytope and cut data have different ranks")
    bound = min_a_bound(P, C)
    if a <= bound:
        raise BoundViolated(a, bound)
    k = P.ambient_rank
    hs = [HalfSpace(h.normal + (0,), h.offset) for h in P.halfspaces]
    hs += [HalfSpace(d.xi + (1,), d.eps) for d in C]
    hs.append(HalfSpace((0,) * k + (-1,), -a))
    eqs = [(n + (0,), b) for n, b in P.equations]
    Q = Polytope.from_halfspaces(hs, k + 1, equations=eqs)

    S = subdivide(P, C)
    faces = {}
    for i in range(1, C.N + 1):
        d = C.datum(i)
        f = _face_of(Q, lambda w, d=d: w[k] + eval_L(d, w[:k]) == 0)
        faces[i] = f
        shadow = None if f is None else Polytope.from_vertices([w[:k] for w in f.vertices], k)
        if shadow != S.singles[i]:
            raise RuntimeError(f"graph face {i} does not project onto its piece")
    top = _face_of(Q, lambda w: w[k] == a)
    if Q.project(range(k)) != P:
        raise RuntimeError("lift does not project onto the base polytope")
    return LiftedPolytope(Q, a, P, C, faces, top)


@dataclass(frozen=True)
class Fan:
    rays: tuple
    maximal_cones: tuple  # tuples of ray indices

    def to_json(self) -> dict:
        return {"rays": [list(r) for r in self.rays], "cones": [list(c) for c in self.maximal_cones]}

    @classmethod
    def from_json(cls, obj) -> "Fan":
        return cls(tuple(lat.ivec(r) for r in obj["rays"]),
                   tuple(tuple(int(i) for i in c) for c in obj["cones"]))

    def is_smooth(self) -> bool:
        return all(len(c) == len(self.rays[0]) and lat.is_z_basis([self.rays[i] for i in c])
                   for c in self.maximal_cones)


def normal_fan(P: Polytope) -> Fan:
    """Inward facet normals as rays; one maximal cone per vertex."""
    if not P.is_full_dimensional:
        raise NotDelzant("normal fan needs a full-dimensional polytope")
    if not is_delzant(P):
        raise NotDelzant("polytope is not Delzant")
    rays = tuple(h.normal for h in P.halfspaces)
    cones = tuple(tuple(sorted(z)) for z in P._incidence)
    return Fan(rays, cones)


@dataclass(frozen=True)
class FibrationReport:
    compatible: bool
    cone_images: dict  # cone -> ">=0" | "<=0" | "0" | "mixed"


def fan_projection(fan: Fan) -> FibrationReport:
    """Where each maximal cone lands under the last-coordinate projection."""
    images = {}
    for cone in fan.maximal_cones:
        last = [fan.rays[i][-1] for i in cone]
        if all(x == 0 for x in last):
            images[cone] = "0"
        elif all(x >= 0 for x in last):
            images[cone] = ">=0"
        elif all(x <= 0 for x in last):
            images[cone] = "<=0"
        else:
            images[cone] = "mixed"
    return FibrationReport(all(v != "mixed" for v in images.values()), images)


def check_fibration(L: LiftedPolytope) -> FibrationReport:
    return fan_projection(normal_fan(L.polytope))
