"""Self-intersection data of smooth toric surfaces read off Delzant polygons.

For consecutive primitive inward normals u_prev, u, u_next (counterclockwise)
the edge with normal u has degree d where u_prev + u_next = -d * u.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import lattice as lat
from .cutconfig import Subdivision
from .delzant import is_delzant
from .errors import NotDelzant, NotDim2
from .polytope import Polytope


@dataclass(frozen=True)
class EdgeDegree:
    vertices: tuple  # the two endpoints of the edge
    normal: tuple  # primitive inward normal
    degree: int


def _half(u):
    x, y = u
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _ccw_sort(normals):
    """Sort 2D vectors by angle in [0, 2pi) without leaving exact arithmetic."""
    from functools import cmp_to_key

    def cmp(a, b):
        ha, hb = _half(a), _half(b)
        if ha != hb:
            return ha - hb
        cross = a[0] * b[1] - a[1] * b[0]
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    return sorted(normals, key=cmp_to_key(cmp))


def _require_delzant_polygon(P: Polytope):
    if P.ambient_rank != 2 or P.dim != 2:
        raise NotDim2("need a 2-dimensional polygon in rank 2")
    if not is_delzant(P):
        raise NotDelzant("polygon is not Delzant")


def cyclic_normals(P: Polytope) -> list:
    """Indices of P.halfspaces in counterclockwise order of their normals."""
    order = _ccw_sort([h.normal for h in P.halfspaces])
    pos = {h.normal: i for i, h in enumerate(P.halfspaces)}
    return [pos[n] for n in order]


def degrees_from_normals(normals) -> list[int]:
    """Degrees of a cyclic list of primitive normals of a smooth complete fan."""
    n = len(normals)
    out = []
    for i, u in enumerate(normals):
        s = lat.add(normals[i - 1], normals[(i + 1) % n])
        # s = -d u; pick a nonzero coordinate of u to read off d
        j = 0 if u[0] != 0 else 1
        d = -s[j] // u[j]
        if lat.scale(-d, u) != s:
            raise NotDelzant("consecutive normals violate the smooth fan relation")
        out.append(d)
    return out


def edge_self_intersections(P: Polytope) -> list[EdgeDegree]:
    _require_delzant_polygon(P)
    order = cyclic_normals(P)
    normals = [P.halfspaces[i].normal for i in order]
    degs = degrees_from_normals(normals)
    return [EdgeDegree(P.face({i}).vertices, P.halfspaces[i].normal, d)
            for i, d in zip(order, degs)]


@dataclass(frozen=True)
class SurfaceID:
    kind: str  # "P1xP1" | "Hirzebruch" | "BlowupCount" | "Unknown"
    vertex_count: int
    m: int | None = None  # Hirzebruch index
    blowups: int | None = None
    of: tuple = ()  # Hirzebruch indices reachable by toric blowdowns

    def is_hirzebruch(self, m: int) -> bool:
        if m == 0:
            return self.kind == "P1xP1"
        return self.kind == "Hirzebruch" and self.m == abs(m)

    def __str__(self):
        if self.kind == "P1xP1":
            return "P1xP1"
        if self.kind == "Hirzebruch":
            return f"Hirzebruch({self.m})"
        if self.kind == "BlowupCount":
            of = ",".join(f"F{m}" for m in self.of) or "?"
            return f"BlowupCount({self.blowups}, of {of})"
        return "Unknown"


def _hirzebruch_index(degs) -> int | None:
    if len(degs) != 4:
        return None
    # F_m has degrees (0, m, 0, -m) cyclically
    for s in range(2):
        a, b, c, d = degs[s:] + degs[:s]
        if a == 0 and c == 0 and b == -d:
            return abs(b)
    return None


def _blowdown_targets(normals) -> set:
    """Hirzebruch indices reachable by contracting (-1)-curves down to 4 rays."""
    seen, found = set(), set()
    stack = [tuple(normals)]
    while stack:
        ns = stack.pop()
        if ns in seen:
            continue
        seen.add(ns)
        degs = degrees_from_normals(list(ns))
        if len(ns) == 4:
            m = _hirzebruch_index(degs)
            if m is not None:
                found.add(m)
            continue
        if len(ns) < 4:
            continue
        for i, d in enumerate(degs):
            if d == -1:
                stack.append(ns[:i] + ns[i + 1:])
    return found


def identify_surface(P: Polytope) -> SurfaceID:
    _require_delzant_polygon(P)
    order = cyclic_normals(P)
    normals = [P.halfspaces[i].normal for i in order]
    degs = degrees_from_normals(normals)
    n = len(P.vertices)
    if n == 4:
        m = _hirzebruch_index(degs)
        if m == 0:
            return SurfaceID("P1xP1", 4, m=0)
        if m is not None:
            return SurfaceID("Hirzebruch", 4, m=m)
    elif n > 4:
        return SurfaceID("BlowupCount", n, blowups=n - 4, of=tuple(sorted(_blowdown_targets(normals))))
    return SurfaceID("Unknown", n)


@dataclass(frozen=True)
class DegreeEntry:
    between: tuple  # (i, j) for an internal edge, (i,) for a boundary edge of the polygon
    in_piece: int
    degree: int
    vertices: tuple


def divisor_degree_report(S: Subdivision) -> dict:
    """Degree of each internal wall edge inside each adjacent piece.

    Keys are ``((i, j), side)`` with ``i < j`` and ``side in (i, j)``. Pieces
    meeting only in a point contribute nothing.
    """
    return {(e.between, e.in_piece): e.degree for e in degree_entries(S) if len(e.between) == 2}


def degree_entries(S: Subdivision, boundary: bool = False) -> list[DegreeEntry]:
    """All per-piece edge degrees; boundary edges of the polygon included on request."""
    if S.ambient.ambient_rank != 2:
        raise NotDim2("degree reports need rank 2")
    per_piece = {}
    for i, piece in S.singles.items():
        if piece is None:
            continue
        per_piece[i] = {frozenset(e.vertices): e.degree for e in edge_self_intersections(piece)}
    out = []
    seen = set()
    for i, j in combinations(sorted(per_piece), 2):
        wall = S.piece(i, j)
        if wall is None or wall.dim != 1:
            continue
        key = frozenset(wall.vertices)
        for side in (i, j):
            out.append(DegreeEntry((i, j), side, per_piece[side][key], wall.vertices))
            seen.add((side, key))
    if boundary:
        for i, edges in sorted(per_piece.items()):
            for key, d in sorted(edges.items(), key=lambda t: sorted(t[0])):
                if (i, key) not in seen:
                    out.append(DegreeEntry((i,), i, d, tuple(sorted(key))))
    return out
