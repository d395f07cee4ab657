"""Smooth vertices and Delzant polytopes.

Smoothness is measured against the lattice of the polytope's own affine hull,
Z^k ∩ span(P - P), so lower-dimensional pieces get a well-defined answer.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import lattice as lat
from .polytope import Polytope, edges_at_vertex

EDGE_COUNT_MISMATCH = "EdgeCountMismatch"
NOT_Z_BASIS = "NotZBasis"
IRRATIONAL_SLOPE = "IrrationalSlope"  # unreachable with rational input


@dataclass(frozen=True)
class SmoothnessReport:
    vertex: tuple
    is_smooth: bool
    edge_directions: tuple
    failure_reason: str | None = None
    index: int | None = None  # index of the edge lattice in the hull lattice


@dataclass(frozen=True)
class DelzantReport:
    is_delzant: bool
    reports: tuple = field(default=())

    def __bool__(self):
        return self.is_delzant

    @property
    def failures(self):
        return [r for r in self.reports if not r.is_smooth]


def hull_lattice(P: Polytope) -> lat.Sublattice:
    if P.dim == 0:
        return lat.Sublattice((), P.ambient_rank)
    return lat.saturate(P.direction_space(), P.ambient_rank)


def is_smooth_vertex(P: Polytope, v, _hull=None) -> SmoothnessReport:
    v = lat.rvec(v)
    edges = edges_at_vertex(P, v)  # raises NotVertex
    dirs = tuple(e.direction for e in edges)
    if len(dirs) != P.dim:
        return SmoothnessReport(v, False, dirs, EDGE_COUNT_MISMATCH)
    if P.dim == 0:
        return SmoothnessReport(v, True, dirs, index=1)
    hull = _hull or hull_lattice(P)
    coeffs = [lat.solve_in_span(hull.basis, d) for d in dirs]
    index = abs(lat.det([[int(c) for c in row] for row in coeffs]))
    if index != 1:
        return SmoothnessReport(v, False, dirs, NOT_Z_BASIS, index)
    return SmoothnessReport(v, True, dirs, index=1)


def is_delzant(P: Polytope) -> DelzantReport:
    """Check every vertex; the report lists all of them, smooth or not."""
    hull = hull_lattice(P)
    reports = tuple(is_smooth_vertex(P, v, hull) for v in P.vertices)
    return DelzantReport(all(r.is_smooth for r in reports), reports)
