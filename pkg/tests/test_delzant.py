import random
from fractions import Fraction

import pytest

from momentcut import lattice as lat
from momentcut.delzant import NOT_Z_BASIS, is_delzant, is_smooth_vertex
from momentcut.errors import NotVertex
from momentcut.fixtures import hirzebruch_trapezoid, non_smooth_triangle
from momentcut.generators import random_delzant
from momentcut.polytope import Polytope, box, edges_at_vertex

from oracles import leibniz_det


def test_square_corner_smooth():
    assert is_smooth_vertex(box([0, 0], [1, 1]), (0, 0)).is_smooth


def test_scaled_simplex_smooth_everywhere():
    T = Polytope.from_vertices([(0, 0), (2, 0), (0, 2)])
    reps = is_delzant(T).reports
    assert all(r.is_smooth for r in reps) and len(reps) == 3


def test_non_smooth_fixture_matches_determinant_oracle():
    T = non_smooth_triangle()
    dirs = [e.direction for e in edges_at_vertex(T, (0, 0))]
    assert abs(leibniz_det(dirs)) == 2
    r = is_smooth_vertex(T, (0, 0))
    assert not r.is_smooth and r.failure_reason == NOT_Z_BASIS and r.index == 2
    rep = is_delzant(T)
    assert not rep and [f.vertex for f in rep.failures] == [(0, 0)]
    # the report covers every vertex, not just the first failure
    assert len(rep.reports) == 3


def test_non_vertex():
    with pytest.raises(NotVertex):
        is_smooth_vertex(box([0, 0], [1, 1]), (0, Fraction(1, 2)))


def test_hirzebruch_trapezoid_delzant():
    assert is_delzant(hirzebruch_trapezoid(1, 2))


def test_segment_and_point():
    assert is_delzant(box([0], [3]))
    assert is_delzant(Polytope.from_vertices([(0, 0), (2, 4)]))  # hull lattice is Z(1, 2)


def test_lower_dimensional_hull_relative():
    # a triangle in the plane z = 0 of rank 3; smooth relative to its own lattice
    T = Polytope.from_vertices([(0, 0, 0), (1, 0, 0), (0, 1, 0)])
    assert is_delzant(T)
    # same shape sheared so the edge lattice has index 2 in the hull lattice
    T2 = Polytope.from_vertices([(0, 0, 0), (1, 0, 0), (1, 2, 0)])
    assert not is_delzant(T2)


def _random_unimodular(rng):
    while True:
        M = [[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)]
        if abs(lat.det(M)) == 1:
            return M


@pytest.mark.parametrize("seed", range(15))
def test_invariance_under_unimodular_maps_and_translations(seed):
    rng = random.Random(seed)
    P = random_delzant(rng)
    if P.ambient_rank != 2:
        P = Polytope.from_vertices([(0, 0), (2, 0), (0, 1), (1, 1)])
    candidates = [P, non_smooth_triangle()]
    for Q in candidates:
        U = _random_unimodular(rng)
        t = (rng.randint(-3, 3), rng.randint(-3, 3))
        moved = Q.linear_image(U).translate(t)
        assert bool(is_delzant(moved)) == bool(is_delzant(Q))


@pytest.mark.parametrize("seed", range(10))
def test_corner_unimodularity_for_polygons(seed):
    P = random_delzant(random.Random(100 + seed))
    if P.dim != 2:
        return
    assert is_delzant(P)
    for v in P.vertices:
        dirs = [e.direction for e in edges_at_vertex(P, v)]
        assert abs(leibniz_det(dirs)) == 1
