import random

import pytest

from momentcut import lattice as lat
from momentcut.cutconfig import CutData, subdivide
from momentcut.errors import NotDelzant, NotDim2
from momentcut.fixtures import (hirzebruch_trapezoid, non_smooth_triangle, p1_two_cut,
                                p1p1_three_cut)
from momentcut.generators import random_delzant_polygon
from momentcut.polytope import Polytope, box
from momentcut.toric2d import (degree_entries, divisor_degree_report, edge_self_intersections,
                               identify_surface)


def _degrees(P):
    return sorted(e.degree for e in edge_self_intersections(P))


def test_square_degrees():
    assert _degrees(box([0, 0], [1, 1])) == [0, 0, 0, 0]


def test_triangle_degrees():
    assert _degrees(Polytope.from_vertices([(0, 0), (1, 0), (0, 1)])) == [1, 1, 1]


@pytest.mark.parametrize("m", range(4))
def test_hirzebruch(m):
    T = hirzebruch_trapezoid(m, m + 2)
    assert _degrees(T) == sorted([0, m, 0, -m])
    sid = identify_surface(T)
    assert sid.is_hirzebruch(m)
    assert str(sid) == ("P1xP1" if m == 0 else f"Hirzebruch({m})")


def test_p1p1_degree_report():
    S = subdivide(*p1p1_three_cut())
    assert divisor_degree_report(S) == {((1, 2), 1): 0, ((1, 3), 1): 0, ((1, 2), 2): -1,
                                        ((2, 3), 2): -1, ((1, 3), 3): -1, ((2, 3), 3): 0}


def test_p1p1_pieces_identified():
    S = subdivide(*p1p1_three_cut())
    assert identify_surface(S.piece(3)).is_hirzebruch(1)
    assert identify_surface(S.piece(1)).is_hirzebruch(0)
    sid = identify_surface(S.piece(2))
    assert sid.kind == "BlowupCount" and sid.blowups == 1 and set(sid.of) == {0, 1}


def test_boundary_entries():
    S = subdivide(box([0, 0], [1, 1]), CutData([((0, 0), 0)]))
    es = degree_entries(S, boundary=True)
    assert len(es) == 4 and all(e.between == (1,) and e.degree == 0 for e in es)


def test_rank_errors():
    with pytest.raises(NotDim2):
        degree_entries(subdivide(*p1_two_cut()))
    with pytest.raises(NotDelzant):
        edge_self_intersections(non_smooth_triangle())


def _unimodular(rng):
    while True:
        M = [[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)]
        if abs(lat.det(M)) == 1:
            return M


@pytest.mark.parametrize("seed", range(20))
def test_degrees_invariant_under_unimodular_maps(seed):
    rng = random.Random(seed)
    P = random_delzant_polygon(rng)
    Q = P.linear_image(_unimodular(rng)).translate((rng.randint(-3, 3), rng.randint(-3, 3)))
    assert _degrees(Q) == _degrees(P)
    assert str(identify_surface(Q)) == str(identify_surface(P))


@pytest.mark.parametrize("seed", range(20))
def test_degree_sum_formula(seed):
    # a smooth complete toric surface with n rays has degree sum 12 - 3n
    P = random_delzant_polygon(random.Random(seed))
    n = len(P.vertices)
    assert sum(_degrees(P)) == 12 - 3 * n
