import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from momentcut.errors import Empty, NotContained, NotVertex, RankLimitExceeded, Unbounded
from momentcut.generators import random_delzant
from momentcut.polytope import (HalfSpace, Polytope, box, edges_at_vertex, intersect,
                                minimal_face)

SQUARE = box([0, 0], [1, 1])


def test_segment_from_halfspaces():
    P = Polytope.from_halfspaces([HalfSpace((1,), 0), HalfSpace((-1,), -1)])
    assert P.vertices == ((0,), (1,)) and P.dim == 1


def test_rectangle_from_halfspaces():
    P = box([-2, -1], [1, 1])
    assert set(P.vertices) == {(-2, -1), (-2, 1), (1, -1), (1, 1)}
    assert len(P.halfspaces) == 4


def test_unbounded():
    with pytest.raises(Unbounded):
        Polytope.from_halfspaces([HalfSpace((1,), 0)])


def test_empty():
    with pytest.raises(Empty):
        Polytope.from_halfspaces([HalfSpace((1,), 1), HalfSpace((-1,), 0)])


def test_redundant_halfspaces_removed():
    P = Polytope.from_halfspaces(list(SQUARE.halfspaces) + [HalfSpace((1, 1), -5)])
    assert len(P.halfspaces) == 4


def test_square_from_vertices():
    P = Polytope.from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert P == SQUARE and len(P.halfspaces) == 4


def test_hirzebruch_trapezoid_vertices():
    P = Polytope.from_vertices([(0, 0), (1, -1), (1, 3), (0, 3), (F(1, 2), 1)])
    assert set(P.vertices) == {(0, 0), (1, -1), (1, 3), (0, 3)}


def test_point():
    P = Polytope.from_vertices([(F(1, 3), 2)])
    assert P.dim == 0 and P.edges() == [] and P.halfspaces == ()
    assert P.contains((F(1, 3), 2)) and not P.contains((0, 2))


def test_lower_dimensional_segment_in_plane():
    P = Polytope.from_vertices([(0, 0), (2, 2)])
    assert P.dim == 1 and len(P.equations) == 1 and len(P.halfspaces) == 2
    assert P.contains((1, 1)) and not P.contains((1, 0))


@pytest.mark.parametrize("v,dim", [((F(1, 2), F(1, 2)), 2), ((0, 0), 0), ((F(1, 2), 0), 1)])
def test_minimal_face(v, dim):
    assert minimal_face(SQUARE, v).dim == dim


def test_minimal_face_bottom_edge():
    f = minimal_face(SQUARE, (F(1, 2), 0))
    assert set(f.vertices) == {(0, 0), (1, 0)}
    assert [SQUARE.halfspaces[i] for i in f.active] == [HalfSpace((0, 1), 0)]


def test_minimal_face_outside():
    with pytest.raises(NotContained):
        minimal_face(SQUARE, (2, 0))


def test_edges_at_square_corner():
    es = edges_at_vertex(SQUARE, (0, 0))
    assert {e.direction for e in es} == {(1, 0), (0, 1)}
    assert all(e.length == 1 for e in es)


def test_edges_at_triangle_corner():
    T = Polytope.from_vertices([(0, 0), (2, 0), (0, 2)])
    es = edges_at_vertex(T, (2, 0))
    assert {e.direction for e in es} == {(-1, 0), (-1, 1)}
    assert all(e.length == 2 for e in es)


def test_edges_at_segment_end():
    es = edges_at_vertex(box([0], [1]), (0,))
    assert [(e.direction, e.length) for e in es] == [((1,), 1)]


def test_edges_at_non_vertex():
    with pytest.raises(NotVertex):
        edges_at_vertex(SQUARE, (F(1, 2), 0))


def test_intersect_examples():
    left = intersect(SQUARE, [HalfSpace((-1, 0), 0)])
    assert left.dim == 1 and set(left.vertices) == {(0, 0), (0, 1)}
    assert intersect(SQUARE, [HalfSpace((-1, 0), 1)]) is None
    q = intersect(box([-2, -1], [1, 1]), [HalfSpace((1, 0), 0), HalfSpace((0, 1), 0)])
    assert q == SQUARE


def test_rank_cap(monkeypatch):
    monkeypatch.setenv("MOMENTCUT_MAX_RANK", "2")
    with pytest.raises(RankLimitExceeded):
        box([0, 0, 0], [1, 1, 1])


# -- properties ----------------------------------------------------------------

def _fixtures():
    rng = random.Random(7)
    out = [SQUARE, box([-2, -1], [1, 1]), box([0, 0, 0], [1, 2, 3]),
           Polytope.from_vertices([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]),
           Polytope.from_vertices([(0, 0, 0), (2, 2, 0), (0, 1, 1)])]
    out += [random_delzant(rng) for _ in range(20)]
    return out


@pytest.mark.parametrize("P", _fixtures(), ids=repr)
def test_round_trip_h_v(P):
    Q = Polytope.from_halfspaces(P.halfspaces, P.ambient_rank, equations=P.equations)
    assert Q == P
    assert Polytope.from_vertices(Q.vertices) == P
    for v in P.vertices:
        assert all(h.contains(v) for h in P.halfspaces)
    for i in range(len(P.halfspaces)):
        assert P.face({i}).dim == P.dim - 1


@pytest.mark.parametrize("P", _fixtures()[:2] + _fixtures()[5:], ids=repr)
def test_delzant_vertices_have_dim_many_edges(P):
    for v in P.vertices:
        assert len(edges_at_vertex(P, v)) == P.dim


coord = st.fractions(min_value=-2, max_value=2, max_denominator=4)


@settings(max_examples=60)
@given(st.lists(st.tuples(coord, coord), min_size=1, max_size=7), st.tuples(coord, coord))
def test_minimal_face_dim_zero_iff_vertex(pts, probe):
    P = Polytope.from_vertices(pts)
    for v in P.vertices:
        assert minimal_face(P, v).dim == 0
    for p in pts:
        assert (minimal_face(P, p).dim == 0) == (tuple(p) in P.vertices)


halfspace = st.builds(lambda a, b, c: HalfSpace((a, b), c),
                      st.integers(-2, 2), st.integers(-2, 2), coord).filter(lambda h: h is not None)


@settings(max_examples=60)
@given(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2)).filter(any), max_size=2),
       st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2)).filter(any), max_size=2),
       st.lists(coord, min_size=4, max_size=4))
def test_intersect_associative(n1, n2, offs):
    H1 = [HalfSpace(n, o) for n, o in zip(n1, offs)]
    H2 = [HalfSpace(n, o) for n, o in zip(n2, offs[2:])]
    P = box([-1, -1], [1, 1])
    once = intersect(P, H1 + H2)
    first = intersect(P, H1)
    twice = None if first is None else intersect(first, H2)
    assert once == twice
