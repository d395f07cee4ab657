from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from momentcut import lattice as lat
from momentcut.errors import NotIndependent, RankMismatch, ZeroVector

from oracles import in_integer_span_bruteforce, is_saturated_bruteforce, leibniz_det, parallelepiped_points

entries = st.integers(-4, 4)


def int_matrix(rows, cols):
    return st.lists(st.lists(entries, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


# -- rat parsing ---------------------------------------------------------------

def test_rat_parsing():
    assert lat.rat("3/6") == Fraction(1, 2)
    assert lat.rat("-4") == -4
    assert lat.rat(7) == 7
    with pytest.raises(ZeroDivisionError):
        lat.rat("1/0")
    with pytest.raises(TypeError):
        lat.rat(0.5)


def test_rat_str_lowest_terms():
    assert lat.rat_str(Fraction(6, -4)) == "-3/2"
    assert lat.rat_str(Fraction(4, 2)) == "2"


# -- hnf -----------------------------------------------------------------------

def test_hnf_identity():
    H, U = lat.hnf([[1, 0], [0, 1]])
    assert H == ((1, 0), (0, 1)) and U == ((1, 0), (0, 1))


def test_hnf_already_reduced():
    H, U = lat.hnf([[2, 0], [0, 3]])
    assert H == ((2, 0), (0, 3)) and U == ((1, 0), (0, 1))


def test_hnf_row_lattice_matches_bruteforce():
    M = [[2, 4], [1, 3]]
    H, U = lat.hnf(M)
    for row in M:
        assert in_integer_span_bruteforce(row, H)
    for row in H:
        assert in_integer_span_bruteforce(row, M)
    assert H == ((1, 1), (0, 2))


def _is_hnf(H):
    last_pivot = -1
    seen_zero = False
    for i, row in enumerate(H):
        nz = [j for j, a in enumerate(row) if a != 0]
        if not nz:
            seen_zero = True
            continue
        assert not seen_zero, "zero rows must be at the bottom"
        p = nz[0]
        assert p > last_pivot and row[p] > 0
        for k in range(i):
            assert 0 <= H[k][p] < row[p]
        last_pivot = p


@given(st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(lambda n: int_matrix(m, n))))
def test_hnf_properties(M):
    H, U = lat.hnf(M)
    assert abs(leibniz_det(U)) == 1
    assert [list(r) for r in H] == matmul(U, M)
    _is_hnf(H)


# -- primitivity ---------------------------------------------------------------

@pytest.mark.parametrize("v,expected", [((1, 0), True), ((2, 4), False), ((3, 5), True)])
def test_is_primitive(v, expected):
    assert lat.is_primitive(v) is expected


def test_is_primitive_zero():
    with pytest.raises(ZeroVector):
        lat.is_primitive((0, 0))


@given(st.lists(entries, min_size=1, max_size=3).filter(any))
def test_primitive_iff_saturation_is_itself(v):
    sat = lat.saturate([v])
    assert lat.is_primitive(v) == (sat.basis in ((tuple(v),), (tuple(-a for a in v),)))


# -- saturation ----------------------------------------------------------------

def test_saturate_examples():
    assert lat.saturate([(2, 0)]).basis == ((1, 0),)
    assert lat.saturate([(2, 0)]).index == 2
    assert lat.saturate([], ambient_rank=3).basis == ()
    s = lat.saturate([(2, 2), (0, 4)])
    assert s == lat.Sublattice(((1, 0), (0, 1)), 2)
    assert s.index == len(parallelepiped_points([(2, 2), (0, 4)])) == 8


@given(st.integers(1, 3).flatmap(lambda k: st.lists(st.lists(entries, min_size=k, max_size=k),
                                                     min_size=0, max_size=k)))
def test_saturate_idempotent_and_index(vs):
    k = len(vs[0]) if vs else 2
    s = lat.saturate(vs, k)
    assert lat.saturate(s.basis, k) == s
    assert lat.saturate(s.basis, k).index == 1
    for v in vs:
        assert s.contains(v)
    if vs and lat.rank(vs) == len(vs):
        assert s.index == len(parallelepiped_points(vs))


# -- Z-bases -------------------------------------------------------------------

@pytest.mark.parametrize("vs,expected", [
    ([(1, 0), (0, 1)], True),
    ([(1, 0), (0, 2)], False),
    ([(2, 1), (1, 1)], True),
])
def test_is_z_basis(vs, expected):
    assert lat.is_z_basis(vs) is expected


def test_is_z_basis_count():
    with pytest.raises(RankMismatch):
        lat.is_z_basis([(1, 0)])


@given(int_matrix(3, 3))
def test_det_matches_leibniz(M):
    assert lat.det(M) == leibniz_det(M)


# -- direct sum vs saturation --------------------------------------------------

def test_direct_sum_examples():
    assert lat.direct_sum_equals_saturation(lat.Sublattice(((1, 0),), 2), [(0, 1)])
    assert not lat.direct_sum_equals_saturation(lat.Sublattice((), 2), [(1, 1), (1, -1)])
    assert lat.direct_sum_equals_saturation(lat.Sublattice(((1, 0, 0),), 3), [(0, 1, 0)])


def test_direct_sum_dependent():
    with pytest.raises(NotIndependent):
        lat.direct_sum_equals_saturation(lat.Sublattice(((1, 0),), 2), [(2, 0)])


@settings(max_examples=300)
@given(st.integers(1, 3).flatmap(
    lambda k: st.tuples(st.just(k), st.integers(0, k), st.lists(st.lists(entries, min_size=k, max_size=k),
                                                                   min_size=1, max_size=k))))
def test_direct_sum_agrees_with_parallelepiped(args):
    k, split, vs = args
    if lat.rank(vs) != len(vs):
        return
    split = min(split, len(vs))
    a = lat.Sublattice(tuple(vs[:split]), k)
    assert lat.direct_sum_equals_saturation(a, vs[split:]) == is_saturated_bruteforce(vs)


# -- Smith invariants ----------------------------------------------------------

def test_smith_diagonal():
    assert lat.smith_diagonal([[2, 0], [0, 3]]) == [1, 6]
    assert lat.smith_diagonal([[2, 2], [0, 4]]) == [2, 4]
