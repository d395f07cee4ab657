"""The worked examples: P^1 with one or two cuts, and the three-fold cut of P^1 x P^1."""
from fractions import Fraction

from .cutconfig import CutData
from .polytope import Polytope, box


def unit_interval() -> Polytope:
    return box([0], [1])


def p1_single_cut(m: int) -> tuple[Polytope, CutData]:
    """[0, 1] with xi = m, eps = 0; its lifts are Hirzebruch trapezoids."""
    return unit_interval(), CutData([((m,), 0)])


def p1_two_cut(m: int = 0) -> tuple[Polytope, CutData]:
    """[0, 1] with (xi, eps) = (m + 1, 1/2), (m, 0)."""
    return unit_interval(), CutData([((m + 1,), Fraction(1, 2)), ((m,), 0)])


def p1p1_three_cut() -> tuple[Polytope, CutData]:
    """[-2, 1] x [-1, 1] cut by xi = (0,0), (1,0), (0,1), all eps = 0."""
    return box([-2, -1], [1, 1]), CutData([((0, 0), 0), ((1, 0), 0), ((0, 1), 0)])


def hirzebruch_trapezoid(m: int, a) -> Polytope:
    return Polytope.from_vertices([(0, 0), (1, -m), (1, a), (0, a)])


def degenerate_square_cut() -> tuple[Polytope, CutData]:
    """Three cuts whose walls all pass through the left edge of the unit square."""
    return box([0, 0], [1, 1]), CutData([((0, 0), 0), ((1, 0), 0), ((2, 0), 0)])


def non_smooth_triangle() -> Polytope:
    """Edge directions (1, 0) and (1, 2) at the origin: determinant 2."""
    return Polytope.from_vertices([(0, 0), (1, 0), (1, 2)])
