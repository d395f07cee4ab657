"""Seeded random instances: small Delzant polytopes and cut data."""
from __future__ import annotations

import random
from fractions import Fraction

from . import lattice as lat
from .cutconfig import CutData, CutDatum
from .polytope import Polytope, edges_at_vertex

# GL(2, Z) elements with small entries, used to move base polygons around
_MOVES = [((1, 0), (0, 1)), ((0, -1), (1, 0)), ((-1, 0), (0, -1)), ((0, 1), (-1, 0)),
          ((1, 1), (0, 1)), ((1, 0), (1, 1)), ((1, -1), (0, 1)), ((0, 1), (1, 0))]


def _rand_frac(rng: random.Random, lo, hi, dens=(1, 2, 3, 4)) -> Fraction:
    q = rng.choice(dens)
    return Fraction(rng.randint(int(lo * q), int(hi * q)), q)


def chop_corner(P: Polytope, v, delta) -> Polytope:
    """Toric blowup: cut the corner at v at lattice distance delta along both edges."""
    edges = edges_at_vertex(P, v)
    if any(delta >= e.length for e in edges):
        raise ValueError("chop too deep")
    pts = [w for w in P.vertices if w != v]
    pts += [lat.add(v, lat.scale(delta, e.direction)) for e in edges]
    return Polytope.from_vertices(pts, P.ambient_rank)


def random_delzant_polygon(rng: random.Random) -> Polytope:
    kind = rng.choice(["box", "triangle", "hirzebruch"])
    s = rng.randint(1, 3)
    t = rng.randint(1, 3)
    if kind == "box":
        pts = [(0, 0), (s, 0), (0, t), (s, t)]
    elif kind == "triangle":
        pts = [(0, 0), (s, 0), (0, s)]
    else:
        m = rng.randint(1, 2)
        # trapezoid of F_m: bottom length t + m*s, top length t, height s
        pts = [(0, 0), (t + m * s, 0), (t, s), (0, s)]
    P = Polytope.from_vertices(pts)
    for _ in range(rng.randint(0, 2)):
        v = rng.choice(P.vertices)
        short = min(e.length for e in edges_at_vertex(P, v))
        P = chop_corner(P, v, short * rng.choice([Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]))
    M = rng.choice(_MOVES)
    shift = (rng.randint(-2, 0), rng.randint(-2, 0))
    return Polytope.from_vertices(
        [lat.add(tuple(lat.dot(r, v) for r in M), shift) for v in P.vertices])


def random_segment(rng: random.Random) -> Polytope:
    a = _rand_frac(rng, -2, 1)
    b = a + Fraction(rng.randint(1, 6), 2)
    return Polytope.from_vertices([(a,), (b,)])


def random_delzant(rng: random.Random, max_rank: int = 2) -> Polytope:
    if max_rank >= 2 and rng.random() < 0.75:
        return random_delzant_polygon(rng)
    return random_segment(rng)


def random_cuts(rng: random.Random, rank: int, max_n: int = 3, bound: int = 3) -> CutData:
    N = rng.randint(1, max_n)
    return CutData(
        CutDatum(tuple(rng.randint(-bound, bound) for _ in range(rank)), _rand_frac(rng, -bound, bound))
        for _ in range(N))


def random_instance(rng: random.Random, max_rank: int = 2, max_n: int = 3):
    P = random_delzant(rng, max_rank)
    return P, random_cuts(rng, P.ambient_rank, max_n)
