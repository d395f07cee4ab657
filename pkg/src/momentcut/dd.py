"""Double description method over the rationals.

Converts a cone given by inequalities ``a . x >= 0`` into generators
(a lineality basis plus extreme rays). Polytope H->V and V->H conversion both
run through :func:`cone_generators` after homogenization.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .lattice import dot, primitive, rank


def cone_generators(constraints: Sequence[Sequence], dim: int):
    """Generators of {x in Q^dim : c . x >= 0 for every c in constraints}.

    Returns ``(lineality, rays)`` as lists of primitive integer vectors. Rays
    are the extreme rays of the cone modulo its lineality space.
    """
    lin = [tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)]
    rays: list[tuple] = []
    zeros: list[set] = []  # positions in `done` tight at each ray
    done: list[tuple] = []

    for c in constraints:
        c = tuple(Fraction(a) for a in c)
        if not any(c):
            continue
        j = len(done)
        k = next((i for i, l in enumerate(lin) if dot(c, l) != 0), None)
        if k is not None:
            pivot = lin[k]
            cp = dot(c, pivot)
            if cp < 0:
                pivot, cp = tuple(-a for a in pivot), -cp
            # shift everything else along the pivot onto the hyperplane c.x = 0
            lin = [tuple(a - dot(c, l) / cp * b for a, b in zip(l, pivot))
                   for i, l in enumerate(lin) if i != k]
            rays = [tuple(a - dot(c, r) / cp * b for a, b in zip(r, pivot)) for r in rays]
            zeros = [z | {j} for z in zeros]
            # a former lineality direction is tight on every earlier constraint
            rays.append(pivot)
            zeros.append(set(range(j)))
            done.append(c)
            continue

        vals = [dot(c, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zer = [i for i, v in enumerate(vals) if v == 0]
        new_rays = [rays[i] for i in pos + zer]
        new_zeros = [zeros[i] for i in pos] + [zeros[i] | {j} for i in zer]
        need = dim - len(lin) - 2
        for p in pos:
            for n in neg:
                common = zeros[p] & zeros[n]
                if rank([done[t] for t in common]) < need:
                    continue
                if any(common <= zeros[r] for r in range(len(rays)) if r != p and r != n):
                    continue
                vp, vn = vals[p], -vals[n]
                new_rays.append(tuple(vn * a + vp * b for a, b in zip(rays[p], rays[n])))
                new_zeros.append(common | {j})
        rays, zeros = new_rays, new_zeros
        done.append(c)

    lin_out = [primitive(l) for l in lin]
    seen, rays_out = set(), []
    for r in rays:
        if not any(r):
            continue
        pr = primitive(r)
        if pr not in seen:
            seen.add(pr)
            rays_out.append(pr)
    return lin_out, rays_out
