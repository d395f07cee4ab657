"""Exact lattice-polytope toolkit for multifold symplectic cuts of toric manifolds."""

__version__ = "0.1.0"
