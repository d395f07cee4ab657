"""Recompute the worked examples and write their figures.

    python scripts/reproduce_examples.py --out figures/
"""
from __future__ import annotations

import argparse
import warnings
from dataclasses import dataclass
from pathlib import Path

from momentcut import lattice as lat
from momentcut.cutconfig import is_quasi_regular, lattice_verdict, subdivide
from momentcut.degeneration import check_fibration, lift, min_a_bound
from momentcut.delzant import is_delzant
from momentcut.fixtures import p1_single_cut, p1_two_cut, p1p1_three_cut
from momentcut.svg import lifted_svg, subdivision_svg
from momentcut.toric2d import divisor_degree_report, identify_surface


@dataclass
class Config:
    out: Path = Path("figures")
    max_m: int = 3


def fmt(v):
    return "(" + ", ".join(lat.rat_str(a) for a in v) + ")"


def hirzebruch_table(cfg: Config):
    print("single cut on [0,1], a = m + 2")
    print(f"  {'m':>2}  {'vertices':<40} surface")
    for m in range(cfg.max_m + 1):
        L = lift(*p1_single_cut(m), m + 2)
        vs = " ".join(fmt(v) for v in L.polytope.vertices)
        print(f"  {m:>2}  {vs:<40} {identify_surface(L.polytope)}")
        (cfg.out / f"hirzebruch_{m}.svg").write_text(lifted_svg(L.polytope, m + 2))


def two_cut(cfg: Config):
    P, C = p1_two_cut()
    S = subdivide(P, C)
    L = lift(P, C, 2)
    print("\ntwo cuts on [0,1], a = 2")
    print("  lifted vertices:", " ".join(fmt(v) for v in L.polytope.vertices))
    print(f"  Delzant: {bool(is_delzant(L.polytope))}, fibred: {check_fibration(L).compatible}, "
          f"surface: {identify_surface(L.polytope)}")
    (cfg.out / "two_cut_subdivision.svg").write_text(subdivision_svg(S))
    (cfg.out / "two_cut_lift.svg").write_text(lifted_svg(L.polytope, 2))


def p1p1(cfg: Config):
    P, C = p1p1_three_cut()
    S = subdivide(P, C)
    print("\nthree cuts on [-2,1] x [-1,1]")
    for I, p in sorted(S.nonempty().items(), key=lambda t: (len(t[0]), sorted(t[0]))):
        name = "".join(map(str, sorted(I)))
        print(f"  piece {name:<4} dim {p.dim}  " + " ".join(fmt(v) for v in p.vertices))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        q = is_quasi_regular(P, C, S)
    print(f"  quasi-regular: {bool(q)} (lattice route: {lattice_verdict(P, C, S).holds})")
    print("  edge degrees (edge, piece): degree")
    for ((i, j), side), d in sorted(divisor_degree_report(S).items()):
        print(f"    ({i}{j}, {side}): {d}")
    for i in (1, 2, 3):
        print(f"  piece {i}: {identify_surface(S.piece(i))}")
    a = min_a_bound(P, C) + 1
    L = lift(P, C, a)
    print(f"  lift at a = {lat.rat_str(a)}: {len(L.polytope.vertices)} vertices, "
          f"Delzant {bool(is_delzant(L.polytope))}, fibred {check_fibration(L).compatible}")
    (cfg.out / "p1p1_subdivision.svg").write_text(subdivision_svg(S))
    (cfg.out / "p1p1_lift.svg").write_text(lifted_svg(L.polytope, a))


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out", type=Path, default=Config.out)
    ap.add_argument("--max-m", type=int, default=Config.max_m)
    args = ap.parse_args()
    cfg = Config(args.out, args.max_m)
    cfg.out.mkdir(parents=True, exist_ok=True)
    hirzebruch_table(cfg)
    two_cut(cfg)
    p1p1(cfg)
    print(f"\nfigures in {cfg.out}/")


if __name__ == "__main__":
    main()
