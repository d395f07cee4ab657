"""Minimal SVG figures of subdivisions and lifted polytopes.

Coordinates stay exact until the final mapping into a fixed 400x400 viewbox;
vertex labels print the exact rationals.
"""
from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from . import lattice as lat
from .cutconfig import Subdivision
from .errors import FigureUnsupported
from .io import index_label
from .polytope import Polytope
from .toric2d import _ccw_sort

SIZE = 400
MARGIN = 50
FILLS = ["#cfe2f3", "#f4cccc", "#d9ead3", "#fff2cc", "#d9d2e9", "#fce5cd", "#d0e0e3", "#ead1dc"]


def _planar(v):
    """Exact projection to the drawing plane; the last coordinate points up."""
    if len(v) == 1:
        return (v[0], Fraction(0))
    if len(v) == 2:
        return (v[0], v[1])
    if len(v) == 3:
        return (v[0] + Fraction(9, 20) * v[1], v[2] + Fraction(3, 10) * v[1])
    raise FigureUnsupported(f"cannot draw rank {len(v)}")


class _Canvas:
    def __init__(self, points):
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        self.x0, self.y0 = min(xs), min(ys)
        span = max(max(xs) - self.x0, max(ys) - self.y0) or Fraction(1)
        self.s = Fraction(SIZE - 2 * MARGIN) / span
        self.items = []

    def xy(self, p):
        x = float((p[0] - self.x0) * self.s) + MARGIN
        y = SIZE - MARGIN - float((p[1] - self.y0) * self.s)
        return round(x, 2), round(y, 2)

    def polygon(self, pts, fill, dashed=False):
        coords = " ".join(f"{x},{y}" for x, y in map(self.xy, pts))
        dash = ' stroke-dasharray="4 3"' if dashed else ""
        self.items.append(f'<polygon points="{coords}" fill="{fill}" stroke="black" stroke-width="1.5"{dash}/>')

    def line(self, p, q, dashed=False, width=1.5):
        (x1, y1), (x2, y2) = self.xy(p), self.xy(q)
        dash = ' stroke-dasharray="4 3"' if dashed else ""
        self.items.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="{width}"{dash}/>')

    def dot(self, p, label=None):
        x, y = self.xy(p)
        self.items.append(f'<circle cx="{x}" cy="{y}" r="3" fill="black"/>')
        if label:
            self.items.append(f'<text x="{x + 4}" y="{y - 4}" font-size="9" font-family="monospace">{escape(label)}</text>')

    def text(self, p, s, size=14):
        x, y = self.xy(p)
        self.items.append(f'<text x="{x}" y="{y}" font-size="{size}" text-anchor="middle" font-style="italic">{escape(s)}</text>')

    def render(self, title=""):
        head = (f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" '
                f'width="{SIZE}" height="{SIZE}">')
        t = f'<title>{escape(title)}</title>' if title else ""
        return "\n".join([head, t, '<rect width="100%" height="100%" fill="white"/>', *self.items, "</svg>"]) + "\n"


def _label(v):
    return "(" + ",".join(lat.rat_str(a) for a in v) + ")"


def _ordered_polygon(P: Polytope):
    c = P.interior_point()
    rel = {lat.sub(v, c): v for v in P.vertices}
    return [rel[u] for u in _ccw_sort(list(rel))]


def _draw_polytope(cv: _Canvas, P: Polytope, fill, dashed=False):
    if P.dim == 2 and P.ambient_rank == 2:
        cv.polygon(_ordered_polygon(P), fill, dashed)
    else:
        for i, j in P.edges():
            cv.line(_planar(P.vertices[i]), _planar(P.vertices[j]), dashed)


def subdivision_svg(S: Subdivision) -> str:
    k = S.ambient.ambient_rank
    if k > 3:
        raise FigureUnsupported(f"rank {k} subdivisions have no figure")
    cv = _Canvas([_planar(v) for v in S.ambient.vertices])
    for n, (i, p) in enumerate(sorted(S.singles.items())):
        if p is not None:
            _draw_polytope(cv, p, FILLS[n % len(FILLS)])
    if k == 1:
        cv.line(_planar(S.ambient.vertices[0]), _planar(S.ambient.vertices[-1]), width=3)
    labelled = set()
    for i, p in sorted(S.singles.items()):
        if p is None:
            continue
        c = _planar(p.interior_point())
        cv.text((c[0], c[1] + (Fraction(1, 10) if k == 1 else 0)), f"P{index_label([i])}")
        for v in p.vertices:
            if v not in labelled:
                labelled.add(v)
                cv.dot(_planar(v), _label(v))
    return cv.render("subdivision")


def lifted_svg(P: Polytope, top_level=None) -> str:
    if P.ambient_rank > 3:
        raise FigureUnsupported(f"rank {P.ambient_rank} polytopes have no figure")
    cv = _Canvas([_planar(v) for v in P.vertices])
    _draw_polytope(cv, P, "#eeeeee")
    for v in P.vertices:
        cv.dot(_planar(v), _label(v))
    if top_level is not None:
        top = [v for v in P.vertices if v[-1] == top_level]
        if top:
            c = (sum(_planar(v)[0] for v in top) / len(top), _planar(top[0])[1])
            cv.text((c[0], c[1]), f"u={lat.rat_str(top_level)}", size=11)
    return cv.render("lifted polytope")
