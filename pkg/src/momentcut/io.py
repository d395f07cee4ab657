"""JSON (de)serialization. Rationals travel as ``"p/q"`` strings."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import lattice as lat
from .cutconfig import CutData, CutDatum, Subdivision, cobound
from .degeneration import Fan, LiftedPolytope
from .errors import MomentCutError
from .polytope import HalfSpace, Polytope


class SpecError(MomentCutError, ValueError):
    """Malformed input; ``where`` is a dotted path to the offending field."""

    def __init__(self, where: str, message: str):
        self.where = where
        super().__init__(f"{where}: {message}")


def parse_rat(x, where: str) -> Fraction:
    if isinstance(x, float):
        raise SpecError(where, f"floating-point value {x!r}; write rationals as \"p/q\" strings")
    try:
        return lat.rat(x)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise SpecError(where, f"invalid rational {x!r} ({e})") from None


def parse_int(x, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise SpecError(where, f"expected an integer, got {x!r}")
    return x


def _list(x, where):
    if not isinstance(x, list):
        raise SpecError(where, f"expected a list, got {type(x).__name__}")
    return x


def parse_int_vector(x, where) -> tuple:
    return tuple(parse_int(a, f"{where}[{i}]") for i, a in enumerate(_list(x, where)))


def parse_rat_vector(x, where) -> tuple:
    return tuple(parse_rat(a, f"{where}[{i}]") for i, a in enumerate(_list(x, where)))


def rat_vector_json(v) -> list:
    return [lat.rat_str(a) for a in v]


# -- polytopes ----------------------------------------------------------------

def polytope_from_json(obj, where: str = "polytope") -> Polytope:
    if not isinstance(obj, dict):
        raise SpecError(where, "expected an object")
    try:
        if "vertices" in obj:
            pts = [parse_rat_vector(v, f"{where}.vertices[{i}]")
                   for i, v in enumerate(_list(obj["vertices"], f"{where}.vertices"))]
            if not pts:
                raise SpecError(f"{where}.vertices", "empty vertex list")
            if len({len(p) for p in pts}) != 1:
                raise SpecError(f"{where}.vertices", "points of differing length")
            return Polytope.from_vertices(pts)
        if "halfspaces" in obj:
            k = parse_int(obj.get("rank"), f"{where}.rank") if "rank" in obj else None
            hs = []
            for i, h in enumerate(_list(obj["halfspaces"], f"{where}.halfspaces")):
                w = f"{where}.halfspaces[{i}]"
                if not isinstance(h, dict) or "normal" not in h or "offset" not in h:
                    raise SpecError(w, "needs 'normal' and 'offset'")
                n = parse_int_vector(h["normal"], f"{w}.normal")
                if k is not None and len(n) != k:
                    raise SpecError(f"{w}.normal", f"length {len(n)} differs from rank {k}")
                if not any(n):
                    raise SpecError(f"{w}.normal", "zero normal")
                hs.append(HalfSpace(n, parse_rat(h["offset"], f"{w}.offset")))
            eqs = []
            for i, e in enumerate(obj.get("equations", [])):
                w = f"{where}.equations[{i}]"
                eqs.append((parse_int_vector(e["normal"], f"{w}.normal"),
                            parse_rat(e["offset"], f"{w}.offset")))
            if k is None:
                if not hs:
                    raise SpecError(where, "rank missing")
                k = len(hs[0].normal)
            return Polytope.from_halfspaces(hs, k, equations=eqs)
    except SpecError:
        raise
    except MomentCutError as e:
        raise SpecError(where, f"{type(e).__name__}: {e}") from None
    raise SpecError(where, "needs 'vertices' or 'halfspaces'")


def polytope_to_json(P: Polytope) -> dict:
    return {
        "rank": P.ambient_rank,
        "dim": P.dim,
        "halfspaces": [{"normal": list(h.normal), "offset": lat.rat_str(h.offset)}
                       for h in P.halfspaces],
        "equations": [{"normal": list(n), "offset": lat.rat_str(b)} for n, b in P.equations],
        "vertices": [rat_vector_json(v) for v in P.vertices],
    }


# -- cut data -----------------------------------------------------------------

def cuts_from_json(arr, where: str = "cuts") -> CutData:
    data = []
    for i, c in enumerate(_list(arr, where)):
        w = f"{where}[{i}]"
        if not isinstance(c, dict) or "xi" not in c:
            raise SpecError(w, "needs 'xi' (and optional 'eps')")
        data.append(CutDatum(parse_int_vector(c["xi"], f"{w}.xi"), parse_rat(c.get("eps", 0), f"{w}.eps")))
    if not data:
        raise SpecError(where, "at least one cut is required")
    try:
        return CutData(data)
    except MomentCutError as e:
        raise SpecError(where, str(e)) from None


def cuts_to_json(C: CutData) -> list:
    return [{"xi": list(d.xi), "eps": lat.rat_str(d.eps)} for d in C]


def cocycle_from_json(arr, where: str = "cocycle") -> dict:
    out = {}
    for n, c in enumerate(_list(arr, where)):
        w = f"{where}[{n}]"
        if not isinstance(c, dict):
            raise SpecError(w, "expected an object")
        i, j = parse_int(c.get("i"), f"{w}.i"), parse_int(c.get("j"), f"{w}.j")
        out[i, j] = (parse_int_vector(c.get("xi"), f"{w}.xi"), parse_rat(c.get("eps", 0), f"{w}.eps"))
    return out


def cocycle_to_json(cocycle: dict) -> list:
    return [{"i": i, "j": j, "xi": list(xi), "eps": lat.rat_str(eps)}
            for (i, j), (xi, eps) in sorted(cocycle.items())]


@dataclass
class JobSpec:
    polytope: Polytope
    cuts: CutData | None = None
    cocycle: dict | None = None
    a: Fraction | None = None

    def cut_data(self) -> CutData:
        if (self.cuts is None) == (self.cocycle is None):
            raise SpecError("spec", "exactly one of 'cuts' or 'cocycle' is required")
        if self.cuts is not None:
            return self.cuts
        try:
            return cobound(self.cocycle)
        except (MomentCutError, ValueError) as e:
            raise SpecError("cocycle", str(e)) from None

    @classmethod
    def from_json(cls, obj) -> "JobSpec":
        if not isinstance(obj, dict):
            raise SpecError("spec", "expected a JSON object")
        # a bare polytope is accepted too
        poly = polytope_from_json(obj["polytope"]) if "polytope" in obj else polytope_from_json(obj, "spec")
        cuts = cuts_from_json(obj["cuts"]) if "cuts" in obj else None
        cocycle = cocycle_from_json(obj["cocycle"]) if "cocycle" in obj else None
        if cuts is not None and cocycle is not None:
            raise SpecError("spec", "give either 'cuts' or 'cocycle', not both")
        for name, C in (("cuts", cuts),):
            if C is not None and C.rank != poly.ambient_rank:
                raise SpecError(name, f"cut rank {C.rank} differs from polytope rank {poly.ambient_rank}")
        a = parse_rat(obj["a"], "a") if "a" in obj else None
        return cls(poly, cuts, cocycle, a)

    def to_json(self) -> dict:
        out = {"polytope": polytope_to_json(self.polytope)}
        if self.cuts is not None:
            out["cuts"] = cuts_to_json(self.cuts)
        if self.cocycle is not None:
            out["cocycle"] = cocycle_to_json(self.cocycle)
        if self.a is not None:
            out["a"] = lat.rat_str(self.a)
        return out


def load_spec(path: str) -> JobSpec:
    try:
        with open(path) as f:
            obj = json.load(f)
    except json.JSONDecodeError as e:
        raise SpecError(f"{path}:{e.lineno}:{e.colno}", e.msg) from None
    return JobSpec.from_json(obj)


# -- results ------------------------------------------------------------------

def index_label(I) -> str:
    return "".join(str(i) for i in sorted(I)) if all(i < 10 for i in I) else ",".join(map(str, sorted(I)))


def subdivision_to_json(S: Subdivision) -> dict:
    pieces = []
    for I in sorted(S.pieces, key=lambda I: (len(I), sorted(I))):
        p = S.pieces[I]
        entry = {"indices": sorted(I), "empty": p is None}
        if p is not None:
            entry.update({"dim": p.dim, "vertices": [rat_vector_json(v) for v in p.vertices]})
        pieces.append(entry)
    return {
        "ambient": polytope_to_json(S.ambient),
        "cuts": cuts_to_json(S.cuts),
        "pieces": pieces,
        "empty_pieces": S.empty_indices,
        "degenerate_pieces": S.degenerate_indices,
    }


def fan_to_json(fan: Fan) -> dict:
    return fan.to_json()


def lifted_to_json(L: LiftedPolytope) -> dict:
    return {
        "a": lat.rat_str(L.a),
        "polytope": polytope_to_json(L.polytope),
        "top_face": [rat_vector_json(v) for v in L.top_face.vertices],
        "graph_faces": {str(i): (None if f is None else [rat_vector_json(v) for v in f.vertices])
                        for i, f in L.piece_faces.items()},
    }
