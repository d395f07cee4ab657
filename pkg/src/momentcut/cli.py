"""Command-line front end.

Exit codes: 0 success / property holds, 1 property fails or the request is
refused, 2 malformed input, 3 internal inconsistency between the two
quasi-regularity routes.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import lattice as lat
from .cutconfig import is_quasi_regular, lattice_verdict, subdivide
from .degeneration import check_fibration, critical_values, lift, min_a_bound, normal_fan
from .delzant import is_delzant
from .errors import BoundViolated, FigureUnsupported, MomentCutError, NotDelzant, NotDim2
from .io import (SpecError, lifted_to_json, load_spec, parse_rat,
                 rat_vector_json, subdivision_to_json)
from .toric2d import degree_entries, identify_surface

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_INCONSISTENT = 0, 1, 2, 3

TORIC_NOTE = ("for toric manifolds a quasi-regular tuple is regular, and a regular tuple "
              "is always quasi-regular")


def _emit(obj, args):
    text = json.dumps(obj, indent=2, ensure_ascii=False)
    print(text)
    if args.json:
        with open(args.json, "w") as f:
            f.write(text + "\n")


def _log(msg):
    print(msg, file=sys.stderr)


def _write_svg(args, make):
    if not args.svg:
        return EXIT_OK
    try:
        svg = make()
    except FigureUnsupported as e:
        _log(f"FigureUnsupported: {e}")
        return EXIT_FALSE
    with open(args.svg, "w") as f:
        f.write(svg)
    _log(f"figure written to {args.svg}")
    return EXIT_OK


def _delzant_json(rep):
    return [{"vertex": rat_vector_json(r.vertex), "smooth": r.is_smooth,
             "edge_directions": [list(d) for d in r.edge_directions],
             "failure": r.failure_reason} for r in rep.reports]


def cmd_check_delzant(spec, args):
    rep = is_delzant(spec.polytope)
    _emit({"delzant": rep.is_delzant, "vertices": _delzant_json(rep)}, args)
    bad = [rat_vector_json(r.vertex) for r in rep.failures]
    _log("Delzant" if rep else f"not Delzant; failing vertices: {bad}")
    return EXIT_OK if rep else EXIT_FALSE


def cmd_subdivide(spec, args):
    from .svg import subdivision_svg

    S = subdivide(spec.polytope, spec.cut_data())
    _emit(subdivision_to_json(S), args)
    _log(f"{len(S.nonempty())} nonempty regions")
    return _write_svg(args, lambda: subdivision_svg(S))


def cmd_check_regular(spec, args):
    P, C = spec.polytope, spec.cut_data()
    S = subdivide(P, C)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        q = is_quasi_regular(P, C, S)
    lv = lattice_verdict(P, C, S)
    agree = q.is_quasi_regular == lv.holds
    out = {
        "quasi_regular": q.is_quasi_regular,
        "lattice_criterion": lv.holds,
        "agree": agree,
        "base_is_delzant": q.base_is_delzant,
        "delzant_failures": [{"piece": i, "reason": r} for i, r in q.delzant_failures],
        "primitivity_failures": [list(p) for p in q.primitivity_failures],
        "detrans_failures": [{"vertex": rat_vector_json(d.vertex), "active": d.active_size,
                              "face_dim": d.face_dim} for d in q.detrans_failures],
        "rank_failures": [rat_vector_json(v) for v in lv.rank_failures],
        "lattice_failures": [rat_vector_json(v) for v in lv.lattice_failures],
        "empty_pieces": list(q.empty_pieces),
        "degenerate_pieces": list(q.degenerate_pieces),
        "note": TORIC_NOTE,
    }
    _emit(out, args)
    if not agree:
        _log("internal inconsistency: definitional and lattice verdicts differ")
        return EXIT_INCONSISTENT
    if not q.base_is_delzant:
        _log("warning: the ambient polytope is not Delzant")
    if q:
        _log("quasi-regular")
        return EXIT_OK
    if q.primitivity_failures:
        _log(f"not quasi-regular; non-primitive differences at pairs {[list(p) for p in q.primitivity_failures]}")
    else:
        _log("not quasi-regular")
    return EXIT_FALSE


def cmd_lift(spec, args):
    from .svg import lifted_svg

    P, C = spec.polytope, spec.cut_data()
    bound = min_a_bound(P, C)
    if args.a is not None:
        a = parse_rat(args.a, "--a")
    elif spec.a is not None:
        a = spec.a
    else:
        a = bound + 1
    try:
        L = lift(P, C, a)
    except BoundViolated as e:
        _emit({"error": "BoundViolated", "a": lat.rat_str(a), "bound": lat.rat_str(e.bound)}, args)
        _log(f"BoundViolated: a must exceed {lat.rat_str(e.bound)}")
        return EXIT_FALSE
    rep = is_delzant(L.polytope)
    out = {"bound": lat.rat_str(bound), "critical": a in critical_values(P, C),
           "lifted": lifted_to_json(L), "delzant": rep.is_delzant}
    code = EXIT_OK
    if rep and L.polytope.is_full_dimensional:
        fan = normal_fan(L.polytope)
        fib = check_fibration(L)
        out["fan"] = fan.to_json()
        out["fibration"] = {"compatible": fib.compatible,
                            "cone_images": [{"cone": list(c), "image": im} for c, im in fib.cone_images.items()]}
        if L.polytope.ambient_rank == 2:
            out["surface"] = str(identify_surface(L.polytope))
        if not fib.compatible:
            code = EXIT_FALSE
    else:
        out["fan"] = None
        out["fibration"] = None
        code = EXIT_FALSE
    _emit(out, args)
    _log(f"lift at a={lat.rat_str(a)}: {len(L.polytope.vertices)} vertices, "
         f"{'Delzant' if rep else 'not Delzant'}")
    svg_code = _write_svg(args, lambda: lifted_svg(L.polytope, a))
    return code or svg_code


def cmd_degrees(spec, args):
    P, C = spec.polytope, spec.cut_data()
    if P.ambient_rank != 2:
        _log(f"NotDim2: degree reports need rank 2, got rank {P.ambient_rank}")
        return EXIT_FALSE
    S = subdivide(P, C)
    try:
        entries = degree_entries(S, boundary=True)
    except (NotDim2, NotDelzant) as e:
        _log(f"{type(e).__name__}: {e}")
        return EXIT_FALSE
    edges = [{"between": list(e.between), "in_piece": e.in_piece, "degree": e.degree,
              "vertices": [rat_vector_json(v) for v in e.vertices]} for e in entries]
    sums = {}
    for e in entries:
        if len(e.between) == 2:
            sums[e.between] = sums.get(e.between, 0) + e.degree
    _emit({"edges": edges,
           "side_sums": [{"between": list(k), "sum": s} for k, s in sorted(sums.items())]}, args)
    _log(f"{len(edges)} edge degrees")
    return EXIT_OK


COMMANDS = {
    "check-delzant": cmd_check_delzant,
    "subdivide": cmd_subdivide,
    "check-regular": cmd_check_regular,
    "lift": cmd_lift,
    "degrees": cmd_degrees,
}


def build_parser():
    p = argparse.ArgumentParser(prog="momentcut", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("spec", help="JSON job file")
    p.add_argument("--a", help="top level for 'lift', as p/q")
    p.add_argument("--svg", help="write a figure here")
    p.add_argument("--json", help="also write the JSON result here")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = load_spec(args.spec)
        return COMMANDS[args.command](spec, args)
    except SpecError as e:
        _log(f"input error: {e}")
        return EXIT_INPUT
    except OSError as e:
        _log(f"input error: {e}")
        return EXIT_INPUT
    except MomentCutError as e:
        _log(f"{type(e).__name__}: {e}")
        return EXIT_FALSE


if __name__ == "__main__":
    sys.exit(main())
