"""Command-line interface: JSON in, JSON (or a small table) out.

Exit codes: 0 success, 1 domain error (with a machine-readable reason
code), 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import compact, hurwitz, moduli, relu, serialize
from .moduli import InvalidDegeneration
from .hurwitz import NonGenericConfiguration
from .plcore import evaluate, is_admissible, validate
from .rational import format_rational, parse_extended, format_extended
from .serialize import SchemaError
from .types_enum import canonical_type, enumerate_types, registry_d3

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INPUT = 2


class DomainError(Exception):
    def __init__(self, code, message=""):
        super().__init__(message or code)
        self.code = code


class InputError(Exception):
    pass


def _load_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(str(exc)) from exc


def _emit(args, payload, human):
    if getattr(args, "json", False):
        print(json.dumps(payload))
    else:
        human(payload)


def _print_kv(payload):
    for key, value in payload.items():
        print("%s: %s" % (key, json.dumps(value)))


# --- subcommand handlers -------------------------------------------------

def cmd_types(args):
    if args.degree == 3 and args.max_breaks is None:
        types = registry_d3()
    else:
        types = enumerate_types(args.degree, args.max_breaks)
    rows = []
    for t in types:
        seq = t.representative or t.canonical
        rows.append({"label": t.label, "slopes": list(seq.slopes),
                     "palindromic": t.palindromic, "k": seq.k})
    def human(rows):
        for r in rows:
            print("%-5s k=%d  %s%s" % (r["label"] or "-", r["k"],
                                       tuple(r["slopes"]),
                                       "  (palindromic)" if r["palindromic"] else ""))
    _emit(args, rows, human)


def cmd_classify(args):
    m = serialize.map_from_json(_load_json(args.input))
    report = validate(m)
    adm = is_admissible(m, 3) if report.ok else None
    payload = {"valid": report.ok, "problems": list(report.problems)}
    if adm is not None:
        payload["admissible"] = adm.admissible
        payload["reasons"] = list(adm.reasons)
        if adm.admissible:
            ctype = canonical_type(moduli.moduli_point(m).seq)
            payload["type"] = ctype.label
            payload["canonical_slopes"] = list(ctype.canonical.slopes)
    _emit(args, payload, _print_kv)


def cmd_eval(args):
    m = serialize.map_from_json(_load_json(args.input))
    if not validate(m).ok:
        raise DomainError("invalid-map")
    try:
        x = parse_extended(args.at)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    value = evaluate(m, x)
    payload = {"value": format_extended(value)}
    _emit(args, payload, lambda p: print(p["value"]))


def _load_point(args):
    try:
        return serialize.point_from_json(_load_json(args.input))
    except SchemaError:
        raise


def cmd_aut(args):
    p = _load_point(args)
    group = moduli.automorphisms(p)
    payload = {"kind": group.kind}
    if group.kind == moduli.Z2:
        payload["reflection_center"] = format_rational(group.reflection_center)
        payload["target_shift"] = format_rational(group.target_shift)
    _emit(args, payload, _print_kv)


def cmd_stratum(args):
    p = _load_point(args)
    s = moduli.stratum(p)
    payload = {"aut": s.aut, "cell_dimension": s.cell_dimension,
               "symmetric_locus": s.symmetric_locus, "label": s.label}
    _emit(args, payload, _print_kv)


def cmd_degenerate(args):
    p = _load_point(args)
    try:
        q = moduli.degenerate(p, args.merge)
    except InvalidDegeneration as exc:
        raise DomainError("invalid-degeneration", str(exc)) from exc
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(args, serialize.point_to_json(q), _print_kv)


def cmd_curve(args):
    p = _load_point(args)
    c = moduli.weighted_curve(p)
    payload = {
        "vertices": [{"position": format_rational(x), "weight": w}
                     for x, w in c.finite_vertices],
        "edges": [{"length": format_rational(l), "dilation": s}
                  for l, s in c.bounded_edges],
        "leaf_dilations": list(c.leaf_dilations),
    }
    _emit(args, payload, _print_kv)


def cmd_hurwitz(args):
    from .rational import parse_rational
    try:
        if args.branch:
            values = [parse_rational(v) for v in args.branch.split(",")]
            b = hurwitz.BranchConfiguration.from_branch_points(values)
        else:
            values = [parse_rational(v) for v in args.distances.split(",")]
            b = hurwitz.BranchConfiguration(tuple(values))
    except NonGenericConfiguration as exc:
        raise DomainError("non-generic-configuration", str(exc)) from exc
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    elements = hurwitz.fiber(b)
    payload = {
        "geometric_count": len(elements),
        "weighted_count": hurwitz.hurwitz_number(b),
        "elements": [{"slopes": list(e.seq.slopes),
                      "gaps": [format_rational(g) for g in e.gaps],
                      "multiplicity": e.multiplicity} for e in elements],
    }
    def human(p):
        print("geometric count: %d" % p["geometric_count"])
        print("weighted count:  %d" % p["weighted_count"])
        for e in p["elements"]:
            print("  %s gaps=%s mult=%d" % (tuple(e["slopes"]),
                                            e["gaps"], e["multiplicity"]))
    _emit(args, payload, human)


def _stratum_json(s):
    return {
        "states": list(s.coordinate_states),
        "codimension": s.codimension,
        "collisions": [{"index": i, "kind": kind} for i, kind in s.collisions],
        "infinity": list(s.infinity_indices),
        "limit_slopes": list(s.limit_slopes),
        "in_moduli": s.in_moduli,
        "limit_label": s.limit_label,
    }


def cmd_strata(args):
    from .types_enum import registry_sequence
    try:
        seq = registry_sequence(args.type)
    except KeyError as exc:
        raise InputError(str(exc)) from exc
    if seq.k != 4:
        raise DomainError("not-a-maximal-type",
                          "type %s has k=%d, need k=4" % (args.type, seq.k))
    strata = compact.face_lattice(seq)
    census = {}
    for s in strata:
        census[s.codimension] = census.get(s.codimension, 0) + 1
    payload = {
        "type": args.type,
        "codimension_census": {str(c): census[c] for c in sorted(census)},
        "strata": [_stratum_json(s) for s in strata],
    }
    def human(p):
        print("type %s: %d strata, census %s"
              % (p["type"], len(p["strata"]), p["codimension_census"]))
        for s in p["strata"]:
            print("  %-28s codim %d  limit %s  in_moduli=%s"
                  % ("/".join(s["states"]), s["codimension"],
                     tuple(s["limit_slopes"]), s["in_moduli"]))
    _emit(args, payload, human)


def cmd_classify_compact(args):
    p = serialize.compact_point_from_json(_load_json(args.input))
    _emit(args, _stratum_json(compact.classify_stratum(p)), _print_kv)


def cmd_from_relu(args):
    net = serialize.network_from_json(_load_json(args.input))
    conv = relu.network_to_map(net)
    payload = {"map": serialize.map_to_json(conv.map),
               "admissible": conv.admissible,
               "problems": list(conv.problems)}
    _emit(args, payload, _print_kv)


def cmd_to_relu(args):
    m = serialize.map_from_json(_load_json(args.input))
    if not validate(m).ok:
        raise DomainError("invalid-map")
    net = relu.map_to_network(m)
    _emit(args, serialize.network_to_json(net), _print_kv)


def cmd_symmetry(args):
    net = serialize.network_from_json(_load_json(args.input))
    report = relu.symmetry_report(net)
    payload = {
        "dead_units": [{"index": d.index, "reason": d.reason}
                       for d in report.dead_units],
        "admissible": report.admissible,
        "problems": list(report.problems),
        "type": report.type_label,
        "aut": report.aut,
        "gap_condition": None,
    }
    if report.gap_condition is not None:
        l1, l3, equal = report.gap_condition
        payload["gap_condition"] = {"l1": format_rational(l1),
                                    "l3": format_rational(l3),
                                    "equal": equal}
    _emit(args, payload, _print_kv)


def cmd_tropicalize(args):
    from .plcore import tropicalize_rational
    obj = _load_json(args.input)
    p = serialize.polynomial_from_json(serialize._require(obj, "p"))
    q = serialize.polynomial_from_json(serialize._require(obj, "q"))
    m = tropicalize_rational(p, q)
    _emit(args, serialize.map_to_json(m), _print_kv)


# --- parser --------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="tropmaps",
        description="Degree-3 tropical rational maps: types, moduli, "
                    "Hurwitz fibers, compactification, ReLU bridge.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true", help="JSON output")
        p.set_defaults(func=func)
        return p

    p = add("types", cmd_types, help="enumerate combinatorial types")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--max-breaks", type=int, default=None)

    for name, func, help_ in [
        ("classify", cmd_classify, "validate a map and identify its type"),
        ("eval", cmd_eval, "evaluate a map at a point"),
        ("aut", cmd_aut, "automorphism group of a moduli point"),
        ("stratum", cmd_stratum, "symmetry stratum of a moduli point"),
        ("degenerate", cmd_degenerate, "merge two adjacent break points"),
        ("curve", cmd_curve, "underlying weighted tropical curve"),
        ("classify-compact", cmd_classify_compact,
         "boundary stratum of a compactified point"),
        ("from-relu", cmd_from_relu, "convert a ReLU network to a map"),
        ("to-relu", cmd_to_relu, "canonical ReLU network of a map"),
        ("symmetry", cmd_symmetry, "symmetry / pruning report of a network"),
        ("tropicalize", cmd_tropicalize,
         "tropicalize a rational function from coefficient data"),
    ]:
        p = add(name, func, help=help_)
        p.add_argument("input", help="JSON file path, or - for stdin")
        if name == "eval":
            p.add_argument("--at", required=True)
        if name == "degenerate":
            p.add_argument("--merge", type=int, required=True)

    p = add("hurwitz", cmd_hurwitz, help="Hurwitz fiber over a branch configuration")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--branch", help="four branch points p1,p2,p3,p4")
    group.add_argument("--distances", help="three distances d1,d2,d3")

    p = add("strata", cmd_strata, help="face lattice of a maximal type's cube")
    p.add_argument("--type", required=True, help="registry label I-V")

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
        return EXIT_OK
    except DomainError as exc:
        print(json.dumps({"error": exc.code}))
        return EXIT_DOMAIN
    except (InputError, SchemaError) as exc:
        print(json.dumps({"error": "invalid-input", "detail": str(exc)}),
              file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        # domain-level rejection raised by a module (inadmissible map, ...)
        code = "inadmissible-map" if "inadmissible" in str(exc) else "domain-error"
        print(json.dumps({"error": code, "detail": str(exc)}))
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
