"""JSON interchange schemas for maps, moduli points, networks and results.

Rationals travel as lowest-terms strings ("p/q" or a plain integer),
slopes as JSON integers.  Every encoder builds its dict in a fixed key
order so serialized output is byte-stable.
"""

from __future__ import annotations

from .compact import CompactifiedPoint
from .moduli import ModuliPoint
from .plcore import TropicalMap, TropicalPolynomial
from .rational import (NEG_INF, format_extended, format_rational, is_infinite,
                       parse_extended, parse_rational)
from .relu import ReLUNetwork
from .types_enum import SlopeSequence


class SchemaError(ValueError):
    pass


def _require(obj, key):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError("missing field %r" % key)
    return obj[key]


def _int_slopes(values):
    slopes = []
    for s in values:
        if isinstance(s, bool) or not isinstance(s, int):
            raise SchemaError("slopes must be JSON integers, got %r" % (s,))
        slopes.append(s)
    return tuple(slopes)


def map_to_json(m: TropicalMap) -> dict:
    return {
        "breaks": [format_rational(x) for x in m.break_points],
        "slopes": list(m.slopes),
        "anchor": format_rational(m.anchor_value),
    }


def map_from_json(obj) -> TropicalMap:
    try:
        breaks = tuple(parse_rational(x) for x in _require(obj, "breaks"))
        slopes = _int_slopes(_require(obj, "slopes"))
        anchor = parse_rational(_require(obj, "anchor"))
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc
    return TropicalMap(breaks, slopes, anchor)


def point_to_json(p: ModuliPoint) -> dict:
    return {
        "slopes": list(p.seq.slopes),
        "gaps": [format_rational(g) for g in p.gaps],
        "position": format_rational(p.position),
    }


def point_from_json(obj) -> ModuliPoint:
    try:
        seq = SlopeSequence(3, _int_slopes(_require(obj, "slopes")))
        gaps = tuple(parse_rational(g) for g in _require(obj, "gaps"))
        position = parse_rational(_require(obj, "position"))
        return ModuliPoint(seq, gaps, position)
    except SchemaError:
        raise
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def compact_point_from_json(obj) -> CompactifiedPoint:
    try:
        seq = SlopeSequence(3, _int_slopes(_require(obj, "slopes")))
        gaps = tuple(parse_extended(g) for g in _require(obj, "gaps"))
        return CompactifiedPoint(seq, gaps)
    except SchemaError:
        raise
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def compact_point_to_json(p: CompactifiedPoint) -> dict:
    return {
        "slopes": list(p.seq.slopes),
        "gaps": [format_extended(g) for g in p.extended_gaps],
    }


def network_to_json(net: ReLUNetwork) -> dict:
    return {
        "base_slope": format_rational(net.base_slope),
        "base_bias": format_rational(net.base_bias),
        "units": [{"w": format_rational(w), "b": format_rational(b),
                   "a": format_rational(a)} for w, b, a in net.units],
    }


def network_from_json(obj) -> ReLUNetwork:
    try:
        units = tuple((parse_rational(_require(u, "w")),
                       parse_rational(_require(u, "b")),
                       parse_rational(_require(u, "a")))
                      for u in _require(obj, "units"))
        return ReLUNetwork(parse_rational(_require(obj, "base_slope")),
                           parse_rational(_require(obj, "base_bias")), units)
    except SchemaError:
        raise
    except (TypeError, ValueError) as exc:
        raise SchemaError(str(exc)) from exc


def polynomial_from_json(values) -> TropicalPolynomial:
    try:
        coeffs = []
        for c in values:
            v = parse_extended(c)
            if is_infinite(v) and v != NEG_INF:
                raise SchemaError("coefficients may be rational or -inf")
            coeffs.append(v)
        return TropicalPolynomial(tuple(coeffs))
    except SchemaError:
        raise
    except (TypeError, ValueError) as exc:
        raise SchemaError(str(exc)) from exc
