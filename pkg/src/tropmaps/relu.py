"""Bridge between shallow scalar ReLU networks and tropical maps.

A network f(x) = w0*x + b0 + sum_j a_j * max(0, w_j*x + b_j) is a
continuous piecewise-linear function; its kinks sit at the activation
thresholds -b_j/w_j.  Conversion is exact: inputs are rationals, and
admissibility (integer slopes, exact threshold coincidences) is decided
without tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import moduli
from .plcore import TropicalMap, is_admissible, maps_equal
from .rational import parse_rational
from .types_enum import SlopeSequence, canonical_type


@dataclass(frozen=True)
class ReLUNetwork:
    base_slope: Fraction
    base_bias: Fraction
    units: tuple  # (weight, bias, out_coeff)

    def __post_init__(self):
        object.__setattr__(self, "base_slope", parse_rational(self.base_slope))
        object.__setattr__(self, "base_bias", parse_rational(self.base_bias))
        units = tuple((parse_rational(w), parse_rational(b), parse_rational(a))
                      for w, b, a in self.units)
        object.__setattr__(self, "units", units)

    def evaluate(self, x):
        x = parse_rational(x)
        y = self.base_slope * x + self.base_bias
        for w, b, a in self.units:
            y += a * max(Fraction(0), w * x + b)
        return y


@dataclass(frozen=True)
class NetworkConversion:
    map: TropicalMap
    admissible: bool
    problems: tuple


@dataclass(frozen=True)
class DeadUnit:
    index: int
    reason: str  # zero-coefficient | zero-weight | cancelled-threshold


@dataclass(frozen=True)
class SymmetryReport:
    dead_units: tuple
    admissible: bool
    problems: tuple
    type_label: Optional[str]
    aut: Optional[str]
    gap_condition: Optional[tuple]  # (l1, l3, equal) for palindromic k=4 types


def _folded_terms(net: ReLUNetwork):
    """Rewrite every unit as jump * max(0, x - threshold) plus an affine part.

    Uses max(0, u) = u + max(0, -u) to flip negative-weight units, and
    folds zero-weight units into the bias.  Returns (slope, bias, terms)
    with terms a list of (threshold, jump, unit index); jumps can be zero
    here (dead a_j = 0 units) and cancel later.
    """
    slope, bias = net.base_slope, net.base_bias
    terms = []
    for idx, (w, b, a) in enumerate(net.units):
        if w == 0:
            bias += a * max(Fraction(0), b)
            continue
        if w < 0:
            slope += a * w
            bias += a * b
            w, b = -w, -b
        terms.append((Fraction(-b, w), a * w, idx))
    return slope, bias, terms


def network_to_map(net: ReLUNetwork) -> NetworkConversion:
    """Exact conversion, merging coincident thresholds and dropping zero jumps."""
    slope, bias, terms = _folded_terms(net)
    jump_at = {}
    for theta, jump, _ in terms:
        jump_at[theta] = jump_at.get(theta, Fraction(0)) + jump
    breaks = sorted(t for t, j in jump_at.items() if j != 0)
    slopes = [slope]
    for t in breaks:
        slopes.append(slopes[-1] + jump_at[t])
    if breaks:
        anchor = slope * breaks[0] + bias  # thresholds above break 0 inactive there
        m = TropicalMap(tuple(breaks), tuple(slopes), anchor)
    else:
        m = TropicalMap((), tuple(slopes), bias)
    report = is_admissible(m, 3)
    return NetworkConversion(m, report.admissible, report.reasons)


def map_to_network(m: TropicalMap) -> ReLUNetwork:
    """Canonical network of a map: all hidden weights +1, one unit per break."""
    units = tuple((Fraction(1), -x, Fraction(b - a))
                  for x, a, b in zip(m.break_points, m.slopes, m.slopes[1:]))
    if m.break_points:
        bias = m.anchor_value - m.slopes[0] * m.break_points[0]
    else:
        bias = m.anchor_value
    return ReLUNetwork(Fraction(m.slopes[0]), bias, units)


def symmetry_report(net: ReLUNetwork) -> SymmetryReport:
    """Dead units, combinatorial type, and the symmetry of the induced map."""
    dead = []
    for idx, (w, b, a) in enumerate(net.units):
        if a == 0:
            dead.append(DeadUnit(idx, "zero-coefficient"))
        elif w == 0:
            dead.append(DeadUnit(idx, "zero-weight"))
    _, _, terms = _folded_terms(net)
    by_threshold = {}
    for theta, jump, idx in terms:
        by_threshold.setdefault(theta, []).append((jump, idx))
    flagged = {d.index for d in dead}
    for theta, contribs in by_threshold.items():
        if sum(j for j, _ in contribs) == 0:
            for _, idx in contribs:
                if idx not in flagged:
                    dead.append(DeadUnit(idx, "cancelled-threshold"))
                    flagged.add(idx)

    conv = network_to_map(net)
    if not conv.admissible:
        return SymmetryReport(tuple(sorted(dead, key=lambda d: d.index)),
                              False, conv.problems, None, None, None)
    point = moduli.moduli_point(conv.map)
    ctype = canonical_type(point.seq)
    aut = moduli.automorphisms(point)
    gap_condition = None
    if ctype.palindromic and point.seq.k == 4:
        l1, l3 = point.gaps[0], point.gaps[2]
        gap_condition = (l1, l3, l1 == l3)
    return SymmetryReport(tuple(sorted(dead, key=lambda d: d.index)),
                          True, (), ctype.label, aut.kind, gap_condition)
