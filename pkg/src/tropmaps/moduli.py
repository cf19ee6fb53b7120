"""Moduli coordinates, automorphisms, stratification and degenerations.

A point of the degree-3 moduli space is a slope sequence together with
the gap lengths between consecutive break points and the position of the
first break point; the anchor value is quotiented away (post-composition
by target translations).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .plcore import (TropicalMap, break_values, evaluate, is_admissible,
                     ramification)
from .rational import parse_rational
from .types_enum import SlopeSequence

TRIVIAL = "trivial"
Z2 = "z2"


class InvalidDegeneration(ValueError):
    """Merging break points whose jumps cancel leaves the moduli space."""


@dataclass(frozen=True)
class ModuliPoint:
    seq: SlopeSequence
    gaps: tuple
    position: Fraction

    def __post_init__(self):
        gaps = tuple(parse_rational(g) for g in self.gaps)
        object.__setattr__(self, "gaps", gaps)
        object.__setattr__(self, "position", parse_rational(self.position))
        if len(gaps) != self.seq.k - 1:
            raise ValueError("need k-1 gap lengths")
        if any(g <= 0 for g in gaps):
            raise ValueError("gap lengths must be positive")

    def break_points(self):
        xs = [self.position]
        for g in self.gaps:
            xs.append(xs[-1] + g)
        return tuple(xs)


@dataclass(frozen=True)
class AutGroup:
    kind: str  # TRIVIAL or Z2
    reflection_center: Optional[Fraction] = None
    target_shift: Optional[Fraction] = None


@dataclass(frozen=True)
class StratumDescriptor:
    aut: str
    cell_dimension: int
    symmetric_locus: bool
    label: str  # generic | symmetric | symmetric-boundary | intermediate


@dataclass(frozen=True)
class WeightedTropicalCurve:
    """Metric path graph underlying a map: break-point vertices with
    ramification weights, bounded edges with (length, dilation), and two
    infinite leaves carrying the end dilations."""
    finite_vertices: tuple  # (position, weight)
    bounded_edges: tuple    # (length, dilation)
    leaf_dilations: tuple   # (s_0, s_k)


def moduli_point(m: TropicalMap) -> ModuliPoint:
    """Forget the anchor (target-translation quotient) and pass to gap coordinates."""
    report = is_admissible(m, 3)
    if not report:
        raise ValueError("inadmissible map: " + "; ".join(report.reasons))
    seq = SlopeSequence(3, m.slopes)
    gaps = tuple(b - a for a, b in zip(m.break_points, m.break_points[1:]))
    return ModuliPoint(seq, gaps, m.break_points[0])


def representative_map(p: ModuliPoint) -> TropicalMap:
    """The anchor-0 map of a moduli point; inverse to moduli_point."""
    return TropicalMap(p.break_points(), p.seq.slopes, Fraction(0))


def _check_reflection(m: TropicalMap, center, shift):
    """Verify phi(2c - x) = -phi(x) + b at breaks and segment midpoints.

    For piecewise-linear maps agreement on that sample set is agreement
    everywhere, and the arithmetic is exact.
    """
    samples = list(m.break_points)
    for a, b in zip(m.break_points, m.break_points[1:]):
        samples.append((a + b) / 2)
    samples.append(m.break_points[0] - 1)
    samples.append(m.break_points[-1] + 1)
    return all(evaluate(m, 2 * center - x) == -evaluate(m, x) + shift
               for x in samples)


def automorphisms(p: ModuliPoint) -> AutGroup:
    """Z/2 exactly when both the slope sequence and the gap vector are palindromic."""
    if p.seq.slopes != tuple(reversed(p.seq.slopes)):
        return AutGroup(TRIVIAL)
    if p.gaps != tuple(reversed(p.gaps)):
        return AutGroup(TRIVIAL)
    m = representative_map(p)
    xs = m.break_points
    center = (xs[0] + xs[-1]) / 2
    vals = break_values(m)
    shift = vals[0] + vals[-1]
    if not _check_reflection(m, center, shift):
        raise AssertionError("palindromic data without a working reflection")
    return AutGroup(Z2, center, shift)


def stratum(p: ModuliPoint) -> StratumDescriptor:
    aut = automorphisms(p)
    k = p.seq.k
    if k == 2:
        return StratumDescriptor(aut.kind, k, aut.kind == Z2, "symmetric-boundary")
    if k == 3:
        return StratumDescriptor(aut.kind, k, False, "intermediate")
    if aut.kind == Z2:
        return StratumDescriptor(aut.kind, k, True, "symmetric")
    return StratumDescriptor(aut.kind, k, False, "generic")


def degenerate(p: ModuliPoint, i: int) -> ModuliPoint:
    """Collapse gap i (1-based): merge break points x_i and x_{i+1}.

    Valid only when the two jumps at the colliding breaks share a sign,
    so the merged jump keeps the total variation at 4; otherwise the
    limit violates the degree-3 ramification count and the move is
    rejected.
    """
    k = p.seq.k
    if not 1 <= i <= k - 1:
        raise ValueError("merge index out of range")
    jumps = p.seq.jumps
    a, b = jumps[i - 1], jumps[i]
    if (a > 0) != (b > 0):
        raise InvalidDegeneration(
            "jumps %d and %d cancel; the limit has reduced total variation" % (a, b))
    slopes = p.seq.slopes[:i] + p.seq.slopes[i + 1:]
    gaps = p.gaps[:i - 1] + p.gaps[i:]
    return ModuliPoint(SlopeSequence(3, slopes), gaps, p.position)


def weighted_curve(p: ModuliPoint) -> WeightedTropicalCurve:
    m = representative_map(p)
    weights = ramification(m).weights
    vertices = tuple(zip(m.break_points, weights))
    edges = tuple(zip(p.gaps, p.seq.slopes[1:-1]))
    return WeightedTropicalCurve(vertices, edges,
                                 (p.seq.slopes[0], p.seq.slopes[-1]))


def curve_automorphisms(c: WeightedTropicalCurve) -> str:
    """Z/2 when lengths, dilations and vertex weights are all palindromic."""
    lengths = tuple(l for l, _ in c.bounded_edges)
    dilations = tuple(d for _, d in c.bounded_edges)
    weights = tuple(w for _, w in c.finite_vertices)
    leaves = c.leaf_dilations
    if (lengths == tuple(reversed(lengths))
            and dilations == tuple(reversed(dilations))
            and weights == tuple(reversed(weights))
            and leaves == tuple(reversed(leaves))):
        return Z2
    return TRIVIAL
