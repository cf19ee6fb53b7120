"""Branch configurations and the degree-3 Hurwitz fiber.

Over a generic configuration of four branch points the branch map has
six geometric preimages (one per four-break slope sequence, counting the
two orientations of the non-palindromic type III separately) and weighted
degree nine, using the per-type multiplicities 2, 1, 2, 2, 2 for types
I through V.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .moduli import ModuliPoint
from .rational import parse_rational
from .types_enum import SlopeSequence, canonical_type, registry_sequence

TYPE_MULTIPLICITY = {"I": 2, "II": 1, "III": 2, "IV": 2, "V": 2}

WEIGHTED_DEGREE = 9


class NonGenericConfiguration(ValueError):
    """Coincident branch points are outside the generic locus."""


@dataclass(frozen=True)
class QuotientedModuliPoint:
    canonical_seq: SlopeSequence
    gaps: tuple
    reversed_orientation: bool

    def __post_init__(self):
        object.__setattr__(self, "gaps",
                           tuple(parse_rational(g) for g in self.gaps))


@dataclass(frozen=True)
class BranchConfiguration:
    """Three consecutive distances between the four ordered branch points."""
    distances: tuple

    def __post_init__(self):
        ds = tuple(parse_rational(d) for d in self.distances)
        object.__setattr__(self, "distances", ds)
        if len(ds) != 3:
            raise ValueError("need exactly three distances")
        if any(d <= 0 for d in ds):
            raise NonGenericConfiguration("branch points must be distinct")

    @classmethod
    def from_branch_points(cls, points):
        pts = [parse_rational(p) for p in points]
        if len(pts) != 4:
            raise ValueError("need exactly four branch points")
        pts.sort()
        return cls(tuple(b - a for a, b in zip(pts, pts[1:])))


@dataclass(frozen=True)
class HurwitzFiberElement:
    seq: SlopeSequence
    gaps: tuple
    multiplicity: int


def quotient_source(p: ModuliPoint) -> QuotientedModuliPoint:
    """Drop the translation parameter and identify the two orientations.

    Orientation reversal acts by simultaneously reversing the slope
    sequence and the gap vector (the combined source-and-target
    reflection, which keeps slopes positive); the representative is the
    lexicographic minimum of the pair.
    """
    forward = (p.seq.slopes, p.gaps)
    backward = (tuple(reversed(p.seq.slopes)), tuple(reversed(p.gaps)))
    if backward < forward:
        return QuotientedModuliPoint(SlopeSequence(3, backward[0]),
                                     backward[1], True)
    return QuotientedModuliPoint(SlopeSequence(3, forward[0]), forward[1], False)


def branch_configuration(p: ModuliPoint) -> BranchConfiguration:
    """Consecutive critical-value distances d_i = s_i * l_i (interior slopes)."""
    if p.seq.k != 4:
        raise ValueError("branch configuration needs four simple critical points")
    interior = p.seq.slopes[1:-1]
    return BranchConfiguration(tuple(s * g for s, g in zip(interior, p.gaps)))


def _four_break_sequences():
    """The six full four-break slope sequences: types I-V plus reversed III."""
    seqs = [registry_sequence(label) for label in ("I", "II", "III", "IV", "V")]
    seqs.insert(3, registry_sequence("III").reversed_())
    return seqs


def fiber(b: BranchConfiguration):
    """Solve l_i = d_i / s_i for every four-break sequence.

    Interior slopes are positive, so every sequence yields exactly one
    solution with positive gaps: six geometric elements.  Multiplicities
    come from the per-type table and are shared by the two orientations
    of type III.
    """
    elements = []
    for seq in _four_break_sequences():
        interior = seq.slopes[1:-1]
        gaps = tuple(Fraction(d, s) for d, s in zip(b.distances, interior))
        assert all(g > 0 for g in gaps)
        label = canonical_type(seq).label
        elements.append(HurwitzFiberElement(seq, gaps, TYPE_MULTIPLICITY[label]))
    return elements


def hurwitz_number(b: BranchConfiguration) -> int:
    """Weighted sheet count of the branch map: the table value once per
    canonical type present in the fiber."""
    labels = {canonical_type(e.seq).label for e in fiber(b)}
    return sum(TYPE_MULTIPLICITY[label] for label in labels)
