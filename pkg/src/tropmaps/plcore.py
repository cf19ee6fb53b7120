"""Piecewise-linear maps with integer slopes on the tropical projective line.

A map is stored as (break_points, slopes, anchor_value): strictly
increasing rational break points, one slope per maximal linear segment
(one more slope than break points), and the value at the first break
point (at 0 for break-free maps).  Continuity holds by construction;
every other value is obtained by integrating the slopes from the anchor.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .rational import NEG_INF, POS_INF, is_infinite, parse_rational


def _coerce_scalar(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    return x  # left as-is so validate() can flag it


def _coerce_slope(s):
    # Integer slopes collapse to int; non-integer rationals are kept so
    # that validate() and the ReLU admissibility report can see them.
    s = _coerce_scalar(s)
    if isinstance(s, Fraction) and s.denominator == 1:
        return int(s)
    return s


@dataclass(frozen=True)
class TropicalMap:
    break_points: tuple
    slopes: tuple
    anchor_value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "break_points",
                           tuple(_coerce_scalar(x) for x in self.break_points))
        object.__setattr__(self, "slopes",
                           tuple(_coerce_slope(s) for s in self.slopes))
        object.__setattr__(self, "anchor_value", _coerce_scalar(self.anchor_value))

    @property
    def k(self):
        """Number of break points."""
        return len(self.break_points)


@dataclass(frozen=True)
class TropicalPolynomial:
    """Coefficients indexed by exponent; -inf marks an absent monomial."""
    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(c if is_infinite(c) else _coerce_scalar(c)
                       for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if not any(not is_infinite(c) for c in coeffs):
            raise ValueError("tropical polynomial needs a finite coefficient")
        top = coeffs[-1] if coeffs else NEG_INF
        if is_infinite(top):
            raise ValueError("top coefficient must be finite")


@dataclass(frozen=True)
class RamificationProfile:
    weights: tuple
    total: int


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    problems: tuple

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    reasons: tuple

    def __bool__(self):
        return self.admissible


def validate(m: TropicalMap) -> ValidationReport:
    """Report every structural defect of a map; never raises."""
    problems = []
    if len(m.slopes) != len(m.break_points) + 1:
        problems.append("slope count must be break count + 1")
    for x in m.break_points:
        if not isinstance(x, Fraction):
            problems.append("non-rational break point: %r" % (x,))
    for s in m.slopes:
        if not isinstance(s, int):
            problems.append("non-integer slope: %r" % (s,))
    if not isinstance(m.anchor_value, Fraction):
        problems.append("non-rational anchor: %r" % (m.anchor_value,))
    for a, b in zip(m.break_points, m.break_points[1:]):
        if isinstance(a, Fraction) and isinstance(b, Fraction) and a >= b:
            problems.append("break points not strictly increasing at %s" % (b,))
    for a, b in zip(m.slopes, m.slopes[1:]):
        if a == b:
            problems.append("zero jump at slope %r (break is not a kink)" % (a,))
    return ValidationReport(not problems, tuple(problems))


def break_values(m: TropicalMap):
    """Values of the map at its break points, derived from the anchor."""
    vals = []
    v = m.anchor_value
    for j, x in enumerate(m.break_points):
        if j > 0:
            v = v + m.slopes[j] * (x - m.break_points[j - 1])
        vals.append(v)
    return vals


def evaluate(m: TropicalMap, x):
    """Evaluate at a rational or at +/-inf (extended-value boundaries)."""
    if is_infinite(x):
        s = m.slopes[-1] if x > 0 else m.slopes[0]
        if x > 0:
            if s > 0:
                return POS_INF
            if s < 0:
                return NEG_INF
            return break_values(m)[-1] if m.break_points else m.anchor_value
        if s > 0:
            return NEG_INF
        if s < 0:
            return POS_INF
        return break_values(m)[0] if m.break_points else m.anchor_value

    x = _coerce_scalar(x)
    if not m.break_points:
        return m.anchor_value + m.slopes[0] * x
    vals = break_values(m)
    if x <= m.break_points[0]:
        return vals[0] + m.slopes[0] * (x - m.break_points[0])
    if x >= m.break_points[-1]:
        return vals[-1] + m.slopes[-1] * (x - m.break_points[-1])
    j = bisect_right(m.break_points, x) - 1
    return vals[j] + m.slopes[j + 1] * (x - m.break_points[j])


def ramification(m: TropicalMap) -> RamificationProfile:
    weights = tuple(abs(b - a) for a, b in zip(m.slopes, m.slopes[1:]))
    return RamificationProfile(weights, sum(weights))


def is_admissible(m: TropicalMap, degree: int) -> AdmissibilityReport:
    """Degree-d admissibility: end slopes d, all slopes >= 1, total ramification 2d-2."""
    reasons = []
    report = validate(m)
    if not report:
        reasons.extend(report.problems)
    else:
        if m.slopes[0] != degree or m.slopes[-1] != degree:
            reasons.append("end slopes (%r, %r) differ from degree %d"
                           % (m.slopes[0], m.slopes[-1], degree))
        if any(s < 1 for s in m.slopes):
            reasons.append("non-positive slope present")
        total = ramification(m).total
        if total != 2 * degree - 2:
            reasons.append("total ramification %d != %d" % (total, 2 * degree - 2))
    return AdmissibilityReport(not reasons, tuple(reasons))


def critical_values(m: TropicalMap):
    """Images of the break points (the branch points of the map)."""
    return break_values(m)


def apply_target_automorphism(m: TropicalMap, sign: int, shift) -> TropicalMap:
    """Post-compose with y -> sign*y + shift."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    shift = _coerce_scalar(shift)
    return TropicalMap(m.break_points,
                       tuple(sign * s for s in m.slopes),
                       sign * m.anchor_value + shift)


def apply_source_automorphism(m: TropicalMap, sign: int, shift) -> TropicalMap:
    """Pre-compose with x -> sign*x + shift, i.e. return x -> phi(sign*x + shift)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    shift = _coerce_scalar(shift)
    if sign == 1:
        if not m.break_points:
            return TropicalMap((), m.slopes,
                               m.anchor_value + m.slopes[0] * shift)
        return TropicalMap(tuple(x - shift for x in m.break_points),
                           m.slopes, m.anchor_value)
    # Reflection: new break points are shift - x_i in reverse order, the
    # slope sequence reverses and negates, and the new first break maps
    # to the old last break value.
    if not m.break_points:
        return TropicalMap((), (-m.slopes[0],),
                           m.anchor_value + m.slopes[0] * shift)
    new_breaks = tuple(shift - x for x in reversed(m.break_points))
    new_slopes = tuple(-s for s in reversed(m.slopes))
    new_anchor = break_values(m)[-1]
    return TropicalMap(new_breaks, new_slopes, new_anchor)


def maps_equal(a: TropicalMap, b: TropicalMap) -> bool:
    return (a.break_points == b.break_points
            and a.slopes == b.slopes
            and a.anchor_value == b.anchor_value)


def tropical_polynomial_evaluate(p: TropicalPolynomial, x):
    """max_i (a_i + i*x) over the finite coefficients."""
    x = _coerce_scalar(x)
    return max(c + i * x for i, c in enumerate(p.coefficients)
               if not is_infinite(c))


def envelope(p: TropicalPolynomial) -> TropicalMap:
    """Upper envelope of the lines y = i*x + a_i as a piecewise-linear map.

    Terms that are never strictly maximal are dropped; coincident corner
    points merge.  Slopes of the result are the surviving exponents.
    """
    lines = [(i, c) for i, c in enumerate(p.coefficients) if not is_infinite(c)]
    hull = []       # (slope, intercept), slopes strictly increasing
    corners = []    # corner x between hull[j] and hull[j+1]
    for m_new, b_new in lines:
        while hull:
            m_top, b_top = hull[-1]
            # x from which the new line dominates the current top
            x_star = Fraction(b_top - b_new, m_new - m_top)
            if corners and x_star <= corners[-1]:
                hull.pop()
                corners.pop()
                continue
            break
        if hull:
            m_top, b_top = hull[-1]
            corners.append(Fraction(b_top - b_new, m_new - m_top))
        hull.append((m_new, b_new))
    slopes = tuple(m for m, _ in hull)
    if not corners:
        return TropicalMap((), slopes, hull[0][1])
    m0, b0 = hull[0]
    anchor = m0 * corners[0] + b0
    return TropicalMap(tuple(corners), slopes, anchor)


def _slope_between(m: TropicalMap, lo, hi):
    """Slope of m on an interval containing no break of m."""
    if not m.break_points:
        return m.slopes[0]
    mid = (lo + hi) / 2
    j = bisect_right(m.break_points, mid)
    return m.slopes[j]


def piecewise_difference(a: TropicalMap, b: TropicalMap) -> TropicalMap:
    """The function a - b in map form, with zero jumps removed."""
    breaks = sorted(set(a.break_points) | set(b.break_points))
    slopes = []
    for j in range(len(breaks) + 1):
        lo = breaks[j - 1] if j > 0 else (breaks[0] - 1 if breaks else Fraction(0))
        hi = breaks[j] if j < len(breaks) else (breaks[-1] + 1 if breaks else Fraction(0))
        slopes.append(_slope_between(a, lo, hi) - _slope_between(b, lo, hi))
    # merge segments across vanishing jumps
    kept_breaks, kept_slopes = [], [slopes[0]]
    for x, s in zip(breaks, slopes[1:]):
        if s != kept_slopes[-1]:
            kept_breaks.append(x)
            kept_slopes.append(s)
    if not kept_breaks:
        anchor = evaluate(a, 0) - evaluate(b, 0)
        return TropicalMap((), tuple(kept_slopes), anchor)
    anchor = evaluate(a, kept_breaks[0]) - evaluate(b, kept_breaks[0])
    return TropicalMap(tuple(kept_breaks), tuple(kept_slopes), anchor)


def tropicalize_rational(p: TropicalPolynomial, q: TropicalPolynomial) -> TropicalMap:
    """trop(p) - trop(q): difference of the two upper envelopes.

    The result is a valid TropicalMap but need not be admissible of any
    degree; callers classify separately.
    """
    return piecewise_difference(envelope(p), envelope(q))
