"""Fixed 1-D patterns: points plus closed bounded intervals on the line.

A pattern is normalised on construction: coordinates share one quadratic
field, intervals are pairwise disjoint (touching ones merge, closed-set
semantics), and no point lies inside an interval.  Instances of the
dominating-set problem are translate lists over one pattern.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import (
    FieldMismatchError,
    NumberParseError,
    QuadNum,
    format_number,
    parse_number,
    quad,
    ratio_is_rational,
)


class PatternError(ValueError):
    """Raised on structurally invalid patterns."""


class UnboundedIntervalError(PatternError):
    """Unbounded intervals make every pair of translates intersect, so the
    minimum dominating set is a single vertex; such patterns are rejected
    at parse time and handled by that shortcut instead."""


class Classification(enum.Enum):
    HAS_INTERVAL = "HasInterval"
    RATIONAL_POINTS = "RationalPoints"
    IRRATIONAL_POINTS = "IrrationalPoints"


@dataclass(frozen=True)
class Pattern1D:
    points: tuple[QuadNum, ...]
    intervals: tuple[tuple[QuadNum, QuadNum], ...]
    _point_diffs: frozenset = field(default=None, compare=False, repr=False)

    @property
    def field_d(self) -> int:
        ds = {c.d for c in self._coords() if c.d != 1}
        return ds.pop() if ds else 1

    def _coords(self):
        for p in self.points:
            yield p
        for lo, hi in self.intervals:
            yield lo
            yield hi

    def leftmost(self) -> QuadNum:
        return min(self._coords())

    def rightmost(self) -> QuadNum:
        return max(self._coords())

    def point_diffs(self) -> frozenset:
        """All pairwise differences p - p' of pattern points (cached)."""
        if self._point_diffs is None:
            diffs = frozenset(p - q for p in self.points for q in self.points)
            object.__setattr__(self, "_point_diffs", diffs)
        return self._point_diffs


def make_pattern(points=(), intervals=()) -> Pattern1D:
    """Build a canonical pattern; merges touching intervals, drops covered
    points, and checks the single-field invariant."""
    pts = [_as_num(p) for p in points]
    ivs = []
    for lo, hi in intervals:
        lo, hi = _as_num(lo), _as_num(hi)
        if (hi - lo).sign() <= 0:
            raise PatternError("interval endpoints must satisfy lo < hi")
        ivs.append((lo, hi))
    if not pts and not ivs:
        raise PatternError("pattern must contain at least one point or interval")
    ds = {c.d for c in pts if c.d != 1}
    ds |= {c.d for lo, hi in ivs for c in (lo, hi) if c.d != 1}
    if len(ds) > 1:
        raise FieldMismatchError(f"pattern mixes fields {sorted(ds)}")
    ivs.sort(key=lambda iv: _sort_key(iv[0]))
    merged: list[tuple[QuadNum, QuadNum]] = []
    for lo, hi in ivs:
        if merged and (lo - merged[-1][1]).sign() <= 0:  # closed sets touch
            prev_lo, prev_hi = merged[-1]
            merged[-1] = (prev_lo, max(prev_hi, hi))
        else:
            merged.append((lo, hi))
    kept = []
    for p in pts:
        inside = any((p - lo).sign() >= 0 and (hi - p).sign() >= 0 for lo, hi in merged)
        if not inside and p not in kept:
            kept.append(p)
    kept.sort(key=_sort_key)
    return Pattern1D(tuple(kept), tuple(merged))


def _as_num(value) -> QuadNum:
    if isinstance(value, QuadNum):
        return value
    return quad(Fraction(value))


@functools.total_ordering
class _SortWrapper:
    """Orders QuadNums across fields via exact sign tests."""

    __slots__ = ("x",)

    def __init__(self, x):
        self.x = x

    def __lt__(self, other):
        return (self.x - other.x).sign() < 0

    def __eq__(self, other):
        return self.x == other.x


def _sort_key(x: QuadNum):
    return _SortWrapper(x)


def translate_pattern(q: Pattern1D, t: QuadNum) -> Pattern1D:
    return Pattern1D(
        tuple(p + t for p in q.points),
        tuple((lo + t, hi + t) for lo, hi in q.intervals),
    )


def scale_pattern(q: Pattern1D, factor: QuadNum) -> Pattern1D:
    if _as_num(factor).sign() <= 0:
        raise PatternError("scale factor must be positive")
    factor = _as_num(factor)
    return make_pattern(
        [p * factor for p in q.points],
        [(lo * factor, hi * factor) for lo, hi in q.intervals],
    )


def normalize(q: Pattern1D, rescale: bool = False) -> Pattern1D:
    """Shift so the leftmost coordinate is 0; optionally rescale so the
    longest interval has length 1 (requires an interval)."""
    shifted = translate_pattern(q, -q.leftmost())
    if not rescale:
        return shifted
    if not q.intervals:
        raise PatternError("cannot rescale a pattern without intervals")
    longest = max((hi - lo for lo, hi in shifted.intervals), key=_sort_key)
    return scale_pattern(shifted, 1 / longest)


def span(q: Pattern1D) -> QuadNum:
    return q.rightmost() - q.leftmost()


def w_ratio(q: Pattern1D) -> QuadNum:
    if not q.intervals:
        raise PatternError("w-ratio undefined for point-only patterns")
    longest = max((hi - lo for lo, hi in q.intervals), key=_sort_key)
    return span(q) / longest


def translates_intersect(q: Pattern1D, x, y) -> bool:
    """Whether (x+Q) and (y+Q) share a point, closed-set semantics."""
    delta = _as_num(y) - _as_num(x)
    if not q.intervals:
        return delta in q.point_diffs()
    # point of x-copy meets point of y-copy: p == p' + delta
    if any((p - pp - delta).sign() == 0 for p in q.points for pp in q.points):
        return True
    for lo, hi in q.intervals:
        for p in q.points:
            # point p of the x-copy inside the shifted interval, and vice versa
            if (p - (lo + delta)).sign() >= 0 and ((hi + delta) - p).sign() >= 0:
                return True
            if ((p + delta) - lo).sign() >= 0 and (hi - (p + delta)).sign() >= 0:
                return True
    for lo1, hi1 in q.intervals:
        for lo2, hi2 in q.intervals:
            if (hi2 + delta - lo1).sign() >= 0 and (hi1 - (lo2 + delta)).sign() >= 0:
                return True
    return False


def classify(q: Pattern1D) -> Classification:
    return classify_with_witness(q)[0]


def classify_with_witness(q: Pattern1D) -> tuple[Classification, QuadNum | None]:
    """Trichotomy verdict; for irrational point patterns also returns one
    irrational distance ratio as a witness."""
    if q.intervals:
        return Classification.HAS_INTERVAL, None
    pts = q.points
    if len(pts) < 2:
        return Classification.RATIONAL_POINTS, None
    base = pts[1] - pts[0]
    for p in pts[2:]:
        if not ratio_is_rational(p - pts[0], base):
            return Classification.IRRATIONAL_POINTS, (p - pts[0]) / base
    return Classification.RATIONAL_POINTS, None


# ---------------------------------------------------------------------------
# File formats.  Pattern file: `point <num>` / `interval <num> <num>` lines.
# Instance file: an optional pattern block followed by `translate <num>` lines.
# ---------------------------------------------------------------------------


def _parse_coord(token: str, lineno: int) -> QuadNum:
    if token in ("inf", "+inf", "-inf"):
        raise UnboundedIntervalError(
            f"line {lineno}: unbounded interval; every pair of translates of "
            "such a pattern intersects, so the answer is a single vertex"
        )
    try:
        return parse_number(token)
    except NumberParseError as exc:
        raise PatternError(f"line {lineno}: {exc}") from exc


def parse_pattern(text: str) -> Pattern1D:
    pattern, translates = parse_instance(text)
    if pattern is None:
        raise PatternError("no pattern items found")
    if translates:
        raise PatternError("unexpected translate lines in a pattern file")
    return pattern


def parse_instance(text: str) -> tuple[Pattern1D | None, list[QuadNum]]:
    points, intervals, translates = [], [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        if kind == "point" and len(args) == 1:
            points.append(_parse_coord(args[0], lineno))
        elif kind == "interval" and len(args) == 2:
            intervals.append(
                (_parse_coord(args[0], lineno), _parse_coord(args[1], lineno))
            )
        elif kind == "translate" and len(args) == 1:
            translates.append(_parse_coord(args[0], lineno))
        else:
            raise PatternError(f"line {lineno}: unrecognised line {raw!r}")
    pattern = make_pattern(points, intervals) if (points or intervals) else None
    return pattern, translates


def format_pattern(q: Pattern1D) -> str:
    lines = [f"point {format_number(p)}" for p in q.points]
    lines += [
        f"interval {format_number(lo)} {format_number(hi)}" for lo, hi in q.intervals
    ]
    return "\n".join(lines) + "\n"


def format_instance(q: Pattern1D | None, translates) -> str:
    head = format_pattern(q) if q is not None else ""
    body = "".join(f"translate {format_number(_as_num(t))}\n" for t in translates)
    return head + body
