"""Exact 2-D primitives over rational coordinates.

Closed-region semantics throughout: touching boundaries count as
intersecting, matching the 1-D convention.  All predicates are built
from exact orientation tests on ``Fraction`` coordinates; construction
of a ``Polygon`` validates simplicity and counter-clockwise order once,
translation reuses the validation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import QuadNum


class GeometryError(ValueError):
    pass


def _frac(value) -> Fraction:
    if isinstance(value, QuadNum):
        if not value.is_rational:
            raise GeometryError("polygon machinery expects rational coordinates")
        return value.rat
    return Fraction(value)


@dataclass(frozen=True, order=True)
class Vec2:
    x: Fraction
    y: Fraction

    @staticmethod
    def of(x, y) -> "Vec2":
        return Vec2(_frac(x), _frac(y))

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def scale(self, factor) -> "Vec2":
        f = Fraction(factor)
        return Vec2(self.x * f, self.y * f)

    def cross(self, other: "Vec2") -> Fraction:
        return self.x * other.y - self.y * other.x

    def dot(self, other: "Vec2") -> Fraction:
        return self.x * other.x + self.y * other.y

    def norm2(self) -> Fraction:
        return self.x * self.x + self.y * self.y


Point2 = Vec2  # points and vectors share the representation


def orient(a: Vec2, b: Vec2, c: Vec2) -> int:
    """Sign of the signed area of triangle abc: +1 left turn, -1 right."""
    v = (b - a).cross(c - a)
    return (v > 0) - (v < 0)


def on_segment(p: Vec2, a: Vec2, b: Vec2) -> bool:
    """Whether p lies on the closed segment ab (collinearity + box test)."""
    if orient(a, b, p) != 0:
        return False
    return (
        min(a.x, b.x) <= p.x <= max(a.x, b.x)
        and min(a.y, b.y) <= p.y <= max(a.y, b.y)
    )


def segments_intersect(a: Vec2, b: Vec2, c: Vec2, d: Vec2) -> bool:
    """Closed segments ab and cd share at least one point."""
    d1 = orient(c, d, a)
    d2 = orient(c, d, b)
    d3 = orient(a, b, c)
    d4 = orient(a, b, d)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return (
        (d1 == 0 and on_segment(a, c, d))
        or (d2 == 0 and on_segment(b, c, d))
        or (d3 == 0 and on_segment(c, a, b))
        or (d4 == 0 and on_segment(d, a, b))
    )


def segments_cross_properly(a: Vec2, b: Vec2, c: Vec2, d: Vec2) -> bool:
    return orient(c, d, a) * orient(c, d, b) < 0 and orient(a, b, c) * orient(a, b, d) < 0


class PointLocation(enum.Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class Polygon:
    """Simple polygon, vertices in counter-clockwise order.

    Validation (simplicity, orientation) runs once in :func:`polygon`;
    translates produced by :meth:`translate` skip it.
    """

    vertices: tuple[Vec2, ...]
    bbox: tuple[Fraction, Fraction, Fraction, Fraction]

    def edges(self):
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def translate(self, v: Vec2) -> "Polygon":
        x0, y0, x1, y1 = self.bbox
        return Polygon(
            tuple(p + v for p in self.vertices),
            (x0 + v.x, y0 + v.y, x1 + v.x, y1 + v.y),
        )


def _bbox(vertices) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    xs = [v.x for v in vertices]
    ys = [v.y for v in vertices]
    return min(xs), min(ys), max(xs), max(ys)


def polygon(points) -> Polygon:
    """Validated constructor: >= 3 vertices, CCW, simple."""
    vs = tuple(p if isinstance(p, Vec2) else Vec2.of(*p) for p in points)
    if len(vs) < 3:
        raise GeometryError("polygon needs at least 3 vertices")
    if len(set(vs)) != len(vs):
        raise GeometryError("polygon has repeated vertices")
    area2 = Fraction(0)
    for i in range(len(vs)):
        area2 += vs[i].cross(vs[(i + 1) % len(vs)])
    if area2 == 0:
        raise GeometryError("degenerate polygon (zero area)")
    if area2 < 0:
        raise GeometryError("vertices must be in counter-clockwise order")
    edges = [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]
    n = len(edges)
    for i in range(n):
        a, b = edges[i]
        for j in range(i + 1, n):
            c, d = edges[j]
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            if adjacent:
                # adjacent edges may only meet at the shared vertex
                if orient(a, b, d if j == i + 1 else c) == 0:
                    # collinear neighbors: forbid doubling back
                    u = b - a
                    w = d - c
                    if u.dot(w) < 0:
                        raise GeometryError("polygon folds back on itself")
                continue
            if segments_intersect(a, b, c, d):
                raise GeometryError("polygon edges self-intersect")
    return Polygon(vs, _bbox(vs))


def bboxes_overlap(p: Polygon, q: Polygon) -> bool:
    ax0, ay0, ax1, ay1 = p.bbox
    bx0, by0, bx1, by1 = q.bbox
    return ax0 <= bx1 and bx0 <= ax1 and ay0 <= by1 and by0 <= ay1


def point_in_polygon(pt: Vec2, poly: Polygon) -> PointLocation:
    x0, y0, x1, y1 = poly.bbox
    if not (x0 <= pt.x <= x1 and y0 <= pt.y <= y1):
        return PointLocation.OUTSIDE
    for a, b in poly.edges():
        if on_segment(pt, a, b):
            return PointLocation.BOUNDARY
    inside = False
    for a, b in poly.edges():
        # half-open crossing rule; exact arithmetic keeps it robust
        if (a.y > pt.y) != (b.y > pt.y):
            # x-coordinate of the edge at height pt.y, compared exactly
            t = (pt.y - a.y) / (b.y - a.y)
            cx = a.x + t * (b.x - a.x)
            if pt.x < cx:
                inside = not inside
    return PointLocation.INSIDE if inside else PointLocation.OUTSIDE


def polygons_intersect(p: Polygon, q: Polygon) -> bool:
    """Closed regions share a point: vertex containment or edge contact."""
    if not bboxes_overlap(p, q):
        return False
    for v in p.vertices:
        if point_in_polygon(v, q) is not PointLocation.OUTSIDE:
            return True
    for v in q.vertices:
        if point_in_polygon(v, p) is not PointLocation.OUTSIDE:
            return True
    for a, b in p.edges():
        for c, d in q.edges():
            if segments_intersect(a, b, c, d):
                return True
    return False


def interiors_intersect(p: Polygon, q: Polygon) -> bool:
    """Open regions share a point (the intersection has positive area)."""
    if not bboxes_overlap(p, q):
        return False
    for v in p.vertices:
        if point_in_polygon(v, q) is PointLocation.INSIDE:
            return True
    for v in q.vertices:
        if point_in_polygon(v, p) is PointLocation.INSIDE:
            return True
    for a, b in p.edges():
        for c, d in q.edges():
            if segments_cross_properly(a, b, c, d):
                return True
            if orient(a, b, c) == 0 and orient(a, b, d) == 0:
                # collinear edges with same direction and positive overlap
                # leave both interiors on the same side of the carrier line
                if (b - a).dot(d - c) > 0 and _collinear_overlap_positive(a, b, c, d):
                    return True
    # edge midpoints of one polygon strictly inside the other catch
    # poke-through configurations without strictly-inside vertices
    for a, b in p.edges():
        mid = Vec2((a.x + b.x) / 2, (a.y + b.y) / 2)
        if point_in_polygon(mid, q) is PointLocation.INSIDE:
            return True
    for c, d in q.edges():
        mid = Vec2((c.x + d.x) / 2, (c.y + d.y) / 2)
        if point_in_polygon(mid, p) is PointLocation.INSIDE:
            return True
    return False


def _collinear_overlap_positive(a, b, c, d) -> bool:
    u = b - a
    t0 = u.dot(c - a)
    t1 = u.dot(d - a)
    lo, hi = min(t0, t1), max(t0, t1)
    return max(Fraction(0), min(u.norm2(), hi)) > max(Fraction(0), lo)


def contact_class(p: Polygon, q: Polygon) -> str:
    """Coarse classification of the closed intersection: 'disjoint',
    'point', 'segment', or 'area'.  Used to order construction candidates;
    exactness of downstream results never depends on it."""
    if not polygons_intersect(p, q):
        return "disjoint"
    if interiors_intersect(p, q):
        return "area"
    for a, b in p.edges():
        for c, d in q.edges():
            if orient(a, b, c) == 0 and orient(a, b, d) == 0:
                if _collinear_overlap_positive(a, b, c, d):
                    return "segment"
    return "point"


def convex_hull(points) -> Polygon:
    """Andrew monotone chain; raises on fewer than 3 extreme points."""
    pts = sorted(set(Vec2.of(*p) if not isinstance(p, Vec2) else p for p in points))
    if len(pts) < 3:
        raise GeometryError("hull needs at least 3 distinct points")

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orient(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise GeometryError("degenerate hull (collinear points)")
    return polygon(hull)


def diameter(poly: Polygon) -> tuple[Vec2, Vec2]:
    """Vertex pair maximising squared distance; lexicographic tie-break."""
    best = None
    best_d = None
    vs = poly.vertices
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            pair = tuple(sorted((vs[i], vs[j])))
            d2 = (vs[i] - vs[j]).norm2()
            if best_d is None or d2 > best_d or (d2 == best_d and pair < best):
                best, best_d = pair, d2
    return best


def squared_distance_point_segment(p: Vec2, a: Vec2, b: Vec2) -> Fraction:
    u = b - a
    t = u.dot(p - a)
    if t <= 0:
        return (p - a).norm2()
    n2 = u.norm2()
    if t >= n2:
        return (p - b).norm2()
    proj = Vec2(a.x + u.x * t / n2, a.y + u.y * t / n2)
    return (p - proj).norm2()


def min_vertex_edge_distance2(p: Polygon, q: Polygon) -> Fraction:
    """Minimum squared vertex-to-edge distance between two polygons."""
    best = None
    for v in p.vertices:
        for c, d in q.edges():
            d2 = squared_distance_point_segment(v, c, d)
            best = d2 if best is None else min(best, d2)
    for v in q.vertices:
        for c, d in p.edges():
            d2 = squared_distance_point_segment(v, c, d)
            best = d2 if best is None else min(best, d2)
    return best


# -- polygon file format: `poly <k>` then k `v <num> <num>` lines -----------


def format_polygon(poly: Polygon) -> str:
    from .exactnum import format_number, quad

    lines = [f"poly {len(poly.vertices)}"]
    for v in poly.vertices:
        lines.append(f"v {format_number(quad(v.x))} {format_number(quad(v.y))}")
    return "\n".join(lines) + "\n"


def parse_polygon(text: str) -> Polygon:
    polys = parse_polygons(text)
    if len(polys) != 1:
        raise GeometryError(f"expected exactly one polygon, found {len(polys)}")
    return polys[0]


def parse_polygons(text: str) -> list[Polygon]:
    from .exactnum import parse_number

    polys = []
    expected = 0
    current: list[Vec2] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "poly" and len(parts) == 2:
            if current or expected:
                raise GeometryError(f"line {lineno}: previous polygon incomplete")
            expected = int(parts[1])
        elif parts[0] == "v" and len(parts) == 3 and expected:
            current.append(
                Vec2.of(parse_number(parts[1]), parse_number(parts[2]))
            )
            if len(current) == expected:
                polys.append(polygon(current))
                current, expected = [], 0
        else:
            raise GeometryError(f"line {lineno}: unrecognised line {raw!r}")
    if current or expected:
        raise GeometryError("trailing incomplete polygon")
    return polys
