"""Unit-disk domination via exact radius-2 circle arrangements.

A set D of centers dominates center p iff the union of radius-2 disks
around D covers p.  The deterministic solver decomposes the arrangement
of radius-2 circles around D vertically (walls shot up and down from
circle/circle intersections and extreme points, clipped at the first
circle hit), reads the number of input points per face from a lookup
table built over at-most-4-circle subsets, and accepts when the
in-union faces account for all points.

Faces carry discrete canonical keys (arc identities plus bounding event
descriptors).  A face of the k-circle decomposition is also a face of
the decomposition of its own defining circles, with the same key, so the
table built from small tuples answers queries from large arrangements;
every key references at most four circles.  Exotic degeneracies that
would break that bound raise an internal-consistency error rather than
miscount.

All geometry is exact: event coordinates live in quadratic extensions,
and every point/arc/event comparison reduces to a quadratic sign test
(membership of an event point in a third circle never nests radicals).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import QuadNum, cmp_cross, quad
from .geom2d import Vec2


class DiskError(ValueError):
    pass


class InternalInvariantError(RuntimeError):
    pass


RADIUS2 = 2  # radius of the coverage circles around chosen centers

BELOW, ON, ABOVE = -1, 0, 1


@dataclass(frozen=True)
class DiskInstance:
    centers: tuple[Vec2, ...]

    def __post_init__(self):
        if len(set(self.centers)) != len(self.centers):
            raise DiskError("centers must be pairwise distinct")

    @property
    def n(self) -> int:
        return len(self.centers)


def make_instance(points) -> DiskInstance:
    return DiskInstance(
        tuple(p if isinstance(p, Vec2) else Vec2.of(*p) for p in points)
    )


def dominates_pair(c1: Vec2, c2: Vec2) -> bool:
    """Unit disks centered at c1 and c2 intersect: squared distance <= 4."""
    return (c1 - c2).norm2() <= 4


def _circle_intersections(c1: Vec2, c2: Vec2):
    """Intersections of the radius-2 circles, sorted by (x, y); [] if
    farther than 4 apart, one point at tangency."""
    dx, dy = c2.x - c1.x, c2.y - c1.y
    d2 = dx * dx + dy * dy
    if d2 > 16:
        return []
    mx, my = (c1.x + c2.x) / 2, (c1.y + c2.y) / 2
    if d2 == 16:
        return [(quad(mx), quad(my))]
    t = QuadNum.sqrt_fraction(Fraction(16 - d2, 4) / d2)
    p1 = (quad(mx) - t * quad(dy), quad(my) + t * quad(dx))
    p2 = (quad(mx) + t * quad(dy), quad(my) - t * quad(dx))
    c = cmp_cross(p1[0], p2[0]) or cmp_cross(p1[1], p2[1])
    return [p1, p2] if c < 0 else [p2, p1]


def _rep_circles(rep) -> set:
    if rep[0] == "ext":
        return {rep[1]}
    return {rep[1], rep[2]}


def _rel_point_arc(x: QuadNum, y: QuadNum, center: Vec2, branch: int) -> int:
    """Position of the point relative to the circle's arc at the same x:
    BELOW / ON / ABOVE by y-value.  Decided from disk membership plus the
    side of the horizontal center line, so no nested radicals appear."""
    if x.is_rational and y.is_rational:
        fx = x.rat - center.x
        fy = y.rat - center.y
        v = fx * fx + fy * fy - 4
        pos = (v > 0) - (v < 0)
        sy = (fy > 0) - (fy < 0)
    else:
        dx = x - quad(center.x)
        dy = y - quad(center.y)
        pos = (dx * dx + dy * dy - 4).sign()
        sy = dy.sign()
    if pos < 0:
        return BELOW if branch == 1 else ABOVE
    if pos == 0:
        if sy == 0:
            return ON  # extreme point, arcs coincide
        if branch == 1:
            return ON if sy > 0 else BELOW
        return ON if sy < 0 else ABOVE
    return ABOVE if sy > 0 else BELOW


class _QuadKey:
    """Sort adapter for QuadNums across different quadratic fields."""

    __slots__ = ("x",)

    def __init__(self, x: QuadNum):
        self.x = x

    def __lt__(self, other):
        return cmp_cross(self.x, other.x) < 0

    def __eq__(self, other):
        return cmp_cross(self.x, other.x) == 0


def _rational_between(lo: QuadNum | None, hi: QuadNum | None) -> Fraction:
    """Exact rational strictly inside the open interval, by dyadic
    bisection anchored at integer bounds."""
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return Fraction(hi.floor() - 1)
    if hi is None:
        return Fraction(lo.floor() + 2)
    a = Fraction(lo.floor())
    b = Fraction(hi.floor() + 1)
    while True:
        m = (a + b) / 2
        qm = quad(m)
        if cmp_cross(qm, lo) <= 0:
            a = m
        elif cmp_cross(qm, hi) >= 0:
            b = m
        else:
            return m


@dataclass
class _Group:
    y: QuadNum
    canon: tuple
    reps: list


@dataclass
class _Column:
    x: QuadNum
    groups: list


@dataclass
class _Slab:
    sample: Fraction
    arcs: list  # (circle, branch) sorted bottom to top; branch 0 lower, 1 upper
    gap_depths: list  # depth of gap below arcs[i]; last entry: above all arcs


@dataclass
class Face:
    key: tuple
    dim: int
    circles: tuple
    in_union: bool
    data: dict = field(default_factory=dict, repr=False)


class _LazyRel:
    """Caches point-vs-arc positions for one column on demand."""

    __slots__ = ("col", "centers", "cache")

    def __init__(self, col, centers):
        self.col = col
        self.centers = centers
        self.cache = {}

    def __getitem__(self, key):
        got = self.cache.get(key)
        if got is None:
            gi, c, br = key
            got = _rel_point_arc(
                self.col.x, self.col.groups[gi].y, self.centers[c], br
            )
            self.cache[key] = got
        return got


class Arrangement:
    """Clipped vertical decomposition of the radius-2 circles of a subset."""

    def __init__(self, centers, ids):
        self.centers = list(centers)
        self.ids = tuple(sorted(ids))
        if not self.ids:
            raise DiskError("arrangement needs at least one circle")
        self._build_columns()
        self._build_slabs()
        self._column_rel = [self._rel_table(ci) for ci in range(len(self.cols))]
        self._strict_cache = [self._strict_alive(ci) for ci in range(len(self.cols))]
        self._build_gap_runs()
        self._build_arc_runs()
        self._build_wall_faces()

    # -- structure ----------------------------------------------------------

    def _build_columns(self):
        events = []
        for c in self.ids:
            ctr = self.centers[c]
            events.append((("ext", c, 0), quad(ctr.x - RADIUS2), quad(ctr.y)))
            events.append((("ext", c, 1), quad(ctr.x + RADIUS2), quad(ctr.y)))
        for i, j in itertools.combinations(self.ids, 2):
            for branch, (x, y) in enumerate(
                _circle_intersections(self.centers[i], self.centers[j])
            ):
                events.append((("isect", i, j, branch), x, y))
        events.sort(key=lambda e: _QuadKey(e[1]))
        cols: list[_Column] = []
        bucket: list = []
        for rep, x, y in events:
            if bucket and cmp_cross(bucket[0][1], x) != 0:
                cols.append(self._make_column(bucket))
                bucket = []
            bucket.append((rep, x, y))
        cols.append(self._make_column(bucket))
        self.cols = cols

    @staticmethod
    def _make_column(bucket) -> _Column:
        x = bucket[0][1]
        groups: list[_Group] = []
        for rep, _, y in sorted(bucket, key=lambda e: e[0]):
            for g in groups:
                if cmp_cross(g.y, y) == 0:
                    g.reps.append(rep)
                    g.canon = min(g.canon, rep)
                    break
            else:
                groups.append(_Group(y, rep, [rep]))
        groups.sort(key=lambda g: _QuadKey(g.y))
        return _Column(x, groups)

    def _arc_value(self, c: int, branch: int, x) -> QuadNum:
        ctr = self.centers[c]
        root = QuadNum.sqrt_fraction(4 - (Fraction(x) - ctr.x) ** 2)
        return quad(ctr.y) + root if branch == 1 else quad(ctr.y) - root

    def _build_slabs(self):
        xs = [col.x for col in self.cols]
        bounds = [(None, xs[0])]
        bounds += [(xs[i], xs[i + 1]) for i in range(len(xs) - 1)]
        bounds += [(xs[-1], None)]
        self.slabs = []
        for lo, hi in bounds:
            sample = _rational_between(lo, hi)
            arcs = []
            for c in self.ids:
                a = self.centers[c].x
                if a - RADIUS2 < sample < a + RADIUS2:
                    arcs.append((c, 0))
                    arcs.append((c, 1))
            vals = {arc: self._arc_value(arc[0], arc[1], sample) for arc in arcs}
            arcs.sort(key=lambda arc: (_QuadKey(vals[arc]), arc))
            for k in range(len(arcs) - 1):
                if cmp_cross(vals[arcs[k]], vals[arcs[k + 1]]) == 0:
                    raise InternalInvariantError("arc tie inside an open slab")
            depths = [0]
            for arc in arcs:
                depths.append(depths[-1] + (1 if arc[1] == 0 else -1))
            self.slabs.append(_Slab(sample, arcs, depths))

    def _strict_alive(self, ci: int) -> list[int]:
        x = self.cols[ci].x
        out = []
        for c in self.ids:
            d = x - quad(self.centers[c].x)
            if (d * d - 4).sign() < 0:
                out.append(c)
        return out

    def _weak_alive(self, ci: int) -> list[int]:
        x = self.cols[ci].x
        out = []
        for c in self.ids:
            d = x - quad(self.centers[c].x)
            if (d * d - 4).sign() <= 0:
                out.append(c)
        return out

    def _rel_table(self, ci: int):
        """(weakly alive circles, lazy rel[group_index, circle, branch]).

        Weak aliveness includes circles whose extreme sits exactly on the
        column; their degenerate arcs still answer rel queries exactly.
        """
        col = self.cols[ci]
        alive = self._weak_alive(ci)
        return alive, _LazyRel(col, self.centers)

    # -- cut rules ------------------------------------------------------------

    def _gap_cut_rep(self, ci: int, below, above):
        """Canonical rep of an event weakly inside the gap closure at the
        column, preferring reps that name a bounding circle; None if the
        column does not cut the gap."""
        alive, rel = self._column_rel[ci]
        best = None
        for gi, g in enumerate(self.cols[ci].groups):
            lo_ok = below is None or rel[(gi, below[0], below[1])] in (ON, ABOVE)
            hi_ok = above is None or rel[(gi, above[0], above[1])] in (ON, BELOW)
            if lo_ok and hi_ok:
                cand = self._prefer_rep(g, below, above)
                if best is None or cand < best:
                    best = cand
        return best

    @staticmethod
    def _prefer_rep(group: _Group, *arcs):
        bounding = {arc[0] for arc in arcs if arc is not None}
        best = None
        for rep in group.reps:
            cand = (not (_rep_circles(rep) & bounding), rep)
            if best is None or cand < best:
                best = cand
        return best[1]

    def _arc_cut_rep(self, ci: int, arc):
        _, rel = self._column_rel[ci]
        best = None
        for gi, g in enumerate(self.cols[ci].groups):
            if rel[(gi, arc[0], arc[1])] == ON:
                cand = self._prefer_rep(g, arc)
                if best is None or cand < best:
                    best = cand
        return best

    # -- runs -----------------------------------------------------------------

    @staticmethod
    def _slab_gaps(slab: _Slab):
        arcs = slab.arcs
        if not arcs:
            return [((None, None), 0)]
        gaps = [((None, arcs[0]), 0)]
        for k in range(len(arcs) - 1):
            gaps.append(((arcs[k], arcs[k + 1]), slab.gap_depths[k + 1]))
        gaps.append(((arcs[-1], None), 0))
        return gaps

    def _build_gap_runs(self):
        self.gap_runs = []
        active: dict = {}
        for si, slab in enumerate(self.slabs):
            here = dict(self._slab_gaps(slab))
            survivors: dict = {}
            for pair, run in active.items():
                if pair in here and self._gap_cut_rep(si - 1, *pair) is None:
                    run["end"] = si
                    survivors[pair] = run
                else:
                    run["right"] = self._require_cut(
                        self._gap_cut_rep(si - 1, *pair), si - 1
                    )
                    self.gap_runs.append(run)
            for pair, depth in here.items():
                if pair in survivors:
                    continue
                left = None
                if si > 0:
                    left = self._require_cut(self._gap_cut_rep(si - 1, *pair), si - 1)
                survivors[pair] = {
                    "pair": pair,
                    "start": si,
                    "end": si,
                    "depth": depth,
                    "left": left,
                    "right": None,
                }
            active = survivors
        self.gap_runs.extend(active.values())
        for run in self.gap_runs:
            below, above = run["pair"]
            circles = set()
            for arc in (below, above):
                if arc is not None:
                    circles.add(arc[0])
            for rep in (run["left"], run["right"]):
                if rep is not None:
                    circles |= _rep_circles(rep)
            run["key"] = (
                "gap",
                below,
                above,
                run["left"],
                run["right"],
            )
            run["circles"] = tuple(sorted(circles))

    def _require_cut(self, rep, ci):
        if rep is None:
            raise InternalInvariantError(
                f"run boundary without a cutting event at column {ci}"
            )
        return rep

    def _build_arc_runs(self):
        self.arc_runs = []
        active: dict = {}
        for si, slab in enumerate(self.slabs):
            present = set(slab.arcs)
            survivors: dict = {}
            for arc, run in active.items():
                if arc in present and self._arc_cut_rep(si - 1, arc) is None:
                    run["end"] = si
                    survivors[arc] = run
                else:
                    run["right"] = self._require_cut(
                        self._arc_cut_rep(si - 1, arc), si - 1
                    )
                    self.arc_runs.append(run)
            for arc in slab.arcs:
                if arc in survivors:
                    continue
                left = self._require_cut(self._arc_cut_rep(si - 1, arc), si - 1)
                survivors[arc] = {
                    "arc": arc,
                    "start": si,
                    "end": si,
                    "left": left,
                    "right": None,
                }
            active = survivors
        if active:
            raise InternalInvariantError("arc run survived past the last extreme")
        for run in self.arc_runs:
            circles = {run["arc"][0]}
            for rep in (run["left"], run["right"]):
                circles |= _rep_circles(rep)
            run["key"] = ("arcpiece", run["arc"], run["left"], run["right"])
            run["circles"] = tuple(sorted(circles))

    # -- wall faces -------------------------------------------------------------

    def _first_arc(self, ci: int, gi: int, above: bool):
        """Nearest genuine arc strictly above/below group gi at column ci,
        scanning arcs of strictly-alive circles in right-slab order."""
        _, rel = self._column_rel[ci]
        strict = set(self._strict_cache[ci])
        order = [a for a in self.slabs[ci + 1].arcs if a[0] in strict]
        if not above:
            order = list(reversed(order))
        want = BELOW if above else ABOVE
        for arc in order:
            if rel[(gi, arc[0], arc[1])] == want:
                return arc
        return None

    def _seg_depth(self, ci: int, gi: int, above: bool) -> int:
        alive, rel = self._column_rel[ci]
        depth = 0
        for c in alive:
            lo = rel[(gi, c, 0)]
            hi = rel[(gi, c, 1)]
            if above and lo in (ON, ABOVE) and hi == BELOW:
                depth += 1
            if not above and hi in (ON, BELOW) and lo == ABOVE:
                depth += 1
        return depth

    def _arc_between_groups(self, ci: int, gi_low: int, gi_high: int) -> bool:
        alive, rel = self._column_rel[ci]
        for c in alive:
            for br in (0, 1):
                if rel[(gi_low, c, br)] == BELOW and rel[(gi_high, c, br)] == ABOVE:
                    return True
        return False

    def _build_wall_faces(self):
        self.vertex_faces = []
        self.wall_segs = []
        for ci, col in enumerate(self.cols):
            for g in col.groups:
                self.vertex_faces.append(
                    {
                        "col": ci,
                        "key": ("vertex", g.canon),
                        "y": g.y,
                        "circles": tuple(sorted(_rep_circles(g.canon))),
                    }
                )
            groups = col.groups
            for gi, g in enumerate(groups):
                # Upward segment from g.  When the next event group is
                # directly reachable (no arc strictly between), the shared
                # segment is emitted once, from the upper group's down pass,
                # keyed canonically by the "walldown" form.
                shares_up = gi + 1 < len(groups) and not self._arc_between_groups(
                    ci, gi, gi + 1
                )
                if not shares_up:
                    arc = self._first_arc(ci, gi, above=True)
                    bound = ("arc", arc) if arc is not None else ("inf",)
                    self._add_seg(ci, g, gi, True, bound, None)
                shares_down = gi > 0 and not self._arc_between_groups(
                    ci, gi - 1, gi
                )
                if shares_down:
                    other = groups[gi - 1]
                    self._add_seg(
                        ci, g, gi, False, ("vertex", other.canon), other.y
                    )
                else:
                    arc = self._first_arc(ci, gi, above=False)
                    bound = ("arc", arc) if arc is not None else ("inf",)
                    self._add_seg(ci, g, gi, False, bound, None)

    def _add_seg(self, ci, group, gi, above, bound, bound_y):
        key = ("wallup" if above else "walldown", group.canon, bound)
        circles = set(_rep_circles(group.canon))
        if bound[0] == "arc":
            circles.add(bound[1][0])
        elif bound[0] == "vertex":
            circles |= _rep_circles(bound[1])
        self.wall_segs.append(
            {
                "col": ci,
                "key": key,
                "y": group.y,
                "above": above,
                "bound": bound,
                "bound_y": bound_y,
                "circles": tuple(sorted(circles)),
                "depth": self._seg_depth(ci, gi, above),
            }
        )

    # -- faces -------------------------------------------------------------------

    def faces(self) -> list[Face]:
        out = []
        for run in self.gap_runs:
            out.append(
                Face(
                    key=run["key"],
                    dim=2,
                    circles=run["circles"],
                    in_union=run["depth"] > 0,
                    data={"run": run},
                )
            )
        for run in self.arc_runs:
            out.append(
                Face(
                    key=run["key"],
                    dim=1,
                    circles=run["circles"],
                    in_union=True,
                    data={"run": run},
                )
            )
        seen = set()
        for seg in self.wall_segs:
            if seg["key"] in seen:
                raise InternalInvariantError("duplicate wall segment key")
            seen.add(seg["key"])
            out.append(
                Face(
                    key=seg["key"],
                    dim=1,
                    circles=seg["circles"],
                    in_union=seg["depth"] > 0,
                    data={"seg": seg},
                )
            )
        for v in self.vertex_faces:
            out.append(
                Face(
                    key=v["key"],
                    dim=0,
                    circles=v["circles"],
                    in_union=True,
                    data={"vertex": v},
                )
            )
        keys = [f.key for f in out]
        if len(set(keys)) != len(keys):
            raise InternalInvariantError("face keys are not unique")
        return out

    # -- bounds helpers ------------------------------------------------------------

    def _run_x_bounds(self, run):
        lo = self.cols[run["start"] - 1].x if run["start"] > 0 else None
        hi = self.cols[run["end"]].x if run["end"] < len(self.cols) else None
        return lo, hi

    # -- point location --------------------------------------------------------------

    def locate_key(self, p: Vec2) -> tuple:
        px, py = quad(Fraction(p.x)), quad(Fraction(p.y))
        ci = None
        si = len(self.slabs) - 1
        for i, col in enumerate(self.cols):
            c = cmp_cross(px, col.x)
            if c == 0:
                ci = i
                break
            if c < 0:
                si = i
                break
        if ci is not None:
            return self._locate_on_column(ci, px, py)
        return self._locate_in_slab(si, p, px, py)

    def _locate_on_column(self, ci: int, px, py) -> tuple:
        col = self.cols[ci]
        for g in col.groups:
            if cmp_cross(g.y, py) == 0:
                return ("vertex", g.canon)
        # on an arc whose run crosses this column?
        for c in self._strict_cache[ci]:
            ctr = self.centers[c]
            if (Fraction(px.rat) - ctr.x) ** 2 + (Fraction(py.rat) - ctr.y) ** 2 == 4:
                branch = 1 if (py - quad(ctr.y)).sign() > 0 else 0
                for run in self.arc_runs:
                    if run["arc"] == (c, branch) and run["start"] <= ci < ci + 1 <= run["end"]:
                        return run["key"]
                raise InternalInvariantError("point on arc but no covering run")
        # wall segment?
        for seg in self.wall_segs:
            if seg["col"] != ci:
                continue
            if self._seg_contains_y(seg, py):
                return seg["key"]
        # interior of a gap run crossing the column
        for run in self.gap_runs:
            if not (run["start"] <= ci < ci + 1 <= run["end"]):
                continue
            if self._gap_rel_ok(run["pair"], px, py):
                return run["key"]
        raise InternalInvariantError("point location fell through at a column")

    def _seg_contains_y(self, seg, py) -> bool:
        base = seg["y"]
        c = cmp_cross(py, base)
        if seg["above"] and c <= 0:
            return False
        if not seg["above"] and c >= 0:
            return False
        bound = seg["bound"]
        if bound[0] == "inf":
            return True
        if bound[0] == "vertex":
            limit = seg["bound_y"]
        else:
            arc = bound[1]
            x = self.cols[seg["col"]].x
            if not x.is_rational:
                raise InternalInvariantError(
                    "rational point on an irrational wall column"
                )
            limit = self._arc_value(arc[0], arc[1], x.rat)
        return cmp_cross(py, limit) < 0 if seg["above"] else cmp_cross(py, limit) > 0

    def _gap_rel_ok(self, pair, px, py) -> bool:
        below, above = pair
        if below is not None:
            if _rel_point_arc(px, py, self.centers[below[0]], below[1]) != ABOVE:
                return False
        if above is not None:
            if _rel_point_arc(px, py, self.centers[above[0]], above[1]) != BELOW:
                return False
        return True

    def _locate_in_slab(self, si: int, p: Vec2, px, py) -> tuple:
        slab = self.slabs[si]
        for c in self.ids:
            ctr = self.centers[c]
            if (p.x - ctr.x) ** 2 + (p.y - ctr.y) ** 2 == 4:
                branch = 1 if p.y > ctr.y else 0
                for run in self.arc_runs:
                    if run["arc"] == (c, branch) and run["start"] <= si <= run["end"]:
                        return run["key"]
                raise InternalInvariantError("point on arc but no covering run")
        below, above = None, None
        for arc in slab.arcs:
            r = _rel_point_arc(px, py, self.centers[arc[0]], arc[1])
            if r == BELOW:
                above = arc
                break
            below = arc
        for run in self.gap_runs:
            if run["pair"] == (below, above) and run["start"] <= si <= run["end"]:
                return run["key"]
        raise InternalInvariantError("point location fell through in a slab")

    # -- independent membership test (used by the partition property) ------------

    def face_contains(self, face: Face, p: Vec2) -> bool:
        px, py = quad(Fraction(p.x)), quad(Fraction(p.y))
        if face.dim == 0:
            v = face.data["vertex"]
            col = self.cols[v["col"]]
            return cmp_cross(px, col.x) == 0 and cmp_cross(py, v["y"]) == 0
        if face.dim == 1 and "seg" in face.data:
            seg = face.data["seg"]
            col = self.cols[seg["col"]]
            if cmp_cross(px, col.x) != 0:
                return False
            return self._seg_contains_y(seg, py)
        if face.dim == 1:
            run = face.data["run"]
            lo, hi = self._run_x_bounds(run)
            if lo is None or hi is None:
                raise InternalInvariantError("arc run with unbounded x-range")
            if cmp_cross(px, lo) <= 0 or cmp_cross(px, hi) >= 0:
                return False
            c, branch = run["arc"]
            ctr = self.centers[c]
            if (p.x - ctr.x) ** 2 + (p.y - ctr.y) ** 2 != 4:
                return False
            side = (py - quad(ctr.y)).sign()
            return side > 0 if branch == 1 else side < 0
        run = face.data["run"]
        lo, hi = self._run_x_bounds(run)
        if lo is not None and cmp_cross(px, lo) <= 0:
            return False
        if hi is not None and cmp_cross(px, hi) >= 0:
            return False
        return self._gap_rel_ok(run["pair"], px, py)


# ---------------------------------------------------------------------------
# lookup table and coverage counting
# ---------------------------------------------------------------------------

MAX_TUPLE = 4


class CoverageTable:
    """Face-key -> number of input points, merged over circle subsets.

    The same key arising from two subsets names the same geometric face,
    so merged counts must agree; disagreement is an internal error.
    """

    def __init__(self, instance: DiskInstance):
        self.instance = instance
        self.counts: dict = {}
        self.built: set = set()

    def ensure_subsets(self, ids, max_tuple: int = MAX_TUPLE):
        ids = tuple(sorted(ids))
        for size in range(1, min(len(ids), max_tuple) + 1):
            for combo in itertools.combinations(ids, size):
                if combo in self.built:
                    continue
                self._tabulate(combo)
                self.built.add(combo)

    def _tabulate(self, combo):
        arr = Arrangement(self.instance.centers, combo)
        local = {f.key: 0 for f in arr.faces()}
        for p in self.instance.centers:
            local[arr.locate_key(p)] += 1
        for key, cnt in local.items():
            prev = self.counts.get(key)
            if prev is None:
                self.counts[key] = cnt
            elif prev != cnt:
                raise InternalInvariantError(
                    f"conflicting counts for face key {key}: {prev} vs {cnt}"
                )

    def face_count(self, key) -> int:
        try:
            return self.counts[key]
        except KeyError:
            raise InternalInvariantError(
                f"face descriptor missing from lookup table: {key}"
            ) from None


def build_lookup(
    instance: DiskInstance, ids=None, max_tuple: int = MAX_TUPLE
) -> CoverageTable:
    """Tabulate point counts for every face of every <=4-circle subset."""
    table = CoverageTable(instance)
    table.ensure_subsets(range(instance.n) if ids is None else ids, max_tuple)
    return table


def coverage_count(instance: DiskInstance, dom_ids, table: CoverageTable | None = None) -> int:
    """Number of input centers covered by the union of radius-2 disks
    around the chosen subset, summed from the lookup table over the
    in-union faces of the subset's decomposition."""
    dom_ids = tuple(sorted(set(dom_ids)))
    if not dom_ids:
        return 0
    for c in dom_ids:
        if not 0 <= c < instance.n:
            raise DiskError(f"center index {c} out of range")
    if table is None:
        table = CoverageTable(instance)
    table.ensure_subsets(dom_ids)
    arr = Arrangement(instance.centers, dom_ids)
    total = 0
    for f in arr.faces():
        if not f.in_union:
            continue
        if len(f.circles) > MAX_TUPLE:
            raise InternalInvariantError(
                f"face defined by more than {MAX_TUPLE} circles: {f.key}"
            )
        total += table.face_count(f.key)
    return total


def direct_coverage_count(instance: DiskInstance, dom_ids) -> int:
    """O(|D| * n) distance scan; the independent oracle for coverage_count."""
    total = 0
    for p in instance.centers:
        if any(dominates_pair(p, instance.centers[d]) for d in set(dom_ids)):
            total += 1
    return total


def xp_solve(instance: DiskInstance, k: int, table: CoverageTable | None = None):
    """First k-subset (lexicographic) whose radius-2 disks cover all
    centers; None if none exists.  Exact via the lookup machinery."""
    if k < 0:
        raise DiskError("k must be non-negative")
    if k == 0:
        return [] if instance.n == 0 else None
    if table is None:
        table = build_lookup(instance)
    for combo in itertools.combinations(range(instance.n), k):
        if coverage_count(instance, combo, table) == instance.n:
            return list(combo)
    return None


# -- instance file format: `disk <num> <num>` per line -------------------------


def parse_disks(text: str) -> DiskInstance:
    from .exactnum import parse_number

    pts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] != "disk" or len(parts) != 3:
            raise DiskError(f"line {lineno}: unrecognised line {raw!r}")
        x = parse_number(parts[1])
        y = parse_number(parts[2])
        pts.append(Vec2.of(x, y))
    if not pts:
        raise DiskError("no disk lines found")
    return make_instance(pts)


def format_disks(instance: DiskInstance) -> str:
    from .exactnum import format_number, quad as _q

    return "".join(
        f"disk {format_number(_q(p.x))} {format_number(_q(p.y))}\n"
        for p in instance.centers
    )
