"""Executable hardness constructions with built-in verification.

Five generators, each paired with the exact checks that certify the
construction on concrete instances:

* ``universal_pattern``: any graph as the intersection graph of integer
  translates of a power-of-4 point pattern;
* ``trigrid_realization``: the triangular grid as translates of a point
  pattern with an irrational distance ratio;
* triangular-grid cycle/path gadgets with dominating-set lower bounds;
* ``gadget_instance``: the grid-tiling gadget built from square-like
  base/offset vectors, with domination-pattern, connector, and
  cross-block disjointness checks;
* ``split_graph_polygons``: any split graph as convex polygons.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import graphcore
from .exactnum import QuadNum, quad
from .geom2d import (
    GeometryError,
    PointLocation,
    Polygon,
    Vec2,
    point_in_polygon,
    polygon,
    polygons_intersect,
)
from .pattern1d import (
    Classification,
    Pattern1D,
    classify,
    make_pattern,
    normalize,
    translates_intersect,
)
from .squarelike import SquareLikeCert


class ConstructionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# universal point patterns: any graph from powers of 4
# ---------------------------------------------------------------------------


def universal_pattern(g: graphcore.IntersectionGraph):
    """Pattern and translates whose intersection graph equals g.

    Vertices i get translates 4^(i+1); each edge contributes the two
    pattern points 4^(q+k) - 4^(a), 4^(q+k) - 4^(b) for its endpoint
    indices (1-based, a < b), with q = 2(n + m).
    """
    n = g.n
    edges = g.edges()
    m = len(edges)
    translates = [quad(4 ** (i + 1)) for i in range(n)]
    if m == 0:
        if len(set(translates)) != n:
            raise ConstructionError("duplicate translates in edgeless embedding")
        return make_pattern(points=[0]), translates
    points = []
    q = 2 * (n + m)
    for k, (i, j) in enumerate(edges, start=1):
        a, b = i + 1, j + 1
        points.append(4 ** (q + k) - 4**a)
        points.append(4 ** (q + k) - 4**b)
    return make_pattern(points=points), translates


def verify_universal(g: graphcore.IntersectionGraph) -> bool:
    pattern, translates = universal_pattern(g)
    built = graphcore.build(
        translates, lambda a, b: translates_intersect(pattern, a, b)
    )
    return graphcore.adjacency_equals(built, g.edges())


# ---------------------------------------------------------------------------
# triangular grid realization from an irrational distance ratio
# ---------------------------------------------------------------------------

TRI_OFFSETS = ((-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0))


@dataclass(frozen=True)
class TrigridRealization:
    pattern: Pattern1D
    x_star: QuadNum
    candidates: tuple[int, ...]
    feasible: tuple[int, ...]
    a_star: int
    y_star: QuadNum
    radius: int
    translates: dict


def shift_intersects_integer_lattice(q: Pattern1D, shift: QuadNum) -> bool:
    """Whether (shift + Q) meets (Z + Q): some shift + z - z' is an integer."""
    for z in q.points:
        for zp in q.points:
            v = shift + z - zp
            if v.is_rational and v.rat.denominator == 1:
                return True
    return False


def trigrid_realization(q: Pattern1D, radius: int) -> TrigridRealization:
    """Translate grid {j*y* + k} realising the triangular grid.

    y* = a'*x* where x* is the smallest irrational point of the shifted
    pattern and a' is the largest integer for which a*x* + Q still meets
    Z + Q.  Candidate multipliers come from the finitely many solutions
    of the irrational-coefficient equation over point pairs, so no
    unbounded search is needed.  The pattern is only shifted, not
    rescaled: rescaling permutes neither the candidate set nor the
    verified adjacency.
    """
    if classify(q) is not Classification.IRRATIONAL_POINTS:
        raise ConstructionError("pattern must have an irrational distance ratio")
    if radius < 1:
        raise ConstructionError("radius must be positive")
    qn = normalize(q)
    x_star = next(p for p in qn.points if p.irr != 0)
    candidates = {0}
    for z in qn.points:
        for zp in qn.points:
            diff = zp.irr - z.irr
            a = diff / x_star.irr
            if a.denominator == 1:
                candidates.add(int(a))
    feasible = sorted(
        a for a in candidates if shift_intersects_integer_lattice(qn, x_star * a)
    )
    if not feasible:
        raise ConstructionError("no feasible multiplier; realization failed")
    a_star = max(feasible)
    y_star = x_star * a_star
    grid = {}
    for j in range(-radius, radius + 1):
        for k in range(-radius, radius + 1):
            grid[(j, k)] = y_star * j + k
    return TrigridRealization(
        pattern=qn,
        x_star=x_star,
        candidates=tuple(sorted(candidates)),
        feasible=tuple(feasible),
        a_star=a_star,
        y_star=y_star,
        radius=radius,
        translates=grid,
    )


def verify_trigrid(q: Pattern1D, grid: dict, radius: int) -> bool:
    """Interior vertices see exactly the six triangular-grid neighbors
    among all index offsets within distance 2."""
    neighbors = set(TRI_OFFSETS)
    for j in range(-(radius - 1), radius):
        for k in range(-(radius - 1), radius):
            for da in range(-2, 3):
                for db in range(-2, 3):
                    if (da, db) == (0, 0):
                        continue
                    other = (j + da, k + db)
                    if other not in grid:
                        continue
                    got = translates_intersect(q, grid[(j, k)], grid[other])
                    if got != ((da, db) in neighbors):
                        return False
    return True


# ---------------------------------------------------------------------------
# triangular-grid graphs and the cycle/path gadget bounds
# ---------------------------------------------------------------------------


def tri_adjacent(u: tuple[int, int], v: tuple[int, int]) -> bool:
    return (v[0] - u[0], v[1] - u[1]) in TRI_OFFSETS


def tri_graph(vertices) -> graphcore.IntersectionGraph:
    """Induced subgraph of the triangular grid on the given Z^2 vertices."""
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        raise ConstructionError("repeated grid vertices")
    return graphcore.build(vs, tri_adjacent)


def cycle_gadget(k: int) -> list[tuple[int, int]]:
    """Induced cycle of length 3k in the triangular grid (corner-cut
    triangle ring of side k+1), vertices in cycle order."""
    if k < 1:
        raise ConstructionError("cycle parameter must be positive")
    s = k + 1
    ring = [(i, 0) for i in range(1, s)]
    ring += [(s - 1 - i, 1 + i) for i in range(s - 1)]
    ring += [(0, j) for j in range(s - 1, 0, -1)]
    return ring


def path_gadget(k: int) -> list[tuple[int, int]]:
    """Induced path with 3k+1 edges along a grid line."""
    if k < 1:
        raise ConstructionError("path parameter must be positive")
    return [(i, 0) for i in range(3 * k + 2)]


def trigrid_brute_force(g: graphcore.IntersectionGraph):
    return graphcore.brute_force_min_dominating(g)


def _min_dominating_intersection(g: graphcore.IntersectionGraph, among) -> int:
    """min |D ∩ among| over all dominating sets D, by subset enumeration."""
    full = (1 << g.n) - 1
    among_mask = 0
    for v in among:
        among_mask |= 1 << v
    best = g.n
    for mask in range(1 << g.n):
        covered = 0
        m = mask
        while m:
            low = m & -m
            covered |= g.neighbor_masks[low.bit_length() - 1]
            m ^= low
        if covered == full:
            best = min(best, bin(mask & among_mask).count("1"))
            if best == 0:
                break
    return best


def check_gadget_lower_bounds(kind: str, k: int) -> bool:
    """Cycle gadgets of length 3k need k dominators; paths of length 3k+1
    need k dominators among inner vertices.  Also verifies the disjoint
    closed neighborhoods of the cycle-position-2 (mod 3) vertices."""
    if k < 1 or 3 * k > 18:
        raise ConstructionError("gadget size out of the brute-force range")
    if kind == "cycle":
        order = cycle_gadget(k)
        g = tri_graph(order)
        if any(g.degree(v) != 2 for v in range(g.n)):
            return False
        size, _ = graphcore.brute_force_min_dominating(g)
        if size < k:
            return False
        special = [i for i in range(g.n) if i % 3 == 2]
    elif kind == "path":
        order = path_gadget(k)
        g = tri_graph(order)
        inner = list(range(1, g.n - 1))
        if _min_dominating_intersection(g, inner) < k:
            return False
        special = [3 * l + 2 for l in range(k)]
    else:
        raise ConstructionError(f"unknown gadget kind {kind!r}")
    closed = [g.neighbor_masks[v] for v in special]
    for a, b in itertools.combinations(closed, 2):
        if a & b:
            return False
    return True


# ---------------------------------------------------------------------------
# grid tiling gadgets from square-like vectors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GridTiling:
    k: int
    n: int
    cells: dict  # (a, b) -> frozenset of (x, y), 1-based coordinates

    def __post_init__(self):
        for a in range(1, self.k + 1):
            for b in range(1, self.k + 1):
                cell = self.cells.get((a, b))
                if not cell:
                    raise ConstructionError(f"cell ({a}, {b}) is empty or missing")
                for x, y in cell:
                    if not (1 <= x <= self.n and 1 <= y <= self.n):
                        raise ConstructionError(
                            f"cell ({a}, {b}) entry ({x}, {y}) out of range"
                        )


def iota1(j: int, n: int) -> int:
    """First coordinate of the pair encoded by j = (x-1)*n + y."""
    return 1 + (j - 1) // n


def iota2(j: int, n: int) -> int:
    return 1 + (j - 1) % n


def pair_index(x: int, y: int, n: int) -> int:
    return (x - 1) * n + y


def gt_brute_solve(gt: GridTiling):
    """First feasible tiling in lexicographic cell-choice order, or None."""
    order = [(a, b) for a in range(1, gt.k + 1) for b in range(1, gt.k + 1)]
    choice: dict = {}

    def backtrack(idx: int):
        if idx == len(order):
            return dict(choice)
        a, b = order[idx]
        for u in sorted(gt.cells[(a, b)]):
            if (a - 1, b) in choice and choice[(a - 1, b)][0] != u[0]:
                continue
            if (a, b - 1) in choice and choice[(a, b - 1)][1] != u[1]:
                continue
            choice[(a, b)] = u
            got = backtrack(idx + 1)
            if got is not None:
                return got
            del choice[(a, b)]
        return None

    return backtrack(0)


# Ring layout: block label -> cell in the gadget's local (b1, b2) grid.
# Y-blocks occupy the corners; the order Y1 X1 Y2 X2 Y3 ... X8 runs along
# the top edge rightward, down the right edge, leftward along the bottom
# and up the left edge, so that each X_l is adjacent to exactly Y_l and
# Y_{l+1} and the offset table below realises the domination pattern.
BLOCK_CELLS = {
    "Y1": (0, 4), "X1": (1, 4), "Y2": (2, 4), "X2": (3, 4), "Y3": (4, 4),
    "X3": (4, 3), "Y4": (4, 2), "X4": (4, 1), "Y5": (4, 0),
    "X5": (3, 0), "Y6": (2, 0), "X6": (1, 0), "Y7": (0, 0),
    "X7": (0, 1), "Y8": (0, 2), "X8": (0, 3),
}

GADGET_PITCH = 6  # grid units between gadget anchors; one separating row/column


def _x_offset(block: int, j: int, n: int) -> tuple[Fraction, Fraction]:
    i1, i2 = iota1(j, n), iota2(j, n)
    table = {
        1: (j, -i2),
        2: (j, i2),
        3: (-i1, -j),
        4: (i1, -j),
        5: (-j, i2),
        6: (-j, -i2),
        7: (i1, j),
        8: (-i1, j),
    }
    a, b = table[block]
    return Fraction(a), Fraction(b)


def _y_offset(block: int, j: int, n: int) -> tuple[Fraction, Fraction]:
    half = Fraction(1, 2)
    table = {
        1: (j + half, j + half),
        2: (j + half, -n),
        3: (j + half, -j - half),
        4: (-n, -j - half),
        5: (-j - half, -j - half),
        6: (-j - half, n),
        7: (-j - half, j + half),
        8: (n, j + half),
    }
    a, b = table[block]
    return Fraction(a), Fraction(b)


def _connector_offset(block: str, j: int, n: int) -> tuple[Fraction, Fraction]:
    half = Fraction(1, 2)
    nn = n * n
    table = {
        "A": (-j - half, -nn - 1),
        "B": (j + half, nn + 1),
        # The j-comparison lives in the second coordinate for the vertical
        # connectors, mirroring A/B; the first coordinate is structural.
        "C": (nn + 1, -j - half),
        "D": (-nn - 1, j + half),
    }
    a, b = table[block]
    return Fraction(a), Fraction(b)


@dataclass(frozen=True)
class GadgetTranslate:
    gadget: tuple[int, int]
    block: str
    index: int
    cell: tuple[int, int]  # global (b1, b2) grid cell
    ref: Vec2


@dataclass
class GadgetInstance:
    k: int
    n: int
    gt: GridTiling
    cert: SquareLikeCert
    poly: Polygon
    translates: list[GadgetTranslate]

    def polygon_of(self, t: GadgetTranslate) -> Polygon:
        return self.poly.translate(t.ref)

    def block_translates(self, gadget, block) -> list[GadgetTranslate]:
        return [
            t for t in self.translates if t.gadget == gadget and t.block == block
        ]


def gadget_instance(gt: GridTiling, cert: SquareLikeCert, poly: Polygon) -> GadgetInstance:
    """Build the k x k gadget instance for the grid tiling.

    Requires a certificate computed at parameter >= n^2 + 1 so that every
    offset difference stays inside the verified index ranges.
    """
    n = gt.n
    if cert.n < n * n + 1:
        raise ConstructionError(
            f"certificate parameter {cert.n} too small for n={n}; need >= {n * n + 1}"
        )

    def grid_point(col, row) -> Vec2:
        return Vec2(
            col * cert.b1.x + row * cert.b2.x, col * cert.b1.y + row * cert.b2.y
        )

    def ref_point(cell, alpha: Fraction, beta: Fraction) -> Vec2:
        base = grid_point(cell[0], cell[1])
        return Vec2(
            base.x + alpha * cert.u1.x + beta * cert.u2.x,
            base.y + alpha * cert.u1.y + beta * cert.u2.y,
        )

    translates: list[GadgetTranslate] = []
    for a in range(1, gt.k + 1):
        for b in range(1, gt.k + 1):
            ax, ay = (a - 1) * GADGET_PITCH, (b - 1) * GADGET_PITCH
            surviving = {pair_index(x, y, n) for x, y in gt.cells[(a, b)]}
            for l in range(1, 9):
                cx, cy = BLOCK_CELLS[f"X{l}"]
                cell = (ax + cx, ay + cy)
                for j in sorted(surviving):
                    alpha, beta = _x_offset(l, j, n)
                    translates.append(
                        GadgetTranslate(
                            (a, b), f"X{l}", j, cell, ref_point(cell, alpha, beta)
                        )
                    )
                cx, cy = BLOCK_CELLS[f"Y{l}"]
                cell = (ax + cx, ay + cy)
                for j in range(0, n * n + 1):
                    alpha, beta = _y_offset(l, j, n)
                    translates.append(
                        GadgetTranslate(
                            (a, b), f"Y{l}", j, cell, ref_point(cell, alpha, beta)
                        )
                    )
    for a in range(1, gt.k):  # horizontal connectors between (a,b) and (a+1,b)
        for b in range(1, gt.k + 1):
            ax, ay = (a - 1) * GADGET_PITCH, (b - 1) * GADGET_PITCH
            for block, row in (("A", 3), ("B", 1)):
                cell = (ax + 5, ay + row)
                for j in range(0, n + 1):
                    alpha, beta = _connector_offset(block, j, n)
                    translates.append(
                        GadgetTranslate(
                            (a, b), block, j, cell, ref_point(cell, alpha, beta)
                        )
                    )
    for a in range(1, gt.k + 1):  # vertical connectors between (a,b) and (a,b+1)
        for b in range(1, gt.k):
            ax, ay = (a - 1) * GADGET_PITCH, (b - 1) * GADGET_PITCH
            for block, col in (("C", 1), ("D", 3)):
                cell = (ax + col, ay + 5)
                for j in range(0, n + 1):
                    alpha, beta = _connector_offset(block, j, n)
                    translates.append(
                        GadgetTranslate(
                            (a, b), block, j, cell, ref_point(cell, alpha, beta)
                        )
                    )
    return GadgetInstance(gt.k, gt.n, gt, cert, poly, translates)


def check_gadget_domination_pattern(inst: GadgetInstance) -> bool:
    """Every surviving X_l(j) dominates exactly Y_l(j..n^2) and
    Y_{l+1}(0..j-1), verified geometrically."""
    nn = inst.n * inst.n
    for a in range(1, inst.k + 1):
        for b in range(1, inst.k + 1):
            for l in range(1, 9):
                nxt = 1 if l == 8 else l + 1
                for xt in inst.block_translates((a, b), f"X{l}"):
                    xp = inst.polygon_of(xt)
                    for yt in inst.block_translates((a, b), f"Y{l}"):
                        got = polygons_intersect(xp, inst.polygon_of(yt))
                        if got != (yt.index >= xt.index):
                            return False
                    for yt in inst.block_translates((a, b), f"Y{nxt}"):
                        got = polygons_intersect(xp, inst.polygon_of(yt))
                        if got != (yt.index < xt.index):
                            return False
    return True


def check_cross_block_disjoint(inst: GadgetInstance) -> bool:
    """Translates in blocks at L1 cell distance >= 2 never intersect."""
    by_cell: dict = {}
    for t in inst.translates:
        by_cell.setdefault(t.cell, []).append(t)
    cells = sorted(by_cell)
    for c1, c2 in itertools.combinations(cells, 2):
        if abs(c1[0] - c2[0]) + abs(c1[1] - c2[1]) < 2:
            continue
        for t1 in by_cell[c1]:
            p1 = inst.polygon_of(t1)
            for t2 in by_cell[c2]:
                if polygons_intersect(p1, inst.polygon_of(t2)):
                    return False
    return True


def canonical_set(inst: GadgetInstance, solution: dict) -> list[int]:
    """Indices (into inst.translates) of X_1(j)..X_8(j) per gadget, where
    j encodes the solution's cell choice."""
    wanted = {}
    for (a, b), (x, y) in solution.items():
        if (x, y) not in inst.gt.cells[(a, b)]:
            raise ConstructionError(
                f"solution picks ({x}, {y}) not in cell ({a}, {b})"
            )
        wanted[(a, b)] = pair_index(x, y, inst.n)
    out = []
    for idx, t in enumerate(inst.translates):
        if t.block.startswith("X") and t.gadget in wanted:
            if t.index == wanted[t.gadget]:
                out.append(idx)
    if len(out) != 8 * inst.k * inst.k:
        raise ConstructionError("canonical set incomplete")
    return out


def instance_graph(inst: GadgetInstance) -> graphcore.IntersectionGraph:
    polys = [inst.polygon_of(t) for t in inst.translates]
    return graphcore.build(polys, polygons_intersect, labels=inst.translates)


def check_connectors(inst: GadgetInstance, g_choice: int, h_choice: int, orientation: str) -> bool:
    """For one neighboring gadget pair and canonical choices j_G, j_H,
    the four connector blocks must be dominated exactly under the
    if-and-only-if conditions on iota_1 (horizontal) / iota_2 (vertical).

    The instance must contain the pair ((1,1),(2,1)) horizontally or
    ((1,1),(1,2)) vertically; only the relevant connector blocks and the
    adjacent canonical X translates are examined.
    """
    n = inst.n
    if orientation == "horizontal":
        g_id, h_id = (1, 1), (2, 1)
        blocks = {"A": ("X3", "X8"), "B": ("X4", "X7")}
        expected = {
            "A": iota1(g_choice, n) <= iota1(h_choice, n),
            "B": iota1(g_choice, n) >= iota1(h_choice, n),
        }
    elif orientation == "vertical":
        g_id, h_id = (1, 1), (1, 2)
        blocks = {"C": ("X1", "X6"), "D": ("X2", "X5")}
        expected = {
            "C": iota2(g_choice, n) <= iota2(h_choice, n),
            "D": iota2(g_choice, n) >= iota2(h_choice, n),
        }
    else:
        raise ConstructionError(f"unknown orientation {orientation!r}")
    for block, (g_block, h_block) in blocks.items():
        dominators = [
            t
            for t in inst.translates
            if (t.gadget == g_id and t.block == g_block and t.index == g_choice)
            or (t.gadget == h_id and t.block == h_block and t.index == h_choice)
        ]
        if len(dominators) != 2:
            raise ConstructionError("canonical dominators missing for connector")
        dom_polys = [inst.polygon_of(t) for t in dominators]
        conn = [t for t in inst.translates if t.gadget == g_id and t.block == block]
        if not conn:
            raise ConstructionError(f"connector block {block} missing")
        all_dominated = all(
            any(polygons_intersect(inst.polygon_of(t), dp) for dp in dom_polys)
            for t in conn
        )
        if all_dominated != expected[block]:
            return False
    return True


# ---------------------------------------------------------------------------
# split graphs as convex polygons
# ---------------------------------------------------------------------------


def _circle_point(t: Fraction) -> Vec2:
    den = 1 + t * t
    return Vec2((1 - t * t) / den, 2 * t / den)


def split_graph_polygons(nc: int, ni: int, cross_edges):
    """Convex polygons whose intersection graph is the given split graph.

    Clique vertices share a convex core; independent vertices are small
    triangles strictly inside the core's boundary pockets; a clique
    polygon absorbs exactly the pockets of its neighbors.  A rational
    strictly-convex point set on the unit circle replaces the regular
    polygon, which preserves every property used.
    """
    edges = {(c, i) for c, i in cross_edges}
    for c, i in edges:
        if not (0 <= c < nc and 0 <= i < ni):
            raise ConstructionError(f"cross edge ({c}, {i}) out of range")
    m = 2 * max(ni, 3)
    ts = [Fraction(2 * i - (m - 1), 2) for i in range(m)]
    outer = [_circle_point(t) for t in ts]
    core = [outer[2 * i] for i in range(m // 2)]
    pockets = []
    for i in range(m // 2):
        tri = (outer[2 * i], outer[2 * i + 1], outer[(2 * i + 2) % m])
        pockets.append(tri)

    clique_polys = []
    for c in range(nc):
        verts: list[Vec2] = []
        for i in range(m // 2):
            verts.append(outer[2 * i])
            if i < ni and (c, i) in edges:
                verts.append(outer[2 * i + 1])
        clique_polys.append(polygon(verts))
    indep_polys = []
    for i in range(ni):
        a, b, c3 = pockets[i]
        gx = (a.x + b.x + c3.x) / 3
        gy = (a.y + b.y + c3.y) / 3
        shrink = [
            Vec2(gx + (v.x - gx) / 4, gy + (v.y - gy) / 4) for v in (a, b, c3)
        ]
        indep_polys.append(polygon(shrink))
    return clique_polys, indep_polys


def verify_split_polygons(nc: int, ni: int, cross_edges) -> bool:
    """Intersection graph equals the split graph; containment matches the
    cross edges exactly."""
    edges = {(c, i) for c, i in cross_edges}
    clique_polys, indep_polys = split_graph_polygons(nc, ni, edges)
    polys = clique_polys + indep_polys
    g = graphcore.build(polys, polygons_intersect)
    expect = set()
    for c1, c2 in itertools.combinations(range(nc), 2):
        expect.add((c1, c2))
    for c, i in edges:
        expect.add((c, nc + i))
    if not graphcore.adjacency_equals(g, expect):
        return False
    for c in range(nc):
        for i in range(ni):
            inside = all(
                point_in_polygon(v, clique_polys[c]) is not PointLocation.OUTSIDE
                for v in indep_polys[i].vertices
            )
            if inside != ((c, i) in edges):
                return False
    return True


# ---------------------------------------------------------------------------
# file formats
# ---------------------------------------------------------------------------


def parse_grid_tiling(text: str) -> GridTiling:
    """Format: `gt <k> <n>` then `cell <a> <b>: (x,y) (x,y) ...` lines."""
    k = n = None
    cells: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("gt "):
            _, ks, ns = line.split()
            k, n = int(ks), int(ns)
        elif line.startswith("cell "):
            head, _, body = line.partition(":")
            _, a_s, b_s = head.split()
            entries = set()
            for token in body.split():
                token = token.strip("()")
                xs, ys = token.split(",")
                entries.add((int(xs), int(ys)))
            cells[(int(a_s), int(b_s))] = frozenset(entries)
        else:
            raise ConstructionError(f"line {lineno}: unrecognised line {raw!r}")
    if k is None:
        raise ConstructionError("missing `gt <k> <n>` header")
    return GridTiling(k, n, cells)


def format_grid_tiling(gt: GridTiling) -> str:
    lines = [f"gt {gt.k} {gt.n}"]
    for (a, b) in sorted(gt.cells):
        body = " ".join(f"({x},{y})" for x, y in sorted(gt.cells[(a, b)]))
        lines.append(f"cell {a} {b}: {body}")
    return "\n".join(lines) + "\n"


def parse_split_graph(text: str):
    """Format: `split <|C|> <|I|>` then `edge <c> <i>` lines (0-based)."""
    nc = ni = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "split" and len(parts) == 3:
            nc, ni = int(parts[1]), int(parts[2])
        elif parts[0] == "edge" and len(parts) == 3 and nc is not None:
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise ConstructionError(f"line {lineno}: unrecognised line {raw!r}")
    if nc is None:
        raise ConstructionError("missing `split <|C|> <|I|>` header")
    return nc, ni, edges


def format_gadget_instance(inst: GadgetInstance) -> str:
    from .exactnum import format_number

    lines = [f"gadget-instance {inst.k} {inst.n}"]
    for name, vec in (
        ("b1", inst.cert.b1),
        ("b2", inst.cert.b2),
        ("u1", inst.cert.u1),
        ("u2", inst.cert.u2),
    ):
        lines.append(
            f"cert {name} {format_number(quad(vec.x))} {format_number(quad(vec.y))}"
        )
    lines.append(f"cert epsilon {format_number(quad(inst.cert.epsilon))}")
    for t in inst.translates:
        lines.append(
            f"block {t.gadget[0]} {t.gadget[1]} {t.block} {t.index} "
            f"ref {format_number(quad(t.ref.x))} {format_number(quad(t.ref.y))}"
        )
    return "\n".join(lines) + "\n"
