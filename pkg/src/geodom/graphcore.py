"""Intersection graphs, dominating-set checks, and the brute-force oracle.

The oracle enumerates vertex subsets in increasing size (lexicographic
within a size), so the first dominating set found is both minimum and a
deterministic witness.  It is the ground truth every solver and
construction in this package is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


class GraphError(ValueError):
    pass


class OracleSizeError(GraphError):
    """Instance too large for exhaustive enumeration."""


@dataclass(frozen=True)
class IntersectionGraph:
    n: int
    labels: tuple
    neighbor_masks: tuple[int, ...]  # closed neighborhoods as bitmasks

    def adjacent(self, i: int, j: int) -> bool:
        self._check(i)
        self._check(j)
        return i != j and bool(self.neighbor_masks[i] >> j & 1)

    def neighbors(self, i: int) -> list[int]:
        self._check(i)
        mask = self.neighbor_masks[i] & ~(1 << i)
        return _bits(mask)

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            for j in _bits(self.neighbor_masks[i] >> (i + 1) << (i + 1)):
                out.append((i, j))
        return sorted(out)

    def _check(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise GraphError(f"vertex {i} out of range 0..{self.n - 1}")


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def build(objects, intersects, labels=None) -> IntersectionGraph:
    """Graph with an edge {i, j} iff intersects(objects[i], objects[j]).

    The predicate must be symmetric; it is called once per unordered pair.
    """
    objs = list(objects)
    n = len(objs)
    masks = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if intersects(objs[i], objs[j]):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    lab = tuple(labels) if labels is not None else tuple(objs)
    return IntersectionGraph(n, lab, tuple(masks))


def from_edges(n: int, edges) -> IntersectionGraph:
    masks = [1 << i for i in range(n)]
    for i, j in edges:
        if i == j or not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"bad edge ({i}, {j})")
        masks[i] |= 1 << j
        masks[j] |= 1 << i
    return IntersectionGraph(n, tuple(range(n)), tuple(masks))


def is_dominating(g: IntersectionGraph, dom) -> bool:
    covered = 0
    for v in dom:
        g._check(v)
        covered |= g.neighbor_masks[v]
    return covered == (1 << g.n) - 1


def brute_force_min_dominating(
    g: IntersectionGraph, max_vertices: int = 20
) -> tuple[int, list[int]]:
    """Exact minimum dominating set by size-ordered enumeration.

    Returns (size, witness); the witness is the lexicographically least
    minimum set.  Raises OracleSizeError beyond ``max_vertices``.
    """
    if g.n > max_vertices:
        raise OracleSizeError(f"{g.n} vertices exceeds oracle cutoff {max_vertices}")
    full = (1 << g.n) - 1
    if g.n == 0:
        return 0, []
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            covered = 0
            for v in combo:
                covered |= g.neighbor_masks[v]
            if covered == full:
                return size, list(combo)
    raise AssertionError("unreachable: the full vertex set always dominates")


def all_minimum_dominating_sets(
    g: IntersectionGraph, max_vertices: int = 12
) -> list[list[int]]:
    size, _ = brute_force_min_dominating(g, max_vertices)
    full = (1 << g.n) - 1
    out = []
    for combo in combinations(range(g.n), size):
        covered = 0
        for v in combo:
            covered |= g.neighbor_masks[v]
        if covered == full:
            out.append(list(combo))
    return out


def connected_components(g: IntersectionGraph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def adjacency_equals(g: IntersectionGraph, expected_edges) -> bool:
    """Compare edge sets under the identity vertex correspondence."""
    expect = {(min(i, j), max(i, j)) for i, j in expected_edges}
    return set(g.edges()) == expect


# -- dump format: `n <count>` then sorted `e <i> <j>` lines -----------------


def format_graph(g: IntersectionGraph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"e {i} {j}" for i, j in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> IntersectionGraph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n" and len(parts) == 2 and n is None:
            n = int(parts[1])
        elif parts[0] == "e" and len(parts) == 3 and n is not None:
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise GraphError(f"line {lineno}: unrecognised line {raw!r}")
    if n is None:
        raise GraphError("missing `n <count>` header")
    return from_edges(n, edges)
