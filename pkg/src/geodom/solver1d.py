"""Minimum dominating set for translates of a fixed 1-D pattern.

Three solvers matched to the pattern trichotomy:

* interval-bearing patterns: dynamic programming over half-open windows
  of width w (span over longest-interval length), with at most floor(3w)
  chosen left endpoints per window;
* rational point patterns: rescale to integer coordinates, swap the
  leftmost point for the interval [0, 1/3] (the intersection graph is
  unchanged), then run the interval DP;
* point patterns with an irrational distance ratio: depth-bounded
  branching on the deduplicated bounded-degree graph, iterated over the
  budget for an exact optimum.

All window arithmetic is exact in Q(sqrt(d)).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from . import graphcore
from .exactnum import QuadNum, quad
from .pattern1d import (
    Classification,
    Pattern1D,
    PatternError,
    classify,
    make_pattern,
    normalize,
    translates_intersect,
    w_ratio,
)


class SolverError(ValueError):
    pass


class InternalInvariantError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


def dedup_translates(xs) -> tuple[list[QuadNum], list[int]]:
    """Collapse duplicate translates.

    Returns (unique values in input order, representative original index
    per unique value).  Duplicates share closed neighborhoods, so any
    minimum dominating set needs at most one per class.
    """
    uniq: list[QuadNum] = []
    reps: list[int] = []
    seen = {}
    for idx, x in enumerate(xs):
        if x not in seen:
            seen[x] = len(uniq)
            uniq.append(x)
            reps.append(idx)
    return uniq, reps


# ---------------------------------------------------------------------------
# Interval-pattern DP
# ---------------------------------------------------------------------------


def solve_interval_pattern(q: Pattern1D, xs) -> tuple[int, list[int]]:
    """Exact optimum for a pattern containing at least one interval.

    The pattern is normalised internally (leftmost coordinate 0, longest
    interval length 1), so the window width equals the span.
    """
    if not q.intervals:
        raise SolverError("interval DP requires a pattern with an interval")
    xs = list(xs)
    if not xs:
        return 0, []
    qn = normalize(q, rescale=True)
    w = qn.rightmost()  # span of the normalised pattern
    scale = 1 / max(hi - lo for lo, hi in q.intervals)
    uniq, reps = dedup_translates([_num(x) * scale for x in xs])
    graph = graphcore.build(uniq, lambda a, b: translates_intersect(qn, a, b))
    budget = (3 * w).floor()
    witness: list[int] = []
    total = 0
    for comp in graphcore.connected_components(graph):
        size, chosen = _component_dp(qn, w, budget, uniq, comp, graph)
        total += size
        witness.extend(reps[v] for v in chosen)
    return total, sorted(witness)


def _num(x) -> QuadNum:
    return x if isinstance(x, QuadNum) else quad(Fraction(x))


def _component_dp(qn, w, budget, values, comp, graph):
    """DP over one connected component, shifted so its leftmost endpoint is 0.

    A window's vertices can be dominated from the window itself and from
    both adjacent windows, so the state carries the chosen subsets of two
    consecutive windows: state (k, S_prev, S) with S_prev <= I(k-1),
    S <= I(k), both of size at most floor(3w).  Moving to window k+1
    fixes window k's domination via S_prev | S | S_next.  Parent pointers
    reconstruct a deterministic witness (ties broken by lexicographically
    least subsets).
    """
    base = values[comp[0]]
    for v in comp:
        if (values[v] - base).sign() < 0:
            base = values[v]

    local = sorted(comp, key=lambda v: _exact_key(values[v], base))
    index_of = {v: i for i, v in enumerate(local)}
    # closed neighborhood masks restricted to the component, in local indexing
    masks = []
    for v in local:
        m = 0
        for u in graphcore._bits(graph.neighbor_masks[v]):
            if u in index_of:
                m |= 1 << index_of[u]
        masks.append(m)

    win_of = [((values[v] - base) / w).floor() for v in local]
    n_windows = win_of[-1] + 1
    windows: list[list[int]] = [[] for _ in range(n_windows)]
    for i, k in enumerate(win_of):
        windows[k].append(i)
    targets = [0] * n_windows
    for k, members in enumerate(windows):
        for i in members:
            targets[k] |= 1 << i

    def window_subsets(k: int):
        if k < 0:
            return [((), 0)]
        out = []
        members = windows[k]
        for r in range(min(len(members), budget) + 1):
            for combo in combinations(members, r):
                m = 0
                for i in combo:
                    m |= masks[i]
                out.append((combo, m))
        return out

    subs = [window_subsets(k) for k in range(n_windows)]

    # states[(S_prev, S)] = (value, parent state key or None)
    states = {((), s): (len(s), None) for s, _ in subs[0]}
    history = [states]
    sub_masks = [{s: m for s, m in subs[k]} for k in range(n_windows)]
    for k in range(1, n_windows):
        nxt: dict = {}
        for (s_pp, s_p), (val, _) in states.items():
            precover = sub_masks[k - 2][s_pp] if k >= 2 else 0
            precover |= sub_masks[k - 1][s_p]
            need = targets[k - 1] & ~precover
            for s, m in subs[k]:
                if need & ~m:
                    continue  # window k-1 left undominated
                key = (s_p, s)
                cand = (val + len(s), (s_pp, s_p))
                best = nxt.get(key)
                if best is None or cand < best:
                    nxt[key] = cand
        if not nxt:
            raise InternalInvariantError("DP reached an infeasible window")
        history.append(nxt)
        states = nxt

    # The last window has no successor: its domination is checked here.
    best_key, best_val = None, None
    for (s_pp, s_p), (val, _) in states.items():
        cover = (sub_masks[n_windows - 2][s_pp] if n_windows >= 2 else 0)
        cover |= sub_masks[n_windows - 1][s_p]
        if targets[n_windows - 1] & ~cover:
            continue
        if best_val is None or (val, (s_pp, s_p)) < (best_val, best_key):
            best_key, best_val = (s_pp, s_p), val
    if best_key is None:
        raise InternalInvariantError("DP found no dominating completion")

    chosen_local: list[int] = []
    key = best_key
    k = n_windows - 1
    while key is not None:
        chosen_local.extend(key[1])
        key = history[k][key][1]
        k -= 1
    return best_val, [local[i] for i in chosen_local]


def _exact_key(value: QuadNum, base: QuadNum):
    from .pattern1d import _SortWrapper

    return _SortWrapper(value - base)


# ---------------------------------------------------------------------------
# Rational point patterns: reduce to an interval pattern
# ---------------------------------------------------------------------------


def rational_scale_factor(q: Pattern1D) -> QuadNum:
    """Positive factor making all pattern coordinates integers after the
    leftmost point is shifted to 0."""
    qs = normalize(q)
    pts = qs.points
    if len(pts) < 2:
        return quad(1)
    base = pts[1]  # smallest nonzero coordinate
    lcm = 1
    for p in pts[1:]:
        r = p / base
        if not r.is_rational:
            raise SolverError("pattern has an irrational distance ratio")
        lcm = lcm * r.rat.denominator // _gcd(lcm, r.rat.denominator)
    return quad(lcm) / base


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def build_interval_surrogate(q_scaled: Pattern1D) -> Pattern1D:
    """Replace the leftmost (integer) point by the interval [0, 1/3]."""
    pts = q_scaled.points
    if q_scaled.intervals or not pts:
        raise SolverError("surrogate construction expects a point pattern")
    lead = pts[0]
    rest = [p - lead for p in pts[1:]]
    return make_pattern(points=rest, intervals=[(quad(0), quad(Fraction(1, 3)))])


def solve_rational_points(q: Pattern1D, xs, check_graph: bool = True):
    """Exact optimum for a rational-distance-ratio point pattern.

    Each connected component is scaled to integer coordinates and solved
    through the interval surrogate.  With ``check_graph`` (cheap at desk
    scale), the component's surrogate intersection graph is asserted to
    equal the original one.
    """
    if classify(q) is not Classification.RATIONAL_POINTS:
        raise SolverError("pattern is not a rational-distance-ratio point set")
    xs = [_num(x) for x in xs]
    if not xs:
        return 0, []
    uniq, reps = dedup_translates(xs)
    graph = graphcore.build(uniq, lambda a, b: translates_intersect(q, a, b))
    factor = rational_scale_factor(q)
    q_scaled = normalize(make_pattern(points=[p * factor for p in q.points]))
    surrogate = build_interval_surrogate(q_scaled)

    total = 0
    witness: list[int] = []
    for comp in graphcore.connected_components(graph):
        groups = _integer_groups(uniq, comp, factor)
        for group in groups:
            offsets = [(uniq[v] * factor) for v in group]
            base = min(offsets, key=float)
            for o in offsets:
                if (o - base).sign() < 0:
                    base = o
            ints = [o - base for o in offsets]
            for v, o in zip(group, ints):
                if not (o.is_rational and o.rat.denominator == 1):
                    raise InternalInvariantError("non-integer offset after snapping")
            if check_graph:
                _assert_graph_preserved(q_scaled, surrogate, ints)
            size, chosen = solve_interval_pattern(surrogate, ints)
            total += size
            witness.extend(reps[group[i]] for i in chosen)
    return total, sorted(witness)


def _integer_groups(uniq, comp, factor):
    """Split a component by residue class of the scaled offset mod 1.

    Connectivity forces a single class; the split is a safety net for the
    (unreachable) case of mixed residues, solved independently if it ever
    occurs.
    """
    groups: list[tuple[QuadNum, list[int]]] = []
    for v in comp:
        o = uniq[v] * factor
        placed = False
        for anchor, members in groups:
            diff = o - anchor
            if diff.is_rational and diff.rat.denominator == 1:
                members.append(v)
                placed = True
                break
        if not placed:
            groups.append((o, [v]))
    return [members for _, members in groups]


def _assert_graph_preserved(q_scaled, surrogate, ints):
    g1 = graphcore.build(ints, lambda a, b: translates_intersect(q_scaled, a, b))
    g2 = graphcore.build(ints, lambda a, b: translates_intersect(surrogate, a, b))
    if g1.edges() != g2.edges():
        raise InternalInvariantError(
            "interval surrogate changed the intersection graph"
        )


def graph_preservation_holds(q: Pattern1D, xs) -> bool:
    """Public probe used by tests: does the surrogate keep the graph?"""
    try:
        solve_rational_points(q, xs, check_graph=True)
        return True
    except InternalInvariantError:
        return False


# ---------------------------------------------------------------------------
# FPT branching for bounded-degree point-pattern graphs
# ---------------------------------------------------------------------------


def solve_fpt_branching(q: Pattern1D, xs, k: int):
    """Dominating set of size <= k on the deduplicated graph, or None.

    Branches on the lowest-index undominated vertex and each of its
    neighbors; depth is bounded by k.  Point patterns have maximum degree
    t^2 - t after deduplication (t pattern points), which keeps the
    branching factor constant.
    """
    if k < 0:
        raise SolverError("budget must be non-negative")
    xs = [_num(x) for x in xs]
    if not xs:
        return []
    uniq, reps = dedup_translates(xs)
    graph = graphcore.build(uniq, lambda a, b: translates_intersect(q, a, b))
    if not q.intervals:
        t = len(q.points)
        max_deg = max(graph.degree(v) for v in range(graph.n))
        if max_deg > t * t - t:
            raise InternalInvariantError(
                f"degree {max_deg} exceeds the t^2-t bound for t={t}"
            )
    full = (1 << graph.n) - 1

    def branch(covered: int, chosen: tuple[int, ...], budget: int):
        if covered == full:
            return chosen
        if budget == 0:
            return None
        v = (~covered & full)
        v = (v & -v).bit_length() - 1  # lowest undominated vertex
        for u in [v] + graph.neighbors(v):
            got = branch(covered | graph.neighbor_masks[u], chosen + (u,), budget - 1)
            if got is not None:
                return got
        return None

    got = branch(0, (), k)
    if got is None:
        return None
    return sorted(reps[v] for v in got)


# ---------------------------------------------------------------------------
# Dispatcher
# ---------------------------------------------------------------------------


def solve(q: Pattern1D, xs) -> tuple[int, list[int]]:
    """Route by the pattern trichotomy; always an exact optimum."""
    xs = [_num(x) for x in xs]
    if not xs:
        return 0, []
    kind = classify(q)
    if kind is Classification.HAS_INTERVAL:
        return solve_interval_pattern(q, xs)
    if kind is Classification.RATIONAL_POINTS:
        return solve_rational_points(q, xs)
    for k in range(1, len(xs) + 1):
        witness = solve_fpt_branching(q, xs, k)
        if witness is not None:
            return len(witness), witness
    raise InternalInvariantError("branching failed to find the trivial cover")
