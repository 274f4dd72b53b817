import random
from fractions import Fraction

import pytest

from geodom import graphcore, solver1d
from geodom.exactnum import quad
from geodom.pattern1d import make_pattern, normalize, translates_intersect, w_ratio

UNIT = make_pattern(intervals=[(0, 1)])
POINT_IV = make_pattern(points=[0], intervals=[(1, 2)])
IV_POINT = make_pattern(points=[3], intervals=[(0, 1)])
IRR = make_pattern(points=[quad(0), quad(1), quad(0, 1, 2)])
IRR2 = make_pattern(points=[quad(0), quad(0, 1, 2), quad(2)])


def oracle(pattern, xs):
    g = graphcore.build(
        [solver1d._num(x) for x in xs],
        lambda a, b: translates_intersect(pattern, a, b),
    )
    return g, graphcore.brute_force_min_dominating(g)[0]


class TestIntervalDP:
    def test_path5(self):
        size, witness = solver1d.solve_interval_pattern(UNIT, [0, 1, 2, 3, 4])
        g, want = oracle(UNIT, [0, 1, 2, 3, 4])
        assert size == want == 2
        assert graphcore.is_dominating(g, witness)

    def test_singleton(self):
        assert solver1d.solve_interval_pattern(UNIT, [0]) == (1, [0])

    def test_point_interval_pattern(self):
        xs = [0, Fraction(1, 2), 1, Fraction(3, 2), 4]
        g, want = oracle(POINT_IV, xs)
        size, witness = solver1d.solve_interval_pattern(POINT_IV, xs)
        assert size == want and graphcore.is_dominating(g, witness)

    def test_empty_and_duplicates(self):
        assert solver1d.solve_interval_pattern(UNIT, []) == (0, [])
        size, witness = solver1d.solve_interval_pattern(UNIT, [2, 2, 2])
        assert size == 1 and witness == [0]

    def test_requires_interval(self):
        with pytest.raises(solver1d.SolverError):
            solver1d.solve_interval_pattern(make_pattern(points=[0, 1]), [0])

    @pytest.mark.parametrize("pattern", [UNIT, POINT_IV, IV_POINT])
    def test_oracle_equivalence_randomized(self, pattern):
        rng = random.Random(hash(repr(pattern.points)) & 0xFFFF)
        spanv = int(pattern.rightmost().rat - pattern.leftmost().rat)
        for _ in range(60):
            n = rng.randint(1, 10)
            xs = [Fraction(rng.randint(0, 24 * spanv), 8) for _ in range(n)]
            g, want = oracle(pattern, xs)
            size, witness = solver1d.solve_interval_pattern(pattern, xs)
            assert size == want
            assert graphcore.is_dominating(g, witness)

    def test_witness_window_sparsity(self):
        # minimum witnesses never exceed floor(3w) endpoints per width-w window
        rng = random.Random(88)
        for pattern in (UNIT, POINT_IV, IV_POINT):
            w = w_ratio(pattern)
            bound = (3 * w).floor()
            spanv = int(pattern.rightmost().rat - pattern.leftmost().rat)
            for _ in range(25):
                n = rng.randint(1, 10)
                xs = [Fraction(rng.randint(0, 24 * spanv), 8) for _ in range(n)]
                _, witness = solver1d.solve_interval_pattern(pattern, xs)
                wit_vals = [xs[v] for v in witness]
                for anchor in xs:
                    inside = sum(1 for v in wit_vals if anchor <= v < anchor + w.rat)
                    assert inside <= bound


class TestRationalPoints:
    def test_examples(self):
        assert solver1d.solve_rational_points(make_pattern(points=[0, 2, 3]), [0, 1])[0] == 1
        assert solver1d.solve_rational_points(make_pattern(points=[0, 1]), [0, 1, 2])[0] == 1
        assert solver1d.solve_rational_points(make_pattern(points=[0]), [0, 0, 7])[0] == 2

    def test_rejects_irrational(self):
        with pytest.raises(solver1d.SolverError):
            solver1d.solve_rational_points(IRR, [0])

    def test_irrational_coordinates_rational_ratios(self):
        q = make_pattern(points=[quad(0), quad(0, 1, 2), quad(0, 2, 2)])
        xs = [quad(0), quad(0, 1, 2), quad(0, 4, 2)]
        g, want = oracle(q, xs)
        size, witness = solver1d.solve_rational_points(q, xs)
        assert size == want and graphcore.is_dominating(g, witness)

    @pytest.mark.parametrize("points", [[0, 2, 3], [0, 1], [0, 3, 7]])
    def test_oracle_equivalence_randomized(self, points):
        pattern = make_pattern(points=points)
        rng = random.Random(sum(points))
        spanv = max(points)
        for _ in range(60):
            n = rng.randint(1, 10)
            xs = [rng.randint(0, 3 * spanv) for _ in range(n)]
            g, want = oracle(pattern, xs)
            size, witness = solver1d.solve_rational_points(pattern, xs)
            assert size == want
            assert graphcore.is_dominating(g, witness)

    def test_graph_preservation_probe(self):
        assert solver1d.graph_preservation_holds(
            make_pattern(points=[0, 3, 7]), [0, 3, 4, 10, 11]
        )

    def test_surrogate_shape(self):
        q_scaled = normalize(make_pattern(points=[0, 2, 3]))
        surrogate = solver1d.build_interval_surrogate(q_scaled)
        assert surrogate.intervals == ((quad(0), quad(Fraction(1, 3))),)
        assert [p.rat for p in surrogate.points] == [2, 3]


class TestBranching:
    def test_examples(self):
        assert solver1d.solve_fpt_branching(IRR, [quad(0), quad(-1, 1, 2)], 1) == [0]
        assert solver1d.solve_fpt_branching(make_pattern(points=[0, 1]), [0, 1, 2], 0) is None
        assert solver1d.solve_fpt_branching(make_pattern(points=[0, 1]), [0, 1, 2], 1) == [1]

    def test_negative_budget(self):
        with pytest.raises(solver1d.SolverError):
            solver1d.solve_fpt_branching(IRR, [quad(0)], -1)

    def test_degree_bound_enforced(self):
        rng = random.Random(31)
        for pattern in (IRR, IRR2):
            t = len(pattern.points)
            for _ in range(20):
                n = rng.randint(1, 10)
                xs = [
                    quad(Fraction(rng.randint(0, 12), 2), Fraction(rng.randint(0, 6), 2), 2)
                    for _ in range(n)
                ]
                uniq, _ = solver1d.dedup_translates(xs)
                g = graphcore.build(
                    uniq, lambda a, b: translates_intersect(pattern, a, b)
                )
                assert all(g.degree(v) <= t * t - t for v in range(g.n))

    @pytest.mark.parametrize("pattern", [IRR, IRR2])
    def test_min_budget_matches_oracle(self, pattern):
        rng = random.Random(id(pattern) & 0xFFFF | 1)
        for _ in range(40):
            n = rng.randint(1, 10)
            xs = [
                quad(Fraction(rng.randint(0, 12), 2), Fraction(rng.randint(0, 6), 2), 2)
                for _ in range(n)
            ]
            g, want = oracle(pattern, xs)
            got = None
            for k in range(1, n + 1):
                witness = solver1d.solve_fpt_branching(pattern, xs, k)
                if witness is not None:
                    got = len(witness)
                    assert graphcore.is_dominating(g, witness)
                    break
            assert got == want


class TestDispatcher:
    def test_routes(self):
        assert solver1d.solve(UNIT, [0, 1, 2, 3, 4])[0] == 2
        assert solver1d.solve(make_pattern(points=[0, 2, 3]), [0, 1])[0] == 1
        assert solver1d.solve(IRR, [quad(0), quad(-1, 1, 2)])[0] == 1

    def test_empty(self):
        assert solver1d.solve(UNIT, []) == (0, [])
