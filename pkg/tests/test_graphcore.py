import random

import pytest

from geodom import graphcore
from geodom.exactnum import quad
from geodom.pattern1d import make_pattern, translates_intersect

UNIT = make_pattern(intervals=[(0, 1)])


def unit_interval_graph(xs):
    return graphcore.build(
        [quad(x) for x in xs], lambda a, b: translates_intersect(UNIT, a, b)
    )


class TestBuild:
    def test_path_from_unit_intervals(self):
        g = unit_interval_graph(range(5))
        assert g.edges() == [(0, 1), (1, 2), (2, 3), (3, 4)]

    def test_isolated(self):
        g = unit_interval_graph([0, 5])
        assert g.edges() == []

    def test_tangent_disks(self):
        from geodom.diskdom import dominates_pair
        from geodom.geom2d import Vec2

        g = graphcore.build([Vec2.of(0, 0), Vec2.of(2, 0)], dominates_pair)
        assert g.edges() == [(0, 1)]


class TestDominating:
    def test_examples(self):
        g = unit_interval_graph(range(5))
        assert graphcore.is_dominating(g, [1, 3])
        assert not graphcore.is_dominating(g, [0])
        assert graphcore.is_dominating(g, range(5))

    def test_out_of_range(self):
        g = unit_interval_graph(range(3))
        with pytest.raises(graphcore.GraphError):
            graphcore.is_dominating(g, [7])


class TestBruteForce:
    def test_path5(self):
        g = unit_interval_graph(range(5))
        size, witness = graphcore.brute_force_min_dominating(g)
        assert size == 2
        assert graphcore.is_dominating(g, witness)
        # no single vertex dominates
        assert all(not graphcore.is_dominating(g, [v]) for v in range(5))

    def test_clique(self):
        g = graphcore.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
        assert graphcore.brute_force_min_dominating(g)[0] == 1

    def test_empty_graph(self):
        g = graphcore.from_edges(3, [])
        assert graphcore.brute_force_min_dominating(g) == (3, [0, 1, 2])

    def test_witness_is_lex_least(self):
        g = unit_interval_graph(range(5))
        _, witness = graphcore.brute_force_min_dominating(g)
        assert witness == [0, 3]  # least 2-subset that dominates

    def test_cutoff(self):
        g = graphcore.from_edges(25, [])
        with pytest.raises(graphcore.OracleSizeError):
            graphcore.brute_force_min_dominating(g)

    def test_size_minimality(self):
        rng = random.Random(3)
        for _ in range(20):
            n = rng.randint(1, 9)
            xs = [rng.randint(0, 3 * n) / 2 for _ in range(n)]
            g = unit_interval_graph(xs)
            size, witness = graphcore.brute_force_min_dominating(g)
            assert graphcore.is_dominating(g, witness)
            from itertools import combinations

            for smaller in combinations(range(n), size - 1):
                assert not graphcore.is_dominating(g, smaller)


class TestComponentsAndEquality:
    def test_components(self):
        assert graphcore.connected_components(unit_interval_graph(range(5))) == [
            list(range(5))
        ]
        assert graphcore.connected_components(unit_interval_graph([0, 5])) == [[0], [1]]

    def test_adjacency_equals(self):
        g = unit_interval_graph(range(3))
        assert graphcore.adjacency_equals(g, [(0, 1), (2, 1)])
        assert not graphcore.adjacency_equals(g, [(0, 1)])


class TestUnitIntervalNonOverlapWitness:
    def test_some_minimum_set_has_disjoint_interiors(self):
        # among all minimum dominating sets of a unit-interval instance,
        # at least one uses pairwise non-overlapping intervals
        rng = random.Random(17)
        from fractions import Fraction

        for _ in range(25):
            n = rng.randint(1, 9)
            xs = [Fraction(rng.randint(0, 4 * n), 4) for _ in range(n)]
            g = unit_interval_graph(xs)
            found = False
            for dom in graphcore.all_minimum_dominating_sets(g):
                vals = sorted(xs[v] for v in dom)
                if all(b - a >= 1 for a, b in zip(vals, vals[1:])):
                    found = True
                    break
            assert found, f"all minimum sets overlap for {xs}"


class TestDumpFormat:
    def test_round_trip(self):
        g = unit_interval_graph(range(4))
        text = graphcore.format_graph(g)
        assert text.splitlines()[0] == "n 4"
        g2 = graphcore.parse_graph(text)
        assert g2.edges() == g.edges()

    def test_parse_errors(self):
        with pytest.raises(graphcore.GraphError):
            graphcore.parse_graph("e 0 1\n")
        with pytest.raises(graphcore.GraphError):
            graphcore.parse_graph("n 2\ne 0 5\n")
