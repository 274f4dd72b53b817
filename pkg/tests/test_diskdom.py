import random
from fractions import Fraction

import pytest

from geodom import graphcore
from geodom.diskdom import (
    Arrangement,
    DiskError,
    InternalInvariantError,
    build_lookup,
    coverage_count,
    direct_coverage_count,
    dominates_pair,
    format_disks,
    make_instance,
    parse_disks,
    xp_solve,
)
from geodom.geom2d import Vec2


def random_instance(rng, n, denom=2, hi=24):
    pts = set()
    while len(pts) < n:
        pts.add((Fraction(rng.randint(0, hi), denom), Fraction(rng.randint(0, hi), denom)))
    return make_instance(sorted(pts))


class TestPairs:
    def test_examples(self):
        assert dominates_pair(Vec2.of(0, 0), Vec2.of(2, 0))
        assert not dominates_pair(Vec2.of(0, 0), Vec2.of(3, 0))
        assert dominates_pair(Vec2.of(0, 0), Vec2.of(Fraction(6, 5), Fraction(8, 5)))

    def test_distinct_centers_required(self):
        with pytest.raises(DiskError):
            make_instance([(0, 0), (0, 0)])


class TestArrangement:
    def test_single_circle_structure(self):
        inst = make_instance([(0, 0), (1, 1), (3, 0)])
        arr = Arrangement(inst.centers, [0])
        interior = [f for f in arr.faces() if f.dim == 2 and f.in_union]
        assert len(interior) == 1
        assert interior[0].key[1] == (0, 0) and interior[0].key[2] == (0, 1)
        table = build_lookup(inst, ids=[0])
        assert table.face_count(interior[0].key) == 2  # (0,0) and (1,1)

    def test_two_circle_event_columns(self):
        inst = make_instance([(0, 0), (2, 0)])
        arr = Arrangement(inst.centers, [0, 1])
        xs = [float(c.x) for c in arr.cols]
        assert xs == [-2.0, 0.0, 1.0, 2.0, 4.0]

    def test_disjoint_circles(self):
        inst = make_instance([(0, 0), (5, 0)])
        arr = Arrangement(inst.centers, [0, 1])
        assert [float(c.x) for c in arr.cols] == [-2.0, 2.0, 3.0, 7.0]
        assert all(len(f.circles) <= 4 for f in arr.faces())

    def test_tangent_circles_single_event(self):
        inst = make_instance([(0, 0), (4, 0)])
        arr = Arrangement(inst.centers, [0, 1])
        assert any(
            r[0] == "isect" for c in arr.cols for g in c.groups for r in g.reps
        )
        assert coverage_count(inst, [0]) == direct_coverage_count(inst, [0]) == 1
        assert coverage_count(inst, [0, 1]) == 2

    def test_face_definer_bound(self):
        rng = random.Random(5)
        for _ in range(12):
            inst = random_instance(rng, rng.randint(2, 10))
            ids = sorted(rng.sample(range(inst.n), min(5, inst.n)))
            arr = Arrangement(inst.centers, ids)
            assert all(len(f.circles) <= 4 for f in arr.faces())

    def test_face_partition_of_rational_points(self):
        rng = random.Random(7)
        inst = random_instance(rng, 12, hi=20)
        arr = Arrangement(inst.centers, [0, 1, 2, 3, 4])
        faces = arr.faces()
        for _ in range(250):
            p = Vec2.of(
                Fraction(rng.randint(-8, 28), 4), Fraction(rng.randint(-8, 28), 4)
            )
            hits = [f for f in faces if arr.face_contains(f, p)]
            assert len(hits) == 1
            assert arr.locate_key(p) == hits[0].key


class TestLookupAndCoverage:
    def test_boundary_point_counts_on_arc_face(self):
        inst = make_instance([(0, 0), (2, 0), (3, 0)])
        table = build_lookup(inst, ids=[0])
        arr = Arrangement(inst.centers, [0])
        key = arr.locate_key(Vec2.of(2, 0))
        assert key[0] in ("arcpiece", "vertex")
        assert table.face_count(key) == 1

    def test_counts_sum_to_n_per_single_circle(self):
        rng = random.Random(12)
        inst = random_instance(rng, 30, hi=40)
        for c in range(0, 30, 7):
            arr = Arrangement(inst.centers, [c])
            table = build_lookup(inst, ids=[c])
            total = sum(table.face_count(f.key) for f in arr.faces())
            assert total == inst.n

    def test_coverage_examples(self):
        inst = make_instance([(0, 0), (2, 0), (3, 0)])
        assert coverage_count(inst, [0]) == 2
        assert coverage_count(inst, range(inst.n)) == inst.n

    def test_coverage_matches_direct_randomized(self):
        rng = random.Random(42)
        for _ in range(25):
            inst = random_instance(rng, rng.randint(2, 16))
            k = rng.randint(1, min(5, inst.n))
            dom = sorted(rng.sample(range(inst.n), k))
            assert coverage_count(inst, dom) == direct_coverage_count(inst, dom)

    def test_missing_descriptor_raises(self):
        inst = make_instance([(0, 0), (2, 0)])
        table = build_lookup(inst, ids=[0])
        with pytest.raises(InternalInvariantError):
            table.face_count(("vertex", ("ext", 1, 0)))


class TestXpSolve:
    def test_examples(self):
        assert xp_solve(make_instance([(0, 0), (2, 0), (4, 0)]), 1) == [1]
        assert xp_solve(make_instance([(0, 0), (5, 0)]), 1) is None

    def test_zero_budget(self):
        assert xp_solve(make_instance([(0, 0)]), 0) is None

    def test_agrees_with_graph_oracle(self):
        rng = random.Random(99)
        for _ in range(8):
            inst = random_instance(rng, rng.randint(2, 8), hi=16)
            g = graphcore.build(inst.centers, dominates_pair)
            gamma, _ = graphcore.brute_force_min_dominating(g)
            table = build_lookup(inst)
            got = next(
                k for k in range(1, inst.n + 1) if xp_solve(inst, k, table) is not None
            )
            assert got == gamma
            if gamma > 1:
                assert xp_solve(inst, gamma - 1, table) is None


class TestFiles:
    def test_round_trip(self):
        inst = make_instance([(0, 0), (Fraction(1, 2), 3)])
        assert parse_disks(format_disks(inst)) == inst

    def test_parse_error(self):
        with pytest.raises(DiskError):
            parse_disks("circle 0 0\n")
