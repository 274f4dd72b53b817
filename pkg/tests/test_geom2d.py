import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from geodom.geom2d import (
    GeometryError,
    PointLocation,
    Vec2,
    contact_class,
    convex_hull,
    diameter,
    format_polygon,
    interiors_intersect,
    min_vertex_edge_distance2,
    parse_polygon,
    point_in_polygon,
    polygon,
    polygons_intersect,
)

SQUARE = polygon([(0, 0), (1, 0), (1, 1), (0, 1)])
TRIANGLE = polygon([(0, 0), (2, 0), (0, 2)])
RIGHT_TRI = polygon([(0, 0), (4, 0), (0, 3)])
LSHAPE = polygon([(0, 0), (3, 0), (3, 1), (1, 1), (1, 3), (0, 3)])

coords = st.fractions(min_value=-4, max_value=4, max_denominator=4)


class TestConstruction:
    def test_requires_ccw(self):
        with pytest.raises(GeometryError):
            polygon([(0, 0), (0, 1), (1, 1), (1, 0)])

    def test_rejects_self_intersection(self):
        with pytest.raises(GeometryError):
            polygon([(0, 0), (2, 0), (0, 2), (2, 2)])

    def test_rejects_too_few(self):
        with pytest.raises(GeometryError):
            polygon([(0, 0), (1, 0)])

    def test_nonconvex_ok(self):
        assert len(LSHAPE.vertices) == 6


class TestIntersect:
    def test_far_apart(self):
        assert not polygons_intersect(SQUARE, SQUARE.translate(Vec2.of(2, 0)))

    def test_shared_edge(self):
        assert polygons_intersect(SQUARE, SQUARE.translate(Vec2.of(1, 0)))

    def test_hypotenuse_touches_corner(self):
        sq2 = polygon([(1, 1), (2, 1), (2, 2), (1, 2)])
        assert polygons_intersect(TRIANGLE, sq2)

    def test_self(self):
        for p in (SQUARE, TRIANGLE, LSHAPE):
            assert polygons_intersect(p, p)

    @settings(max_examples=150, deadline=None)
    @given(coords, coords, coords, coords)
    def test_symmetric_and_translation_equivariant(self, x, y, tx, ty):
        q = TRIANGLE.translate(Vec2.of(x, y))
        t = Vec2.of(tx, ty)
        assert polygons_intersect(SQUARE, q) == polygons_intersect(q, SQUARE)
        assert polygons_intersect(SQUARE, q) == polygons_intersect(
            SQUARE.translate(t), q.translate(t)
        )

    def test_disjoint_implies_positive_distance(self):
        rng = random.Random(9)
        for _ in range(60):
            shift = Vec2.of(
                Fraction(rng.randint(-12, 12), 4), Fraction(rng.randint(-12, 12), 4)
            )
            q = TRIANGLE.translate(shift)
            if not polygons_intersect(SQUARE, q):
                assert min_vertex_edge_distance2(SQUARE, q) > 0


class TestPointInPolygon:
    def test_examples(self):
        assert point_in_polygon(Vec2.of(Fraction(1, 2), Fraction(1, 2)), SQUARE) is PointLocation.INSIDE
        assert point_in_polygon(Vec2.of(0, 0), SQUARE) is PointLocation.BOUNDARY
        assert point_in_polygon(Vec2.of(5, 5), SQUARE) is PointLocation.OUTSIDE

    def test_nonconvex_notch(self):
        assert point_in_polygon(Vec2.of(2, 2), LSHAPE) is PointLocation.OUTSIDE
        assert point_in_polygon(Vec2.of(Fraction(1, 2), 2), LSHAPE) is PointLocation.INSIDE


class TestHullDiameter:
    def test_hull_drops_interior(self):
        h = convex_hull([(0, 0), (1, 0), (1, 1), (0, 1), (Fraction(1, 2), Fraction(1, 2))])
        assert h.vertices == SQUARE.vertices

    def test_hull_degenerate(self):
        with pytest.raises(GeometryError):
            convex_hull([(0, 0), (1, 1), (2, 2)])

    def test_square_diameter(self):
        p, q = diameter(SQUARE)
        assert (p - q).norm2() == 2

    def test_right_triangle_diameter(self):
        p, q = diameter(RIGHT_TRI)
        assert {p, q} == {Vec2.of(4, 0), Vec2.of(0, 3)}
        assert (p - q).norm2() == 25

    def test_hexagon_diameter_matches_all_pairs(self):
        hexagon = polygon([(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)])
        p, q = diameter(hexagon)
        best = max(
            (a - b).norm2()
            for i, a in enumerate(hexagon.vertices)
            for b in hexagon.vertices[i + 1 :]
        )
        assert (p - q).norm2() == best


class TestContactClass:
    def test_classes(self):
        assert contact_class(SQUARE, SQUARE.translate(Vec2.of(3, 0))) == "disjoint"
        assert contact_class(SQUARE, SQUARE.translate(Vec2.of(1, 1))) == "point"
        assert contact_class(SQUARE, SQUARE.translate(Vec2.of(1, 0))) == "segment"
        assert contact_class(SQUARE, SQUARE.translate(Vec2.of(Fraction(1, 2), 0))) == "area"

    def test_interiors_touching_is_not_area(self):
        assert not interiors_intersect(SQUARE, SQUARE.translate(Vec2.of(1, 0)))
        assert interiors_intersect(SQUARE, SQUARE)


class TestFiles:
    def test_round_trip(self):
        text = format_polygon(LSHAPE)
        assert parse_polygon(text).vertices == LSHAPE.vertices

    def test_parse_rejects_incomplete(self):
        with pytest.raises(GeometryError):
            parse_polygon("poly 3\nv 0/1 0/1\n")
