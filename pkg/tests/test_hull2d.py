from fractions import Fraction

import pytest

from ipgeom.closure import hull2d, poly
from ipgeom.closure.errors import HypothesisError, ZeroVectorError
from ipgeom.closure.hull2d import Cone2
from ipgeom.closure.poly import Halfspace, HPoly, VPoly
from util import assert_same_set, box_poly, integer_points, poly_from_rows

EXAMPLE1_HULL = [((0, 1), 0), ((-2, 1), 0), ((2, 1), 2)]


def test_integer_hull_of_example(example1):
    assert_same_set(hull2d.integer_hull_2d(example1), poly_from_rows(2, EXAMPLE1_HULL))


def test_integer_hull_of_fractional_box():
    P = box_poly((Fraction(-1, 2), Fraction(1, 3)), (Fraction(5, 2), Fraction(7, 3)))
    assert_same_set(hull2d.integer_hull_2d(P), box_poly((0, 1), (2, 2)))


def test_integer_hull_of_empty_triangle():
    V = VPoly(
        2,
        ((Fraction(1, 4), Fraction(1, 4)), (Fraction(3, 4), Fraction(1, 4)), (Fraction(1, 2), Fraction(3, 4))),
    )
    P = poly.v_to_h_2d(V)
    assert hull2d.integer_feasible_2d(P) is None
    assert hull2d.integer_hull_2d(P).empty


def test_integer_hull_of_strip():
    strip = poly_from_rows(2, [((1, 1), "5/2"), ((-1, -1), "-1/3")])
    assert_same_set(hull2d.integer_hull_2d(strip), poly_from_rows(2, [((1, 1), 2), ((-1, -1), -1)]))


def test_integer_hull_of_thin_strip_is_empty():
    strip = poly_from_rows(2, [((1, 0), "1/3"), ((-1, 0), "-1/4")])
    assert hull2d.integer_hull_2d(strip).empty
    assert hull2d.integer_feasible_2d(strip) is None


def test_integer_hull_of_halfplane():
    hull = hull2d.integer_hull_2d(poly_from_rows(2, [((2, 3), "7/2")]))
    assert hull.halfspaces == (Halfspace((2, 3), 3),)


def test_pointed_hull_keeps_recession_cone(example1):
    hull = hull2d.integer_hull_pointed_2d(poly.h_to_v_2d(example1))
    assert set(hull.vertices) == {(0, 0), (1, 0)}
    assert set(hull.rays) == {(-1, -2), (1, -2)}


def test_pointed_hull_rejects_lines():
    with pytest.raises(HypothesisError):
        hull2d.integer_hull_pointed_2d(VPoly(2, ((0, 0),), (), ((1, 0),)))


def test_integer_feasible_point_is_in_polyhedron(example1):
    z = hull2d.integer_feasible_2d(example1)
    assert z is not None
    assert all(isinstance(a, int) for a in z)
    assert poly.contains_point(example1, z)


def test_integer_points_of_bounded_polygon():
    triangle = poly_from_rows(2, [((-1, 0), 0), ((0, -1), 0), ((1, 1), 2)])
    points = hull2d.integer_points_2d(triangle)
    assert points == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]
    assert points == integer_points(triangle, 3)
    assert hull2d.integer_points_2d(triangle, limit=2) == [(0, 0), (0, 1)]


def test_integer_points_of_unbounded_polygon(example1):
    with pytest.raises(HypothesisError):
        hull2d.integer_points_2d(example1)


def test_cone_facets():
    C = Cone2((Fraction(1, 2), Fraction(3, 2)), ((-1, -2), (1, -2)))
    expected = HPoly(2, (Halfspace((-2, 1), Fraction(1, 2)), Halfspace((2, 1), Fraction(5, 2))))
    assert C.to_hpoly() == expected


def test_cone_with_dependent_rays():
    with pytest.raises(ZeroVectorError):
        Cone2((0, 0), ((1, 2), (-2, -4)))
