from fractions import Fraction

from ipgeom.closure import closures, poly
from ipgeom.closure.closures import SplitDisjunction
from ipgeom.closure.example import example1_polyhedron, run_example1


def test_example_report_passes():
    report = run_example1()
    assert report.passed
    assert report.closure_matches
    assert report.point_outside_pair_closure
    assert report.point_in_split_hull
    assert report.point_in_box_split_closure
    assert report.point == (Fraction(1, 2), Fraction(1, 99))


def test_point_lies_in_split_interior():
    assert SplitDisjunction((1, 0), 0).in_interior((Fraction(1, 2), Fraction(1, 99)))


def test_point_is_cut_by_the_pair_closure():
    P = example1_polyhedron()
    z = (Fraction(1, 2), Fraction(1, 99))
    assert poly.contains_point(P, z)
    pair = closures.facet_pair_closure(P)
    violated = [h for h in pair if not h.contains(z)]
    assert [h.normal for h in violated] == [(0, 1)]


def test_small_box_family_still_contains_point():
    report = run_example1(split_box=1)
    assert report.point_in_box_split_closure
