import unittest

import pytest

from ipgeom.closure import latfree, poly
from ipgeom.closure.errors import DimensionError, HypothesisError
from ipgeom.closure.example import polyhedron_from_document
from ipgeom.closure._properties import EXAMPLES
from ipgeom.closure.poly import Halfspace, HPoly, VPoly
from util import box_poly, poly_from_rows

STRIP = [((-1, 0), 0), ((1, 0), 1)]
TRIANGLE = [((-1, 0), 0), ((0, -1), 0), ((1, 1), 2)]
QUADRILATERAL = [((1, -1), 1), ((1, 1), 2), ((-1, 1), 1), ((-1, -1), 0)]
PUSH_OUT_VIOLATION = [((1, -1), 1), ((1, 1), "19/10"), ((-1, 1), 1), ((-1, -1), "-1/10")]
UNBOUNDED_PUSH = [((0, -1), 0), ((-1, -1), "4/9"), ((3, -1), "3/4"), ((0, 1), "3/4")]


class ClassifyTests(unittest.TestCase):
    def test_maximal_sets(self):
        cases = [
            (STRIP, latfree.SPLIT),
            (TRIANGLE, latfree.TRIANGLE),
            (QUADRILATERAL, latfree.QUADRILATERAL),
        ]
        for rows, tag in cases:
            with self.subTest(tag=tag):
                result = latfree.classify_max_latfree_2d(poly_from_rows(2, rows))
                self.assertEqual(result.tag, tag)
                self.assertTrue(result.is_maximal)
                self.assertEqual(len(result.witnesses), len(result.facets))
                for w, h in zip(result.witnesses, result.facets):
                    self.assertEqual(h.value(w), h.rhs)

    def test_examples_file_tags(self):
        for name in ("strip", "triangle", "quadrilateral"):
            with self.subTest(name=name):
                P = polyhedron_from_document(EXAMPLES[name]["polyhedron"])
                result = latfree.classify_max_latfree_2d(P)
                self.assertEqual(result.tag, EXAMPLES[name]["tag"])

    def test_triangle_witnesses(self):
        result = latfree.classify_max_latfree_2d(poly_from_rows(2, TRIANGLE))
        self.assertEqual(set(result.witnesses), {(1, 0), (0, 1), (1, 1)})

    def test_quadrilateral_witnesses(self):
        result = latfree.classify_max_latfree_2d(poly_from_rows(2, QUADRILATERAL))
        self.assertEqual(set(result.witnesses), {(1, 0), (1, 1), (0, 1), (0, 0)})
        self.assertTrue(latfree.is_unit_parallelogram(result.witnesses))

    def test_vpoly_input(self):
        V = VPoly(2, ((0, 0), (2, 0), (0, 2)))
        self.assertEqual(latfree.classify_max_latfree_2d(V).tag, latfree.TRIANGLE)

    def test_not_lattice_free(self):
        result = latfree.classify_max_latfree_2d(box_poly((0, 0), (2, 2)))
        self.assertEqual(result.tag, latfree.NOT_LATTICE_FREE)
        self.assertEqual(result.interior_point, (1, 1))
        self.assertFalse(result.is_maximal)

    def test_lattice_free_not_maximal(self):
        cases = [
            [((-1, 0), 0), ((1, 0), "1/2")],
            [((-1, 0), 0), ((0, -1), 0), ((1, 1), "3/2")],
            box_poly((0, 0), (1, 1)).halfspaces,
        ]
        for rows in cases:
            with self.subTest(rows=str(rows)):
                P = rows if isinstance(rows, tuple) else poly_from_rows(2, rows).halfspaces
                result = latfree.classify_max_latfree_2d(HPoly(2, P))
                self.assertEqual(result.tag, latfree.NOT_MAXIMAL)

    def test_lower_dimensional_input(self):
        segment = poly_from_rows(2, [((0, 1), 0), ((0, -1), 0), ((1, 0), 1), ((-1, 0), 0)])
        with self.assertRaises(HypothesisError):
            latfree.classify_max_latfree_2d(segment)


def test_is_unit_parallelogram():
    assert latfree.is_unit_parallelogram([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert not latfree.is_unit_parallelogram([(0, 0), (2, 0), (2, 1), (0, 1)])
    assert not latfree.is_unit_parallelogram([(0, 0), (1, 0), (0, 1), (1, 1)])


def test_interior_integer_point():
    assert latfree.interior_integer_point(box_poly((0, 0), (2, 2))) == (1, 1)
    assert latfree.interior_integer_point(box_poly((0, 0), (1, 1))) is None


def test_relative_interior_points_along_a_facet():
    square = box_poly((0, 0), (3, 3))
    index = square.halfspaces.index(Halfspace((0, -1), 0))
    assert latfree.relative_interior_integer_points(square, index, limit=5) == [(1, 0), (2, 0)]


class PushOutTests(unittest.TestCase):
    def test_generic_instance_reaches_a_quadrilateral(self):
        P = polyhedron_from_document(EXAMPLES["push_out_generic"]["polyhedron"])
        trace = latfree.push_out(P)
        self.assertEqual(trace.outcome, "maximal")
        self.assertTrue(trace.conclusion_holds)
        self.assertEqual([s.label for s in trace.steps], [3, 2, 4])
        self.assertEqual([s.new_rhs for s in trace.steps], [1, 0, 2])
        self.assertEqual([s.new_point for s in trace.steps], [(0, 1), (0, 0), (1, 1)])
        self.assertEqual(trace.classification.tag, latfree.QUADRILATERAL)
        self.assertTrue(poly.same_set(trace.quadrilateral, poly_from_rows(2, QUADRILATERAL)))

    def test_clockwise_labels(self):
        P = polyhedron_from_document(EXAMPLES["push_out_generic"]["polyhedron"])
        trace = latfree.push_out(P)
        normals = [h.normal for h in trace.facets]
        self.assertEqual(normals, [(1, -1), (-1, -1), (-1, 1), (1, 1)])

    def test_early_stop(self):
        P = polyhedron_from_document(EXAMPLES["push_out_early"]["polyhedron"])
        trace = latfree.push_out(P)
        self.assertEqual(trace.outcome, "early")
        self.assertEqual(trace.implied_by, (2, 4))
        self.assertIsNone(trace.steps[-1].new_rhs)
        self.assertIsNone(trace.quadrilateral)
        self.assertTrue(trace.conclusion_holds)

    def test_facet_that_moves_without_bound(self):
        # H2 only adds integer points on the lines of H1 and H3
        trace = latfree.push_out(poly_from_rows(2, UNBOUNDED_PUSH))
        self.assertEqual(trace.outcome, latfree.UNBOUNDED)
        self.assertEqual([s.label for s in trace.steps], [3, 2])
        self.assertEqual([s.new_rhs for s in trace.steps], [1, None])
        self.assertEqual(trace.steps[0].new_point[1], 1)
        self.assertIsNone(trace.quadrilateral)
        self.assertTrue(trace.conclusion_holds)

    def test_pushed_level_keeps_interior_lattice_free(self):
        P = poly_from_rows(2, UNBOUNDED_PUSH)
        trace = latfree.push_out(P)
        step = trace.steps[0]
        relaxed = [h for h in trace.facets if h != step.facet]
        relaxed.append(Halfspace(step.facet.normal, step.new_rhs))
        self.assertIsNone(latfree.interior_integer_point(HPoly(2, tuple(relaxed))))

        self.assertTrue(trace.conclusion_holds)

    def test_violated_hypotheses(self):
        cases = [
            (PUSH_OUT_VIOLATION, "lines l2, l3, l4 contain no integer points"),
            (box_poly((0, 0), (2, 2)), "interior is lattice-free"),
            (TRIANGLE, "quadrilateral has four irredundant facets"),
        ]
        for rows, condition in cases:
            with self.subTest(condition=condition):
                P = rows if isinstance(rows, HPoly) else poly_from_rows(2, rows)
                with self.assertRaises(HypothesisError) as context:
                    latfree.push_out(P)
                self.assertEqual(context.exception.condition, condition)


def test_helly_certificate_of_thin_strip():
    P = poly_from_rows(2, [((0, 1), 5), ((1, 0), "1/3"), ((-1, 0), "-1/4")])
    assert latfree.helly_certificate(P) == (1, 2)


def test_helly_certificate_of_hexagon():
    rows = [
        ((1, 0), "3/4"),
        ((-1, 0), "-1/4"),
        ((0, 1), "3/4"),
        ((0, -1), "-1/4"),
        ((1, 1), "3/2"),
        ((-1, -1), "-1/2"),
    ]
    certificate = latfree.helly_certificate(poly_from_rows(2, rows))
    assert certificate == (0, 1)


def test_helly_certificate_needs_three_halfspaces():
    P = poly_from_rows(2, [((-1, 0), "-1/3"), ((0, -1), "-1/3"), ((1, 1), "3/2")])
    assert latfree.helly_certificate(P) == (0, 1, 2)


def test_helly_certificate_of_feasible_polyhedron():
    with pytest.raises(HypothesisError):
        latfree.helly_certificate(box_poly((0, 0), (1, 1)))


def test_verify_2dih_of_example(example1):
    check = latfree.check_2dih(example1)
    assert check.passed
    assert latfree.verify_2dih(example1)


def test_verify_2dih_of_integer_free_polygon():
    P = poly_from_rows(2, [((1, 0), "3/4"), ((-1, 0), "-1/4"), ((0, 1), 5), ((0, -1), 5)])
    check = latfree.check_2dih(P)
    assert check.integer_hull.empty
    assert check.passed


def test_verify_2dih_of_strip_with_line():
    assert latfree.verify_2dih(poly_from_rows(2, [((1, 2), "7/2"), ((-1, -2), "-1/2")]))


def test_verify_2dih_requires_plane():
    with pytest.raises(DimensionError):
        latfree.verify_2dih(box_poly((0, 0, 0), (1, 1, 1)))
