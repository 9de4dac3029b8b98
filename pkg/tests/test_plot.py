from fractions import Fraction

import pytest

from ipgeom.closure import plot
from ipgeom.closure.errors import DimensionError
from util import box_poly, poly_from_rows

VIEWPORT = [[-2, 3], [-3, 2]]


def test_clip_unbounded_polyhedron(example1):
    polygon = plot.clip_to_viewport(example1, VIEWPORT)
    assert (Fraction(1, 2), Fraction(3, 2)) in polygon.vertices
    assert len(polygon.vertices) == len(polygon.clipped)
    # the two facet edges are solid, the bottom edge comes from the viewport
    assert polygon.clipped.count(False) == 2
    assert any(polygon.clipped)


def test_clip_bounded_polyhedron_keeps_all_edges():
    polygon = plot.clip_to_viewport(box_poly((0, 0), (1, 1)), VIEWPORT)
    assert len(polygon.vertices) == 4
    assert not any(polygon.clipped)


def test_clip_outside_viewport():
    P = poly_from_rows(2, [((1, 0), -10)])
    assert plot.clip_to_viewport(P, VIEWPORT).vertices == ()


def test_clip_requires_plane():
    with pytest.raises(DimensionError):
        plot.clip_to_viewport(box_poly((0, 0, 0), (1, 1, 1)), VIEWPORT)


def test_svg_text(example1):
    text = plot.svg_text(example1, VIEWPORT)
    assert text.lstrip().startswith("<?xml")
    assert "<svg" in text


def test_clipped_csv(example1):
    lines = plot.clipped_csv(example1, VIEWPORT).splitlines()
    assert lines[0] == "x1,x2,clipped"
    assert len(lines) == 1 + len(plot.clip_to_viewport(example1, VIEWPORT).vertices)
