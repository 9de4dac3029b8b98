"""Exact integer hulls and integer feasibility in the plane.

A pointed polyhedron V = conv(vertices) + cone(r1, r2) with integer rays
has the same integer hull as the integer points of the candidate region
conv(vertices) + {l1 r1 + l2 r2 : 0 <= l1, l2 < 1} plus the recession cone:
any integer point of V with some l_i >= 1 stays in V after subtracting r_i.
Both the hull and the feasibility search enumerate the integer points of
V inside the bounding box of that region, column by column.
"""
import dataclasses
import itertools
import logging
import math
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from . import lattice, poly, ratmath
from ._geometry import det2, graham_scan, perp
from .errors import DimensionError, HypothesisError, ZeroVectorError
from .lattice import IntVec
from .poly import Halfspace, HPoly, VPoly
from .ratmath import QVec

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class Cone2:
    """apex + cone(r1, r2) for two independent primitive integer rays"""

    apex: QVec
    rays: Tuple[IntVec, IntVec]

    def __post_init__(self):
        apex = ratmath.qvec(self.apex)
        if len(apex) != 2:
            raise DimensionError(2, len(apex), what="cone apex")
        if len(self.rays) != 2:
            raise DimensionError(2, len(self.rays), what="cone ray list")
        rays = tuple(lattice.primitive_direction(r) for r in self.rays)
        if det2(*rays) == 0:
            raise ZeroVectorError(f"cone rays {rays} are linearly dependent")
        object.__setattr__(self, "apex", apex)
        object.__setattr__(self, "rays", rays)

    def to_vpoly(self) -> VPoly:
        return VPoly(2, (self.apex,), self.rays)

    def facets(self) -> Tuple[Halfspace, Halfspace]:
        """The two facets, the first orthogonal to the first ray"""
        facets = []
        for r, other in (self.rays, self.rays[::-1]):
            normal = perp(r)
            if ratmath.dot(normal, other) > 0:
                normal = (-normal[0], -normal[1])
            facets.append(Halfspace(normal, ratmath.dot(normal, self.apex)))
        return tuple(facets)

    def to_hpoly(self) -> HPoly:
        return HPoly(2, self.facets())


def integer_hull_halfspace(H: Halfspace) -> Halfspace:
    return Halfspace(H.normal, math.floor(H.rhs))


def integer_hull_strip(a: Sequence[int], lo, hi) -> Optional[Tuple[int, int]]:
    """Integer hull of {x : lo <= <a, x> <= hi} for primitive a, as new bounds.

    Returns None when no integer lies in [lo, hi].
    """
    lo_int, hi_int = math.ceil(Fraction(lo)), math.floor(Fraction(hi))
    if lo_int > hi_int:
        return None
    return lo_int, hi_int


def _require_plane(dim):
    if dim != 2:
        raise DimensionError(2, dim, what="planar polyhedron")


def _column_range(P: HPoly, x: int, y_lo: Fraction, y_hi: Fraction):
    """Integer range of y with (x, y) in P and y_lo <= y <= y_hi"""
    for h in P:
        a1, a2 = h.normal
        if a2 > 0:
            y_hi = min(y_hi, (h.rhs - a1 * x) / a2)
        elif a2 < 0:
            y_lo = max(y_lo, (h.rhs - a1 * x) / a2)
        elif a1 * x > h.rhs:
            return range(0)
    return range(math.ceil(y_lo), math.floor(y_hi) + 1)


def _candidate_box(V: VPoly) -> Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]:
    corners = []
    for subset in itertools.product((0, 1), repeat=len(V.rays)):
        shift = [Fraction(0), Fraction(0)]
        for use, r in zip(subset, V.rays):
            if use:
                shift[0] += r[0]
                shift[1] += r[1]
        corners.extend(ratmath.add(v, shift) for v in V.vertices)
    xs = [c[0] for c in corners]
    ys = [c[1] for c in corners]
    return (min(xs), max(xs)), (min(ys), max(ys))


def _candidate_points(P: HPoly, V: VPoly) -> Iterator[IntVec]:
    """Integer points of P in the candidate region's bounding box, lexicographically"""
    (x_lo, x_hi), (y_lo, y_hi) = _candidate_box(V)
    for x in range(math.ceil(x_lo), math.floor(x_hi) + 1):
        for y in _column_range(P, x, y_lo, y_hi):
            yield (x, y)


def _pointed_representations(V: VPoly) -> Tuple[HPoly, VPoly]:
    _require_plane(V.dim)
    if V.lineality:
        raise HypothesisError("polyhedron is pointed", f"lineality {V.lineality}")
    P = poly.v_to_h_2d(V)
    minimal = poly.h_to_v_2d(P)
    if minimal.lineality:
        raise HypothesisError("polyhedron is pointed", "rays span a line")
    return P, minimal


def integer_hull_pointed_2d(V: VPoly) -> VPoly:
    """Exact integer hull of a pointed planar polyhedron.

    Returns an empty VPoly when V has no integer point; otherwise the hull
    keeps the recession cone of V.
    """
    if V.is_empty:
        return VPoly(2)
    P, minimal = _pointed_representations(V)
    points = list(_candidate_points(P, minimal))
    logger.debug("%d candidate integer points", len(points))
    if not points:
        return VPoly(2)
    hull = VPoly(2, tuple(graham_scan(points)), minimal.rays)
    return poly.h_to_v_2d(poly.v_to_h_2d(hull))


def integer_hull_2d(P: HPoly) -> HPoly:
    """Integer hull of any planar H-polyhedron, as a minimal H-representation"""
    _require_plane(P.dim)
    V = poly.h_to_v_2d(P)
    if V.is_empty:
        return HPoly.empty_set(2)
    if len(V.lineality) == 2:
        return HPoly.whole_space(2)
    if len(V.lineality) == 1:
        a = lattice.primitive(perp(V.lineality[0]))
        lo, hi = _level_range(a, V)
        if lo is not None and hi is not None:
            bounds = integer_hull_strip(a, lo, hi)
            if bounds is None:
                return HPoly.empty_set(2)
            lo, hi = bounds
        halfspaces = []
        if hi is not None:
            halfspaces.append(Halfspace(a, math.floor(hi)))
        if lo is not None:
            halfspaces.append(Halfspace(tuple(-c for c in a), -math.ceil(lo)))
        return HPoly(2, tuple(halfspaces))
    hull = integer_hull_pointed_2d(V)
    return poly.v_to_h_2d(hull)


def _level_range(a: Sequence[int], V: VPoly):
    """Range of <a, x> over V; None for an unbounded side"""
    values = [ratmath.dot(a, v) for v in V.vertices]
    lo, hi = min(values), max(values)
    for r in V.rays:
        slope = ratmath.dot(a, r)
        if slope > 0:
            hi = None
        elif slope < 0:
            lo = None
    return lo, hi


def integer_feasible_2d(P: HPoly) -> Optional[IntVec]:
    """Some integer point of a planar polyhedron, or None if there is none.

    With a line in the recession cone the search reduces to an integer level
    of the orthogonal primitive functional, solved by an extended gcd; in the
    pointed case the first candidate point in lexicographic order is returned.
    """
    _require_plane(P.dim)
    V = poly.h_to_v_2d(P)
    if V.is_empty:
        return None
    if len(V.lineality) == 2:
        return (0, 0)
    if len(V.lineality) == 1:
        a = lattice.primitive(perp(V.lineality[0]))
        lo, hi = _level_range(a, V)
        if lo is None and hi is None:
            level = 0
        elif lo is None:
            level = math.floor(hi)
        else:
            level = math.ceil(lo)
            if hi is not None and level > hi:
                return None
        return lattice.integer_point_on_line(a, level)
    P_min, minimal = _pointed_representations(V)
    return next(_candidate_points(P_min, minimal), None)


def integer_points_2d(P: HPoly, limit: int = None) -> List[IntVec]:
    """Integer points of a bounded planar polyhedron in lexicographic order"""
    _require_plane(P.dim)
    V = poly.h_to_v_2d(P)
    if V.is_empty:
        return []
    if V.rays or V.lineality:
        raise HypothesisError("polyhedron is bounded")
    points = _candidate_points(poly.v_to_h_2d(V), V)
    return list(itertools.islice(points, limit))
