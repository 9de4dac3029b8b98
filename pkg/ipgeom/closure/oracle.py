"""Brute force ground truth: lattice point enumeration and naive hulls.

Nothing here calls the hull code of the package; only exact arithmetic
and inequality evaluation are shared, so comparisons against these
results are independent checks.
"""
import dataclasses
import itertools
import math
from fractions import Fraction
from typing import List, Sequence, Tuple

from . import ratmath
from .errors import ClosureError, DimensionError
from .lattice import IntVec
from .poly import Halfspace, HPoly, VPoly
from .ratmath import QVec


@dataclasses.dataclass(frozen=True)
class Box:
    lower: QVec
    upper: QVec

    def __post_init__(self):
        lower, upper = ratmath.qvec(self.lower), ratmath.qvec(self.upper)
        if len(lower) != len(upper):
            raise DimensionError(len(lower), len(upper), what="box corner")
        if any(lo > hi for lo, hi in zip(lower, upper)):
            raise ClosureError("box lower corner exceeds upper corner")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def cube(cls, n: int, radius) -> "Box":
        return cls((-radius,) * n, (radius,) * n)

    @property
    def dim(self) -> int:
        return len(self.lower)


def enum_integer_points(P: HPoly, box: Box) -> List[IntVec]:
    """Integer points of P inside box, in lexicographic order"""
    if P.dim != box.dim:
        raise DimensionError(P.dim, box.dim, what="box")
    if P.empty:
        return []
    ranges = [
        range(math.ceil(lo), math.floor(hi) + 1) for lo, hi in zip(box.lower, box.upper)
    ]
    return [
        z
        for z in itertools.product(*ranges)
        if all(ratmath.dot(h.normal, z) <= h.rhs for h in P)
    ]


def _turn(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def naive_hull_2d(points: Sequence[Sequence]) -> VPoly:
    """Convex hull of planar points by Andrew's monotone chain"""
    points = sorted(set(tuple(Fraction(a) for a in p) for p in points))
    if len(points) <= 2:
        return VPoly(2, tuple(points))
    lower: List[Tuple[Fraction, Fraction]] = []
    for p in points:
        while len(lower) >= 2 and _turn(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Tuple[Fraction, Fraction]] = []
    for p in reversed(points):
        while len(upper) >= 2 and _turn(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return VPoly(2, tuple(hull))


def naive_integer_hull(P: HPoly, box: Box, rays: Sequence[Sequence[int]] = ()) -> VPoly:
    """conv(integer points of P in box) + cone(rays).

    The caller certifies that the box contains every vertex candidate. In
    dimension 3 all enumerated points are kept as generators.
    """
    if P.dim > 3:
        raise DimensionError(3, P.dim, what="oracle polyhedron")
    points = enum_integer_points(P, box)
    if not points:
        return VPoly(P.dim)
    if P.dim == 2:
        vertices = naive_hull_2d(points).vertices
    elif P.dim == 1:
        vertices = (min(points), max(points))
    else:
        vertices = tuple(points)
    return VPoly(P.dim, tuple(sorted(set(vertices))), tuple(rays))


def candidate_box(V: VPoly) -> Box:
    """Bounding box of conv(vertices) plus the half-open parallelepiped of
    the rays and both directions of every lineality vector"""
    directions = list(V.rays) + [d for v in V.lineality for d in (v, tuple(-a for a in v))]
    corners = []
    for subset in itertools.product((0, 1), repeat=len(directions)):
        shift = [Fraction(0)] * V.dim
        for use, r in zip(subset, directions):
            if use:
                shift = [s + a for s, a in zip(shift, r)]
        corners.extend(tuple(v + s for v, s in zip(vertex, shift)) for vertex in V.vertices)
    lower = tuple(min(c[i] for c in corners) for i in range(V.dim))
    upper = tuple(max(c[i] for c in corners) for i in range(V.dim))
    return Box(lower, upper)


@dataclasses.dataclass(frozen=True)
class NaiveHull2D:
    """conv(vertices) + cone(rays) + span(lineality) with its supporting
    halfspaces; no vertices means no integer point"""

    vertices: Tuple[IntVec, ...]
    rays: Tuple[IntVec, ...] = ()
    lineality: Tuple[IntVec, ...] = ()
    halfspaces: HPoly = HPoly.empty_set(2)

    @property
    def is_empty(self) -> bool:
        return not self.vertices


def _xgcd(a: int, b: int) -> Tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _point_on_level(a: Sequence[int], c: int) -> IntVec:
    """Integer z with <a, z> = c for a primitive planar a"""
    g, x, y = _xgcd(a[0], a[1])
    # g is 1 or -1 for a primitive normal
    return (x * c * g, y * c * g)


def _primitive(v: Sequence[int]) -> IntVec:
    g = math.gcd(v[0], v[1])
    return (v[0] // g, v[1] // g)


def _supporting_halfspaces(vertices, directions) -> HPoly:
    """Halfspaces through the generators with normals orthogonal to their
    differences, to the directions, or along either"""
    differences = [
        (u[0] - v[0], u[1] - v[1]) for u, v in itertools.combinations(vertices, 2)
    ]
    candidates = {(1, 0), (-1, 0), (0, 1), (0, -1)}
    for d in differences + list(directions):
        if d == (0, 0):
            continue
        p = _primitive(d)
        for c in (p, (-p[1], p[0])):
            candidates.update((c, (-c[0], -c[1])))
    spanning = [d for d in differences + list(directions) if d != (0, 0)]
    full = any(
        _turn((0, 0), u, v) != 0 for u, v in itertools.combinations(spanning, 2)
    )
    halfspaces = []
    for c in sorted(candidates):
        if any(ratmath.dot(c, d) > 0 for d in directions):
            continue
        values = [ratmath.dot(c, v) for v in vertices]
        rhs = max(values)
        along = any(ratmath.dot(c, d) == 0 for d in directions)
        if full and values.count(rhs) < 2 and not along:
            continue
        halfspaces.append(Halfspace(c, rhs))
    return HPoly(2, tuple(halfspaces))


def naive_integer_hull_2d(P: HPoly) -> NaiveHull2D:
    """Integer hull of a planar polyhedron by enumeration.

    Vertices come from intersecting every pair of facet lines, rays from the
    facet directions; the integer points in the box spanned by the vertices
    and the rays are enumerated and their monotone chain taken. Polyhedra
    whose normals are all parallel are rounded directly.
    """
    if P.dim != 2:
        raise DimensionError(2, P.dim, what="oracle polyhedron")
    if P.empty:
        return NaiveHull2D(())
    normals = [h.normal for h in P]
    if not normals:
        return NaiveHull2D(((0, 0),), (), ((1, 0), (0, 1)), HPoly(2, ()))
    if all(_turn((0, 0), normals[0], a) == 0 for a in normals):
        a = normals[0]
        opposite = (-a[0], -a[1])
        hi = min((math.floor(h.rhs) for h in P if h.normal == a), default=None)
        lo = max((-math.floor(h.rhs) for h in P if h.normal == opposite), default=None)
        if hi is not None and lo is not None and lo > hi:
            return NaiveHull2D(())
        levels = [t for t in (lo, hi) if t is not None] or [0]
        halfspaces = []
        if hi is not None:
            halfspaces.append(Halfspace(a, hi))
        if lo is not None:
            halfspaces.append(Halfspace(opposite, -lo))
        rays = ()
        if lo is None:
            rays = (opposite,)
        elif hi is None:
            rays = (a,)
        return NaiveHull2D(
            tuple(_point_on_level(a, t) for t in sorted(set(levels))),
            rays,
            ((-a[1], a[0]),),
            HPoly(2, tuple(halfspaces)),
        )
    corners = set()
    for g, h in itertools.combinations(P.halfspaces, 2):
        det = _turn((0, 0), g.normal, h.normal)
        if det == 0:
            continue
        x = (g.rhs * h.normal[1] - h.rhs * g.normal[1]) / det
        y = (g.normal[0] * h.rhs - h.normal[0] * g.rhs) / det
        if all(f.value((x, y)) <= f.rhs for f in P):
            corners.add((x, y))
    if not corners:
        return NaiveHull2D(())
    rays = set()
    for a in normals:
        for d in ((-a[1], a[0]), (a[1], -a[0])):
            if all(ratmath.dot(b, d) <= 0 for b in normals):
                rays.add(d)
    rays = tuple(sorted(rays))
    box = candidate_box(VPoly(2, tuple(corners), rays))
    points = enum_integer_points(P, box)
    if not points:
        return NaiveHull2D(())
    vertices = tuple(tuple(int(a) for a in v) for v in naive_hull_2d(points).vertices)
    return NaiveHull2D(vertices, rays, (), _supporting_halfspaces(vertices, rays))
