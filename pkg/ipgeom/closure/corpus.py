"""Seeded random instances for property suites and the ``gen-corpus`` verb.

Every generator takes a :class:`numpy.random.Generator` so that a single
seed reproduces a whole corpus. Coefficients are drawn as integers and
turned into exact fractions immediately.
"""
import dataclasses
import logging
from fractions import Fraction
from typing import Tuple

import numpy as np

from . import hull2d, lattice, poly, ratmath
from ._geometry import det2
from .closures import SplitDisjunction
from .errors import ClosureInternalError
from .hull2d import Cone2
from .lattice import SubspaceBasis
from .poly import Halfspace, HPoly

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 1000


def _integer(rng: np.random.Generator, lo: int, hi: int) -> int:
    """Uniform integer in [lo, hi]"""
    return int(rng.integers(lo, hi + 1))


def _rational(rng: np.random.Generator, bound: int, max_denominator: int) -> Fraction:
    denominator = _integer(rng, 1, max_denominator)
    return Fraction(_integer(rng, -bound * denominator, bound * denominator), denominator)


def _nonzero_vector(rng: np.random.Generator, n: int, bound: int) -> Tuple[int, ...]:
    while True:
        v = tuple(_integer(rng, -bound, bound) for _ in range(n))
        if any(v):
            return v


def random_polygon(
    rng: np.random.Generator,
    n_facets: Tuple[int, int] = (3, 6),
    coefficient_bound: int = 10,
    max_denominator: int = 4,
    bounded: bool = False,
    box_radius: int = 6,
) -> HPoly:
    """A random planar H-polyhedron around a random rational center.

    Each facet passes at a random nonnegative slack from the center, so the
    polyhedron is nonempty, though its integer hull may be empty. With
    ``bounded`` the box |x_i| <= box_radius is added.
    """
    denominator = _integer(rng, 1, max_denominator)
    center = tuple(
        Fraction(_integer(rng, -3 * denominator, 3 * denominator), denominator)
        for _ in range(2)
    )
    count = _integer(rng, *n_facets)
    halfspaces = []
    for _ in range(count):
        a = _nonzero_vector(rng, 2, coefficient_bound)
        slack = Fraction(_integer(rng, 0, 4 * denominator), denominator)
        halfspaces.append(Halfspace.from_coefficients(a, ratmath.dot(a, center) + slack))
    if bounded:
        for a in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            halfspaces.append(Halfspace(a, box_radius))
    return HPoly(2, tuple(halfspaces))


def random_cone(
    rng: np.random.Generator, ray_bound: int = 10, max_denominator: int = 10
) -> Cone2:
    """A random simplicial cone apex + cone(r1, r2) in the plane.

    Full-dimensional cones always contain integer points, so the integer
    hull is nonempty.
    """
    apex = tuple(_rational(rng, 5, max_denominator) for _ in range(2))
    for _ in range(MAX_ATTEMPTS):
        r1 = _nonzero_vector(rng, 2, ray_bound)
        r2 = _nonzero_vector(rng, 2, ray_bound)
        if det2(r1, r2) != 0:
            return Cone2(apex, (r1, r2))
    raise ClosureInternalError("no independent ray pair drawn")


def random_halfspace_pair(
    rng: np.random.Generator, n: int, bound: int = 5, max_denominator: int = 4
) -> Tuple[Halfspace, Halfspace]:
    """Two halfspaces of R^n with linearly independent normals"""
    for _ in range(MAX_ATTEMPTS):
        a1 = _nonzero_vector(rng, n, bound)
        a2 = _nonzero_vector(rng, n, bound)
        if ratmath.rank_exact([a1, a2]) == 2:
            return (
                Halfspace.from_coefficients(a1, _rational(rng, bound, max_denominator)),
                Halfspace.from_coefficients(a2, _rational(rng, bound, max_denominator)),
            )
    raise ClosureInternalError(f"no independent normal pair drawn in dimension {n}")


def random_infeasible_polygon(
    rng: np.random.Generator, min_facets: int = 6, coefficient_bound: int = 10
) -> HPoly:
    """A nonempty planar polyhedron with at least min_facets facets and no
    integer point.

    The facets are tangent-ish cuts around a fractional point of a unit
    cell, kept within a slack that the integer check then confirms.
    """
    for attempt in range(MAX_ATTEMPTS):
        cell = (_integer(rng, -3, 3), _integer(rng, -3, 3))
        center = tuple(c + Fraction(_integer(rng, 1, 7), 8) for c in cell)
        halfspaces = []
        for _ in range(_integer(rng, min_facets, min_facets + 2)):
            a = _nonzero_vector(rng, 2, coefficient_bound)
            slack = Fraction(_integer(rng, 0, 3), 8)
            halfspaces.append(Halfspace.from_coefficients(a, ratmath.dot(a, center) + slack))
        P = HPoly(2, tuple(halfspaces))
        if len(set(halfspaces)) < min_facets:
            continue
        if hull2d.integer_feasible_2d(P) is None:
            logger.debug("integer-infeasible polygon after %d attempts", attempt + 1)
            return P
    raise ClosureInternalError("no integer-infeasible polygon drawn")


@dataclasses.dataclass(frozen=True)
class SplitInstance:
    """A polytope of R^n with a split disjunction, a cut valid outside the
    split interior and a lattice subspace holding both normals"""

    P: HPoly
    split: SplitDisjunction
    cut: Halfspace
    subspace: SubspaceBasis


def random_split_instance(
    rng: np.random.Generator, n: int = 3, bound: int = 3, box_radius: int = 4
) -> SplitInstance:
    """A random instance for projecting split cuts onto a plane of R^n.

    The cut normal is an integer combination of the split normal and a
    second random vector; its rhs is the larger of the maxima over the two
    sides of the split, so the cut is valid by construction.
    """
    for _ in range(MAX_ATTEMPTS):
        P = random_polytope(rng, n, bound, box_radius)
        a = lattice.primitive(_nonzero_vector(rng, n, bound))
        b = _nonzero_vector(rng, n, bound)
        if ratmath.rank_exact([a, b]) != 2:
            continue
        weights = (_integer(rng, -2, 2), _integer(rng, -2, 2))
        c = tuple(weights[0] * ai + weights[1] * bi for ai, bi in zip(a, b))
        if not any(c):
            continue
        c = lattice.primitive(c)
        low = poly.lp_maximize(P, [-v for v in a])
        high = poly.lp_maximize(P, a)
        if not (low.optimal and high.optimal):
            continue
        K = _integer(rng, -int(low.value) - 1, int(high.value) + 1)
        split = SplitDisjunction(a, K)
        maxima = []
        for side in (split.left(), split.right()):
            piece = poly.intersect([P, HPoly(n, (side,))])
            if not piece.empty:
                maxima.append(poly.lp_maximize(piece, c).value)
        if not maxima:
            continue
        cut = Halfspace(c, max(maxima))
        return SplitInstance(P, split, cut, lattice.subspace([a, b]))
    raise ClosureInternalError("no split instance drawn")


def random_polytope(
    rng: np.random.Generator, n: int, bound: int = 3, box_radius: int = 4, extra: int = 3
) -> HPoly:
    """The box |x_i| <= box_radius cut by a few random halfspaces through
    a neighbourhood of the origin"""
    halfspaces = []
    for i in range(n):
        unit = tuple(int(i == j) for j in range(n))
        halfspaces.append(Halfspace(unit, box_radius))
        halfspaces.append(Halfspace(tuple(-v for v in unit), box_radius))
    for _ in range(extra):
        a = _nonzero_vector(rng, n, bound)
        halfspaces.append(Halfspace.from_coefficients(a, Fraction(_integer(rng, 1, 8), 2)))
    return HPoly(n, tuple(halfspaces))
