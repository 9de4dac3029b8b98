"""Lattice-free sets in the plane.

Classification of maximal lattice-free polyhedra, the facet push-out
construction for lattice-free quadrilaterals, integer Helly certificates
and the check that the facet pair closure of a planar polyhedron is its
integer hull.

Strict inequalities are never perturbed: for an integer point z and an
integer normal a, <a, z> < b holds iff <a, z> <= ceil(b) - 1.
"""
import dataclasses
import itertools
import logging
import math
from typing import List, Optional, Sequence, Tuple, Union

from . import closures, hull2d, lattice, oracle, poly, ratmath
from ._geometry import angle_key, det2, perp
from .errors import (
    ClosureInternalError,
    DimensionError,
    HypothesisError,
    InfeasibleError,
)
from .lattice import IntVec
from .poly import Halfspace, HPoly, VPoly

logger = logging.getLogger(__name__)

NOT_LATTICE_FREE = "NotLatticeFree"
NOT_MAXIMAL = "LatticeFreeNotMaximal"
SPLIT = "Split"
TRIANGLE = "Triangle"
QUADRILATERAL = "Quadrilateral"

MAXIMAL = "maximal"
EARLY = "early"
UNBOUNDED = "unbounded"
UNRESOLVED = "unresolved"


@dataclasses.dataclass(frozen=True)
class LatFreeClass:
    """Classification of a planar polyhedron with respect to lattice-freeness.

    For maximal classes ``witnesses`` holds one integer point per facet of
    ``facets``, in the same order; ``interior_point`` is set for
    NotLatticeFree.
    """

    tag: str
    facets: HPoly
    witnesses: Tuple[IntVec, ...] = ()
    interior_point: Optional[IntVec] = None

    @property
    def is_maximal(self) -> bool:
        return self.tag in (SPLIT, TRIANGLE, QUADRILATERAL)


def _as_hpoly(P: Union[HPoly, VPoly]) -> HPoly:
    if isinstance(P, VPoly):
        return poly.v_to_h_2d(P)
    if P.dim != 2:
        raise DimensionError(2, P.dim, what="planar polyhedron")
    return P


def _strict_interior(P: HPoly) -> HPoly:
    return HPoly(2, tuple(Halfspace(h.normal, math.ceil(h.rhs) - 1) for h in P))


def interior_integer_point(P: HPoly) -> Optional[IntVec]:
    """An integer point strictly inside P, or None if P is lattice-free"""
    if P.empty:
        return None
    return hull2d.integer_feasible_2d(_strict_interior(P))


def relative_interior_integer_points(
    P: HPoly, facet_index: int, limit: int = 2
) -> List[IntVec]:
    """Up to ``limit`` integer points in the relative interior of a facet of P.

    The facet is the intersection of P with the line of its halfspace;
    points are returned in order along the line.
    """
    facet = P.halfspaces[facet_index]
    if facet.rhs.denominator != 1:
        return []
    p0 = lattice.integer_point_on_line(facet.normal, int(facet.rhs))
    step = lattice.canonical_sign(lattice.primitive(perp(facet.normal)))
    t_lo, t_hi = None, None
    for index, h in enumerate(P):
        if index == facet_index:
            continue
        slope = ratmath.dot(h.normal, step)
        gap = h.rhs - h.value(p0)
        if slope == 0:
            if gap <= 0:
                return []
            continue
        # strictly inside the other facets: t * slope < gap
        bound = gap / slope
        if slope > 0:
            t_hi = bound if t_hi is None else min(t_hi, bound)
        else:
            t_lo = bound if t_lo is None else max(t_lo, bound)
    first = math.floor(t_lo) + 1 if t_lo is not None else None
    last = math.ceil(t_hi) - 1 if t_hi is not None else None
    if first is None and last is None:
        ts = range(0, limit)
    elif first is None:
        ts = range(last, last - limit, -1)
    elif last is None:
        ts = range(first, first + limit)
    else:
        ts = range(first, min(last, first + limit - 1) + 1)
    points = [tuple(p + t * s for p, s in zip(p0, step)) for t in ts]
    return sorted(points)


def _outer_normal_order(P: HPoly) -> List[int]:
    """Facet indices sorted counterclockwise by the angle of their normals"""
    return sorted(range(len(P)), key=lambda i: angle_key(P.halfspaces[i].normal))


def classify_max_latfree_2d(V: Union[VPoly, HPoly]) -> LatFreeClass:
    """Classify a full-dimensional planar polyhedron.

    Maximal lattice-free sets in the plane are split sets whose facets hold
    integer points, triangles with an integer point in the relative interior
    of every facet, and quadrilaterals with exactly one such point per facet
    forming a parallelogram of area one.

    Raises:
        HypothesisError: if the input is not full-dimensional
    """
    P = _as_hpoly(V)
    if not poly.is_full_dimensional(P):
        raise HypothesisError("polyhedron is full-dimensional")
    P = poly.remove_redundant(P)
    interior = interior_integer_point(P)
    if interior is not None:
        return LatFreeClass(NOT_LATTICE_FREE, P, (), interior)
    order = _outer_normal_order(P)
    P = HPoly(2, tuple(P.halfspaces[i] for i in order))
    facets = P.halfspaces
    if len(facets) == 2 and facets[0].normal == tuple(-a for a in facets[1].normal):
        lo, hi = -facets[1].rhs, facets[0].rhs
        if hi - lo == 1 and lo.denominator == 1:
            witnesses = tuple(
                lattice.integer_point_on_line(h.normal, int(h.rhs)) for h in facets
            )
            return LatFreeClass(SPLIT, P, witnesses)
        return LatFreeClass(NOT_MAXIMAL, P)
    vertices = poly.h_to_v_2d(P)
    bounded = not vertices.rays and not vertices.lineality
    if bounded and len(facets) in (3, 4):
        points = [relative_interior_integer_points(P, i, limit=2) for i in range(len(P))]
        if len(facets) == 3 and all(points):
            return LatFreeClass(TRIANGLE, P, tuple(p[0] for p in points))
        if len(facets) == 4 and all(len(p) == 1 for p in points):
            witnesses = tuple(p[0] for p in points)
            if is_unit_parallelogram(witnesses):
                return LatFreeClass(QUADRILATERAL, P, witnesses)
    return LatFreeClass(NOT_MAXIMAL, P)


def is_unit_parallelogram(points: Sequence[Sequence]) -> bool:
    """True iff four points in cyclic order form a parallelogram of area one"""
    v1, v2, v3, v4 = points
    if ratmath.add(v1, v3) != ratmath.add(v2, v4):
        return False
    return abs(det2(ratmath.sub(v2, v1), ratmath.sub(v4, v1))) == 1


@dataclasses.dataclass(frozen=True)
class PushStep:
    """Relaxation of one facet: ``new_rhs`` is None when the facet is dropped,
    either because no integer point is added or because none of the added
    points lies strictly inside the other facets"""

    label: int
    facet: Halfspace
    new_rhs: Optional[int]
    new_point: Optional[IntVec] = None


@dataclasses.dataclass(frozen=True)
class PushOutTrace:
    """Outcome of pushing out the facets of a lattice-free quadrilateral.

    ``facets`` are H1..H4 in clockwise order. An early outcome names the
    labels of the pair of facets whose two-halfspace hull lies in
    {<a1, x> >= delta1}; a maximal outcome carries the final quadrilateral
    and its classification. An unresolved outcome carries the pushed set,
    which is lattice-free but not a maximal quadrilateral; an unbounded
    outcome ends with the facet that can be dropped.
    """

    facets: Tuple[Halfspace, ...]
    steps: Tuple[PushStep, ...]
    outcome: str
    implied_by: Optional[Tuple[int, int]] = None
    quadrilateral: Optional[HPoly] = None
    classification: Optional[LatFreeClass] = None
    conclusion_holds: bool = False


def order_facets_clockwise(P: HPoly, first: int) -> List[int]:
    """Facet indices in clockwise order of their normals, starting at ``first``"""
    ccw = _outer_normal_order(P)
    start = ccw.index(first)
    rotated = ccw[start:] + ccw[:start]
    return [rotated[0]] + rotated[:0:-1]


def _push_level(
    others: HPoly, a: Sequence[int], floor_level: int
) -> Optional[Tuple[int, IntVec]]:
    """Least value of <a, z> >= floor_level over integer z strictly inside
    the other facets, with such a point; None if there is no such point.

    Found by doubling the threshold and then bisecting.
    """
    region = _strict_interior(others)
    beyond = HPoly(2, region.halfspaces + (Halfspace(tuple(-c for c in a), -floor_level),))
    if hull2d.integer_feasible_2d(beyond) is None:
        return None

    def point_up_to(level):
        capped = HPoly(2, beyond.halfspaces + (Halfspace(tuple(a), level),))
        return hull2d.integer_feasible_2d(capped)

    width = 1
    while point_up_to(floor_level + width - 1) is None:
        width *= 2
    lo, hi = floor_level, floor_level + width - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if point_up_to(mid) is None:
            lo = mid + 1
        else:
            hi = mid
    return lo, point_up_to(lo)


def _check_push_hypotheses(P: HPoly) -> Tuple[HPoly, int]:
    if P.dim != 2:
        raise DimensionError(2, P.dim, what="planar polyhedron")
    if not poly.is_full_dimensional(P):
        raise HypothesisError("quadrilateral is full-dimensional")
    reduced = poly.remove_redundant(P)
    if len(reduced) != 4 or len(P) != 4:
        raise HypothesisError(
            "quadrilateral has four irredundant facets", f"{len(reduced)} irredundant"
        )
    if interior_integer_point(P) is not None:
        raise HypothesisError("interior is lattice-free")
    integral = [i for i, h in enumerate(P) if h.rhs.denominator == 1]
    if len(integral) != 1:
        raise HypothesisError(
            "lines l2, l3, l4 contain no integer points",
            f"{len(integral)} facet lines contain integer points",
        )
    first = integral[0]
    if not relative_interior_integer_points(P, first, limit=1):
        raise HypothesisError("F1 has an integer point in its relative interior")
    return P, first


def push_out(P: HPoly) -> PushOutTrace:
    """Push out facets H3, H2 and H4 of a lattice-free quadrilateral in turn.

    Each facet is relaxed to the largest level at which the interior stays
    lattice-free, so its line meets an integer point strictly inside the
    other facets. If dropping a facet adds no integer point the construction
    stops early. If only boundary integer points are added the facet can be
    moved arbitrarily far, and the outcome is "unbounded". In every outcome
    the conclusion
    {<a1, x> >= delta1} ⊇ (H2 ∩ H3)_I ∩ (H2 ∩ H4)_I ∩ (H3 ∩ H4)_I
    is checked exactly.

    Raises:
        HypothesisError: naming the first violated hypothesis, or when the
            push does not end at a maximal quadrilateral and the conclusion
            fails
    """
    P, first = _check_push_hypotheses(P)
    labels = order_facets_clockwise(P, first)
    H = [P.halfspaces[i] for i in labels]
    current = list(H)
    steps = []
    outcome = MAXIMAL
    implied_by = None
    # drop H3, then H2, then H4; an early stop is certified by the remaining pair
    for label, remaining in ((3, (2, 4)), (2, (3, 4)), (4, (2, 3))):
        index = label - 1
        facet = current[index]
        others = HPoly(2, tuple(h for i, h in enumerate(current) if i != index))
        floor_level = math.floor(facet.rhs) + 1
        beyond = HPoly(
            2, others.halfspaces + (Halfspace(tuple(-c for c in facet.normal), -floor_level),)
        )
        if hull2d.integer_feasible_2d(beyond) is None:
            steps.append(PushStep(label, facet, None))
            outcome = EARLY
            implied_by = remaining
            break
        pushed = _push_level(others, facet.normal, floor_level)
        if pushed is None:
            steps.append(PushStep(label, facet, None))
            outcome = UNBOUNDED
            logger.debug("H%d can be pushed out without bound", label)
            break
        level, point = pushed
        steps.append(PushStep(label, facet, level, point))
        current[index] = Halfspace(facet.normal, level)
        logger.debug("pushed H%d from %s to %s", label, facet.rhs, level)

    target = HPoly(2, (Halfspace(tuple(-c for c in H[0].normal), -H[0].rhs),))
    pair_hulls = [
        closures.two_halfspace_hull(H[i - 1], H[j - 1]) for i, j in ((2, 3), (2, 4), (3, 4))
    ]
    conclusion = poly.is_subset(poly.intersect(pair_hulls), target)
    if outcome == EARLY:
        i, j = implied_by
        implied = closures.two_halfspace_hull(H[i - 1], H[j - 1])
        conclusion = conclusion and poly.is_subset(implied, target)
        return PushOutTrace(tuple(H), tuple(steps), outcome, implied_by, None, None, conclusion)
    quadrilateral, classification = None, None
    if outcome == MAXIMAL:
        quadrilateral = HPoly(2, tuple(current))
        classification = classify_max_latfree_2d(quadrilateral)
        if classification.tag != QUADRILATERAL:
            outcome = UNRESOLVED
            logger.debug("push out ended with %s", classification.tag)
    if outcome != MAXIMAL and not conclusion:
        raise HypothesisError(
            "pushed facets end at a maximal quadrilateral", f"outcome {outcome}"
        )
    return PushOutTrace(
        tuple(H), tuple(steps), outcome, None, quadrilateral, classification, conclusion
    )


def helly_certificate(P: HPoly) -> Tuple[int, ...]:
    """Smallest subset of at most four halfspaces of P without integer points.

    Subsets are searched by size and then lexicographically, so the first
    certificate found is returned. Indices refer to P's halfspaces.

    Raises:
        HypothesisError: if P contains an integer point
    """
    if P.dim != 2:
        raise DimensionError(2, P.dim, what="planar polyhedron")
    if P.empty and not P.halfspaces:
        return ()
    if hull2d.integer_feasible_2d(P) is not None:
        raise HypothesisError("polyhedron has no integer point")
    for size in range(1, 5):
        for subset in itertools.combinations(range(len(P)), size):
            sub = HPoly(2, tuple(P.halfspaces[i] for i in subset))
            if hull2d.integer_feasible_2d(sub) is None:
                logger.debug("helly certificate %s", subset)
                return subset
    raise ClosureInternalError("no integer-free subset of at most four halfspaces")


@dataclasses.dataclass(frozen=True)
class IntegerHullCheck:
    """Facet pair closure against the enumerated integer hull of a planar polyhedron"""

    polyhedron: HPoly
    closure: HPoly
    integer_hull: HPoly
    passed: bool


def _matches_naive_hull(closure: HPoly, naive: oracle.NaiveHull2D) -> bool:
    """Set equality: every generator of the enumerated hull lies in the
    closure and every supporting halfspace of the hull is valid for it"""
    if naive.is_empty:
        return closure.empty or not poly.is_feasible(closure)
    if closure.empty:
        return False
    if not all(poly.contains_point(closure, v) for v in naive.vertices):
        return False
    for h in closure:
        if any(h.value(r) > 0 for r in naive.rays):
            return False
        if any(h.value(d) != 0 for d in naive.lineality):
            return False
    return poly.is_subset(closure, naive.halfspaces)


def check_2dih(P: HPoly) -> IntegerHullCheck:
    if P.dim != 2:
        raise DimensionError(2, P.dim, what="planar polyhedron")
    naive = oracle.naive_integer_hull_2d(P)
    try:
        closure = closures.facet_pair_closure(P)
    except InfeasibleError:
        closure = HPoly.empty_set(2)
    passed = _matches_naive_hull(closure, naive)
    if not passed:
        logger.warning("facet pair closure differs from the integer hull")
    return IntegerHullCheck(P, closure, naive.halfspaces, passed)


def verify_2dih(P: HPoly) -> bool:
    """True iff the facet pair closure of P equals its integer hull (or both are empty)"""
    return check_2dih(P).passed
