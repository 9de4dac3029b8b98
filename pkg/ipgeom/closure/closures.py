"""Closure operations: two-halfspace hulls, split hulls and CG cuts.

The two-halfspace hull of H1 and H2 is computed in the lattice subspace L
spanned by their normals: the projection of H1 ∩ H2 onto L is a pointed
cone (or a strip, or a halfspace) whose integer hull with respect to the
projected lattice lifts back to (H1 ∩ H2)_I by adding L^perp.
"""
import dataclasses
import itertools
import logging
import math
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from . import _elimination, _simplex, hull2d, lattice, poly, ratmath
from ._geometry import perp
from .errors import (
    ClosureError,
    DimensionError,
    HypothesisError,
    InfeasibleError,
    LatticeSubspaceError,
)
from .hull2d import Cone2
from .lattice import IntVec, SubspaceBasis
from .poly import Halfspace, HPoly, VPoly

logger = logging.getLogger(__name__)

EXPLICIT = "explicit"
BOX = "box"


@dataclasses.dataclass(frozen=True)
class SplitDisjunction:
    """{x : <a, x> <= K} ∪ {x : <a, x> >= K + 1} for primitive a"""

    a: IntVec
    K: int

    def __post_init__(self):
        a = tuple(int(v) for v in self.a)
        if lattice.primitive(a) != a:
            raise ClosureError(f"split normal {a} is not primitive")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "K", int(self.K))

    @property
    def dim(self) -> int:
        return len(self.a)

    def left(self) -> Halfspace:
        return Halfspace(self.a, self.K)

    def right(self) -> Halfspace:
        return Halfspace(tuple(-v for v in self.a), -(self.K + 1))

    def in_interior(self, x: Sequence) -> bool:
        """True iff x lies in the open split set K < <a, x> < K + 1"""
        value = ratmath.dot(self.a, x)
        return self.K < value < self.K + 1


@dataclasses.dataclass(frozen=True)
class SplitFamily:
    """A finite nonempty list of distinct split disjunctions.

    ``provenance`` is "explicit" or "box"; box families record their norm
    bound in ``bound``.
    """

    disjunctions: Tuple[SplitDisjunction, ...]
    provenance: str = EXPLICIT
    bound: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "disjunctions", tuple(self.disjunctions))
        if not self.disjunctions:
            raise ClosureError("split family is empty")
        if len(set(self.disjunctions)) != len(self.disjunctions):
            raise ClosureError("split family contains duplicate disjunctions")
        if self.provenance not in (EXPLICIT, BOX):
            raise ClosureError(f"unknown split family provenance {self.provenance}")
        dims = {d.dim for d in self.disjunctions}
        if len(dims) > 1:
            dims = sorted(dims)
            raise DimensionError(dims[0], dims[-1], what="split normal")

    def __len__(self):
        return len(self.disjunctions)

    def __iter__(self):
        return iter(self.disjunctions)


def two_halfspace_hull(H1: Halfspace, H2: Halfspace) -> HPoly:
    """Exact integer hull of H1 ∩ H2.

    Equal normals reduce to rounding one halfspace, opposite normals to
    rounding a strip. In the plane the integer hull of the cone is taken
    directly; otherwise the intersection is projected onto the span of both
    normals and its planar integer hull is lifted back.
    """
    if H1.dim != H2.dim:
        raise DimensionError(H1.dim, H2.dim, what="halfspace")
    n = H1.dim
    if H1.normal == H2.normal:
        tighter = H1 if H1.rhs <= H2.rhs else H2
        return HPoly(n, (hull2d.integer_hull_halfspace(tighter),))
    opposite = tuple(-a for a in H1.normal)
    if H2.normal == opposite:
        bounds = hull2d.integer_hull_strip(H1.normal, -H2.rhs, H1.rhs)
        if bounds is None:
            return HPoly.empty_set(n)
        lo, hi = bounds
        return HPoly(n, (Halfspace(H1.normal, hi), Halfspace(opposite, -lo)))
    if n == 2:
        return hull2d.integer_hull_2d(HPoly(2, (H1, H2)))
    L = lattice.subspace([H1.normal, H2.normal])
    B = lattice.projected_lattice_basis(L)
    projected = poly.project_onto(HPoly(n, (H1, H2)), B)
    hull = hull2d.integer_hull_2d(projected)
    logger.debug("pair hull in lattice coordinates has %d facets", len(hull))
    return poly.lift_by_orthogonal_complement(hull, B)


def facet_pair_closure(P: HPoly) -> HPoly:
    """Intersection of the integer hulls of all pairs of facets of P, i = j included.

    In the plane this is the integer hull of P; in higher dimension it is a
    relaxation of the two-halfspace closure.

    Raises:
        InfeasibleError: if P is empty
    """
    if not poly.is_feasible(P):
        raise InfeasibleError("facet pair closure of an empty polyhedron")
    P = poly.remove_redundant(P)
    if not P.halfspaces:
        return P
    facets = P.halfspaces
    hulls = [
        two_halfspace_hull(facets[i], facets[j])
        for i, j in itertools.combinations_with_replacement(range(len(facets)), 2)
    ]
    logger.debug("intersecting %d pair hulls", len(hulls))
    if P.dim == 2:
        if any(hull.empty for hull in hulls):
            return HPoly.empty_set(2)
        return poly.reduce_2d(HPoly(2, tuple(h for hull in hulls for h in hull)))
    return poly.intersect(hulls)


def disjunctive_hull(P: HPoly, d: SplitDisjunction) -> HPoly:
    """Closed convex hull of P ∩ {<a,x> <= K} and P ∩ {<a,x> >= K+1}.

    In the plane the V-representations of both pieces are merged; in higher
    dimension a lifted formulation with one copy of the variables per piece
    is projected by Fourier-Motzkin elimination.

    Raises:
        InfeasibleError: if P is empty
    """
    if d.dim != P.dim:
        raise DimensionError(P.dim, d.dim, what="split normal")
    if not poly.is_feasible(P):
        raise InfeasibleError("disjunctive hull of an empty polyhedron")
    n = P.dim
    left = poly.intersect([P, HPoly(n, (d.left(),))])
    right = poly.intersect([P, HPoly(n, (d.right(),))])
    if left.empty and right.empty:
        return HPoly.empty_set(n)
    if right.empty:
        return left
    if left.empty:
        return right
    if n == 2:
        pieces = [poly.h_to_v_2d(left), poly.h_to_v_2d(right)]
        union = VPoly(
            2,
            tuple(v for V in pieces for v in V.vertices),
            tuple(r for V in pieces for r in V.rays),
            tuple(r for V in pieces for r in V.lineality),
        )
        return poly.v_to_h_2d(union)
    return _lifted_disjunctive_hull(P, d)


def _lifted_disjunctive_hull(P: HPoly, d: SplitDisjunction) -> HPoly:
    # columns: x, the right piece's share y of x, and the left weight t
    n = P.dim
    zero = (Fraction(0),) * n

    def row(x_part, y_part, t, rhs):
        return (
            tuple(Fraction(v) for v in x_part)
            + tuple(Fraction(v) for v in y_part)
            + (Fraction(t),),
            Fraction(rhs),
        )

    negated_a = tuple(-v for v in d.a)
    rows = []
    for h in P:
        negated = tuple(-v for v in h.normal)
        rows.append(row(h.normal, negated, -h.rhs, 0))
        rows.append(row(zero, h.normal, h.rhs, h.rhs))
    rows.append(row(d.a, negated_a, -d.K, 0))
    rows.append(row(zero, negated_a, -(d.K + 1), -(d.K + 1)))
    rows.append(row(zero, zero, -1, 0))
    rows.append(row(zero, zero, 1, 1))
    projected = _elimination.fourier_motzkin(rows, 2 * n + 1, range(n, 2 * n + 1))
    if projected is None:
        return HPoly.empty_set(n)
    Q = HPoly.from_rows(n, projected)
    if Q.empty or not Q.halfspaces:
        return Q
    return poly.remove_redundant(Q)


def split_closure_family(P: HPoly, F: SplitFamily) -> HPoly:
    """Intersection of the disjunctive hulls of P over a finite split family"""
    hulls = [disjunctive_hull(P, d) for d in F]
    logger.debug("intersecting %d disjunctive hulls", len(hulls))
    return poly.intersect(hulls)


def primitive_directions(n: int, bound: int, both_signs: bool = False) -> List[IntVec]:
    """Primitive integer vectors with max norm at most bound.

    Unless both_signs is set only the representative with a positive first
    nonzero entry is returned.
    """
    directions = []
    for v in itertools.product(range(-bound, bound + 1), repeat=n):
        if ratmath.is_zero(v) or lattice.primitive(v) != v:
            continue
        if both_signs or lattice.canonical_sign(v) == v:
            directions.append(v)
    return directions


def _level_bounds(P: HPoly, a: Sequence[int], unbounded_radius: int):
    upper = poly.lp_maximize(P, a)
    lower = poly.lp_maximize(P, [-v for v in a])
    hi = upper.value if upper.optimal else None
    lo = -lower.value if lower.optimal else None
    if hi is not None and lo is not None:
        return lo, hi
    if P.dim == 2:
        values = [ratmath.dot(a, v) for v in poly.h_to_v_2d(P).vertices]
    else:
        box = HPoly(
            P.dim,
            tuple(
                Halfspace(tuple(s * int(i == j) for j in range(P.dim)), unbounded_radius)
                for i in range(P.dim)
                for s in (1, -1)
            ),
        )
        clipped = poly.intersect([P, box])
        if clipped.empty:
            return None
        values = [
            poly.lp_maximize(clipped, a).value,
            -poly.lp_maximize(clipped, [-v for v in a]).value,
        ]
    return (
        lo if lo is not None else min(values),
        hi if hi is not None else max(values),
    )


def box_split_family(
    P: HPoly, bound: int = 3, unbounded_radius: int = 10
) -> SplitFamily:
    """Splits with max norm at most bound whose split set meets P.

    The facet normals of P are always included so that every facet CG cut
    of P is implied by the family. K ranges over ceil(lo) - 1 .. floor(hi)
    for the range [lo, hi] of <a, x> on P. An unbounded side of that range
    is replaced by the extreme vertex value in the plane, and by the range
    over P clipped to the box of the given radius in higher dimension.
    """
    if not poly.is_feasible(P):
        raise InfeasibleError("split family of an empty polyhedron")
    directions = primitive_directions(P.dim, bound)
    for h in P:
        a = lattice.canonical_sign(h.normal)
        if a not in directions:
            directions.append(a)
    disjunctions = []
    for a in directions:
        bounds = _level_bounds(P, a, unbounded_radius)
        if bounds is None:
            continue
        lo, hi = bounds
        for K in range(math.ceil(lo) - 1, math.floor(hi) + 1):
            disjunctions.append(SplitDisjunction(a, K))
    logger.debug("box family with bound %d has %d splits", bound, len(disjunctions))
    return SplitFamily(tuple(disjunctions), BOX, bound)


def cg_cut_from_direction(P: HPoly, a: Sequence[int]) -> Optional[Halfspace]:
    """The CG cut <a, x> <= floor(max over P), or None if a is unbounded on P

    Raises:
        InfeasibleError: if P is empty
    """
    a = tuple(int(v) for v in a)
    if lattice.primitive(a) != a:
        raise ClosureError(f"direction {a} is not primitive")
    result = poly.lp_maximize(P, a)
    if result.status == _simplex.INFEASIBLE:
        raise InfeasibleError("CG cut of an empty polyhedron")
    if not result.optimal:
        return None
    return Halfspace(a, math.floor(result.value))


def cg_round(P: HPoly, bound: int = 3) -> HPoly:
    """P cut by the CG cuts of its facet directions and of all primitive
    directions with max norm at most bound"""
    directions = primitive_directions(P.dim, bound, both_signs=True)
    for h in P:
        if h.normal not in directions:
            directions.append(h.normal)
    cuts = [c for c in (cg_cut_from_direction(P, a) for a in directions) if c]
    return poly.intersect([P, HPoly(P.dim, tuple(cuts))])


def lift_cut(H: Halfspace, L: SubspaceBasis) -> Halfspace:
    """Lift a cut in lattice coordinates of L to R^n, with normal in L"""
    return poly.lift_halfspace(H, L)


@dataclasses.dataclass(frozen=True)
class RankIHSplit:
    """The split built for one facet <a, x> <= delta of the cone's integer hull.

    ``split`` is None when the line <a, x> = delta + 1 misses the cone;
    ``unit_interval`` is the unit interval of that line meeting the cone and
    ``facet_interval`` the chosen unit interval on the facet.
    """

    facet_index: int
    facet: Halfspace
    split: Optional[SplitDisjunction]
    unit_interval: Optional[Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]] = None
    facet_interval: Optional[Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]] = None


def _cone_integer_hull(C: Cone2) -> Tuple[HPoly, VPoly]:
    hull = hull2d.integer_hull_pointed_2d(C.to_vpoly())
    if hull.is_empty:
        raise HypothesisError("integer hull of the cone is nonempty")
    return poly.v_to_h_2d(hull), hull


def _facet_intervals(facet: Halfspace, hull: VPoly, ray_window: int):
    """Unit intervals of the facet, as lexicographically sorted endpoint pairs"""
    a = facet.normal
    on_facet = sorted(v for v in hull.vertices if facet.value(v) == facet.rhs)
    step = lattice.primitive(perp(a))
    if lattice.canonical_sign(step) != step:
        step = tuple(-s for s in step)
    if len(on_facet) >= 2:
        start, end = on_facet[0], on_facet[-1]
        count = int((end[0] - start[0]) / step[0]) if step[0] else int(
            (end[1] - start[1]) / step[1]
        )
        points = [tuple(s + k * t for s, t in zip(start, step)) for k in range(count + 1)]
    else:
        vertex = on_facet[0]
        ray = next(r for r in hull.rays if ratmath.dot(a, r) == 0)
        direction = lattice.primitive(ray)
        points = [
            tuple(v + k * t for v, t in zip(vertex, direction))
            for k in range(ray_window + 1)
        ]
    intervals = [tuple(sorted(pair)) for pair in zip(points, points[1:])]
    return sorted(intervals)


def rank_ih_splits(C: Cone2, ray_window: int = 4) -> List[RankIHSplit]:
    """One split per facet of the integer hull of a planar cone.

    For a facet <a, x> <= delta of C_I whose shifted line <a, x> = delta + 1
    meets C, the intersection is strictly inside one unit interval U of that
    line. The split is the split set containing the area-one parallelogram
    conv(U ∪ U') for the unit interval U' on the facet with the
    lexicographically smallest left endpoint; on an unbounded facet only the
    first ``ray_window`` intervals from its vertex are compared.

    Raises:
        HypothesisError: if C has no integer point
    """
    hull_h, hull_v = _cone_integer_hull(C)
    cone = C.to_hpoly()
    records = []
    for index, facet in enumerate(hull_h):
        a, delta = facet.normal, facet.rhs
        level = delta + 1
        if ratmath.dot(a, C.apex) < level:
            records.append(RankIHSplit(index, facet, None))
            continue
        p0 = lattice.integer_point_on_line(a, int(level))
        d = lattice.primitive(perp(a))
        t_lo, t_hi = None, None
        for h in cone:
            slope = ratmath.dot(h.normal, d)
            bound = (h.rhs - h.value(p0)) / slope if slope else None
            if slope > 0:
                t_hi = bound if t_hi is None else min(t_hi, bound)
            elif slope < 0:
                t_lo = bound if t_lo is None else max(t_lo, bound)
        if t_lo is None or t_hi is None:
            raise HypothesisError(
                "shifted facet line meets the cone in a segment", f"facet {index}"
            )
        k0 = math.floor(t_lo)
        u = tuple(
            sorted(
                tuple(Fraction(p + k * s) for p, s in zip(p0, d)) for k in (k0, k0 + 1)
            )
        )
        w = _facet_intervals(facet, hull_v, ray_window)[0]
        across = perp(ratmath.sub(u[0], w[0]))
        c = lattice.canonical_sign(lattice.primitive_direction(across))
        K = min(ratmath.dot(c, w[0]), ratmath.dot(c, w[1]))
        split = SplitDisjunction(c, int(K))
        logger.debug("facet %s: split a=%s K=%s", facet, split.a, split.K)
        records.append(RankIHSplit(index, facet, split, u, w))
    return records


@dataclasses.dataclass(frozen=True)
class RankIHCertificate:
    """Result of checking that one split round followed by CG cuts in the
    facet directions of C_I reproduces C_I.

    ``cg_rhs`` holds, per facet of C_I, the right hand side of the CG cut of
    the split relaxation in that facet direction.
    """

    cone: Cone2
    integer_hull: HPoly
    splits: Tuple[RankIHSplit, ...]
    relaxation: HPoly
    cg_rhs: Tuple[Optional[int], ...]
    passed: bool


def verify_rank_ih(C: Cone2, ray_window: int = 4) -> RankIHCertificate:
    hull_h, _ = _cone_integer_hull(C)
    splits = rank_ih_splits(C, ray_window)
    cone = C.to_hpoly()
    pieces = [cone] + [disjunctive_hull(cone, s.split) for s in splits if s.split]
    relaxation = poly.intersect(pieces)
    cg_rhs = []
    passed = poly.is_subset(hull_h, relaxation)
    for facet in hull_h:
        cut = cg_cut_from_direction(relaxation, facet.normal)
        cg_rhs.append(None if cut is None else int(cut.rhs))
        if cut is None or cut.rhs > facet.rhs:
            passed = False
    if not passed:
        logger.warning("rank check failed for cone with apex %s", C.apex)
    return RankIHCertificate(C, hull_h, tuple(splits), relaxation, tuple(cg_rhs), passed)


def _valid_outside_split(P: HPoly, d: SplitDisjunction, cut: Halfspace) -> bool:
    for side in (d.left(), d.right()):
        piece = poly.intersect([P, HPoly(P.dim, (side,))])
        if piece.empty:
            continue
        result = poly.lp_maximize(piece, cut.normal)
        if not result.optimal or result.value > cut.rhs:
            return False
    return True


def split_projection_check(
    P: HPoly, d: SplitDisjunction, cut: Halfspace, L: SubspaceBasis
) -> bool:
    """Check that a split cut survives projection onto a lattice subspace.

    With the split normal and the cut normal in L, the cut restricted to
    lattice coordinates of L lifts back to itself, and it is valid for the
    projection of P outside the interior of the projected split.

    Raises:
        LatticeSubspaceError: if L does not contain both normals
        HypothesisError: if the cut is not valid for P outside the split
    """
    for name, v in (("split normal", d.a), ("cut normal", cut.normal)):
        if not lattice.contains_vector(L, v):
            raise LatticeSubspaceError(f"subspace does not contain the {name} {v}")
    if not _valid_outside_split(P, d, cut):
        raise HypothesisError("cut is valid for P outside the split interior")
    B = lattice.projected_lattice_basis(L)
    projected_cut = poly.restrict_halfspace(cut, B)
    lifts_back = poly.lift_halfspace(projected_cut, B) == cut
    split_coefficients = [ratmath.dot(d.a, g) for g in B.generators]
    if not ratmath.is_integral(split_coefficients):
        return False
    projected_split = SplitDisjunction(tuple(int(v) for v in split_coefficients), d.K)
    projected = poly.project_onto(P, B)
    if projected.empty:
        return lifts_back
    valid = _valid_outside_split(projected, projected_split, projected_cut)
    logger.debug("projection check: lifts back %s, valid %s", lifts_back, valid)
    return lifts_back and valid


@dataclasses.dataclass(frozen=True)
class RankReport:
    """Rounds of a closure operation applied until the integer hull is reached
    or the result stops changing"""

    rounds: int
    reached_integer_hull: bool
    stabilized: bool
    sizes: Tuple[int, ...]


def closure_rank(
    P: HPoly, round_op: Callable[[HPoly], HPoly], max_rounds: int = 10
) -> RankReport:
    """Empirical closure rank of a planar polyhedron"""
    if P.dim != 2:
        raise DimensionError(2, P.dim, what="planar polyhedron")
    target = hull2d.integer_hull_2d(P)
    current = P
    sizes = []
    for rounds in range(1, max_rounds + 1):
        following = round_op(current)
        sizes.append(len(following))
        if poly.same_set(following, target):
            return RankReport(rounds, True, False, tuple(sizes))
        if poly.same_set(following, current):
            return RankReport(rounds, False, True, tuple(sizes))
        current = following
    return RankReport(max_rounds, False, False, tuple(sizes))


def split_round(P: HPoly, bound: int = 3) -> HPoly:
    """One round of the box-family split closure"""
    if not poly.is_feasible(P):
        return P
    return split_closure_family(P, box_split_family(P, bound))


@dataclasses.dataclass(frozen=True)
class SandwichReport:
    """Containments between the facet pair closure, the box split family
    closure and the facet CG cuts of a polyhedron"""

    pair_closure: HPoly
    split_closure: HPoly
    facet_cuts: Tuple[Halfspace, ...]
    pair_in_split: bool
    split_in_cuts: bool
    split_stable: bool
    second_split_in_pair: Optional[bool]


def sandwich_report(P: HPoly, bound: int = 3) -> SandwichReport:
    """One-sided containment ledger of the closures of P.

    When the family closure does not change from bound to bound + 1, the
    second split round is also compared with the facet pair closure.
    """
    pair = facet_pair_closure(P)
    split = split_round(P, bound)
    P = poly.remove_redundant(P)
    cuts = tuple(
        c for c in (cg_cut_from_direction(P, h.normal) for h in P) if c is not None
    )
    split_in_cuts = all(poly.is_subset(split, HPoly(P.dim, (c,))) for c in cuts)
    stable = poly.same_set(split, split_round(P, bound + 1))
    second = None
    if stable:
        second = poly.is_subset(split_round(split, bound), pair)
    return SandwichReport(
        pair, split, cuts, poly.is_subset(pair, split), split_in_cuts, stable, second
    )
