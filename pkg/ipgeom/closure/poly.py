"""Rational polyhedra in H- and V-representation.

An :class:`HPoly` is a finite list of :class:`Halfspace` values
{x : <a, x> <= b} with primitive integer normals, plus an explicit marker
for the empty set. A :class:`VPoly` is conv(vertices) + cone(rays) +
span(lineality). Exact conversion between the two is provided in the plane;
in higher dimension polyhedra are handled through exact LP and
Fourier-Motzkin elimination.
"""
import dataclasses
import itertools
import logging
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

from . import _elimination, _simplex, lattice, ratmath
from ._geometry import perp
from ._simplex import LPResult
from .errors import DimensionError, InfeasibleError, ZeroVectorError
from .lattice import IntVec, LatticeBasis, SubspaceBasis
from .ratmath import QVec

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class Halfspace:
    """The set {x : <normal, x> <= rhs} with a primitive integer normal"""

    normal: IntVec
    rhs: Fraction

    def __post_init__(self):
        normal = tuple(int(a) for a in self.normal)
        if lattice.primitive(normal) != normal:
            raise ZeroVectorError(f"normal {normal} is not primitive")
        object.__setattr__(self, "normal", normal)
        object.__setattr__(self, "rhs", Fraction(self.rhs))

    @classmethod
    def from_coefficients(cls, a: Sequence, b) -> "Halfspace":
        """The halfspace <a, x> <= b for rational a, rescaled to a primitive normal

        Raises:
            ZeroVectorError: if a is zero
        """
        normal, rhs = _elimination.normalize_row(a, b)
        return cls(normal, rhs)

    @property
    def dim(self) -> int:
        return len(self.normal)

    def value(self, x: Sequence) -> Fraction:
        return ratmath.dot(self.normal, x)

    def contains(self, x: Sequence, strict: bool = False) -> bool:
        if strict:
            return self.value(x) < self.rhs
        return self.value(x) <= self.rhs

    def as_row(self):
        return tuple(Fraction(a) for a in self.normal), self.rhs

    def __str__(self):
        terms = " + ".join(f"{a}*x{i + 1}" for i, a in enumerate(self.normal) if a)
        return f"{terms} <= {self.rhs}"


@dataclasses.dataclass(frozen=True)
class HPoly:
    """Intersection of halfspaces in R^dim; ``empty`` marks the empty set"""

    dim: int
    halfspaces: Tuple[Halfspace, ...] = ()
    empty: bool = False

    def __post_init__(self):
        object.__setattr__(self, "halfspaces", tuple(self.halfspaces))
        for h in self.halfspaces:
            if h.dim != self.dim:
                raise DimensionError(self.dim, h.dim, what="halfspace")

    @classmethod
    def empty_set(cls, dim: int) -> "HPoly":
        return cls(dim, (), True)

    @classmethod
    def whole_space(cls, dim: int) -> "HPoly":
        return cls(dim, ())

    @classmethod
    def from_rows(cls, dim: int, rows) -> "HPoly":
        """Build from (coefficients, rhs) pairs; rows with zero coefficients
        are checked and dropped"""
        halfspaces = []
        for coefficients, rhs in rows:
            if ratmath.is_zero(coefficients):
                if Fraction(rhs) < 0:
                    return cls.empty_set(dim)
                continue
            halfspaces.append(Halfspace.from_coefficients(coefficients, rhs))
        return cls(dim, tuple(halfspaces))

    def rows(self):
        return [h.as_row() for h in self.halfspaces]

    def __len__(self):
        return len(self.halfspaces)

    def __iter__(self):
        return iter(self.halfspaces)


@dataclasses.dataclass(frozen=True)
class VPoly:
    """conv(vertices) + cone(rays) + span(lineality); empty iff no vertices"""

    dim: int
    vertices: Tuple[QVec, ...] = ()
    rays: Tuple[IntVec, ...] = ()
    lineality: Tuple[IntVec, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "vertices", tuple(ratmath.qvec(v) for v in self.vertices)
        )
        object.__setattr__(
            self, "rays", tuple(lattice.primitive_direction(r) for r in self.rays)
        )
        object.__setattr__(
            self,
            "lineality",
            tuple(
                lattice.canonical_sign(lattice.primitive_direction(r))
                for r in self.lineality
            ),
        )
        for v in self.vertices + self.rays + self.lineality:
            if len(v) != self.dim:
                raise DimensionError(self.dim, len(v), what="generator")

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def is_pointed(self) -> bool:
        return not self.lineality


def _check_dims(*polys):
    dims = {p.dim for p in polys}
    if len(dims) > 1:
        dims = sorted(dims)
        raise DimensionError(dims[0], dims[-1], what="polyhedron")


def lp_maximize(P: HPoly, c: Sequence) -> LPResult:
    """Maximize <c, x> over P exactly"""
    if len(c) != P.dim:
        raise DimensionError(P.dim, len(c), what="objective")
    if P.empty:
        return LPResult(_simplex.INFEASIBLE)
    return _simplex.maximize(
        [h.as_row()[0] for h in P], [h.rhs for h in P], ratmath.qvec(c)
    )


def is_feasible(P: HPoly) -> bool:
    """True iff P is nonempty"""
    if P.empty:
        return False
    if not P.halfspaces:
        return True
    return lp_maximize(P, [0] * P.dim).optimal


def feasible_point(P: HPoly) -> Optional[QVec]:
    if P.empty:
        return None
    return lp_maximize(P, [0] * P.dim).point


def contains_point(P: HPoly, x: Sequence, strict: bool = False) -> bool:
    if len(x) != P.dim:
        raise DimensionError(P.dim, len(x), what="point")
    if P.empty:
        return False
    return all(h.contains(x, strict=strict) for h in P)


def remove_redundant(P: HPoly) -> HPoly:
    """Minimal H-representation of P.

    Parallel duplicates keep the tightest right hand side; the remaining
    inequalities are tested in order and dropped when implied by the ones
    still kept.

    Raises:
        InfeasibleError: if P is empty
    """
    if not is_feasible(P):
        raise InfeasibleError("cannot remove redundancy from an empty polyhedron")
    rows = _elimination.tidy_rows(P.rows())
    kept = _elimination.remove_redundant_rows(rows)
    logger.debug("kept %d of %d inequalities", len(kept), len(P))
    return HPoly(P.dim, tuple(Halfspace.from_coefficients(a, b) for a, b in kept))


def is_subset(Q: HPoly, P: HPoly) -> bool:
    """True iff Q is contained in P"""
    _check_dims(Q, P)
    if not is_feasible(Q):
        return True
    if P.empty:
        return False
    for h in P:
        result = lp_maximize(Q, h.normal)
        if not result.optimal or result.value > h.rhs:
            return False
    return True


def same_set(P: HPoly, Q: HPoly) -> bool:
    return is_subset(P, Q) and is_subset(Q, P)


def intersect(Ps: Sequence[HPoly]) -> HPoly:
    """Intersection of polyhedra with a minimal H-representation"""
    if not Ps:
        raise DimensionError(1, 0, what="list of polyhedra")
    _check_dims(*Ps)
    dim = Ps[0].dim
    if any(P.empty for P in Ps):
        return HPoly.empty_set(dim)
    combined = HPoly(dim, tuple(h for P in Ps for h in P))
    if not is_feasible(combined):
        return HPoly.empty_set(dim)
    return remove_redundant(combined)


def lineality_space(P: HPoly) -> SubspaceBasis:
    """Basis of {d : <a_i, d> = 0 for every inequality}"""
    normals = [h.normal for h in P]
    kernel = ratmath.null_space(normals, P.dim)
    return SubspaceBasis(
        P.dim, tuple(ratmath.qvec(lattice.primitive_direction(v)) for v in kernel)
    )


def _require_plane(dim):
    if dim != 2:
        raise DimensionError(2, dim, what="planar polyhedron")


def h_to_v_2d(P: HPoly) -> VPoly:
    """Vertices, extreme rays and lineality of a planar polyhedron.

    No linear program is solved: a nonempty polyhedron whose normals span
    the plane has a vertex, so emptiness shows as an empty vertex set, and
    redundant inequalities neither add nor remove vertices.
    """
    _require_plane(P.dim)
    if P.empty:
        return VPoly(2)
    normals = [h.normal for h in P]
    rank = ratmath.rank_exact(normals) if normals else 0
    if rank == 0:
        return VPoly(2, ((0, 0),), (), ((1, 0), (0, 1)))
    if rank == 1:
        a = normals[0]
        norm2 = Fraction(a[0] * a[0] + a[1] * a[1])
        hi = min((h.rhs for h in P if h.normal == a), default=None)
        lo = max((-h.rhs for h in P if h.normal != a), default=None)
        if lo is not None and hi is not None and lo > hi:
            return VPoly(2)
        levels = sorted({t for t in (lo, hi) if t is not None})
        vertices = tuple((t * a[0] / norm2, t * a[1] / norm2) for t in levels)
        rays = ()
        if lo is None:
            rays = ((-a[0], -a[1]),)
        elif hi is None:
            rays = (a,)
        return VPoly(2, vertices, rays, (perp(a),))
    vertices = set()
    for g, h in itertools.combinations(P.halfspaces, 2):
        if ratmath.rank_exact([g.normal, h.normal]) < 2:
            continue
        point = ratmath.solve_exact([g.normal, h.normal], [g.rhs, h.rhs])
        if contains_point(P, point):
            vertices.add(point)
    if not vertices:
        return VPoly(2)
    rays = set()
    for a in normals:
        for d in (perp(a), (a[1], -a[0])):
            if all(ratmath.dot(b, d) <= 0 for b in normals):
                rays.add(lattice.primitive(d))
    return VPoly(2, tuple(sorted(vertices)), tuple(sorted(rays)))


def v_to_h_2d(V: VPoly) -> HPoly:
    """Minimal H-representation of a planar V-polyhedron.

    Every facet normal of conv(vertices) + cone(rays) + span(lineality) is
    orthogonal to an edge direction or a ray, so those normals (together with
    the directions themselves and the unit vectors, for lower dimensional
    sets) are the candidates; each valid candidate is kept with its tightest
    right hand side. For a full-dimensional set a candidate defines a facet
    iff it is tight at two vertices or along a ray; lower dimensional sets
    are reduced by linear programming.
    """
    _require_plane(V.dim)
    if V.is_empty:
        return HPoly.empty_set(2)
    directions = list(V.rays) + list(V.lineality) + [
        tuple(-a for a in v) for v in V.lineality
    ]
    differences = [
        ratmath.sub(u, v) for u, v in itertools.combinations(V.vertices, 2)
    ]
    candidates = {(1, 0), (-1, 0), (0, 1), (0, -1)}
    for d in differences + directions:
        if ratmath.is_zero(d):
            continue
        p = lattice.primitive_direction(d)
        q = lattice.primitive(perp(p))
        for c in (p, q):
            candidates.add(c)
            candidates.add(tuple(-a for a in c))
    halfspaces = []
    for c in sorted(candidates):
        if any(ratmath.dot(c, r) > 0 for r in directions):
            continue
        values = {v: ratmath.dot(c, v) for v in V.vertices}
        rhs = max(values.values())
        tight = sum(1 for value in values.values() if value == rhs)
        halfspaces.append((Halfspace(c, rhs), tight))
    spanning = [d for d in differences + directions if not ratmath.is_zero(d)]
    if spanning and ratmath.rank_exact(spanning) == 2:
        return HPoly(
            2,
            tuple(
                h
                for h, tight in halfspaces
                if tight >= 2 or any(ratmath.dot(h.normal, r) == 0 for r in directions)
            ),
        )
    return remove_redundant(HPoly(2, tuple(h for h, _ in halfspaces)))


def reduce_2d(P: HPoly) -> HPoly:
    """Minimal H-representation of a planar polyhedron through its generators"""
    return v_to_h_2d(h_to_v_2d(P))


def _as_lattice_basis(L: Union[SubspaceBasis, LatticeBasis]) -> LatticeBasis:
    if isinstance(L, LatticeBasis):
        return L
    return lattice.projected_lattice_basis(L)


def project_onto(P: HPoly, L: Union[SubspaceBasis, LatticeBasis]) -> HPoly:
    """Orthogonal projection of P onto L, in lattice coordinates of L.

    Writing x = G y + N z with G the lattice generators of L and N an
    integer basis of the orthogonal complement, z is eliminated by
    Fourier-Motzkin.
    """
    B = _as_lattice_basis(L)
    if P.dim != B.ambient_dim:
        raise DimensionError(B.ambient_dim, P.dim, what="polyhedron")
    k = B.dim
    if not is_feasible(P):
        return HPoly.empty_set(k)
    complement = lattice.orthogonal_complement(B.subspace).basis_vectors
    rows = []
    for h in P:
        y_part = tuple(ratmath.dot(h.normal, g) for g in B.generators)
        z_part = tuple(ratmath.dot(h.normal, v) for v in complement)
        rows.append((y_part + z_part, h.rhs))
    if all(ratmath.is_zero(row[k:]) for row, _ in rows):
        projected = [(row[:k], rhs) for row, rhs in rows]
    else:
        projected = _elimination.fourier_motzkin(
            rows, k + len(complement), range(k, k + len(complement))
        )
        if projected is None:
            return HPoly.empty_set(k)
    Q = HPoly.from_rows(k, projected)
    if Q.empty or not Q.halfspaces:
        return Q
    return remove_redundant(Q)


def fourier_motzkin(P: HPoly, eliminate: Sequence[int]) -> HPoly:
    """Projection of P onto the variables not listed in eliminate"""
    eliminate = sorted(set(eliminate))
    for index in eliminate:
        if not 0 <= index < P.dim:
            raise DimensionError(P.dim, index + 1, what="eliminated variable")
    dim = P.dim - len(eliminate)
    if P.empty:
        return HPoly.empty_set(dim)
    projected = _elimination.fourier_motzkin(P.rows(), P.dim, eliminate)
    if projected is None:
        return HPoly.empty_set(dim)
    return HPoly.from_rows(dim, projected)


def lift_by_orthogonal_complement(
    Q: HPoly, L: Union[SubspaceBasis, LatticeBasis]
) -> HPoly:
    """Q + L^perp in ambient coordinates, for Q given in lattice coordinates of L"""
    B = _as_lattice_basis(L)
    if Q.dim != B.dim:
        raise DimensionError(B.dim, Q.dim, what="polyhedron in lattice coordinates")
    if Q.empty:
        return HPoly.empty_set(B.ambient_dim)
    return HPoly(B.ambient_dim, tuple(lift_halfspace(h, B) for h in Q))


def lift_halfspace(h: Halfspace, L: Union[SubspaceBasis, LatticeBasis]) -> Halfspace:
    """Halfspace of R^n whose restriction to L is h (in lattice coordinates).

    A point x lies in the lift iff the lattice coordinates of its projection,
    (G^T G)^-1 G^T x, satisfy h; the ambient normal G (G^T G)^-1 c lies in L.
    """
    B = _as_lattice_basis(L)
    if h.dim != B.dim:
        raise DimensionError(B.dim, h.dim, what="halfspace in lattice coordinates")
    w = ratmath.solve_exact(B.gram(), ratmath.qvec(h.normal))
    normal = B.to_ambient(w)
    return Halfspace.from_coefficients(normal, h.rhs)


def restrict_halfspace(h: Halfspace, L: Union[SubspaceBasis, LatticeBasis]) -> Halfspace:
    """The restriction of a halfspace with normal in L to lattice coordinates of L.

    Raises:
        ZeroVectorError: if the normal is orthogonal to L
    """
    B = _as_lattice_basis(L)
    coefficients = tuple(ratmath.dot(h.normal, g) for g in B.generators)
    return Halfspace.from_coefficients(coefficients, h.rhs)


def is_full_dimensional(P: HPoly) -> bool:
    """True iff P has an interior point, found by maximizing a uniform slack"""
    if P.empty:
        return False
    rows = [tuple(h.normal) + (1,) for h in P] + [(0,) * P.dim + (1,)]
    rhs = [h.rhs for h in P] + [Fraction(1)]
    result = _simplex.maximize(rows, rhs, (0,) * P.dim + (1,))
    return result.optimal and result.value > 0
