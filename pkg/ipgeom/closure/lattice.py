"""Integer normal forms, primitive vectors and projected lattices.

A :class:`SubspaceBasis` describes a rational linear subspace L of R^n and a
:class:`LatticeBasis` a basis of the lattice obtained by orthogonally
projecting Z^n onto L. Lattice coordinates identify that lattice with Z^k.
"""
import dataclasses
import logging
import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import List, Sequence, Tuple

from . import ratmath
from .errors import (
    ClosureInternalError,
    DimensionError,
    LatticeSubspaceError,
    ZeroVectorError,
)
from .ratmath import QVec

logger = logging.getLogger(__name__)

IntVec = Tuple[int, ...]
IntMat = Tuple[IntVec, ...]


def _as_int(value) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise ValueError(f"{value} is not an integer")
    return value.numerator


def primitive(v: Sequence[int]) -> IntVec:
    """Divide an integer vector by the gcd of its entries.

    Raises:
        ZeroVectorError: if v is the zero vector
    """
    entries = [_as_int(a) for a in v]
    g = 0
    for a in entries:
        g = math.gcd(g, a)
    if g == 0:
        raise ZeroVectorError("the zero vector has no primitive multiple")
    return tuple(a // g for a in entries)


def primitive_direction(v: Sequence) -> IntVec:
    """Primitive integer vector with the direction of a rational vector"""
    return primitive(ratmath.clear_denominators(v))


def canonical_sign(v: Sequence[int]) -> IntVec:
    """v or -v, whichever has a positive first nonzero entry"""
    for a in v:
        if a != 0:
            return tuple(v) if a > 0 else tuple(-b for b in v)
    return tuple(v)


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0"""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def hnf(A: Sequence[Sequence[int]]) -> Tuple[IntMat, IntMat]:
    """Column Hermite Normal Form.

    Returns H and U with H = A U, U unimodular and H lower triangular:
    each pivot is positive, entries right of a pivot are zero and entries
    left of a pivot lie in [0, pivot).
    """
    H = [[_as_int(a) for a in row] for row in A]
    if not H:
        return (), ()
    n_rows, n_cols = len(H), len(H[0])
    for row in H:
        if len(row) != n_cols:
            raise DimensionError(n_cols, len(row), what="matrix row")
    U = [[int(i == j) for j in range(n_cols)] for i in range(n_cols)]

    def combine(p, j, x, y, u, v):
        # (col_p, col_j) <- (x col_p + y col_j, u col_p + v col_j)
        for M in (H, U):
            for row in M:
                row[p], row[j] = x * row[p] + y * row[j], u * row[p] + v * row[j]

    p = 0
    for i in range(n_rows):
        if p == n_cols:
            break
        for j in range(p + 1, n_cols):
            a, b = H[i][p], H[i][j]
            if b == 0:
                continue
            g, x, y = xgcd(a, b)
            combine(p, j, x, y, -b // g, a // g)
        if H[i][p] == 0:
            continue
        if H[i][p] < 0:
            for M in (H, U):
                for row in M:
                    row[p] = -row[p]
        pivot = H[i][p]
        for k in range(p):
            q = H[i][k] // pivot
            if q != 0:
                for M in (H, U):
                    for row in M:
                        row[k] -= q * row[p]
        p += 1
    return tuple(tuple(row) for row in H), tuple(tuple(row) for row in U)


@dataclasses.dataclass(frozen=True)
class SubspaceBasis:
    """A rational linear subspace given by linearly independent vectors.

    The zero subspace is allowed and has no basis vectors.
    """

    ambient_dim: int
    basis_vectors: Tuple[QVec, ...]

    def __post_init__(self):
        for v in self.basis_vectors:
            if len(v) != self.ambient_dim:
                raise DimensionError(self.ambient_dim, len(v), what="basis vector")
        if ratmath.rank_exact(self.basis_vectors) != len(self.basis_vectors):
            raise LatticeSubspaceError("basis vectors are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis_vectors)


def subspace(vectors: Sequence[Sequence], ambient_dim: int = None) -> SubspaceBasis:
    """Build a SubspaceBasis from rational vectors.

    Dependent vectors are dropped. Non-rational entries are rejected, since
    only rational subspaces are lattice subspaces.

    Raises:
        LatticeSubspaceError: if an entry is not rational
    """
    if ambient_dim is None:
        if not vectors:
            raise DimensionError(1, 0, what="subspace")
        ambient_dim = len(vectors[0])
    kept: List[QVec] = []
    for v in vectors:
        for a in v:
            if not isinstance(a, (_RationalABC, str)):
                raise LatticeSubspaceError(f"entry {a!r} is not rational")
        q = ratmath.qvec(v)
        if len(q) != ambient_dim:
            raise DimensionError(ambient_dim, len(q), what="subspace vector")
        if ratmath.rank_exact(kept + [q]) > len(kept):
            kept.append(q)
    return SubspaceBasis(ambient_dim, tuple(kept))


def integer_basis(L: SubspaceBasis) -> Tuple[IntVec, ...]:
    """Primitive integer vectors spanning L"""
    return tuple(primitive_direction(v) for v in L.basis_vectors)


def contains_vector(L: SubspaceBasis, v: Sequence) -> bool:
    if len(v) != L.ambient_dim:
        raise DimensionError(L.ambient_dim, len(v), what="vector")
    rows = list(L.basis_vectors) + [ratmath.qvec(v)]
    return ratmath.rank_exact(rows) == L.dim


def orthogonal_complement(L: SubspaceBasis) -> SubspaceBasis:
    """Integer basis of the orthogonal complement of L"""
    kernel = ratmath.null_space(L.basis_vectors, L.ambient_dim)
    return SubspaceBasis(
        L.ambient_dim,
        tuple(ratmath.qvec(primitive_direction(v)) for v in kernel),
    )


@dataclasses.dataclass(frozen=True)
class LatticeBasis:
    """Basis of the orthogonal projection of Z^n onto a subspace"""

    subspace: SubspaceBasis
    generators: Tuple[QVec, ...]

    @property
    def dim(self) -> int:
        return len(self.generators)

    @property
    def ambient_dim(self) -> int:
        return self.subspace.ambient_dim

    def to_ambient(self, coords: Sequence) -> QVec:
        """Point of L with the given lattice coordinates"""
        if len(coords) != self.dim:
            raise DimensionError(self.dim, len(coords), what="lattice coordinates")
        point = [Fraction(0)] * self.ambient_dim
        for c, g in zip(coords, self.generators):
            for i, gi in enumerate(g):
                point[i] += Fraction(c) * gi
        return tuple(point)

    def gram(self) -> ratmath.QMat:
        return tuple(
            tuple(ratmath.dot(g, h) for h in self.generators) for g in self.generators
        )


def projected_lattice_basis(L: SubspaceBasis) -> LatticeBasis:
    """Basis of the lattice obtained by orthogonally projecting Z^n onto L.

    With W an integer basis of L, the projection of z has W-coordinates
    C z where C = (W^T W)^-1 W^T. The columns of C generate the projected
    lattice in W-coordinates; a column HNF of the cleared matrix D C yields
    a basis.

    Raises:
        LatticeSubspaceError: if L is the zero subspace
    """
    if L.dim == 0:
        raise LatticeSubspaceError("the zero subspace carries no lattice")
    W = integer_basis(L)
    k, n = len(W), L.ambient_dim
    gram = [[Fraction(ratmath.dot(u, v)) for v in W] for u in W]
    # columns of C solve gram * c = W^T e_j
    C_columns = []
    for j in range(n):
        rhs = [Fraction(w[j]) for w in W]
        column = ratmath.solve_exact(gram, rhs)
        if column is None:
            raise LatticeSubspaceError("singular Gram matrix for subspace basis")
        C_columns.append(column)
    denominator = 1
    for column in C_columns:
        for c in column:
            denominator = denominator * c.denominator // math.gcd(denominator, c.denominator)
    M = [[int(C_columns[j][i] * denominator) for j in range(n)] for i in range(k)]
    H, _ = hnf(M)
    generators = []
    for j in range(k):
        w_coords = [Fraction(H[i][j], denominator) for i in range(k)]
        g = [Fraction(0)] * n
        for c, w in zip(w_coords, W):
            for i in range(n):
                g[i] += c * w[i]
        generators.append(tuple(g))
    B = LatticeBasis(L, tuple(generators))
    for j in range(n):
        unit = tuple(int(i == j) for i in range(n))
        if not ratmath.is_integral(coords_of_projection(B, unit)):
            raise ClosureInternalError(f"projection of e{j + 1} is not in the projected lattice")
    logger.debug("projected lattice of %d-dim subspace: %s", k, generators)
    return B


def lattice_coords(B: LatticeBasis, p: Sequence) -> QVec:
    """Coefficients of p with respect to the generators of B.

    p lies in the projected lattice iff every coefficient is an integer.

    Raises:
        LatticeSubspaceError: if p is not in the subspace of B
    """
    if len(p) != B.ambient_dim:
        raise DimensionError(B.ambient_dim, len(p), what="point")
    matrix = [[g[i] for g in B.generators] for i in range(B.ambient_dim)]
    coords = ratmath.solve_exact(matrix, ratmath.qvec(p))
    if coords is None:
        raise LatticeSubspaceError(f"point {tuple(str(a) for a in p)} is not in the subspace")
    return coords


def project_point(B: LatticeBasis, x: Sequence) -> QVec:
    """Orthogonal projection of x onto L in ambient coordinates"""
    if len(x) != B.ambient_dim:
        raise DimensionError(B.ambient_dim, len(x), what="point")
    rhs = [ratmath.dot(g, x) for g in B.generators]
    coords = ratmath.solve_exact(B.gram(), rhs)
    if coords is None:
        raise LatticeSubspaceError("degenerate lattice generators")
    return B.to_ambient(coords)


def coords_of_projection(B: LatticeBasis, x: Sequence) -> QVec:
    """Lattice coordinates of the orthogonal projection of x onto L"""
    return lattice_coords(B, project_point(B, x))


def integer_point_on_line(a: Sequence[int], c: int) -> IntVec:
    """Some integer z with <a, z> = c, for a primitive integer vector a"""
    H, U = hnf([list(a)])
    if H[0][0] != 1:
        raise ZeroVectorError(f"{tuple(a)} is not a primitive vector")
    return tuple(c * U[i][0] for i in range(len(a)))
