"""Exact rational scalars, vectors and matrices.

Everything in ipgeom.closure is computed over the rationals. Scalars are
:class:`fractions.Fraction` (always in lowest terms with a positive
denominator), vectors are tuples of Fractions and matrices are tuples of
row vectors. All values are immutable.
"""
import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .errors import DimensionError, ZeroDenominatorError

logger = logging.getLogger(__name__)

Rational = Fraction
QVec = Tuple[Fraction, ...]
QMat = Tuple[QVec, ...]
Number = Union[int, Fraction]


def rat_new(p: int, q: int = 1) -> Fraction:
    """Return the canonical rational p/q.

    Raises:
        ZeroDenominatorError: if q is zero
    """
    if q == 0:
        raise ZeroDenominatorError(p)
    return Fraction(p, q)


def qvec(values: Sequence[Number]) -> QVec:
    return tuple(Fraction(v) for v in values)


def qmat(rows: Sequence[Sequence[Number]]) -> QMat:
    matrix = tuple(qvec(row) for row in rows)
    if matrix:
        ncols = len(matrix[0])
        for row in matrix:
            if len(row) != ncols:
                raise DimensionError(ncols, len(row), what="matrix row")
    return matrix


def ncols(matrix: QMat, default: int = 0) -> int:
    return len(matrix[0]) if matrix else default


def dot(u: Sequence[Number], v: Sequence[Number]) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(len(u), len(v), what="vector")
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence[Number], v: Sequence[Number]) -> QVec:
    if len(u) != len(v):
        raise DimensionError(len(u), len(v), what="vector")
    return tuple(Fraction(a) + b for a, b in zip(u, v))


def sub(u: Sequence[Number], v: Sequence[Number]) -> QVec:
    if len(u) != len(v):
        raise DimensionError(len(u), len(v), what="vector")
    return tuple(Fraction(a) - b for a, b in zip(u, v))


def scale(c: Number, v: Sequence[Number]) -> QVec:
    return tuple(Fraction(c) * a for a in v)


def is_zero(v: Sequence[Number]) -> bool:
    return all(a == 0 for a in v)


def is_integral(v: Sequence[Number]) -> bool:
    return all(Fraction(a).denominator == 1 for a in v)


def transpose(matrix: QMat, n_cols: int = 0) -> QMat:
    if not matrix:
        return tuple(() for _ in range(n_cols))
    return tuple(zip(*matrix))


def mat_vec(matrix: QMat, v: Sequence[Number]) -> QVec:
    return tuple(dot(row, v) for row in matrix)


def mat_mul(a: QMat, b: QMat) -> QMat:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def clear_denominators(v: Sequence[Number]) -> List[int]:
    """Scale v by the lcm of its denominators, giving an integer vector"""
    denominator = 1
    for a in v:
        denominator = denominator * Fraction(a).denominator // math.gcd(
            denominator, Fraction(a).denominator
        )
    return [int(Fraction(a) * denominator) for a in v]


def row_reduce(matrix: Sequence[Sequence[Number]]) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form by Gaussian elimination.

    The pivot of each column is the first nonzero entry at or below the
    current row.

    Returns:
        rows: the nonzero rows of the reduced matrix
        pivots: pivot column of each returned row
    """
    rows = [[Fraction(a) for a in row] for row in matrix]
    if not rows:
        return [], []
    n_rows, n_cols = len(rows), len(rows[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inverse = 1 / rows[r][c]
        rows[r] = [a * inverse for a in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows[:r], pivots


def rank_exact(matrix: Sequence[Sequence[Number]]) -> int:
    """Exact rank over the rationals"""
    return len(row_reduce(matrix)[1])


def solve_exact(matrix: Sequence[Sequence[Number]], b: Sequence[Number]) -> Optional[QVec]:
    """Solve A x = b exactly.

    When the system has several solutions the free variables are set to zero.

    Returns:
        the solution, or None if the system is inconsistent

    Raises:
        DimensionError: if b does not have one entry per row of A
    """
    if len(matrix) != len(b):
        raise DimensionError(len(matrix), len(b), what="right hand side")
    if not matrix:
        return ()
    n_cols = len(matrix[0])
    augmented = [list(row) + [rhs] for row, rhs in zip(matrix, b)]
    rows, pivots = row_reduce(augmented)
    if pivots and pivots[-1] == n_cols:
        return None
    x = [Fraction(0)] * n_cols
    for row, c in zip(rows, pivots):
        x[c] = row[-1]
    return tuple(x)


def null_space(matrix: Sequence[Sequence[Number]], n_cols: int) -> List[QVec]:
    """Basis of {x : A x = 0}, one vector per free column"""
    rows, pivots = row_reduce(matrix) if matrix else ([], [])
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n_cols
        x[f] = Fraction(1)
        for row, c in zip(rows, pivots):
            x[c] = -row[f]
        basis.append(tuple(x))
    return basis


def det_exact(matrix: Sequence[Sequence[Number]]) -> Fraction:
    """Exact determinant of a square matrix"""
    rows = [[Fraction(a) for a in row] for row in matrix]
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise DimensionError(n, len(row), what="square matrix row")
    det = Fraction(1)
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            det = -det
        det *= rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                factor = rows[i][c] / rows[c][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[c])]
    return det
