"""Dense exact simplex method over the rationals.

Solves ``maximize <c, x> subject to A x <= b`` with x free, using a
two-phase tableau method and Bland's rule, so it terminates on degenerate
problems without any perturbation.
"""
import dataclasses
import logging
from fractions import Fraction
from typing import List, Optional, Sequence

from .errors import ClosureInternalError, DimensionError

logger = logging.getLogger(__name__)

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


@dataclasses.dataclass(frozen=True)
class LPResult:
    """Outcome of an exact linear program.

    ``value`` and ``point`` are only set when ``status`` is ``"optimal"``.
    """

    status: str
    value: Optional[Fraction] = None
    point: Optional[tuple] = None

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


class _Tableau:
    def __init__(self, rows: List[List[Fraction]], basis: List[int], n_columns: int):
        self.rows = rows
        self.basis = basis
        self.n_columns = n_columns
        self.n_pivots = 0

    def pivot(self, r: int, c: int):
        pivot_row = self.rows[r]
        inverse = 1 / pivot_row[c]
        pivot_row = [a * inverse for a in pivot_row]
        self.rows[r] = pivot_row
        for i, row in enumerate(self.rows):
            if i != r and row[c] != 0:
                factor = row[c]
                self.rows[i] = [a - factor * p for a, p in zip(row, pivot_row)]
        self.basis[r] = c
        self.n_pivots += 1

    def reduced_costs(self, cost: Sequence[Fraction], allowed: Sequence[bool]):
        reduced = list(cost[: self.n_columns])
        for row, b in zip(self.rows, self.basis):
            cb = cost[b]
            if cb != 0:
                for j in range(self.n_columns):
                    if row[j] != 0:
                        reduced[j] -= cb * row[j]
        return [r if allowed[j] else Fraction(0) for j, r in enumerate(reduced)]

    def maximize(self, cost: Sequence[Fraction], allowed: Sequence[bool]) -> bool:
        """Pivot until optimal; returns False if the objective is unbounded"""
        while True:
            reduced = self.reduced_costs(cost, allowed)
            entering = next((j for j, r in enumerate(reduced) if r > 0), None)
            if entering is None:
                return True
            leaving = None
            best = None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    ratio = row[-1] / row[entering]
                    if (
                        best is None
                        or ratio < best
                        or (ratio == best and self.basis[i] < self.basis[leaving])
                    ):
                        best = ratio
                        leaving = i
            if leaving is None:
                return False
            self.pivot(leaving, entering)

    def value_of(self, column: int) -> Fraction:
        for row, b in zip(self.rows, self.basis):
            if b == column:
                return row[-1]
        return Fraction(0)


def maximize(
    A: Sequence[Sequence[Fraction]], b: Sequence[Fraction], c: Sequence[Fraction]
) -> LPResult:
    """Maximize <c, x> over {x : A x <= b}, exactly.

    Args:
        A: constraint rows, each of length len(c)
        b: right hand sides
        c: objective

    Returns:
        an LPResult with status "optimal", "unbounded" or "infeasible"
    """
    n = len(c)
    m = len(A)
    if len(b) != m:
        raise DimensionError(m, len(b), what="right hand side")
    for row in A:
        if len(row) != n:
            raise DimensionError(n, len(row), what="constraint row")
    # columns: x+ (n), x- (n), slack (m), artificial (one per negative rhs)
    negative_rows = [i for i in range(m) if b[i] < 0]
    n_artificial = len(negative_rows)
    n_columns = 2 * n + m + n_artificial
    artificial_start = 2 * n + m
    rows = []
    basis = []
    for i in range(m):
        sign = -1 if b[i] < 0 else 1
        row = [Fraction(0)] * (n_columns + 1)
        for j in range(n):
            row[j] = sign * Fraction(A[i][j])
            row[n + j] = -sign * Fraction(A[i][j])
        row[2 * n + i] = Fraction(sign)
        row[-1] = sign * Fraction(b[i])
        if sign < 0:
            column = artificial_start + negative_rows.index(i)
            row[column] = Fraction(1)
            basis.append(column)
        else:
            basis.append(2 * n + i)
        rows.append(row)
    tableau = _Tableau(rows, basis, n_columns)

    if n_artificial > 0:
        phase_one_cost = [Fraction(0)] * artificial_start + [Fraction(-1)] * n_artificial
        tableau.maximize(phase_one_cost, [True] * n_columns)
        infeasibility = sum(tableau.value_of(j) for j in range(artificial_start, n_columns))
        if infeasibility > 0:
            logger.debug("infeasible after %d pivots", tableau.n_pivots)
            return LPResult(INFEASIBLE)
        _drive_out_artificials(tableau, artificial_start)

    allowed = [j < artificial_start for j in range(n_columns)]
    cost = (
        [Fraction(v) for v in c]
        + [-Fraction(v) for v in c]
        + [Fraction(0)] * (m + n_artificial)
    )
    if not tableau.maximize(cost, allowed):
        logger.debug("unbounded after %d pivots", tableau.n_pivots)
        return LPResult(UNBOUNDED)
    point = tuple(tableau.value_of(j) - tableau.value_of(n + j) for j in range(n))
    value = sum((Fraction(ci) * xi for ci, xi in zip(c, point)), Fraction(0))
    logger.debug("optimal value %s after %d pivots", value, tableau.n_pivots)
    return LPResult(OPTIMAL, value, point)


def _drive_out_artificials(tableau: _Tableau, artificial_start: int):
    i = 0
    while i < len(tableau.rows):
        if tableau.basis[i] >= artificial_start:
            row = tableau.rows[i]
            if row[-1] != 0:
                raise ClosureInternalError("artificial variable basic at nonzero level")
            column = next(
                (j for j in range(artificial_start) if row[j] != 0), None
            )
            if column is None:
                # redundant equality row
                del tableau.rows[i]
                del tableau.basis[i]
                continue
            tableau.pivot(i, column)
        i += 1


def feasible_point(
    A: Sequence[Sequence[Fraction]], b: Sequence[Fraction], n: int
) -> Optional[tuple]:
    """Some point of {x : A x <= b}, or None if the system is infeasible"""
    result = maximize(A, b, [Fraction(0)] * n)
    return result.point if result.optimal else None
