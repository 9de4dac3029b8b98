"""Inequality rows: normalization, redundancy pruning and Fourier-Motzkin.

A row is a pair ``(coefficients, rhs)`` meaning <coefficients, x> <= rhs,
with Fraction entries.
"""
import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import _simplex
from .errors import ZeroVectorError

logger = logging.getLogger(__name__)

Row = Tuple[Tuple[Fraction, ...], Fraction]


def normalize_row(coefficients: Sequence, rhs) -> Tuple[Tuple[int, ...], Fraction]:
    """Scale a row so that its coefficients form a primitive integer vector.

    Raises:
        ZeroVectorError: if all coefficients are zero
    """
    coefficients = [Fraction(a) for a in coefficients]
    denominator = 1
    for a in coefficients:
        denominator = denominator * a.denominator // math.gcd(denominator, a.denominator)
    integers = [int(a * denominator) for a in coefficients]
    g = 0
    for a in integers:
        g = math.gcd(g, a)
    if g == 0:
        raise ZeroVectorError("inequality has a zero normal vector")
    return (
        tuple(a // g for a in integers),
        Fraction(rhs) * denominator / g,
    )


def tidy_rows(rows: Sequence[Row]) -> Optional[List[Row]]:
    """Normalize, drop trivial rows and keep the tightest of parallel duplicates.

    Returns None if a row 0 <= rhs with rhs < 0 is present.
    """
    best = {}
    for coefficients, rhs in rows:
        if all(a == 0 for a in coefficients):
            if rhs < 0:
                return None
            continue
        normal, scaled = normalize_row(coefficients, rhs)
        if normal not in best or scaled < best[normal]:
            best[normal] = scaled
    return [
        (tuple(Fraction(a) for a in normal), rhs) for normal, rhs in best.items()
    ]


def remove_redundant_rows(rows: Sequence[Row]) -> List[Row]:
    """Drop rows implied by the others, in order, keeping a minimal system.

    Each row is tested against the rows still kept: it is redundant when
    maximizing its left hand side over the others does not exceed its rhs.
    The system must be feasible.
    """
    kept = list(rows)
    i = 0
    while i < len(kept):
        others = kept[:i] + kept[i + 1:]
        coefficients, rhs = kept[i]
        result = _simplex.maximize(
            [row for row, _ in others], [b for _, b in others], coefficients
        )
        if result.optimal and result.value <= rhs:
            del kept[i]
        else:
            i += 1
    return kept


def fourier_motzkin(
    rows: Sequence[Row], n: int, eliminate: Sequence[int]
) -> Optional[List[Row]]:
    """Eliminate the given variables from a system of inequalities.

    Variables are eliminated in ascending index order; after each step rows
    are normalized and redundant rows pruned. The eliminated columns are
    removed from the returned rows.

    Returns:
        the projected system, or None if the input system is infeasible
    """
    eliminate = sorted(set(eliminate))
    current = tidy_rows(rows)
    if current is None:
        return None
    if current and _simplex.feasible_point(
        [r for r, _ in current], [b for _, b in current], n
    ) is None:
        return None
    current = remove_redundant_rows(current)
    for index in eliminate:
        positive = [row for row in current if row[0][index] > 0]
        negative = [row for row in current if row[0][index] < 0]
        zero = [row for row in current if row[0][index] == 0]
        combined = list(zero)
        for p_coefficients, p_rhs in positive:
            for q_coefficients, q_rhs in negative:
                alpha = -q_coefficients[index]
                beta = p_coefficients[index]
                combined.append(
                    (
                        tuple(
                            alpha * a + beta * b
                            for a, b in zip(p_coefficients, q_coefficients)
                        ),
                        alpha * p_rhs + beta * q_rhs,
                    )
                )
        logger.debug(
            "eliminating x%d: %d positive, %d negative, %d zero rows",
            index,
            len(positive),
            len(negative),
            len(zero),
        )
        tidy = tidy_rows(combined)
        if tidy is None:
            return None
        current = remove_redundant_rows(tidy)
    keep = [j for j in range(n) if j not in eliminate]
    return [(tuple(c[j] for j in keep), rhs) for c, rhs in current]
