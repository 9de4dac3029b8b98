from fractions import Fraction

from ipgeom.closure import oracle, poly
from ipgeom.closure.poly import Halfspace, HPoly


def halfspace(a, b):
    return Halfspace.from_coefficients(a, Fraction(b))


def poly_from_rows(dim, rows):
    """HPoly from (a, b) pairs, b given as int or "p/q" string"""
    return HPoly(dim, tuple(halfspace(a, b) for a, b in rows))


def box_poly(lower, upper):
    n = len(lower)
    rows = []
    for i in range(n):
        unit = tuple(int(i == j) for j in range(n))
        rows.append((unit, upper[i]))
        rows.append((tuple(-v for v in unit), -Fraction(lower[i])))
    return poly_from_rows(n, rows)


def integer_points(P, radius):
    return oracle.enum_integer_points(P, oracle.Box.cube(P.dim, radius))


def assert_same_set(P, Q):
    assert poly.same_set(P, Q), f"{P} and {Q} differ"
