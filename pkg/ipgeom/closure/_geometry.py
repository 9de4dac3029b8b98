"""Exact planar predicates: orientation, angular order and Graham's scan"""
import functools
from fractions import Fraction
from typing import List, Sequence, Tuple

Point = Tuple[Fraction, Fraction]


def cross(o: Sequence, a: Sequence, b: Sequence) -> Fraction:
    """Twice the signed area of triangle (o, a, b); positive if counterclockwise"""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def det2(u: Sequence, v: Sequence) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def perp(v: Sequence) -> tuple:
    """v rotated by a quarter turn counterclockwise"""
    return (-v[1], v[0])


def _half(v: Sequence) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2 pi)
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def compare_angle(u: Sequence, v: Sequence) -> int:
    """Compare the polar angles in [0, 2 pi) of two nonzero vectors"""
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    turn = det2(u, v)
    if turn > 0:
        return -1
    if turn < 0:
        return 1
    return 0


angle_key = functools.cmp_to_key(compare_angle)


def graham_scan(points: Sequence[Sequence]) -> List[Point]:
    """Vertices of the convex hull of a finite point set, counterclockwise.

    Collinear boundary points are dropped. The first vertex is the lowest
    point (smallest second coordinate, then smallest first coordinate).
    Degenerate inputs give one vertex (a single point) or two (a segment).
    """
    unique = sorted(set(tuple(Fraction(a) for a in p) for p in points))
    if len(unique) <= 2:
        return unique
    pivot = min(unique, key=lambda p: (p[1], p[0]))

    def by_angle(p, q):
        order = compare_angle((p[0] - pivot[0], p[1] - pivot[1]),
                              (q[0] - pivot[0], q[1] - pivot[1]))
        if order != 0:
            return order
        # nearer first along a ray from the pivot
        dp = abs(p[0] - pivot[0]) + abs(p[1] - pivot[1])
        dq = abs(q[0] - pivot[0]) + abs(q[1] - pivot[1])
        return (dp > dq) - (dp < dq)

    rest = sorted(
        (p for p in unique if p != pivot), key=functools.cmp_to_key(by_angle)
    )
    hull = [pivot]
    for p in rest:
        while len(hull) > 1 and cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    if len(hull) == 2:
        return hull
    if cross(hull[-2], hull[-1], pivot) == 0:
        hull.pop()
    return hull
