"""Randomized checks on generated instances.

Each test draws its own number of instances; ``--n-random`` replaces that
number for every test and ``--seed`` reseeds the generators.
"""
import pytest

from ipgeom.closure import closures, corpus, hull2d, lattice, latfree, oracle, poly, ratmath
from ipgeom.closure.closures import SplitDisjunction, SplitFamily
from ipgeom.closure.poly import HPoly
from util import integer_points

pytestmark = pytest.mark.slow


def test_facet_pair_closure_is_integer_hull(rng, sample_size):
    for _ in range(sample_size(300)):
        P = corpus.random_polygon(rng)
        check = latfree.check_2dih(P)
        assert check.passed, f"closure of {P} differs from its integer hull"
    infeasible = corpus.random_infeasible_polygon(rng)
    assert latfree.verify_2dih(infeasible)


def test_planar_conversions_round_trip(rng, sample_size):
    for _ in range(sample_size(200)):
        P = corpus.random_polygon(rng, bounded=bool(rng.integers(2)))
        assert poly.same_set(poly.v_to_h_2d(poly.h_to_v_2d(P)), P)


def test_integer_hull_2d_matches_enumeration(rng, sample_size):
    for _ in range(sample_size(100)):
        P = corpus.random_polygon(rng)
        hull = hull2d.integer_hull_2d(P)
        naive = oracle.naive_integer_hull_2d(P)
        if naive.is_empty:
            assert hull.empty or not poly.is_feasible(hull)
        else:
            assert poly.same_set(hull, naive.halfspaces)


def test_integer_feasibility_matches_enumeration(rng, sample_size):
    radius = 6
    for _ in range(sample_size(100)):
        P = corpus.random_polygon(rng, bounded=True, box_radius=radius)
        point = hull2d.integer_feasible_2d(P)
        points = integer_points(P, radius)
        if point is None:
            assert points == []
        else:
            assert tuple(point) in points


def _lifted_vertices(H1, H2):
    B = lattice.projected_lattice_basis(lattice.subspace([H1.normal, H2.normal]))
    projected = poly.project_onto(HPoly(H1.dim, (H1, H2)), B)
    hull = poly.h_to_v_2d(hull2d.integer_hull_2d(projected))
    return [B.to_ambient(v) for v in hull.vertices]


@pytest.mark.parametrize("n", [3, 4])
def test_two_halfspace_hull_in_higher_dimension(rng, sample_size, n):
    radius = 5 if n == 3 else 3
    for _ in range(sample_size(100)):
        H1, H2 = corpus.random_halfspace_pair(rng, n)
        pair = HPoly(n, (H1, H2))
        hull = closures.two_halfspace_hull(H1, H2)
        for z in integer_points(pair, radius):
            assert poly.contains_point(hull, z)
        vertices = _lifted_vertices(H1, H2)
        for h in hull:
            assert any(h.value(v) == h.rhs for v in vertices)
        assert poly.is_subset(hull, pair)


def test_projected_integer_points_are_lattice_points(rng, sample_size):
    for _ in range(sample_size(100)):
        n = int(rng.integers(2, 5))
        k = int(rng.integers(1, n))
        vectors = [tuple(int(v) for v in rng.integers(-4, 5, size=n)) for _ in range(k)]
        if ratmath.rank_exact(vectors) == 0:
            continue
        B = lattice.projected_lattice_basis(lattice.subspace(vectors))
        for _ in range(5):
            z = tuple(int(v) for v in rng.integers(-9, 10, size=n))
            coords = lattice.coords_of_projection(B, z)
            assert ratmath.is_integral(coords)
            assert B.to_ambient(coords) == lattice.project_point(B, z)


def test_disjunctive_hull_keeps_integer_points_in_space(rng, sample_size):
    radius = 2
    for _ in range(sample_size(30)):
        P = corpus.random_polytope(rng, 3, box_radius=radius)
        a = tuple(int(v) for v in rng.integers(-2, 3, size=3))
        if not any(a):
            a = (1, 0, 0)
        d = SplitDisjunction(lattice.primitive(a), int(rng.integers(-2, 2)))
        hull = closures.disjunctive_hull(P, d)
        for z in integer_points(P, radius):
            assert poly.contains_point(hull, z)
        assert poly.is_subset(hull, P)


def test_larger_split_family_gives_smaller_closure(rng, sample_size):
    for _ in range(sample_size(20)):
        P = corpus.random_polygon(rng, bounded=True, box_radius=2)
        if not poly.is_feasible(P):
            continue
        family = closures.box_split_family(P, 1)
        half = family.disjunctions[: max(1, len(family) // 2)]
        smaller = SplitFamily(half)
        assert poly.is_subset(
            closures.split_closure_family(P, family),
            closures.split_closure_family(P, smaller),
        )


def test_cones_reach_integer_hull_in_one_split_round(rng, sample_size):
    for _ in range(sample_size(100)):
        C = corpus.random_cone(rng)
        certificate = closures.verify_rank_ih(C)
        assert certificate.passed, f"cone {C} failed the rank check"


def test_split_cuts_survive_projection(rng, sample_size):
    for _ in range(sample_size(100)):
        instance = corpus.random_split_instance(rng)
        assert closures.split_projection_check(
            instance.P, instance.split, instance.cut, instance.subspace
        )


def test_helly_certificates_have_at_most_four_halfspaces(rng, sample_size):
    for _ in range(sample_size(50)):
        P = corpus.random_infeasible_polygon(rng)
        certificate = latfree.helly_certificate(P)
        assert 1 <= len(certificate) <= 4
        sub = HPoly(2, tuple(P.halfspaces[i] for i in certificate))
        assert hull2d.integer_feasible_2d(sub) is None
        assert oracle.enum_integer_points(sub, oracle.Box.cube(2, 12)) == []


def test_closure_containments(rng, sample_size):
    for _ in range(sample_size(30)):
        P = corpus.random_polygon(rng, bounded=True, box_radius=2)
        if not poly.is_feasible(P):
            continue
        pair = closures.facet_pair_closure(P)
        split = closures.split_round(P, 3)
        assert poly.is_subset(pair, split)
        for h in poly.remove_redundant(P):
            cut = closures.cg_cut_from_direction(P, h.normal)
            assert poly.is_subset(split, HPoly(2, (cut,)))
