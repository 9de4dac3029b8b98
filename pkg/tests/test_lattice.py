import unittest
from fractions import Fraction

import pytest

from ipgeom.closure import lattice, ratmath
from ipgeom.closure.errors import LatticeSubspaceError, ZeroVectorError


class HNFTests(unittest.TestCase):
    def test_known_forms(self):
        cases = [
            ([[2, 1], [0, 1]], ((1, 0), (1, 2))),
            ([[4, 6]], ((2, 0),)),
            ([[1, 0], [0, 1]], ((1, 0), (0, 1))),
        ]
        for A, expected in cases:
            with self.subTest(A=A):
                H, _ = lattice.hnf(A)
                self.assertEqual(H, expected)

    def test_transform_is_unimodular(self):
        for A in ([[2, 1], [0, 1]], [[3, 5, 7]], [[6, 4, 2], [1, 0, 3]]):
            with self.subTest(A=A):
                H, U = lattice.hnf(A)
                self.assertEqual(abs(ratmath.det_exact(U)), 1)
                self.assertEqual(ratmath.mat_mul(ratmath.qmat(A), ratmath.qmat(U)), ratmath.qmat(H))

    def test_lower_triangular_with_reduced_rows(self):
        H, _ = lattice.hnf([[6, 4, 2], [1, 0, 3]])
        self.assertEqual(H[0][1:], (0, 0))
        self.assertEqual(H[1][2], 0)
        self.assertGreater(H[1][1], 0)
        self.assertTrue(0 <= H[1][0] < H[1][1])


def test_primitive():
    assert lattice.primitive((4, -6)) == (2, -3)
    with pytest.raises(ZeroVectorError):
        lattice.primitive((0, 0))


def test_primitive_direction_of_rational_vector():
    assert lattice.primitive_direction(ratmath.qvec(["1/2", "-3/4"])) == (2, -3)


def test_xgcd_identity():
    for a, b in [(4, 6), (-3, 7), (0, 5), (12, -18)]:
        g, x, y = lattice.xgcd(a, b)
        assert a * x + b * y == g
        assert g >= 0


def test_projected_lattice_of_diagonal():
    B = lattice.projected_lattice_basis(lattice.subspace([(1, 1)]))
    assert B.generators == ((Fraction(1, 2), Fraction(1, 2)),)
    assert lattice.lattice_coords(B, (Fraction(3, 2), Fraction(3, 2))) == (3,)


def test_projected_lattice_of_coordinate_plane():
    B = lattice.projected_lattice_basis(lattice.subspace([(1, 0, 0), (0, 1, 0)]))
    assert set(B.generators) == {(1, 0, 0), (0, 1, 0)}


def test_projection_of_integer_points_has_integer_coordinates():
    B = lattice.projected_lattice_basis(lattice.subspace([(1, 2, 0), (0, 1, 3)]))
    for z in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (3, -2, 5)]:
        assert ratmath.is_integral(lattice.coords_of_projection(B, z))


def test_project_point():
    B = lattice.projected_lattice_basis(lattice.subspace([(1, 1)]))
    assert lattice.project_point(B, (1, 0)) == (Fraction(1, 2), Fraction(1, 2))
    assert lattice.project_point(B, (3, 3)) == (3, 3)
    x = (2, -5)
    residual = ratmath.sub(x, lattice.project_point(B, x))
    assert ratmath.dot(residual, (1, 1)) == 0


def test_unit_vectors_project_onto_a_basis_of_the_lattice():
    for vectors in ([(1, 2, 0), (0, 1, 3)], [(2, 3, 5)], [(1, 1, 0, 0), (0, 1, 1, 2)]):
        B = lattice.projected_lattice_basis(lattice.subspace(vectors))
        n = B.ambient_dim
        columns = [
            lattice.coords_of_projection(B, tuple(int(i == j) for i in range(n)))
            for j in range(n)
        ]
        M = [[int(c[i]) for c in columns] for i in range(B.dim)]
        H, _ = lattice.hnf(M)
        identity = [[int(i == j) for j in range(B.dim)] for i in range(B.dim)]
        assert [list(row[: B.dim]) for row in H] == identity


def test_zero_subspace_has_no_lattice():
    with pytest.raises(LatticeSubspaceError):
        lattice.projected_lattice_basis(lattice.SubspaceBasis(2, ()))


def test_irrational_entry_is_rejected():
    with pytest.raises(LatticeSubspaceError):
        lattice.subspace([(1.0, 2 ** 0.5)])


def test_point_outside_subspace():
    B = lattice.projected_lattice_basis(lattice.subspace([(1, 1)]))
    with pytest.raises(LatticeSubspaceError):
        lattice.lattice_coords(B, (1, 0))


def test_orthogonal_complement():
    L = lattice.subspace([(1, 1, 0)])
    complement = lattice.orthogonal_complement(L)
    assert complement.dim == 2
    for v in complement.basis_vectors:
        assert ratmath.dot(v, (1, 1, 0)) == 0


def test_integer_point_on_line():
    for a, c in [((2, 3), 7), ((0, 1), 1), ((-5, 3), -2)]:
        z = lattice.integer_point_on_line(a, c)
        assert ratmath.dot(a, z) == c
