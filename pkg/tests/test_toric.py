"""Tests for the barycentric fan, its character and the F_1 / F_2 series."""

import unittest

from hessgk.algebra import ONE, ZERO, Q, QPoly, compositions_of, multinomial
from hessgk.gfuncs import g_path
from hessgk.hessenberg import csf_rho, path_function
from hessgk.symring import SymFunc, poincare_polynomial, sf_basis_element
from hessgk.toric import (
    F1_series,
    F2_series,
    FVector,
    barycentric_f_vector,
    cone_count_check,
    frob_C_sigma1,
    h_polynomial_check,
    h_vector,
    llt_path,
    local_h_polynomial,
    toric_identity_check,
)
from hessgk.utils import get_logger


def e(*la: int) -> SymFunc:
    return sf_basis_element("e", la)


def h(*la: int) -> SymFunc:
    return sf_basis_element("h", la)


class TestFan(unittest.TestCase):
    def setUp(self) -> None:
        self.logger = get_logger(__name__ + ".TestFan")

    def test_f_vector(self) -> None:
        self.assertEqual(barycentric_f_vector(1).counts, (1,))
        self.assertEqual(barycentric_f_vector(2).counts, (1, 2))
        self.assertEqual(barycentric_f_vector(3).counts, (1, 6, 6))
        self.assertEqual(barycentric_f_vector(4).counts, (1, 14, 36, 24))
        self.assertEqual(barycentric_f_vector(4).dim, 3)
        with self.assertRaises(ValueError):
            barycentric_f_vector(0)

    def test_h_vector(self) -> None:
        self.assertEqual(h_vector(FVector((1, 2))), (1, 1))
        self.assertEqual(h_vector(FVector((1, 6, 6))), (1, 4, 1))
        self.assertEqual(h_vector(barycentric_f_vector(4)), (1, 11, 11, 1))
        for bad in [(), (2, 1), (1, -1)]:
            with self.assertRaises(ValueError):
                FVector(bad)

    def test_cone_counts(self) -> None:
        for n in range(1, 6):
            self.assertTrue(cone_count_check(n), f"n={n}")
        # Ordered set partitions of [4].
        self.assertEqual(sum(barycentric_f_vector(4).counts), 75)
        self.assertEqual(
            sum(multinomial(mu) for mu in compositions_of(4)), 75
        )


class TestCharacters(unittest.TestCase):
    def setUp(self) -> None:
        self.logger = get_logger(__name__ + ".TestCharacters")

    def test_frob(self) -> None:
        self.assertEqual(frob_C_sigma1(2), h(1, 1) + h(2) * Q)
        self.assertEqual(
            poincare_polynomial(frob_C_sigma1(3)), QPoly([6, 6, 1])
        )
        with self.assertRaises(ValueError):
            frob_C_sigma1(0)

    def test_llt(self) -> None:
        self.assertEqual(llt_path(2, shifted=True), e(1, 1) + e(2) * Q)
        self.assertEqual(
            llt_path(2, shifted=False), e(1, 1) + e(2) * (Q - ONE)
        )
        for n in range(1, 5):
            self.assertTrue(toric_identity_check(n), f"n={n}")


class TestSeries(unittest.TestCase):
    def setUp(self) -> None:
        self.logger = get_logger(__name__ + ".TestSeries")

    def test_F1(self) -> None:
        self.assertEqual(
            F1_series(3).coefficient(3), h(3) * QPoly([1, 1, 1]) + h(2, 1) * Q
        )
        for n in range(1, 5):
            self.assertEqual(
                F1_series(n).coefficient(n).omega(), csf_rho(path_function(n))
            )
            self.assertTrue(h_polynomial_check(n), f"n={n}")

    def test_F2(self) -> None:
        for d in range(6):
            self.assertEqual(F2_series(d).coefficient(d).omega(), g_path(d))

    def test_local_h(self) -> None:
        self.assertEqual(local_h_polynomial(0), ONE)
        self.assertEqual(local_h_polynomial(1), ZERO)
        self.assertEqual(local_h_polynomial(2), Q)
        self.assertEqual(local_h_polynomial(3), Q + Q * Q)
        with self.assertRaises(ValueError):
            local_h_polynomial(-1)


if __name__ == "__main__":
    unittest.main()
