"""Tests for c_k, S_1, S_2 and the injection Delta."""

import unittest

from hessgk.algebra import ZERO, Q
from hessgk.hessenberg import HessFunc, all_hessenberg_functions
from hessgk.positivity import (
    CycWordPair,
    check_delta_injective,
    ck_poly,
    delta_map,
    delta_row,
    delta_table_fixture,
    delta_table_matches_fixture,
    e_ab_check,
    e_ab_coefficient,
    enum_S1,
    enum_S2,
    render_delta_table,
)
from hessgk.utils import get_logger
from hessgk.utils.errors import KOutOfRange


class TestCk(unittest.TestCase):
    def setUp(self) -> None:
        self.logger = get_logger(__name__ + ".TestCk")

    def test_small(self) -> None:
        self.assertEqual(ck_poly(HessFunc((2, 2)), 1), ZERO)
        self.assertEqual(ck_poly(HessFunc((2, 3, 3)), 1), ZERO)
        self.assertEqual(ck_poly(HessFunc((2, 3, 3)), 2), Q)
        with self.assertRaises(KOutOfRange):
            ck_poly(HessFunc((2, 2)), 0)
        with self.assertRaises(KOutOfRange):
            ck_poly(HessFunc((2, 2)), 2)

    def test_nonnegative_at_one(self) -> None:
        for n in range(2, 6):
            for m in all_hessenberg_functions(n):
                for k in range(1, n):
                    self.assertGreaterEqual(ck_poly(m, k)(1), 0, f"{m}, {k}")

    def test_e_ab(self) -> None:
        m = HessFunc((2, 3, 3))
        self.assertEqual(e_ab_coefficient(m, 1, 2), Q)
        self.assertEqual(e_ab_coefficient(m, 2, 1), Q)
        for n in range(2, 6):
            for m in all_hessenberg_functions(n):
                for a in range(1, n // 2 + 1):
                    report = e_ab_check(m, a, n - a)
                    self.assertTrue(report["matches"], str(report))
                    self.assertGreaterEqual(report["value_at_one"], 0)
        with self.assertRaises(KOutOfRange):
            e_ab_coefficient(m, 1, 1)


class TestDelta(unittest.TestCase):
    def setUp(self) -> None:
        self.logger = get_logger(__name__ + ".TestDelta")

    def test_enumeration(self) -> None:
        self.assertEqual(enum_S1(HessFunc((2, 2))), [(1, 2)])
        self.assertEqual(enum_S1(HessFunc((3, 3, 3))), [(1, 2, 3), (1, 3, 2)])
        self.assertEqual(
            enum_S2(HessFunc((2, 2)), 1), [CycWordPair(w=(1,), z=(2,))]
        )
        pairs = enum_S2(HessFunc((3, 3, 3)), 2)
        self.assertEqual(len(pairs), 2)
        self.assertTrue(all(p.w == (1,) for p in pairs))

    def test_small_table(self) -> None:
        m = HessFunc((2, 2))
        self.assertEqual(delta_map(m, 1, (1, 2)), CycWordPair((1,), (2,)))
        row = delta_row(m, 1, (1, 2))
        self.assertEqual(row["image"], [[1], [2]])
        self.assertEqual(row["j"], 0)
        self.assertEqual(row["note"], "")

        report = check_delta_injective(m, 1)
        self.assertTrue(report["injective"])
        self.assertTrue(report["counts_match"])
        self.assertEqual(report["s1_count"], 1)
        self.assertEqual(report["ck_at_one"], 0)

    def test_complete_rows(self) -> None:
        report = check_delta_injective(HessFunc((4, 4, 4, 4)), 2)
        self.assertEqual(len(report["rows"]), 6)
        self.assertTrue(report["injective"])

    def test_table_fixture(self) -> None:
        fixture = delta_table_fixture()
        self.assertEqual(fixture["m"], [3, 5, 5, 5, 6, 6])
        self.assertEqual(len(fixture["rows"]), 12)
        self.assertTrue(delta_table_matches_fixture())

        report = check_delta_injective(HessFunc(tuple(fixture["m"])), 3)
        self.assertTrue(report["injective"])
        self.assertTrue(report["counts_match"])
        text = render_delta_table(report)
        self.logger.info(f"\n{text}")
        self.assertTrue(text.startswith("m = (3, 5, 5, 5, 6, 6), k = 3"))

    def test_exhaustive(self) -> None:
        for n in range(2, 7):
            for m in all_hessenberg_functions(n):
                for k in range(1, n):
                    report = check_delta_injective(m, k)
                    self.assertTrue(report["injective"], f"{m}, k={k}")
                    self.assertTrue(report["counts_match"], f"{m}, k={k}")

    def test_counts(self) -> None:
        for n in range(2, 6):
            for m in all_hessenberg_functions(n):
                for k in range(1, n):
                    self.assertEqual(
                        len(enum_S2(m, k)) - len(enum_S1(m)),
                        ck_poly(m, k)(1),
                        f"{m}, {k}",
                    )

    def test_bad_k(self) -> None:
        with self.assertRaises(KOutOfRange):
            delta_map(HessFunc((2, 2)), 0, (1, 2))
        with self.assertRaises(KOutOfRange):
            enum_S2(HessFunc((2, 2)), 2)


if __name__ == "__main__":
    unittest.main()
