"""Tests for g_k(m): definition, trees, recursion and generating function."""

import unittest

from hessgk.algebra import Q, qfact
from hessgk.gfuncs import (
    csf_from_g,
    derangement_poly,
    e_positivity_report,
    g_def,
    g_extended,
    g_extension_check,
    g_path,
    g_path_monomial_check,
    g_recursion_check,
    g_series_check,
    g_tree,
    g_vector,
    hess_extend,
    path_denominator,
    stratum_check,
)
from hessgk.hessenberg import (
    HessFunc,
    all_hessenberg_functions,
    complete_function,
    csf_rho,
    path_function,
)
from hessgk.symring import SymFunc, from_json, is_positive_in, sf_basis_element
from hessgk.utils import get_logger, load_reference_json, override_guards
from hessgk.utils.errors import KOutOfRange, ResourceGuardError


def e(*la: int) -> SymFunc:
    return sf_basis_element("e", la)


class TestGDefinition(unittest.TestCase):
    def setUp(self) -> None:
        self.logger = get_logger(__name__ + ".TestGDefinition")

    def test_small(self) -> None:
        self.assertEqual(g_def(HessFunc((1,)), 0), SymFunc.one())
        self.assertEqual(g_def(HessFunc((2, 2)), 0), SymFunc.one())
        self.assertEqual(g_def(HessFunc((2, 2)), 1), SymFunc.zero())
        with self.assertRaises(KOutOfRange):
            g_def(HessFunc((1,)), 1)
        with self.assertRaises(KOutOfRange):
            g_def(HessFunc((2, 2)), -1)

    def test_worked_example(self) -> None:
        example = load_reference_json()["hessenberg_example"]
        m = HessFunc(tuple(example["m"]))
        g = g_vector(m)
        self.assertEqual(len(g), 6)
        for k, data in enumerate(example["g"]):
            self.assertEqual(g[k], from_json(data), f"k={k}")
        self.assertEqual(csf_rho(m), from_json(example["csf"]))

    def test_tree_formula(self) -> None:
        for n in range(1, 5):
            for m in all_hessenberg_functions(n):
                for k in range(n):
                    self.assertEqual(g_def(m, k), g_tree(m, k), f"{m}, {k}")

    def test_csf_from_g(self) -> None:
        for n in range(1, 5):
            for m in all_hessenberg_functions(n):
                self.assertEqual(csf_from_g(m), csf_rho(m), str(m))

    def test_strata(self) -> None:
        m = HessFunc((2, 4, 4, 5, 5))
        for j in range(m.n):
            self.assertTrue(stratum_check(m, j), f"j={j}")

    def test_schur_positive(self) -> None:
        for n in range(1, 6):
            for m in all_hessenberg_functions(n):
                for k in range(n):
                    report = is_positive_in(g_def(m, k), "s")
                    self.assertTrue(
                        report["positive"], f"{m}, k={k}: {report}"
                    )

    def test_complete_function(self) -> None:
        for n in range(2, 7):
            m = complete_function(n)
            self.assertEqual(g_def(m, 0), SymFunc.one() * qfact(n - 1))
            for k in range(1, n):
                self.assertTrue(g_def(m, k).is_zero(), f"n={n}, k={k}")


class TestGExtended(unittest.TestCase):
    def setUp(self) -> None:
        self.logger = get_logger(__name__ + ".TestGExtended")

    def test_extend(self) -> None:
        self.assertEqual(hess_extend(HessFunc((1,)), 2).values, (2, 3, 3))
        self.assertEqual(
            hess_extend(HessFunc((2, 2)), 1).values, (2, 3, 3)
        )
        self.assertEqual(hess_extend(HessFunc((2, 2)), 0).values, (2, 2))
        with self.assertRaises(ValueError):
            hess_extend(HessFunc((1,)), -1)

    def test_g_extended(self) -> None:
        m = HessFunc((1,))
        self.assertEqual(g_extended(m, 2), e(2) * Q)
        self.assertEqual(g_extended(m, 1), SymFunc.zero())
        with self.assertRaises(KOutOfRange):
            g_extended(m, 3, extra=1)

    def test_extension_invariance(self) -> None:
        for n in range(1, 4):
            for m in all_hessenberg_functions(n):
                for k in range(6):
                    self.assertTrue(g_extension_check(m, k), f"{m}, k={k}")
                for k in range(n):
                    for extra in (1, 2):
                        self.assertEqual(
                            g_def(hess_extend(m, extra), k),
                            g_def(m, k),
                            f"{m}, k={k}, extra={extra}",
                        )
        with self.assertRaises(ValueError):
            g_extension_check(HessFunc((2, 2)), 1, spread=-1)

    def test_recursion(self) -> None:
        for n in range(1, 5):
            for m in all_hessenberg_functions(n):
                self.assertTrue(g_recursion_check(m), str(m))

    def test_series(self) -> None:
        for m in [HessFunc((1,)), HessFunc((2, 3, 3)), HessFunc((3, 3, 3))]:
            report = g_series_check(m, m.n + 2)
            self.assertTrue(report["passed"], str(report["mismatch"]))
        with self.assertRaises(ValueError):
            g_series_check(HessFunc((2, 3, 3)), 2)

    def test_denominator(self) -> None:
        denom = path_denominator(3, "h")
        self.assertEqual(denom.coefficient(1), SymFunc.zero())
        self.assertEqual(
            denom.coefficient(3),
            sf_basis_element("h", (3,)) * -(Q + Q * Q),
        )
        with self.assertRaises(ValueError):
            path_denominator(3, "s")


class TestPath(unittest.TestCase):
    def setUp(self) -> None:
        self.logger = get_logger(__name__ + ".TestPath")

    def test_g_path(self) -> None:
        self.assertEqual(g_path(0), SymFunc.one())
        self.assertEqual(g_path(1), SymFunc.zero())
        self.assertEqual(g_path(2), e(2) * Q)
        self.assertEqual(g_path(3), e(3) * (Q + Q * Q))
        for k in range(6):
            self.assertEqual(g_extended(HessFunc((1,)), k), g_path(k))

    def test_derangements(self) -> None:
        self.assertEqual(derangement_poly((1,)), 0)
        self.assertEqual(derangement_poly((2,)), 0)
        self.assertEqual(derangement_poly((1, 1)), Q)
        self.assertEqual(derangement_poly((1, 1, 1)), Q + Q * Q)
        self.assertEqual(derangement_poly((2, 2)), Q * Q)
        for k in range(7):
            self.assertTrue(g_path_monomial_check(k), f"k={k}")

    def test_derangement_guard(self) -> None:
        override_guards(max_perm_n=3)
        try:
            with self.assertRaises(ResourceGuardError) as ctx:
                derangement_poly((3, 2, 2, 2))
            self.assertEqual(ctx.exception.guard, "max_perm_n")
            self.assertEqual(ctx.exception.requested, 9)
        finally:
            override_guards(max_perm_n=None)

    def test_e_positivity_report(self) -> None:
        rows = e_positivity_report(path_function(4))
        self.assertEqual([row["k"] for row in rows], [0, 1, 2, 3])
        self.assertTrue(all(row["report"]["positive"] for row in rows))
        self.assertEqual(g_def(path_function(4), 3).degrees(), {3})


if __name__ == "__main__":
    unittest.main()
