"""Tests for SymFunc, basis changes, series and the transition cache."""

import json
import random
import tempfile
import unittest
import itertools

from pathlib import Path
from collections import Counter

from hessgk.algebra import ONE, Q, QPoly, partitions_of
from hessgk.hessenberg import rho
from hessgk.symring import (
    BASES,
    SFSeries,
    SymFunc,
    from_basis,
    from_json,
    get_transitions,
    is_positive_in,
    kostka_matrix,
    load_transition_cache,
    omega,
    omega_schur_check,
    poincare_polynomial,
    render_expansion,
    save_transition_cache,
    series_inverse,
    series_mul,
    sf_add,
    sf_basis_element,
    sf_mul,
    to_basis,
    to_json,
)
from hessgk.symring.transitions import (
    cached_degrees,
    clear_transition_cache,
    kostka_number,
    matrix_count,
    refinement_count,
)
from hessgk.utils import get_logger
from hessgk.utils.errors import IntegralityError, InvertibilityError


def e(*la: int) -> SymFunc:
    return sf_basis_element("e", la)


def h(*la: int) -> SymFunc:
    return sf_basis_element("h", la)


def p(*la: int) -> SymFunc:
    return sf_basis_element("p", la)


Monomials = Counter[tuple[int, ...]]


def _poly_mul(a: Monomials, b: Monomials) -> Monomials:
    res: Monomials = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            res[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return res


def _generator(basis: str, r: int, d: int) -> Monomials:
    res: Monomials = Counter()
    if basis == "e":
        for subset in itertools.combinations(range(d), r):
            res[tuple(int(i in subset) for i in range(d))] += 1
    elif basis == "h":
        for multiset in itertools.combinations_with_replacement(range(d), r):
            res[tuple(multiset.count(i) for i in range(d))] += 1
    else:
        for i in range(d):
            res[tuple(r if j == i else 0 for j in range(d))] += 1
    return res


def expand_in_variables(
    terms: dict[tuple[int, ...], int], basis: str, d: int
) -> Monomials:
    """Polynomial in x_1..x_d of sum c * basis_la, by direct expansion."""
    res: Monomials = Counter()
    for la, c in terms.items():
        poly: Monomials = Counter({(0,) * d: 1})
        for part in la:
            poly = _poly_mul(poly, _generator(basis, part, d))
        for exps, x in poly.items():
            res[exps] += c * x
    return res


def random_terms(
    rng: random.Random, n: int
) -> dict[tuple[int, ...], int]:
    terms = {la: rng.randint(-3, 3) for la in partitions_of(n)}
    return {la: c for la, c in terms.items() if c != 0}


class TestTransitions(unittest.TestCase):
    def setUp(self) -> None:
        self.logger = get_logger(__name__ + ".TestTransitions")

    def test_counts(self) -> None:
        self.assertEqual(refinement_count((1, 1), (2,)), 1)
        self.assertEqual(refinement_count((1, 1), (1, 1)), 2)
        self.assertEqual(refinement_count((2,), (1, 1)), 0)
        self.assertEqual(matrix_count((2, 1), (1, 1, 1), binary=True), 3)
        self.assertEqual(matrix_count((2,), (2,), binary=True), 0)
        self.assertEqual(matrix_count((2,), (2,), binary=False), 1)
        self.assertEqual(kostka_number((2, 1), (1, 1, 1)), 2)
        self.assertEqual(kostka_matrix(2), [[1, 1], [0, 1]])

    def test_disk_cache(self) -> None:
        expected = get_transitions(4).to_m
        with tempfile.TemporaryDirectory() as tmp_dir:
            cache_path = Path(tmp_dir).joinpath("transitions.json")
            save_transition_cache(cache_path)
            saved = cached_degrees()

            clear_transition_cache()
            self.assertEqual(cached_degrees(), [])
            self.assertEqual(load_transition_cache(cache_path), len(saved))
            self.assertEqual(get_transitions(4).to_m, expected)

            with open(cache_path, "r") as f:
                data = json.load(f)
            data["header"]["version"] = -1
            with open(cache_path, "w") as f:
                json.dump(data, f)
            self.assertEqual(load_transition_cache(cache_path), 0)

            cache_path.write_text("{not json")
            self.assertEqual(load_transition_cache(cache_path), 0)

        self.assertEqual(load_transition_cache("/nonexistent/cache.json"), 0)


class TestSymFunc(unittest.TestCase):
    def setUp(self) -> None:
        self.logger = get_logger(__name__ + ".TestSymFunc")

    def test_basis_changes(self) -> None:
        self.assertEqual(to_basis(p(2), "e"), {(2,): -2, (1, 1): 1})
        self.assertEqual(to_basis(e(2) * e(1), "m")[(1, 1, 1)], 3)
        self.assertEqual(to_basis(h(2, 1) - h(3), "s"), {(2, 1): 1})
        self.assertEqual(to_basis(SymFunc.one(), "e"), {(): 1})
        self.assertEqual(to_basis(SymFunc.zero(), "h"), {})

    def test_ring_ops(self) -> None:
        self.assertEqual(sf_add(e(2), h(2)), e(1, 1))
        self.assertEqual(sf_mul(h(1), h(1)), h(1, 1))
        self.assertEqual(sf_mul(p(2), p(3)), p(3, 2))
        self.assertEqual(omega(h(3)), e(3))
        self.assertEqual(sf_mul(e(2), SymFunc.one()), e(2))

    def test_omega(self) -> None:
        self.assertEqual(e(3).omega(), h(3))
        self.assertEqual(p(2).omega(), -p(2))
        self.assertEqual((e(2, 1) * Q).omega(), h(2, 1) * Q)
        for n in range(1, 6):
            self.assertTrue(omega_schur_check(n), f"n={n}")

    def test_basis_round_trip(self) -> None:
        rng = random.Random(7)
        for _ in range(200):
            basis = rng.choice(BASES)
            terms = random_terms(rng, rng.randint(1, 5))
            f = from_basis(terms, basis)
            self.assertEqual(to_basis(f, basis), terms, f"{basis}, {terms}")
            self.assertEqual(f.omega().omega(), f)

    def test_omega_involution(self) -> None:
        rng = random.Random(11)
        for _ in range(20):
            n = rng.randint(1, 6)
            basis = rng.choice(BASES)
            coeff = QPoly([rng.randint(-2, 2) for _ in range(3)])
            f = from_basis(random_terms(rng, n), basis) * coeff
            self.assertEqual(f.omega().omega(), f)

    def test_monomial_view(self) -> None:
        for n in range(1, 7):
            for basis in ("e", "h", "p"):
                for la in partitions_of(n):
                    got = to_basis(sf_basis_element(basis, la), "m")
                    poly = expand_in_variables({la: 1}, basis, n)
                    for mu in partitions_of(n):
                        exps = mu + (0,) * (n - len(mu))
                        self.assertEqual(
                            got.get(mu, 0), poly[exps], f"{basis}{la}, {mu}"
                        )

    def test_product_in_variables(self) -> None:
        rng = random.Random(3)
        for _ in range(15):
            a = rng.randint(1, 3)
            b = rng.randint(1, 3)
            basis_f, basis_g = rng.choice("ehp"), rng.choice("ehp")
            terms_f, terms_g = random_terms(rng, a), random_terms(rng, b)
            f = from_basis(terms_f, basis_f)
            g = from_basis(terms_g, basis_g)
            got = to_basis(sf_mul(f, g), "m")
            poly = _poly_mul(
                expand_in_variables(terms_f, basis_f, a + b),
                expand_in_variables(terms_g, basis_g, a + b),
            )
            for mu in partitions_of(a + b):
                exps = mu + (0,) * (a + b - len(mu))
                self.assertEqual(got.get(mu, 0), poly[exps], str(mu))

    def test_p_view_integrality(self) -> None:
        self.assertEqual(rho(2), h(2) * (ONE + Q) - h(1, 1))
        with self.assertRaises(IntegralityError):
            to_basis(rho(2), "p")
        self.assertEqual(
            to_basis(rho(2).evaluate_q(1), "p"), {(2,): 1}
        )

    def test_render(self) -> None:
        f = e(2) * Q + e(1, 1)
        self.assertEqual(render_expansion(f, "e"), "qe_2 + e_{1,1}")
        g = e(2) * (ONE + Q) - e(1, 1)
        self.assertEqual(render_expansion(g, "e"), "(q+1)e_2 - e_{1,1}")
        self.assertEqual(render_expansion(SymFunc.zero(), "e"), "0")
        self.assertEqual(render_expansion(SymFunc.one(), "e"), "1")

    def test_json(self) -> None:
        f = e(3) * QPoly([1, 1, 1]) + e(2, 1) * Q
        data = to_json(f, "e")
        self.assertEqual(data["basis"], "e")
        self.assertEqual(
            data["terms"],
            [
                {"partition": [3], "coeff": [1, 1, 1]},
                {"partition": [2, 1], "coeff": [0, 1]},
            ],
        )
        self.assertEqual(from_json(data), f)

    def test_positivity(self) -> None:
        report = is_positive_in(p(2), "e")
        self.assertFalse(report["positive"])
        self.assertEqual(
            report["offenders"], [{"partition": [2], "power": 0, "coeff": -2}]
        )
        self.assertTrue(is_positive_in(h(2), "s")["positive"])

    def test_poincare(self) -> None:
        self.assertEqual(poincare_polynomial(h(2)), 1)
        self.assertEqual(poincare_polynomial(e(1, 1) * Q), QPoly([0, 2]))
        with self.assertRaises(ValueError):
            poincare_polynomial(e(1) + e(2))


class TestSeries(unittest.TestCase):
    def setUp(self) -> None:
        self.logger = get_logger(__name__ + ".TestSeries")

    def test_inverse(self) -> None:
        a = SFSeries.from_terms(3, {0: SymFunc.one(), 1: -p(1)})
        inv = series_inverse(a)
        self.assertEqual(inv.coefficient(2), p(1, 1))
        self.assertEqual(inv.coefficient(3), p(1, 1, 1))
        self.assertEqual(a * inv, SFSeries.one(3))
        self.assertEqual(series_mul(a, inv), SFSeries.one(3))

        b = SFSeries.from_terms(4, {0: SymFunc.one(), 2: -e(2) * Q})
        self.assertEqual(
            series_inverse(b),
            SFSeries.from_terms(
                4, {0: SymFunc.one(), 2: e(2) * Q, 4: e(2, 2) * (Q * Q)}
            ),
        )

    def test_errors(self) -> None:
        with self.assertRaises(InvertibilityError):
            series_inverse(SFSeries.from_terms(2, {1: p(1)}))
        with self.assertRaises(ValueError):
            SFSeries.from_terms(2, {1: p(2)})


if __name__ == "__main__":
    unittest.main()
