"""Exhaustive identity suites over small inputs.

Each verify_* function returns (passed, report), and get_verify_fn looks
suites up by name.
"""

from typing import Callable, Final, TypedDict

from hessgk.algebra import ZERO, Q, qfact
from hessgk.gfuncs import (
    csf_from_g,
    g_def,
    g_extension_check,
    g_path,
    g_path_monomial_check,
    g_recursion_check,
    g_series_check,
    g_tree,
    stratum_check,
)
from hessgk.graphx import (
    RootedGraph,
    connected_graphs,
    csf_coloring_general,
    csf_general_from_g,
    csf_stanley,
    deletion_contraction_check,
    g_general,
    g_general_from_edges,
    gn_pseudo_check,
)
from hessgk.hessenberg import (
    HessFunc,
    all_hessenberg_functions,
    complete_function,
    csf_coloring,
    csf_rho,
    csf_stanley_p,
    omega_rho_check,
    path_function,
)
from hessgk.positivity import (
    check_delta_injective,
    ck_poly,
    delta_table_matches_fixture,
    e_ab_check,
)
from hessgk.symring import (
    SymFunc,
    from_json,
    is_positive_in,
    omega_schur_check,
    sf_basis_element,
    to_basis,
)
from hessgk.toric import (
    F1_series,
    F2_series,
    barycentric_f_vector,
    cone_count_check,
    h_polynomial_check,
    h_vector,
    local_h_polynomial,
    toric_identity_check,
)
from hessgk.utils import get_logger, load_default_config, load_reference_json
from hessgk.utils.errors import DeltaNotWellDefined

logger = get_logger(__package__)

SUITES: Final[tuple[str, ...]] = (
    "rho",
    "csf",
    "g",
    "positivity",
    "graphs",
    "toric",
)


class CheckResult(TypedDict):
    identity: str
    range: str
    passed: bool
    detail: str


class SuiteReport(TypedDict):
    suite: str
    max_n: int
    passed: bool
    checks: list[CheckResult]


class _Suite:
    def __init__(self, name: str, max_n: int):
        self.name = name
        self.max_n = max_n
        self.checks: list[CheckResult] = []

    def record(
        self, identity: str, rng: str, passed: bool, detail: str = ""
    ) -> None:
        self.checks.append(
            {
                "identity": identity,
                "range": rng,
                "passed": passed,
                "detail": detail,
            }
        )
        if passed:
            logger.info(f"[{self.name}] {identity} ({rng}): pass")
        else:
            logger.warning(f"[{self.name}] {identity} ({rng}): FAIL {detail}")

    def record_all(
        self, identity: str, rng: str, failures: list[str]
    ) -> None:
        self.record(identity, rng, not failures, ", ".join(failures[:5]))

    def report(self) -> tuple[bool, SuiteReport]:
        passed = all(c["passed"] for c in self.checks)
        return passed, {
            "suite": self.name,
            "max_n": self.max_n,
            "passed": passed,
            "checks": self.checks,
        }


def default_max_n(suite: str) -> int:
    return int(load_default_config()["verify"][suite]["max_n"])


def _hessenberg_range(max_n: int, start: int = 1) -> list[HessFunc]:
    return [
        m
        for n in range(start, max_n + 1)
        for m in all_hessenberg_functions(n)
    ]


def verify_rho(max_n: int) -> tuple[bool, SuiteReport]:
    """omega on rho_n and on Schur functions, and csf_q of K_n."""
    suite = _Suite("rho", max_n)
    suite.record_all(
        "omega(rho_n) = sum_i (-1)^{n-i} [i]_q e_i h_{n-i}",
        f"1 <= n <= {max_n}",
        [f"n={n}" for n in range(1, max_n + 1) if not omega_rho_check(n)],
    )

    top = min(max_n, 6)
    suite.record_all(
        "csf_q(K_n) = [n]_q! e_n",
        f"1 <= n <= {top}",
        [
            f"n={n}"
            for n in range(1, top + 1)
            if csf_rho(complete_function(n))
            != sf_basis_element("e", (n,)) * qfact(n)
        ],
    )
    suite.record_all(
        "omega(s_la) = s_la'",
        f"1 <= n <= {top}",
        [f"n={n}" for n in range(1, top + 1) if not omega_schur_check(n)],
    )
    return suite.report()


def verify_csf(max_n: int) -> tuple[bool, SuiteReport]:
    """Independent routes to csf_q agree on every Hessenberg function."""
    suite = _Suite("csf", max_n)
    rng = f"all m with 1 <= n <= {max_n}"
    ms = _hessenberg_range(max_n)

    suite.record_all(
        "csf via S_{n,m} = csf via colourings",
        rng,
        [str(m) for m in ms if csf_rho(m) != csf_coloring(m)],
    )
    suite.record_all(
        "csf = sum_k [n-k]_q e_{n-k} g_k",
        rng,
        [str(m) for m in ms if csf_from_g(m) != csf_rho(m)],
    )
    suite.record_all(
        "csf at q=1 = sum_sigma omega(p_type)",
        rng,
        [str(m) for m in ms if csf_stanley_p(m) != csf_rho(m).evaluate_q(1)],
    )
    suite.record_all(
        "csf is e-positive",
        rng,
        [str(m) for m in ms if not is_positive_in(csf_rho(m), "e")["positive"]],
    )

    example = load_reference_json()["hessenberg_example"]
    m = HessFunc(tuple(example["m"]))
    suite.record(
        "csf of the worked example",
        str(m),
        csf_rho(m) == from_json(example["csf"]),
    )
    return suite.report()


def verify_g(max_n: int) -> tuple[bool, SuiteReport]:
    """Definition, tree formula, recursion, strata and generating function."""
    suite = _Suite("g", max_n)
    rng = f"all m with 1 <= n <= {max_n}"
    ms = _hessenberg_range(max_n)

    suite.record_all(
        "g_k by definition = g_k by increasing trees",
        rng,
        [
            f"{m}, k={k}"
            for m in ms
            for k in range(m.n)
            if g_def(m, k) != g_tree(m, k)
        ],
    )
    suite.record_all(
        "g_n = q sum_i [i-1]_q e_i g_{n-i}",
        rng,
        [str(m) for m in ms if not g_recursion_check(m)],
    )
    suite.record_all(
        "stratum sums = sum_{i<=j} e_{j-i} g_i",
        rng,
        [
            f"{m}, j={j}"
            for m in ms
            for j in range(m.n)
            if not stratum_check(m, j)
        ],
    )
    suite.record_all(
        "generating function of g_k",
        rng + ", order n + 2",
        [str(m) for m in ms if not g_series_check(m, m.n + 2)["passed"]],
    )
    suite.record_all(
        "g_k is Schur-positive",
        rng,
        [
            f"{m}, k={k}"
            for m in ms
            for k in range(m.n)
            if not is_positive_in(g_def(m, k), "s")["positive"]
        ],
    )

    top = min(max_n, 6)
    suite.record_all(
        "g_0(K_n) = [n-1]_q! and g_k(K_n) = 0 for 0 < k < n",
        f"2 <= n <= {top}",
        [
            f"n={n}, k={k}"
            for n in range(2, top + 1)
            for k in range(n)
            if g_def(complete_function(n), k)
            != (SymFunc.one() * qfact(n - 1) if k == 0 else SymFunc.zero())
        ],
    )

    small = _hessenberg_range(min(max_n, 3))
    suite.record_all(
        "g_k does not depend on the prepended path",
        f"all m with 1 <= n <= {min(max_n, 3)}, 0 <= k <= 5",
        [
            f"{m}, k={k}"
            for m in small
            for k in range(6)
            if not g_extension_check(m, k)
        ],
    )
    suite.record_all(
        "g_k(P_n) monomial coefficients are derangement excedances",
        f"0 <= k <= {max_n + 1}",
        [
            f"k={k}"
            for k in range(max_n + 2)
            if not g_path_monomial_check(k)
        ],
    )
    suite.record_all(
        "g_k(P_n) is e-positive",
        f"0 <= k <= {max_n + 1}",
        [
            f"k={k}"
            for k in range(max_n + 2)
            if not is_positive_in(g_path(k), "e")["positive"]
        ],
    )

    example = load_reference_json()["hessenberg_example"]
    m = HessFunc(tuple(example["m"]))
    suite.record_all(
        "g_k of the worked example",
        str(m),
        [
            f"k={k}"
            for k, data in enumerate(example["g"])
            if g_def(m, k) != from_json(data)
        ],
    )
    return suite.report()


def verify_positivity(max_n: int) -> tuple[bool, SuiteReport]:
    """c_k >= 0 through Delta, and the e_{a,b} coefficients."""
    suite = _Suite("positivity", max_n)
    rng = f"all m with 2 <= n <= {max_n}, 1 <= k < n"
    ms = _hessenberg_range(max_n, start=2)

    delta_failures: list[str] = []
    ck_failures: list[str] = []
    for m in ms:
        for k in range(1, m.n):
            try:
                report = check_delta_injective(m, k)
            except DeltaNotWellDefined as e:
                delta_failures.append(f"{m}, k={k}: {e}")
                continue
            if not (report["injective"] and report["counts_match"]):
                delta_failures.append(f"{m}, k={k}")
            e_k = to_basis(g_def(m, k), "e").get((k,), ZERO)
            if e_k != ck_poly(m, k):
                ck_failures.append(f"{m}, k={k}")

    suite.record_all("Delta: S_1 -> S_2 is injective", rng, delta_failures)
    suite.record_all("c_k = [e_k] g_k", rng, ck_failures)
    suite.record_all(
        "e_{a,b} coefficient = [a]_q c_b + [b]_q c_a",
        f"all m with 2 <= n <= {max_n}, a <= b",
        [
            f"{m}, a={a}"
            for m in ms
            for a in range(1, m.n // 2 + 1)
            if not e_ab_check(m, a, m.n - a)["matches"]
        ],
    )
    suite.record_all(
        "e_{a,b} coefficient is non-negative at q = 1",
        f"all m with 2 <= n <= {max_n}, a <= b",
        [
            f"{m}, a={a}"
            for m in ms
            for a in range(1, m.n // 2 + 1)
            if e_ab_check(m, a, m.n - a)["value_at_one"] < 0
        ],
    )
    suite.record(
        "Delta table for (3,5,5,5,6,6), k=3",
        "fixture",
        delta_table_matches_fixture(),
    )
    return suite.report()


def verify_graphs(max_n: int) -> tuple[bool, SuiteReport]:
    """Edge-subset g_k on all small connected graphs."""
    suite = _Suite("graphs", max_n)
    rng = f"connected graphs with 1 <= n <= {max_n}"
    graphs = [G for n in range(1, max_n + 1) for G in connected_graphs(n)]
    rooted = [G.with_root(r) for G in graphs for r in range(1, G.n + 1)]

    suite.record_all(
        "pseudo g_n + sum_k e_{n-k} g_k = 0",
        rng + ", every root",
        [str(G) for G in rooted if not gn_pseudo_check(G)],
    )
    suite.record_all(
        "csf = sum_k (n-k) e_{n-k} g_k",
        rng,
        [str(G) for G in graphs if csf_general_from_g(G) != csf_stanley(G)],
    )
    suite.record_all(
        "subset expansion = colouring count",
        rng,
        [str(G) for G in graphs if csf_stanley(G) != csf_coloring_general(G)],
    )
    suite.record_all(
        "csf does not depend on the root",
        rng,
        [
            str(G)
            for G in graphs
            if csf_general_from_g(G.with_root(G.n)) != csf_stanley(G)
        ],
    )

    dc_failures: list[str] = []
    multi_failures: list[str] = []
    for G in rooted:
        for e in G.sorted_edges():
            if G.root not in e:
                continue
            if not deletion_contraction_check(G, e):
                dc_failures.append(f"{G}, e={e}")
            contracted = G.contract_edge(e)
            edge_list = G.contracted_edge_list(e)
            if any(
                g_general(contracted, k)
                != g_general_from_edges(
                    contracted.n, edge_list, contracted.root, k
                )
                for k in range(contracted.n)
            ):
                multi_failures.append(f"{G}, e={e}")

    suite.record_all(
        "deletion-contraction at the root", rng + ", every root", dc_failures
    )
    suite.record_all("parallel edges leave g_k unchanged", rng, multi_failures)

    # Data only: the q = 1 shadow of the Hessenberg g_k.
    for m in _hessenberg_range(min(max_n, 5)):
        G = RootedGraph.from_hessenberg(m)
        differs = [
            k
            for k in range(m.n)
            if g_general(G, k) != g_def(m, k).evaluate_q(1)
        ]
        if differs:
            logger.info(f"g_k(G_m) differs from g_k(m; q=1) for {m}: {differs}")

    return suite.report()


def verify_toric(max_n: int) -> tuple[bool, SuiteReport]:
    """Barycentric fan counts, the path LLT identity and F_1 / F_2."""
    suite = _Suite("toric", max_n)
    rng = f"1 <= n <= {max_n}"
    ns = range(1, max_n + 1)

    suite.record_all(
        "frob C_Sigma1 = omega(LLT(P_n; q+1))",
        rng,
        [f"n={n}" for n in ns if not toric_identity_check(n)],
    )
    suite.record_all(
        "graded dimension of frob C_Sigma1 counts cones",
        rng,
        [f"n={n}" for n in ns if not cone_count_check(n)],
    )
    suite.record_all(
        "Poincare polynomial of F_1[z^n] = barycentric h-vector",
        rng,
        [f"n={n}" for n in ns if not h_polynomial_check(n)],
    )
    suite.record_all(
        "sum of the h-vector = top cone count",
        rng,
        [
            f"n={n}"
            for n in ns
            if sum(h_vector(barycentric_f_vector(n)))
            != barycentric_f_vector(n).counts[-1]
        ],
    )
    suite.record_all(
        "omega(F_1[z^n]) = csf_q(P_n)",
        rng,
        [
            f"n={n}"
            for n in ns
            if F1_series(n).coefficient(n).omega()
            != csf_rho(path_function(n))
        ],
    )
    suite.record_all(
        "omega(F_2[z^n]) = g_n of the path",
        rng,
        [
            f"n={n}"
            for n in ns
            if F2_series(n).coefficient(n).omega() != g_path(n)
        ],
    )
    suite.record(
        "local h-polynomials 1, 0, q, q + q^2",
        "0 <= d <= 3",
        [local_h_polynomial(d) for d in range(4)] == [1, 0, Q, Q + Q * Q],
    )
    return suite.report()


def get_verify_fn(suite: str) -> Callable[[int], tuple[bool, SuiteReport]]:
    name_to_fn: dict[str, Callable[[int], tuple[bool, SuiteReport]]] = {
        "rho": verify_rho,
        "csf": verify_csf,
        "g": verify_g,
        "positivity": verify_positivity,
        "graphs": verify_graphs,
        "toric": verify_toric,
    }

    fn = name_to_fn.get(suite, None)
    if fn is None:
        raise ValueError(f"Error finding verification suite for {suite}")
    else:
        return fn


def run_suites(
    suites: list[str], max_n: int | None = None
) -> tuple[bool, list[SuiteReport]]:
    """Runs the named suites, each at max_n or its configured default."""
    reports = []
    for name in suites:
        _, report = get_verify_fn(name)(
            default_max_n(name) if max_n is None else max_n
        )
        reports.append(report)

    return all(r["passed"] for r in reports), reports
