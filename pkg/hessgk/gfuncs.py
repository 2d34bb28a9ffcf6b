"""The symmetric functions g_k(m; x, q).

For 0 <= k < n,

    g_k = sum over sigma = tau_1 ... tau_j in S_{n,m} with |tau_1| >= n - k of
          (-1)^{|tau_1| - n + k} q^wt(sigma^c) h_{|tau_1| - n + k}
          omega(rho_{|tau_2|} ... rho_{|tau_j|}),

and g_k for k >= n is read off the function extended by a path. The
generating function, the path-graph closed form and the derangement
description are implemented alongside.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import TypedDict

from hessgk.algebra import (
    ZERO,
    Q,
    Partition,
    QPoly,
    is_partition,
    partitions_of,
    qint,
)
from hessgk.hessenberg import (
    HessFunc,
    csf_rho,
    cycle_weight_profile,
    embed,
    enum_inc_trees,
    hess_minus_tau,
    omega_rho_product,
    wt,
)
from hessgk.symring import (
    Basis,
    PositivityReport,
    SFSeries,
    SymFunc,
    from_basis,
    is_positive_in,
    series_inverse,
    sf_basis_element,
)
from hessgk.utils import check_guard, get_logger, warn_once
from hessgk.utils.errors import KOutOfRange

logger = get_logger(__package__)


class SeriesMismatch(TypedDict):
    k: int
    expected: str
    got: str


class GSeriesReport(TypedDict):
    m: str
    order: int
    passed: bool
    mismatch: SeriesMismatch | None


class EPositivityRow(TypedDict):
    k: int
    report: PositivityReport


@dataclass(frozen=True, eq=False)
class GVector:
    m: HessFunc
    entries: tuple[SymFunc, ...]

    def __getitem__(self, k: int) -> SymFunc:
        return self.entries[k]

    def __len__(self) -> int:
        return len(self.entries)


def _h(j: int) -> SymFunc:
    return sf_basis_element("h", (j,) if j > 0 else ())


def _e(j: int) -> SymFunc:
    return sf_basis_element("e", (j,) if j > 0 else ())


def _check_k(m: HessFunc, k: int) -> None:
    if not 0 <= k < m.n:
        raise KOutOfRange(f"k = {k} outside [0, {m.n}) for m = {m}")


@lru_cache(maxsize=None)
def g_def(m: HessFunc, k: int) -> SymFunc:
    """g_k(m) from its defining sum over S_{n,m}, for 0 <= k < n."""
    _check_k(m, k)
    n = m.n
    res = SymFunc.zero()
    for (first, rest), poly in cycle_weight_profile(m).items():
        j = first - n + k
        if j < 0:
            continue
        term = _h(j) * omega_rho_product(rest)
        res = res + term * (poly if j % 2 == 0 else -poly)

    return res


def g_tree(m: HessFunc, k: int) -> SymFunc:
    """g_k(m) as a sum over increasing trees with at least n - k vertices.

    Each tree tau contributes
    (-1)^{|tau| - n + k} q^wt(embed(tau)) h_{|tau| - n + k} csf_q(m minus tau).
    """
    _check_k(m, k)
    n = m.n
    grouped: dict[tuple[int, HessFunc], Counter[int]] = {}
    for d in range(n - k, n + 1):
        for tree in enum_inc_trees(m, d):
            key = (d, hess_minus_tau(m, tree.word))
            grouped.setdefault(key, Counter())[wt(m, embed(tree.word, n))] += 1

    res = SymFunc.zero()
    for (d, rest), weights in grouped.items():
        j = d - n + k
        poly = QPoly(weights[i] for i in range(max(weights) + 1))
        term = _h(j) * csf_rho(rest)
        res = res + term * (poly if j % 2 == 0 else -poly)

    return res


def csf_from_g(m: HessFunc) -> SymFunc:
    """csf_q(m) = sum_{k=0}^{n-1} [n-k]_q e_{n-k} g_k(m)."""
    if m.n == 0:
        return SymFunc.one()

    res = SymFunc.zero()
    for k in range(m.n):
        res = res + _e(m.n - k) * g_def(m, k) * qint(m.n - k)

    return res


def hess_extend(m: HessFunc, extra: int) -> HessFunc:
    """Prepends a path on extra vertices attached to vertex 1 of m."""
    if extra < 0:
        raise ValueError(f"Extension length must be >= 0, got {extra}")
    if extra == 0:
        return m
    if m.n == 0:
        raise ValueError("Cannot extend the empty Hessenberg function")

    return HessFunc(
        tuple(i + 1 for i in range(1, extra + 1))
        + tuple(v + extra for v in m.values)
    )


def g_extended(m: HessFunc, k: int, extra: int | None = None) -> SymFunc:
    """g_k(m) for any k >= 0.

    For k >= n this is g_k of m extended by a path of length extra, which
    defaults to the smallest value with n + extra > k.
    """
    if k < 0:
        raise KOutOfRange(f"k = {k} must be non-negative")
    if extra is None:
        if k < m.n:
            return g_def(m, k)
        extra = k - m.n + 1
    elif m.n + extra <= k:
        raise KOutOfRange(f"n + extra = {m.n + extra} must exceed k = {k}")

    check_guard("max_perm_n", m.n + extra)
    return g_def(hess_extend(m, extra), k)


def g_extension_check(m: HessFunc, k: int, spread: int = 2) -> bool:
    """g_k(m) does not depend on the length of the prepended path.

    Compares the shortest admissible extension against the next spread
    lengths; for k < n the unextended g_k takes part too.
    """
    if spread < 0:
        raise ValueError(f"spread must be >= 0, got {spread}")
    shortest = max(0, k - m.n + 1)
    if m.n == 0:
        return k == 0
    base = g_extended(m, k, extra=shortest)
    return all(
        g_extended(m, k, extra=extra) == base
        for extra in range(shortest + 1, shortest + spread + 1)
    )


def g_vector(m: HessFunc, top: int | None = None) -> GVector:
    """g_0, ..., g_top (default top = n - 1)."""
    top = m.n - 1 if top is None else top
    return GVector(
        m=m, entries=tuple(g_extended(m, k) for k in range(top + 1))
    )


def g_recursion_rhs(m: HessFunc) -> SymFunc:
    """q sum_{i=1}^{n} [i-1]_q e_i g_{n-i}(m)."""
    res = SymFunc.zero()
    for i in range(2, m.n + 1):
        res = res + _e(i) * g_def(m, m.n - i) * (Q * qint(i - 1))

    return res


def g_recursion_check(m: HessFunc) -> bool:
    return g_extended(m, m.n) == g_recursion_rhs(m)


def path_denominator(order: int, basis: Basis = "e") -> SFSeries:
    """1 - q sum_{j >= 2} [j-1]_q b_j z^j, truncated, for b = e or h."""
    if basis not in ("e", "h"):
        raise ValueError(f"Expected basis e or h, got {basis!r}")

    terms = {0: SymFunc.one()}
    for j in range(2, order + 1):
        terms[j] = sf_basis_element(basis, (j,)) * (-(Q * qint(j - 1)))

    return SFSeries.from_terms(order, terms)


@lru_cache(maxsize=16)
def _path_series(order: int) -> SFSeries:
    return series_inverse(path_denominator(order, "e"))


def g_series(m: HessFunc, order: int) -> SFSeries:
    """Closed form of sum_k g_k(m) z^k truncated at z^order.

    sum_{i<n} g_i z^i (1 - q sum_{j=2}^{n-i-1} [j-1]_q e_j z^j) divided by
    1 - q sum_{j>=2} [j-1]_q e_j z^j.
    """
    n = m.n
    if order < n:
        raise ValueError(f"Series order {order} must be at least n = {n}")

    numerator: dict[int, SymFunc] = {}
    for i in range(n):
        g_i = g_def(m, i)
        numerator[i] = numerator.get(i, SymFunc.zero()) + g_i
        for j in range(2, n - i):
            term = _e(j) * g_i * (-(Q * qint(j - 1)))
            numerator[i + j] = numerator.get(i + j, SymFunc.zero()) + term

    return SFSeries.from_terms(order, numerator) * _path_series(order)


def g_series_check(m: HessFunc, order: int) -> GSeriesReport:
    """Compares each z^k coefficient of g_series with g_extended(m, k).

    The first mismatch, if any, is reported rather than raised.
    """
    series = g_series(m, order)
    mismatch: SeriesMismatch | None = None
    for k in range(order + 1):
        expected = g_extended(m, k)
        got = series.coefficient(k)
        if expected != got:
            mismatch = {"k": k, "expected": str(expected), "got": str(got)}
            warn_once(
                __name__,
                f"Generating function disagrees with g_{k} for m = {m}",
            )
            break

    return {
        "m": str(m),
        "order": order,
        "passed": mismatch is None,
        "mismatch": mismatch,
    }


@lru_cache(maxsize=None)
def g_path(k: int) -> SymFunc:
    """Coefficient of z^k in 1 / (1 - q sum_{j>=2} [j-1]_q e_j z^j)."""
    if k < 0:
        raise KOutOfRange(f"k = {k} must be non-negative")
    return _path_series(k).coefficient(k)


@lru_cache(maxsize=None)
def derangement_poly(la: Partition) -> QPoly:
    """Excedance polynomial over derangements of the word 1^la_1 2^la_2 ...

    A derangement w' of w has w'_j != w_j everywhere; each position with
    w'_j > w_j counts one excedance.
    """
    la = tuple(la)
    if not is_partition(la):
        raise ValueError(f"Invalid partition {la}")
    check_guard("max_perm_n", sum(la))

    word = [i for i, part in enumerate(la, start=1) for _ in range(part)]
    remaining = [0] + list(la)
    counts: Counter[int] = Counter()

    def _fill(pos: int, exc: int) -> None:
        if pos == len(word):
            counts[exc] += 1
            return
        for letter in range(1, len(la) + 1):
            if letter == word[pos] or remaining[letter] == 0:
                continue
            remaining[letter] -= 1
            _fill(pos + 1, exc + (letter > word[pos]))
            remaining[letter] += 1

    _fill(0, 0)
    if not counts:
        return ZERO
    return QPoly(counts[i] for i in range(max(counts) + 1))


def g_path_monomial_check(k: int) -> bool:
    """g_path(k) == sum over la of k of c_la(q) m_la."""
    expansion = {la: derangement_poly(la) for la in partitions_of(k)}
    return g_path(k) == from_basis(expansion, "m")


def stratum_character(m: HessFunc, j: int) -> SymFunc:
    """Sum over trees tau on n - j vertices of q^wt csf_q(m minus tau)."""
    if not 0 <= j < m.n:
        raise KOutOfRange(f"j = {j} outside [0, {m.n}) for m = {m}")

    grouped: dict[HessFunc, Counter[int]] = {}
    for tree in enum_inc_trees(m, m.n - j):
        rest = hess_minus_tau(m, tree.word)
        grouped.setdefault(rest, Counter())[wt(m, embed(tree.word, m.n))] += 1

    res = SymFunc.zero()
    for rest, weights in grouped.items():
        poly = QPoly(weights[i] for i in range(max(weights) + 1))
        res = res + csf_rho(rest) * poly

    return res


def stratum_check(m: HessFunc, j: int) -> bool:
    """stratum_character(m, j) == sum_{i <= j} e_{j-i} g_i(m)."""
    rhs = SymFunc.zero()
    for i in range(j + 1):
        rhs = rhs + _e(j - i) * g_def(m, i)

    return stratum_character(m, j) == rhs


def e_positivity_report(
    m: HessFunc, top: int | None = None
) -> list[EPositivityRow]:
    """e-positivity of g_0, ..., g_top; data only, nothing is asserted."""
    rows: list[EPositivityRow] = []
    for k, g in enumerate(g_vector(m, top).entries):
        report = is_positive_in(g, "e")
        if not report["positive"]:
            logger.info(f"g_{k}({m}) is not e-positive: {report['offenders']}")
        rows.append({"k": k, "report": report})

    return rows
