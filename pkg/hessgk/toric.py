"""Fan combinatorics: f- and h-vectors, the barycentric fan and its
Frobenius character, the path LLT identity and the F_1 / F_2 series.

Cones of the barycentric fan are chains S_1 < ... < S_d of nonempty proper
subsets of [n]; no geometry is involved.
"""

from dataclasses import dataclass
from functools import lru_cache

from hessgk.algebra import (
    ZERO,
    QPoly,
    as_partition,
    compositions_of,
    multinomial,
    qpoly_shift,
)
from hessgk.gfuncs import path_denominator
from hessgk.symring import (
    SFSeries,
    SymFunc,
    poincare_polynomial,
    series_inverse,
    sf_basis_element,
)
from hessgk.utils import check_guard, get_logger

logger = get_logger(__package__)


@dataclass(frozen=True)
class FVector:
    """counts[i] is the number of cones of dimension i."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.counts:
            raise ValueError("An f-vector needs at least f_0")
        if any(c < 0 for c in self.counts):
            raise ValueError(f"Negative cone count in {self.counts}")
        if self.counts[0] != 1:
            raise ValueError(f"f_0 must be 1, got {self.counts[0]}")

    @property
    def dim(self) -> int:
        return len(self.counts) - 1


def h_vector(f: FVector) -> tuple[int, ...]:
    """h_0, ..., h_n from sum_i f_i (q-1)^{n-i} = sum_i h_i q^{n-i}."""
    n = f.dim
    total = ZERO
    q_minus_one = QPoly([-1, 1])
    for i, count in enumerate(f.counts):
        total = total + q_minus_one ** (n - i) * count

    coeffs = total.int_coeffs() + [0] * (n + 1)
    return tuple(coeffs[n - i] for i in range(n + 1))


@lru_cache(maxsize=None)
def barycentric_f_vector(n: int) -> FVector:
    """Counts chains of nonempty proper subsets of [n] by length.

    chains[S] holds, for each length d, the chains ending at the bitmask S.
    """
    if n < 1:
        raise ValueError(f"barycentric_f_vector expects n >= 1, got {n}")
    check_guard("max_toric_n", n)

    full = (1 << n) - 1
    chains: dict[int, list[int]] = {}
    counts = [1] + [0] * (n - 1)
    for mask in range(1, full):
        by_length = [0] * n
        by_length[1] = 1
        sub = (mask - 1) & mask
        while sub:
            for d, c in enumerate(chains[sub][:-1]):
                by_length[d + 1] += c
            sub = (sub - 1) & mask
        chains[mask] = by_length
        for d in range(1, n):
            counts[d] += by_length[d]

    logger.debug(f"Barycentric fan of rank {n}: {counts}")
    return FVector(tuple(counts))


def frob_C_sigma1(n: int) -> SymFunc:
    """sum over compositions mu of n of q^{n - len(mu)} h_mu."""
    if n < 1:
        raise ValueError(f"frob_C_sigma1 expects n >= 1, got {n}")
    check_guard("max_toric_n", n)

    res = SymFunc.zero()
    for mu in compositions_of(n):
        h_mu = sf_basis_element("h", as_partition(mu))
        res = res + h_mu * QPoly.monomial(n - len(mu))

    return res


def llt_path(n: int, shifted: bool) -> SymFunc:
    """The unicellular LLT function of the path P_n.

    With shifted=True this is LLT(P_n; x, q+1) = sum_mu q^{n - len(mu)} e_mu
    over compositions mu of n; otherwise q is shifted back to q - 1.
    """
    if n < 1:
        raise ValueError(f"llt_path expects n >= 1, got {n}")
    check_guard("max_toric_n", n)

    res = SymFunc.zero()
    for mu in compositions_of(n):
        e_mu = sf_basis_element("e", as_partition(mu))
        res = res + e_mu * QPoly.monomial(n - len(mu))

    if shifted:
        return res
    return res.map_coefficients(lambda c: qpoly_shift(c, "q-1"))


def toric_identity_check(n: int) -> bool:
    """frob_C_sigma1(n) == omega(llt_path(n, shifted=True))."""
    return frob_C_sigma1(n) == llt_path(n, shifted=True).omega()


def _h_series(order: int) -> SFSeries:
    return SFSeries.from_fn(
        order, lambda k: sf_basis_element("h", (k,) if k else ())
    )


@lru_cache(maxsize=16)
def F2_series(order: int) -> SFSeries:
    """1 / (1 - q sum_{n>=2} [n-1]_q h_n z^n), truncated at z^order."""
    return series_inverse(path_denominator(order, "h"))


@lru_cache(maxsize=16)
def F1_series(order: int) -> SFSeries:
    """(sum_n h_n z^n) / (1 - q sum_{n>=2} [n-1]_q h_n z^n)."""
    return _h_series(order) * F2_series(order)


def h_polynomial_check(n: int) -> bool:
    """Poincare polynomial of F_1[z^n] against the barycentric h-vector."""
    expected = QPoly(h_vector(barycentric_f_vector(n)))
    got = poincare_polynomial(F1_series(n).coefficient(n))
    if got != expected:
        logger.warning(f"h-polynomial mismatch at n={n}: {got} vs {expected}")
    return got == expected


def local_h_polynomial(d: int) -> QPoly:
    """Poincare polynomial of F_2[z^d]."""
    if d < 0:
        raise ValueError(f"local_h_polynomial expects d >= 0, got {d}")
    return poincare_polynomial(F2_series(d).coefficient(d))


def cone_count_check(n: int) -> bool:
    """The q^{n-1-d} coefficient of the graded dimension of frob_C_sigma1(n)
    counts the d-dimensional cones of the barycentric fan.

    Both are also matched against ordered set partitions of [n] into d + 1
    blocks, counted by multinomials over compositions.
    """
    dims = poincare_polynomial(frob_C_sigma1(n)).int_coeffs()
    dims = dims + [0] * (n - len(dims))
    ordered = [0] * n
    for mu in compositions_of(n):
        ordered[len(mu) - 1] += multinomial(mu)
    f = barycentric_f_vector(n).counts
    return all(dims[n - 1 - d] == f[d] == ordered[d] for d in range(n))
