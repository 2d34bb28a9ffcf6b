"""Truncated power series in z over the symmetric-function ring."""

from dataclasses import dataclass
from typing import Callable, Mapping

from hessgk.symring._base import SymFunc
from hessgk.utils.errors import InvertibilityError


@dataclass(frozen=True, eq=False)
class SFSeries:
    """Power series sum c_k z^k with c_k homogeneous of degree k."""

    order: int
    coeffs: tuple[SymFunc, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"Series order must be >= 0, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"Expected {self.order + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )
        for k, c in enumerate(self.coeffs):
            if not c.is_homogeneous_of(k):
                raise ValueError(
                    f"Coefficient of z^{k} is not homogeneous of degree {k}"
                )

    @classmethod
    def from_terms(
        cls, order: int, terms: Mapping[int, SymFunc]
    ) -> "SFSeries":
        return cls(
            order=order,
            coeffs=tuple(
                terms.get(k, SymFunc.zero()) for k in range(order + 1)
            ),
        )

    @classmethod
    def from_fn(
        cls, order: int, fn: Callable[[int], SymFunc]
    ) -> "SFSeries":
        return cls(order=order, coeffs=tuple(fn(k) for k in range(order + 1)))

    @classmethod
    def one(cls, order: int) -> "SFSeries":
        return cls.from_terms(order, {0: SymFunc.one()})

    def coefficient(self, k: int) -> SymFunc:
        if not 0 <= k <= self.order:
            raise ValueError(f"z^{k} is outside order {self.order}")
        return self.coeffs[k]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SFSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __add__(self, other: "SFSeries") -> "SFSeries":
        order = min(self.order, other.order)
        return SFSeries.from_fn(
            order, lambda k: self.coeffs[k] + other.coeffs[k]
        )

    def __sub__(self, other: "SFSeries") -> "SFSeries":
        order = min(self.order, other.order)
        return SFSeries.from_fn(
            order, lambda k: self.coeffs[k] - other.coeffs[k]
        )

    def __mul__(self, other: "SFSeries") -> "SFSeries":
        return series_mul(self, other)

    def omega(self) -> "SFSeries":
        return SFSeries.from_fn(self.order, lambda k: self.coeffs[k].omega())


def series_mul(a: SFSeries, b: SFSeries) -> SFSeries:
    """Truncated convolution; the result has the smaller of the two orders."""
    order = min(a.order, b.order)

    def _coeff(k: int) -> SymFunc:
        res = SymFunc.zero()
        for i in range(k + 1):
            if a.coeffs[i].is_zero() or b.coeffs[k - i].is_zero():
                continue
            res = res + a.coeffs[i] * b.coeffs[k - i]
        return res

    return SFSeries.from_fn(order, _coeff)


def series_inverse(a: SFSeries) -> SFSeries:
    """Multiplicative inverse of a series whose constant term is exactly 1."""
    if a.coeffs[0] != SymFunc.one():
        raise InvertibilityError(
            "Series inverse requires constant term 1, "
            f"got {a.coeffs[0]!r}"
        )

    inv: list[SymFunc] = [SymFunc.one()]
    for k in range(1, a.order + 1):
        acc = SymFunc.zero()
        for i in range(1, k + 1):
            if a.coeffs[i].is_zero() or inv[k - i].is_zero():
                continue
            acc = acc + a.coeffs[i] * inv[k - i]
        inv.append(-acc)

    return SFSeries(order=a.order, coeffs=tuple(inv))
