"""Exact q-polynomials, q-integers, partitions and compositions."""

import math

from fractions import Fraction
from functools import lru_cache
from collections import Counter
from typing import Iterable, Iterator, Literal, TypeAlias, Union

from hessgk.utils import check_guard
from hessgk.utils.errors import IntegralityError

Coeff: TypeAlias = int | Fraction
Partition: TypeAlias = tuple[int, ...]
Composition: TypeAlias = tuple[int, ...]
ShiftDirection: TypeAlias = Literal["q-1", "q+1"]


def _normalize(c: Coeff) -> Coeff:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    elif isinstance(c, int):
        return c
    else:
        raise TypeError(f"Unsupported coefficient type: {type(c).__name__}")


class QPoly:
    """Polynomial in q with exact coefficients.

    coeffs[i] is the coefficient of q^i. Trailing zeros are stripped, so
    the zero polynomial has coeffs == (). Integer-valued Fractions are
    stored as int.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[Coeff, ...]

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        normalized = [_normalize(c) for c in coeffs]
        while normalized and normalized[-1] == 0:
            normalized.pop()
        object.__setattr__(self, "coeffs", tuple(normalized))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QPoly is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: Coeff = 1) -> "QPoly":
        return cls([0] * degree + [coeff])

    @classmethod
    def coerce(cls, value: Union["QPoly", Coeff]) -> "QPoly":
        if isinstance(value, QPoly):
            return value
        return cls([value])

    @property
    def degree(self) -> int:
        """Degree in q; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        """Returns the coefficients as ints, raising if any is fractional."""
        if not self.is_integral():
            raise IntegralityError(f"Non-integer coefficients in {self}")
        return [int(c) for c in self.coeffs]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        elif isinstance(other, (int, Fraction)):
            return self.coeffs == QPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Union["QPoly", Coeff]) -> "QPoly":
        other = QPoly.coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return QPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other: Union["QPoly", Coeff]) -> "QPoly":
        return self + (-QPoly.coerce(other))

    def __rsub__(self, other: Union["QPoly", Coeff]) -> "QPoly":
        return QPoly.coerce(other) - self

    def __mul__(self, other: Union["QPoly", Coeff]) -> "QPoly":
        if not isinstance(other, QPoly):
            return QPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return QPoly()

        res: list[Coeff] = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                res[i + j] += a * b

        return QPoly(res)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QPoly":
        if exponent < 0:
            raise ValueError("QPoly powers must be non-negative")
        res = QPoly([1])
        base = self
        while exponent:
            if exponent & 1:
                res = res * base
            base = base * base
            exponent >>= 1

        return res

    def __call__(self, value: Coeff) -> Coeff:
        """Evaluates at q = value by Horner's rule."""
        res: Coeff = 0
        for c in reversed(self.coeffs):
            res = res * value + c

        return _normalize(res)

    def shift(self, delta: int) -> "QPoly":
        """Substitutes q -> q + delta."""
        linear = QPoly([delta, 1])
        res = QPoly()
        for c in reversed(self.coeffs):
            res = res * linear + c

        return res

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.render()

    def render(self, latex: bool = False) -> str:
        """Renders with descending powers, e.g. "q^2+2q+1"."""
        if not self.coeffs:
            return "0"

        chunks: list[str] = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            mag = abs(c)
            if isinstance(mag, Fraction) and latex:
                scalar = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            else:
                scalar = str(mag)
            if power == 0:
                body = scalar
            else:
                var = "q" if power == 1 else f"q^{power}"
                if latex and power >= 10:
                    var = f"q^{{{power}}}"
                body = var if mag == 1 else scalar + var
            chunks.append(("-" if c < 0 else "+") + body)

        res = "".join(chunks)
        return res[1:] if res.startswith("+") else res

    def is_monomial(self) -> bool:
        return sum(1 for c in self.coeffs if c != 0) == 1


ZERO: QPoly = QPoly()
ONE: QPoly = QPoly([1])
Q: QPoly = QPoly([0, 1])


@lru_cache(maxsize=128)
def qint(n: int) -> QPoly:
    """Returns [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0."""
    if n < 0:
        raise ValueError(f"qint expects n >= 0, got {n}")
    return QPoly([1] * n)


@lru_cache(maxsize=64)
def qfact(n: int) -> QPoly:
    """Returns [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1."""
    if n < 0:
        raise ValueError(f"qfact expects n >= 0, got {n}")
    res = ONE
    for i in range(1, n + 1):
        res = res * qint(i)

    return res


def qpoly_shift(p: QPoly, direction: ShiftDirection) -> QPoly:
    if direction == "q-1":
        return p.shift(-1)
    elif direction == "q+1":
        return p.shift(1)
    else:
        raise ValueError(f"Unknown shift direction: {direction}")


def _partitions(n: int, max_part: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _compositions(n: int) -> Iterator[Composition]:
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in _compositions(n - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_of(n: int) -> tuple[Partition, ...]:
    return tuple(_partitions(n, n))


@lru_cache(maxsize=None)
def _compositions_of(n: int) -> tuple[Composition, ...]:
    return tuple(_compositions(n))


def partitions_of(n: int) -> list[Partition]:
    """Returns the partitions of n in lexicographically descending order.

    Args:
        n (int): Non-negative size.

    Returns:
        list[Partition]: e.g. [(3,), (2, 1), (1, 1, 1)] for n = 3.
    """
    if n < 0:
        raise ValueError(f"partitions_of expects n >= 0, got {n}")
    check_guard("max_degree", n)
    return list(_partitions_of(n))


def compositions_of(n: int) -> list[Composition]:
    """Returns the compositions of n in lexicographically descending order."""
    if n < 0:
        raise ValueError(f"compositions_of expects n >= 0, got {n}")
    check_guard("max_degree", n)
    return list(_compositions_of(n))


def is_partition(parts: Iterable[int]) -> bool:
    parts = tuple(parts)
    return all(p > 0 for p in parts) and all(
        a >= b for a, b in zip(parts, parts[1:])
    )


def as_partition(parts: Iterable[int]) -> Partition:
    """Sorts positive parts into a partition; zeros are dropped."""
    parts = tuple(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"Negative part in {parts}")
    return tuple(sorted((p for p in parts if p > 0), reverse=True))


def conjugate(la: Partition) -> Partition:
    if not la:
        return ()
    return tuple(sum(1 for p in la if p > i) for i in range(la[0]))


def z_lambda(la: Partition) -> int:
    """Size of the centralizer of a permutation of cycle type la."""
    res = 1
    for part, mult in Counter(la).items():
        res *= part**mult * math.factorial(mult)

    return res


def multinomial(parts: Iterable[int]) -> int:
    parts = tuple(parts)
    res = math.factorial(sum(parts))
    for p in parts:
        res //= math.factorial(p)

    return res
