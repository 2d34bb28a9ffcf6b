"""SymFunc: graded symmetric functions with q-polynomial coefficients.

Values are stored in the power-sum basis, where products concatenate index
partitions and omega is a sign. Power-sum coefficients may be rational;
every public basis view is checked for integrality.
"""

from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import (
    Callable,
    Final,
    Iterable,
    Literal,
    Mapping,
    TypeAlias,
    TypedDict,
    Union,
    cast,
    get_args,
)

from hessgk.algebra import (
    ONE,
    ZERO,
    Coeff,
    Partition,
    QPoly,
    conjugate,
    is_partition,
    partitions_of,
    z_lambda,
)
from hessgk.symring.transitions import get_transitions
from hessgk.utils import check_guard, get_logger
from hessgk.utils.errors import IntegralityError

logger = get_logger(__package__)

Basis: TypeAlias = Literal["m", "e", "h", "p", "s"]
TextFormat: TypeAlias = Literal["text", "latex"]
BASES: Final[tuple[Basis, ...]] = get_args(Basis)

Scalar: TypeAlias = Union[QPoly, Coeff]


class SymTerm(TypedDict):
    partition: list[int]
    coeff: list[int]


class SymFuncJson(TypedDict):
    basis: str
    terms: list[SymTerm]


class Offender(TypedDict):
    partition: list[int]
    power: int
    coeff: int


class PositivityReport(TypedDict):
    basis: str
    positive: bool
    offenders: list[Offender]


def _check_basis(basis: str) -> Basis:
    if basis not in BASES:
        raise ValueError(f"Unknown basis {basis!r}, expected one of {BASES}")
    return cast(Basis, basis)


class SymFunc:
    """Finite sum of power sums p_la with QPoly coefficients."""

    __slots__ = ("_terms",)

    _terms: dict[Partition, QPoly]

    def __init__(self, terms: Mapping[Partition, Scalar] | None = None):
        clean: dict[Partition, QPoly] = {}
        for la, c in (terms or {}).items():
            la = tuple(la)
            if not is_partition(la):
                raise ValueError(f"Invalid partition index {la}")
            c = QPoly.coerce(c)
            if c:
                clean[la] = c
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("SymFunc is immutable")

    @classmethod
    def zero(cls) -> "SymFunc":
        return cls()

    @classmethod
    def one(cls) -> "SymFunc":
        return cls({(): ONE})

    @classmethod
    def scalar(cls, c: Scalar) -> "SymFunc":
        return cls({(): c})

    @property
    def terms(self) -> Mapping[Partition, QPoly]:
        return MappingProxyType(self._terms)

    def degrees(self) -> set[int]:
        return {sum(la) for la in self._terms}

    @property
    def max_degree(self) -> int:
        """Largest degree present; -1 for zero."""
        return max(self.degrees(), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous_of(self, degree: int) -> bool:
        return all(sum(la) == degree for la in self._terms)

    def map_coefficients(self, fn: Callable[[QPoly], QPoly]) -> "SymFunc":
        """Applies a q-linear substitution to every coefficient."""
        return SymFunc({la: fn(c) for la, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SymFunc):
            return self._terms == other._terms
        elif isinstance(other, (QPoly, int, Fraction)):
            return self._terms == SymFunc.scalar(other)._terms
        return NotImplemented

    def __add__(self, other: Union["SymFunc", Scalar]) -> "SymFunc":
        if not isinstance(other, SymFunc):
            other = SymFunc.scalar(other)
        res = dict(self._terms)
        for la, c in other._terms.items():
            res[la] = res.get(la, ZERO) + c

        return SymFunc(res)

    __radd__ = __add__

    def __neg__(self) -> "SymFunc":
        return SymFunc({la: -c for la, c in self._terms.items()})

    def __sub__(self, other: Union["SymFunc", Scalar]) -> "SymFunc":
        if not isinstance(other, SymFunc):
            other = SymFunc.scalar(other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "SymFunc":
        return SymFunc.scalar(other) - self

    def __mul__(self, other: Union["SymFunc", Scalar]) -> "SymFunc":
        if not isinstance(other, SymFunc):
            return SymFunc({la: c * other for la, c in self._terms.items()})
        if self.is_zero() or other.is_zero():
            return SymFunc()

        check_guard("max_degree", self.max_degree + other.max_degree)
        res: dict[Partition, QPoly] = {}
        for la, a in self._terms.items():
            for mu, b in other._terms.items():
                key = tuple(sorted(la + mu, reverse=True))
                res[key] = res.get(key, ZERO) + a * b

        return SymFunc(res)

    __rmul__ = __mul__

    def omega(self) -> "SymFunc":
        return SymFunc(
            {
                la: c if (sum(la) - len(la)) % 2 == 0 else -c
                for la, c in self._terms.items()
            }
        )

    def evaluate_q(self, value: Coeff) -> "SymFunc":
        return self.map_coefficients(lambda c: QPoly([c(value)]))

    def __repr__(self) -> str:
        body = ", ".join(
            f"{list(la)}: {c!r}" for la, c in sorted(self._terms.items())
        )
        return f"SymFunc(p={{{body}}})"

    def __str__(self) -> str:
        try:
            return render_expansion(self, "e")
        except IntegralityError:
            return render_expansion(self, "p")


@lru_cache(maxsize=None)
def _h_single(n: int) -> SymFunc:
    """h_n = sum over la of p_la / z_la."""
    return SymFunc({la: Fraction(1, z_lambda(la)) for la in partitions_of(n)})


@lru_cache(maxsize=None)
def _e_single(n: int) -> SymFunc:
    """e_n = sum over la of sign(la) p_la / z_la."""
    return SymFunc(
        {
            la: Fraction((-1) ** (n - len(la)), z_lambda(la))
            for la in partitions_of(n)
        }
    )


def _from_m_vector(n: int, coeffs: Iterable[Scalar]) -> SymFunc:
    """Builds sum c_mu m_mu over partitions_of(n) in the p basis."""
    t = get_transitions(n)
    inv = t.from_m["p"]
    res: dict[Partition, QPoly] = {}
    for mu_idx, c in enumerate(coeffs):
        c = QPoly.coerce(c)
        if not c:
            continue
        for nu_idx, x in enumerate(inv[mu_idx]):
            if x:
                nu = t.partitions[nu_idx]
                res[nu] = res.get(nu, ZERO) + c * x

    return SymFunc(res)


@lru_cache(maxsize=None)
def sf_basis_element(basis: Basis, la: Partition) -> SymFunc:
    """Returns the basis element basis_la, e.g. ("e", (2, 1)) -> e_{2,1}.

    The empty partition gives 1 in every basis.
    """
    basis = _check_basis(basis)
    la = tuple(la)
    if not is_partition(la):
        raise ValueError(f"Invalid partition {la}")

    if not la:
        return SymFunc.one()
    elif basis == "p":
        return SymFunc({la: ONE})
    elif basis in ("e", "h"):
        single = _e_single if basis == "e" else _h_single
        res = SymFunc.one()
        for part in la:
            res = res * single(part)
        return res
    else:
        n = sum(la)
        t = get_transitions(n)
        if basis == "m":
            row = [1 if mu == la else 0 for mu in t.partitions]
        else:
            row = list(t.to_m["s"][t.index[la]])
        return _from_m_vector(n, row)


def sf_add(f: SymFunc, g: SymFunc) -> SymFunc:
    return f + g


def sf_mul(f: SymFunc, g: SymFunc) -> SymFunc:
    return f * g


def omega(f: SymFunc) -> SymFunc:
    return f.omega()


def omega_schur_check(n: int) -> bool:
    """omega(s_la) = s_la' for every partition la of n."""
    return all(
        sf_basis_element("s", la).omega()
        == sf_basis_element("s", conjugate(la))
        for la in partitions_of(n)
    )


def _m_vector(f: SymFunc, n: int) -> list[QPoly]:
    t = get_transitions(n)
    res = [ZERO] * len(t.partitions)
    for la, c in f.terms.items():
        if sum(la) != n:
            continue
        for mu_idx, x in enumerate(t.to_m["p"][t.index[la]]):
            if x:
                res[mu_idx] = res[mu_idx] + c * x

    return res


def to_basis(f: SymFunc, basis: Basis) -> dict[Partition, QPoly]:
    """Expands f in the requested basis.

    Args:
        f (SymFunc): Symmetric function to expand.
        basis (Basis): One of "m", "e", "h", "p", "s".

    Returns:
        dict[Partition, QPoly]: Non-zero integer coefficients, ordered by
            degree and then by partitions_of order.

    Raises:
        IntegralityError: If some coefficient is not an integer polynomial.
    """
    basis = _check_basis(basis)
    res: dict[Partition, QPoly] = {}
    for n in sorted(f.degrees()):
        t = get_transitions(n)
        if basis == "p":
            expansion = {
                la: f.terms[la] for la in t.partitions if la in f.terms
            }
        else:
            m_coeffs = _m_vector(f, n)
            if basis == "m":
                expansion = dict(zip(t.partitions, m_coeffs))
            else:
                inv = t.from_m[basis]
                expansion = {}
                for la_idx, la in enumerate(t.partitions):
                    c = ZERO
                    for mu_idx, m_c in enumerate(m_coeffs):
                        x = inv[mu_idx][la_idx]
                        if x and m_c:
                            c = c + m_c * x
                    expansion[la] = c

        for la, c in expansion.items():
            if not c:
                continue
            if not c.is_integral():
                raise IntegralityError(
                    f"Coefficient {c} of {basis}_{list(la)} is not integral"
                )
            res[la] = c

    return res


def from_basis(terms: Mapping[Partition, Scalar], basis: Basis) -> SymFunc:
    """Inverse of to_basis: sums c * basis_la."""
    res = SymFunc()
    for la, c in terms.items():
        res = res + sf_basis_element(basis, tuple(la)) * c

    return res


def is_positive_in(f: SymFunc, basis: Basis) -> PositivityReport:
    """Checks every q-coefficient of every basis coefficient is >= 0."""
    offenders: list[Offender] = []
    for la, c in to_basis(f, basis).items():
        for power, x in enumerate(c.int_coeffs()):
            if x < 0:
                offenders.append(
                    {"partition": list(la), "power": power, "coeff": x}
                )

    return {"basis": basis, "positive": not offenders, "offenders": offenders}


def poincare_polynomial(f: SymFunc) -> QPoly:
    """Coefficient of m_{1^d} in a homogeneous f of degree d."""
    degrees = f.degrees()
    if not degrees:
        return ZERO
    if len(degrees) > 1:
        raise ValueError(f"Expected a homogeneous function, got {degrees}")

    (d,) = degrees
    return to_basis(f, "m").get((1,) * d, ZERO)


def evaluate_q(f: SymFunc, value: Coeff) -> SymFunc:
    return f.evaluate_q(value)


def to_json(f: SymFunc, basis: Basis) -> SymFuncJson:
    return {
        "basis": basis,
        "terms": [
            {"partition": list(la), "coeff": c.int_coeffs()}
            for la, c in to_basis(f, basis).items()
        ],
    }


def from_json(data: SymFuncJson | Mapping[str, object]) -> SymFunc:
    basis = _check_basis(str(data["basis"]))
    terms = cast(list[SymTerm], data["terms"])
    return from_basis(
        {tuple(t["partition"]): QPoly(t["coeff"]) for t in terms}, basis
    )


def _render_index(basis: str, la: Partition) -> str:
    if len(la) == 1:
        return f"{basis}_{la[0]}"
    return f"{basis}_{{{','.join(str(p) for p in la)}}}"


def render_expansion(
    f: SymFunc, basis: Basis, fmt: TextFormat = "text"
) -> str:
    """Renders f in a basis, e.g. "(q^2+q)e_2 + qe_{2,1}"."""
    expansion = to_basis(f, basis)
    if not expansion:
        return "0"

    latex = fmt == "latex"
    chunks: list[str] = []
    for la, c in expansion.items():
        coeff = c.render(latex=latex)
        if not la:
            chunks.append(coeff)
            continue
        index = _render_index(basis, la)
        if c == 1:
            chunks.append(index)
        elif c == -1:
            chunks.append("-" + index)
        elif c.is_monomial() and c.coeffs[-1] > 0:
            chunks.append(coeff + index)
        else:
            chunks.append(f"({coeff}){index}")

    res = chunks[0]
    for chunk in chunks[1:]:
        if chunk.startswith("-"):
            res += " - " + chunk[1:]
        else:
            res += " + " + chunk

    return res
