"""The e_k-coefficient c_k(m; q) of g_k(m) and the injection Delta.

S_1 holds the words of the n-cycles of S_{n,m} (w_1 = 1, w_{j+1} <= m(w_j)).
S_2 holds pairs (w, z) of cyclic words of lengths n - k and k, with w
starting at 1, that together use every letter of [n]. Delta maps S_1
injectively into S_2, so c_k(m; 1) = |S_2| - |S_1| >= 0.
"""

import json

from dataclasses import dataclass
from typing import Any, Iterator, Sequence, TypedDict, cast

from hessgk.algebra import ZERO, QPoly, qint
from hessgk.hessenberg import HessFunc, csf_rho, cycle_weight_profile
from hessgk.symring import to_basis
from hessgk.utils import check_guard, get_logger, load_reference_json
from hessgk.utils.errors import DeltaNotWellDefined, KOutOfRange

logger = get_logger(__package__)


@dataclass(frozen=True)
class CycWordPair:
    w: tuple[int, ...]
    z: tuple[int, ...]

    def as_lists(self) -> list[list[int]]:
        return [list(self.w), list(self.z)]


class DeltaRow(TypedDict):
    w: list[int]
    image: list[list[int]]
    j: int
    note: str


class DeltaReport(TypedDict):
    m: list[int]
    k: int
    injective: bool
    s1_count: int
    s2_count: int
    ck_at_one: int
    counts_match: bool
    rows: list[DeltaRow]


class EabReport(TypedDict):
    a: int
    b: int
    coefficient: str
    expected: str
    matches: bool
    value_at_one: int


def _check_k(m: HessFunc, k: int) -> None:
    if not 1 <= k < m.n:
        raise KOutOfRange(f"k = {k} outside [1, {m.n}) for m = {m}")


def ck_poly(m: HessFunc, k: int) -> QPoly:
    """c_k(m; q) = [k]_q A - B over S_{n,m}.

    A sums q^wt over permutations with two cycles, the second of length k,
    and B sums q^wt over the n-cycles.

    Equals the coefficient of e_k in g_k(m).
    """
    _check_k(m, k)
    profile = cycle_weight_profile(m)
    two_cycles = profile.get((m.n - k, (k,)), ZERO)
    n_cycles = profile.get((m.n, ()), ZERO)
    return qint(k) * two_cycles - n_cycles


def _iter_paths(
    m: HessFunc, start: int, length: int, used: list[bool]
) -> Iterator[list[int]]:
    """Injective words from start with w_{j+1} <= m(w_j), avoiding used.

    Letters of the current word stay marked in used while it is yielded.
    """
    word = [start]
    used[start] = True

    def _extend() -> Iterator[list[int]]:
        if len(word) == length:
            yield word
            return
        for v in range(1, m(word[-1]) + 1):
            if used[v]:
                continue
            used[v] = True
            word.append(v)
            yield from _extend()
            word.pop()
            used[v] = False

    yield from _extend()
    used[start] = False


def enum_S1(m: HessFunc) -> list[tuple[int, ...]]:
    """Words of the n-cycles of S_{n,m}, lexicographically."""
    check_guard("max_perm_n", m.n)
    if m.n == 0:
        return []
    used = [False] * (m.n + 1)
    return [tuple(w) for w in _iter_paths(m, 1, m.n, used)]


def enum_S2(m: HessFunc, k: int) -> list[CycWordPair]:
    """Pairs (w, z) with |w| = n - k, w_1 = 1 and z_1 <= m(z_k).

    Ordered lexicographically on the concatenation wz.
    """
    _check_k(m, k)
    check_guard("max_perm_n", m.n)
    n = m.n
    used = [False] * (n + 1)
    res: list[CycWordPair] = []
    for w in _iter_paths(m, 1, n - k, used):
        w_t = tuple(w)
        for z_start in range(1, n + 1):
            if used[z_start]:
                continue
            for z in _iter_paths(m, z_start, k, used):
                if z[0] <= m(z[-1]):
                    res.append(CycWordPair(w=w_t, z=tuple(z)))

    return res


def _in_S2(m: HessFunc, pair: CycWordPair, n: int, k: int) -> str | None:
    """Returns the first violated S_2 condition, or None."""
    w, z = pair.w, pair.z
    if len(w) != n - k or len(z) != k:
        return f"lengths ({len(w)}, {len(z)}) != ({n - k}, {k})"
    if sorted(w + z) != list(range(1, n + 1)):
        return "letters do not form a permutation of [n]"
    if w[0] != 1:
        return f"first word starts with {w[0]}"
    for a, b in zip(w, w[1:]):
        if b > m(a):
            return f"{b} > m({a}) in the first word"
    for a, b in zip(z, z[1:]):
        if b > m(a):
            return f"{b} > m({a}) in the second word"
    if z[0] > m(z[-1]):
        return f"{z[0]} > m({z[-1]}) closing the second word"
    return None


def _delta_search(
    m: HessFunc, k: int, w: Sequence[int]
) -> tuple[CycWordPair, int, list[str]]:
    n = len(w)
    failures: list[str] = []
    for j in range(n - k):
        # 1-based: w_{n-j-k+1} <= m(w_{n-j})
        head, tail = w[n - j - k], w[n - j - 1]
        if head <= m(tail):
            first = tuple(w[: n - j - k]) + tuple(w[n - j :])
            block = tuple(w[n - j - k : n - j])
            shift = j % k
            return (
                CycWordPair(w=first, z=block[shift:] + block[:shift]),
                j,
                failures,
            )
        failures.append(f"{head} > m({tail})")

    raise DeltaNotWellDefined(
        tuple(w), None, "no admissible shift j was found"
    )


def delta_map(m: HessFunc, k: int, w: Sequence[int]) -> CycWordPair:
    """Delta(w) for w in S_1.

    Takes the smallest j >= 0 with w_{n-j-k+1} <= m(w_{n-j}), cuts the block
    w_{n-j-k+1} ... w_{n-j} out of w and rotates it left j times.
    """
    _check_k(m, k)
    pair, _, _ = _delta_search(m, k, w)
    reason = _in_S2(m, pair, m.n, k)
    if reason is not None:
        raise DeltaNotWellDefined(tuple(w), pair.as_lists(), reason)
    return pair


def delta_row(m: HessFunc, k: int, w: Sequence[int]) -> DeltaRow:
    """One table row: w, Delta(w), j and the failed tests for smaller j."""
    _check_k(m, k)
    pair, j, failures = _delta_search(m, k, w)
    reason = _in_S2(m, pair, m.n, k)
    if reason is not None:
        raise DeltaNotWellDefined(tuple(w), pair.as_lists(), reason)
    return {
        "w": list(w),
        "image": pair.as_lists(),
        "j": j,
        "note": ", ".join(failures),
    }


def check_delta_injective(m: HessFunc, k: int) -> DeltaReport:
    """Applies Delta to all of S_1 and compares |S_2| - |S_1| with c_k(m; 1)."""
    rows = [delta_row(m, k, w) for w in enum_S1(m)]
    images = {json.dumps(row["image"]) for row in rows}
    s2_count = len(enum_S2(m, k))
    ck_at_one = int(ck_poly(m, k)(1))
    report: DeltaReport = {
        "m": list(m.values),
        "k": k,
        "injective": len(images) == len(rows),
        "s1_count": len(rows),
        "s2_count": s2_count,
        "ck_at_one": ck_at_one,
        "counts_match": s2_count - len(rows) == ck_at_one,
        "rows": rows,
    }
    if not report["injective"] or not report["counts_match"]:
        logger.warning(
            f"Delta check failed for m = {m}, k = {k}: "
            f"injective={report['injective']}, "
            f"|S_2| - |S_1| = {s2_count - len(rows)}, c_k(1) = {ck_at_one}"
        )
    return report


def delta_table_fixture() -> dict[str, Any]:
    """The packaged table for m = (3,5,5,5,6,6), k = 3."""
    return cast(dict[str, Any], load_reference_json()["delta_table"])


def delta_table_matches_fixture() -> bool:
    """Compares the packaged table with computed rows, ignoring order."""
    table = delta_table_fixture()
    m = HessFunc(tuple(table["m"]))
    computed = {
        json.dumps([row["w"], row["image"], row["note"]])
        for row in check_delta_injective(m, table["k"])["rows"]
    }
    expected = {
        json.dumps([row["w"], row["image"], row["note"]])
        for row in table["rows"]
    }
    return computed == expected


def render_delta_table(report: DeltaReport) -> str:
    """Three columns: w, Delta(w) and the failed tests for smaller j."""

    def _word(w: Sequence[int]) -> str:
        return "(" + ", ".join(str(v) for v in w) + ")"

    header = [f"m = {_word(report['m'])}, k = {report['k']}"]
    lines = []
    for row in report["rows"]:
        image = f"({_word(row['image'][0])}, {_word(row['image'][1])})"
        line = f"{_word(row['w'])}  ->  {image}"
        lines.append(line + (f"  [{row['note']}]" if row["note"] else ""))

    footer = [
        f"|S_1| = {report['s1_count']}, |S_2| = {report['s2_count']}, "
        f"c_k(m;1) = {report['ck_at_one']}, "
        f"injective = {report['injective']}"
    ]
    return "\n".join(header + lines + footer)


def e_ab_coefficient(m: HessFunc, a: int, b: int) -> QPoly:
    """Coefficient of e_{a,b} in csf_q(m), with a + b = n."""
    if a < 1 or b < 1 or a + b != m.n:
        raise KOutOfRange(f"Need a, b >= 1 with a + b = {m.n}, got {a}, {b}")
    la = (max(a, b), min(a, b))
    return to_basis(csf_rho(m), "e").get(la, ZERO)


def e_ab_check(m: HessFunc, a: int, b: int) -> EabReport:
    """e_{a,b} coefficient vs [a]_q c_b + [b]_q c_a ([a]_q c_a if a = b)."""
    got = e_ab_coefficient(m, a, b)
    if a == b:
        expected = qint(a) * ck_poly(m, a)
    else:
        expected = qint(a) * ck_poly(m, b) + qint(b) * ck_poly(m, a)

    return {
        "a": a,
        "b": b,
        "coefficient": str(got),
        "expected": str(expected),
        "matches": got == expected,
        "value_at_one": int(got(1)),
    }
