"""Transition matrices from the p, e, h and s bases to the m basis.

Rows are indexed by the source basis element, columns by m_mu, both in the
order of partitions_of(n). Entries are computed by direct enumeration:

    p_la -> m_mu: maps from the parts of la onto the parts of mu
    e_la -> m_mu: 0/1 matrices with row sums la and column sums mu
    h_la -> m_mu: non-negative integer matrices with the same margins
    s_la -> m_mu: semistandard tableaux of shape la and content mu

Exact Fraction inverses are kept alongside. A process-wide cache holds one
Transitions object per degree and can be persisted to a JSON file.
"""

import os
import json
import tempfile
import threading

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Any, Callable, Final, Iterator, TypeAlias

from hessgk.algebra import Partition, partitions_of
from hessgk.utils import (
    check_guard,
    get_logger,
    load_default_config,
    warn_once,
)

logger = get_logger(__package__)

Matrix: TypeAlias = list[list[int]]
FracMatrix: TypeAlias = list[list[Fraction]]

MATRIX_BASES: Final[tuple[str, ...]] = ("p", "e", "h", "s")


@lru_cache(maxsize=None)
def _fill_count(parts: Partition, caps: tuple[int, ...]) -> int:
    if not parts:
        return 1 if not any(caps) else 0

    first, rest = parts[0], parts[1:]
    total = 0
    for idx, cap in enumerate(caps):
        if cap >= first:
            new_caps = caps[:idx] + (cap - first,) + caps[idx + 1 :]
            total += _fill_count(rest, tuple(sorted(new_caps, reverse=True)))

    return total


def refinement_count(la: Partition, mu: Partition) -> int:
    """Coefficient of m_mu in p_la."""
    if sum(la) != sum(mu):
        return 0
    return _fill_count(la, tuple(mu))


def _row_fillings(
    total: int, caps: tuple[int, ...], binary: bool
) -> Iterator[tuple[int, ...]]:
    if not caps:
        if total == 0:
            yield ()
        return

    upper = min(total, caps[0], 1 if binary else total)
    for x in range(upper, -1, -1):
        if total - x > sum(caps[1:]):
            break
        for rest in _row_fillings(total - x, caps[1:], binary):
            yield (x,) + rest


@lru_cache(maxsize=None)
def _matrix_count(
    rows: tuple[int, ...], cols: tuple[int, ...], binary: bool
) -> int:
    if not rows:
        return 1 if not any(cols) else 0

    total = 0
    for filling in _row_fillings(rows[0], cols, binary):
        remaining = tuple(
            sorted((c - x for c, x in zip(cols, filling)), reverse=True)
        )
        total += _matrix_count(rows[1:], remaining, binary)

    return total


def matrix_count(
    rows: tuple[int, ...], cols: tuple[int, ...], binary: bool
) -> int:
    """Number of matrices with the given margins.

    Args:
        rows (tuple[int, ...]): Row sums.
        cols (tuple[int, ...]): Column sums.
        binary (bool): If True, entries are restricted to {0, 1}.

    Returns:
        int: The number of such matrices with non-negative entries.
    """
    if sum(rows) != sum(cols):
        return 0
    return _matrix_count(tuple(rows), tuple(sorted(cols, reverse=True)), binary)


def _horizontal_strips(shape: Partition, size: int) -> Iterator[Partition]:
    """Yields the shapes obtained by removing a horizontal strip of size."""

    def _inner(row: int, left: int) -> Iterator[tuple[int, ...]]:
        if row == len(shape):
            if left == 0:
                yield ()
            return
        lower = shape[row + 1] if row + 1 < len(shape) else 0
        for keep in range(shape[row], lower - 1, -1):
            removed = shape[row] - keep
            if removed > left:
                break
            for rest in _inner(row + 1, left - removed):
                yield (keep,) + rest

    for inner in _inner(0, size):
        yield tuple(p for p in inner if p > 0)


@lru_cache(maxsize=None)
def kostka_number(shape: Partition, content: tuple[int, ...]) -> int:
    """Number of SSYT of the given shape and content."""
    if not content:
        return 1 if not shape else 0
    if sum(shape) != sum(content):
        return 0

    return sum(
        kostka_number(inner, content[:-1])
        for inner in _horizontal_strips(shape, content[-1])
    )


def _invert(matrix: Matrix) -> FracMatrix:
    """Exact Gauss-Jordan inverse."""
    size = len(matrix)
    aug: FracMatrix = [
        [Fraction(x) for x in row]
        + [Fraction(1 if i == j else 0) for j in range(size)]
        for i, row in enumerate(matrix)
    ]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError(f"Singular transition matrix (column {col})")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        scale = aug[col][col]
        aug[col] = [x / scale for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]

    return [row[size:] for row in aug]


@dataclass(frozen=True, eq=False)
class Transitions:
    n: int
    partitions: tuple[Partition, ...]
    index: dict[Partition, int]
    to_m: dict[str, Matrix]
    from_m: dict[str, FracMatrix]

    @classmethod
    def from_matrices(
        cls, n: int, to_m: dict[str, Matrix]
    ) -> "Transitions":
        partitions = tuple(partitions_of(n))
        return cls(
            n=n,
            partitions=partitions,
            index={la: i for i, la in enumerate(partitions)},
            to_m=to_m,
            from_m={basis: _invert(to_m[basis]) for basis in MATRIX_BASES},
        )


def _build_matrices(n: int) -> dict[str, Matrix]:
    partitions = partitions_of(n)

    def _table(entry_fn: Callable[[Partition, Partition], int]) -> Matrix:
        return [[entry_fn(la, mu) for mu in partitions] for la in partitions]

    return {
        "p": _table(refinement_count),
        "e": _table(lambda la, mu: matrix_count(la, mu, binary=True)),
        "h": _table(lambda la, mu: matrix_count(la, mu, binary=False)),
        "s": _table(kostka_number),
    }


_cache: dict[int, Transitions] = {}
_cache_lock = threading.Lock()


def get_transitions(n: int) -> Transitions:
    """Returns the (cached) transition data for degree n."""
    check_guard("max_degree", n)
    cached = _cache.get(n)
    if cached is not None:
        return cached

    with _cache_lock:
        cached = _cache.get(n)
        if cached is None:
            logger.debug(f"Building transition matrices for degree {n}")
            cached = Transitions.from_matrices(n, _build_matrices(n))
            _cache[n] = cached

    return cached


def kostka_matrix(n: int) -> Matrix:
    """Kostka matrix K[la][mu] over partitions_of(n)."""
    return [list(row) for row in get_transitions(n).to_m["s"]]


def clear_transition_cache() -> None:
    with _cache_lock:
        _cache.clear()


def cached_degrees() -> list[int]:
    return sorted(_cache)


def _cache_header() -> dict[str, Any]:
    cache_config = load_default_config()["cache"]
    return {
        "format": cache_config["format"],
        "version": cache_config["version"],
    }


def _parse_degree(n: int, entry: dict[str, Any]) -> Transitions:
    partitions = [tuple(la) for la in entry["partitions"]]
    if partitions != partitions_of(n):
        raise ValueError(f"Partition order mismatch for degree {n}")

    size = len(partitions)
    to_m: dict[str, Matrix] = {}
    for basis in MATRIX_BASES:
        matrix = entry[basis]
        if len(matrix) != size or any(
            len(row) != size
            or not all(isinstance(x, int) and x >= 0 for x in row)
            for row in matrix
        ):
            raise ValueError(f"Malformed {basis}-matrix for degree {n}")
        to_m[basis] = [list(row) for row in matrix]

    return Transitions.from_matrices(n, to_m)


def load_transition_cache(load_path: Path | str) -> int:
    """Loads cached matrices from disk into the process cache.

    Returns the number of degrees loaded. Missing, outdated or malformed
    files are discarded with a warning and rebuilt on demand.
    """
    load_path = Path(load_path)
    if not load_path.exists():
        return 0

    try:
        with open(load_path, "r") as f:
            data = json.load(f)
        header = data.get("header")
        if header != _cache_header():
            raise ValueError(f"Unexpected cache header {header}")
        loaded = {
            int(n): _parse_degree(int(n), entry)
            for n, entry in data["degrees"].items()
        }
    except Exception as e:
        warn_once(
            __package__ or __name__,
            f"Discarding transition cache at {load_path}: {e}",
        )
        return 0

    with _cache_lock:
        for n, transitions in loaded.items():
            _cache.setdefault(n, transitions)

    logger.debug(f"Loaded {len(loaded)} degrees from {load_path}")
    return len(loaded)


def save_transition_cache(save_path: Path | str) -> None:
    """Writes every cached degree to save_path atomically."""
    save_path = Path(save_path)
    with _cache_lock:
        degrees = {
            str(n): {
                "partitions": [list(la) for la in t.partitions],
                **{basis: t.to_m[basis] for basis in MATRIX_BASES},
            }
            for n, t in sorted(_cache.items())
        }

    payload = {"header": _cache_header(), "degrees": degrees}
    save_path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(
        dir=str(save_path.parent), prefix=save_path.name, suffix=".tmp"
    )
    try:
        with os.fdopen(fd, "w") as f:
            json.dump(payload, f)
        os.replace(tmp_path, save_path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise
