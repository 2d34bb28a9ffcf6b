"""Hessenberg functions, indifference graphs and chromatic quasisymmetric
functions.

A Hessenberg function m: [n] -> [n] is weakly increasing with m(i) >= i. It
defines the indifference graph G_m with edges {i, j}, i < j <= m(i), and the
permutation set S_{n,m} = {sigma : sigma(i) <= m(i)}.
"""

import networkx as nx

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, TypeAlias

from hessgk.algebra import (
    ZERO,
    Partition,
    QPoly,
    as_partition,
    partitions_of,
    qint,
)
from hessgk.symring import SymFunc, from_basis, sf_basis_element
from hessgk.utils import check_guard, get_logger
from hessgk.utils.errors import InvalidHessenberg, MalformedTree

logger = get_logger(__package__)

Word: TypeAlias = tuple[int, ...]
Edge: TypeAlias = tuple[int, int]


@dataclass(frozen=True)
class HessFunc:
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        n = len(values)
        for i, v in enumerate(values, start=1):
            if not isinstance(v, int):
                raise InvalidHessenberg(f"m({i}) = {v!r} is not an integer")
            if v < i:
                raise InvalidHessenberg(f"m({i}) = {v} < {i}")
            if v > n:
                raise InvalidHessenberg(f"m({i}) = {v} > n = {n}")
            if i > 1 and v < values[i - 2]:
                raise InvalidHessenberg(
                    f"m is decreasing at {i}: {values[i - 2]} > {v}"
                )

    @classmethod
    def from_string(cls, text: str) -> "HessFunc":
        """Parses the comma separated form, e.g. "2,4,4,5,6,6"."""
        text = text.strip()
        if not text:
            raise InvalidHessenberg("Empty Hessenberg function")
        try:
            values = tuple(int(v) for v in text.split(","))
        except ValueError:
            raise InvalidHessenberg(f"Could not parse {text!r}")
        return cls(values)

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)


def hess_validate(values: Iterable[int] | str) -> HessFunc:
    if isinstance(values, str):
        return HessFunc.from_string(values)
    return HessFunc(tuple(values))


def path_function(n: int) -> HessFunc:
    return HessFunc(tuple(min(i + 1, n) for i in range(1, n + 1)))


def complete_function(n: int) -> HessFunc:
    return HessFunc((n,) * n)


def all_hessenberg_functions(n: int) -> list[HessFunc]:
    """Every Hessenberg function on [n], lexicographically."""

    def _extend(prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        i = len(prefix) + 1
        if i > n:
            yield prefix
            return
        lower = max(i, prefix[-1] if prefix else 1)
        for v in range(lower, n + 1):
            yield from _extend(prefix + (v,))

    return [HessFunc(values) for values in _extend(())]


def indifference_graph(m: HessFunc) -> frozenset[Edge]:
    return frozenset(
        (i, j) for i in range(1, m.n + 1) for j in range(i + 1, m(i) + 1)
    )


def deleted_graph_edges(m: HessFunc, removed: Iterable[int]) -> frozenset[Edge]:
    """Edges of G_m without the removed vertices, relabelled from 1."""
    graph = nx.Graph()
    graph.add_nodes_from(range(1, m.n + 1))
    graph.add_edges_from(indifference_graph(m))
    graph.remove_nodes_from(removed)
    relabel = {v: i for i, v in enumerate(sorted(graph.nodes), start=1)}
    return frozenset(
        tuple(sorted((relabel[u], relabel[v]))) for u, v in graph.edges
    )


@dataclass(frozen=True)
class CycleDecomp:
    perm: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...] = field(init=False)
    word: Word = field(init=False)
    cycle_type: Partition = field(init=False)

    def __post_init__(self) -> None:
        n = len(self.perm)
        seen = [False] * (n + 1)
        cycles: list[tuple[int, ...]] = []
        for start in range(1, n + 1):
            if seen[start]:
                continue
            cycle = []
            v = start
            while not seen[v]:
                seen[v] = True
                cycle.append(v)
                v = self.perm[v - 1]
            cycles.append(tuple(cycle))

        object.__setattr__(self, "cycles", tuple(cycles))
        object.__setattr__(
            self, "word", tuple(v for cycle in cycles for v in cycle)
        )
        object.__setattr__(
            self, "cycle_type", as_partition(len(c) for c in cycles)
        )

    def to_perm(self) -> tuple[int, ...]:
        perm = [0] * len(self.perm)
        for cycle in self.cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                perm[a - 1] = b
        return tuple(perm)


def _iter_perms(m: HessFunc) -> Iterator[tuple[int, ...]]:
    n = m.n
    used = [False] * (n + 1)
    perm: list[int] = []

    def _place(i: int) -> Iterator[tuple[int, ...]]:
        if i > n:
            yield tuple(perm)
            return
        for v in range(1, m(i) + 1):
            if used[v]:
                continue
            used[v] = True
            perm.append(v)
            yield from _place(i + 1)
            perm.pop()
            used[v] = False

    yield from _place(1)


def enum_Snm(m: HessFunc) -> list[CycleDecomp]:
    """Permutations with sigma(i) <= m(i), in lexicographic one-line order."""
    check_guard("max_perm_n", m.n)
    res = [CycleDecomp(perm) for perm in _iter_perms(m)]
    logger.debug(f"|S_(n,m)| = {len(res)} for m = {m}")
    return res


def wt(m: HessFunc, word: Sequence[int]) -> int:
    """Number of pairs a < b <= m(a) with b placed before a in word."""
    pos = {v: i for i, v in enumerate(word)}
    if len(pos) != len(word):
        raise ValueError(f"Word {tuple(word)} repeats a letter")

    count = 0
    for a, pos_a in pos.items():
        for b in range(a + 1, m(a) + 1):
            pos_b = pos.get(b)
            if pos_b is not None and pos_b < pos_a:
                count += 1

    return count


@lru_cache(maxsize=None)
def cycle_weight_profile(m: HessFunc) -> dict[tuple[int, Partition], QPoly]:
    """Sums q^wt(sigma^c) over S_{n,m} grouped by (|tau_1|, type of rest).

    tau_1 is the cycle through 1.
    """
    check_guard("max_perm_n", m.n)
    counts: dict[tuple[int, Partition], dict[int, int]] = {}
    for perm in _iter_perms(m):
        decomp = CycleDecomp(perm)
        first = len(decomp.cycles[0]) if decomp.cycles else 0
        key = (first, as_partition(len(c) for c in decomp.cycles[1:]))
        weights = counts.setdefault(key, {})
        w = wt(m, decomp.word)
        weights[w] = weights.get(w, 0) + 1

    return {
        key: QPoly(weights.get(i, 0) for i in range(max(weights) + 1))
        for key, weights in counts.items()
    }


def cycle_type_profile(m: HessFunc) -> dict[Partition, QPoly]:
    """Sums q^wt(sigma^c) over S_{n,m} grouped by cycle type."""
    res: dict[Partition, QPoly] = {}
    for (first, rest), poly in cycle_weight_profile(m).items():
        la = as_partition((first,) + rest)
        res[la] = res.get(la, ZERO) + poly

    return res


@lru_cache(maxsize=None)
def rho(n: int) -> SymFunc:
    """q-deformed power sum: [n]_q h_n = sum_{i=0}^{n-1} h_i rho_{n-i}."""
    if n < 1:
        raise ValueError(f"rho expects n >= 1, got {n}")

    res = sf_basis_element("h", (n,)) * qint(n)
    for i in range(1, n):
        res = res - sf_basis_element("h", (i,)) * rho(n - i)

    return res


def omega_rho_check(n: int) -> bool:
    """omega(rho_n) == sum_i (-1)^{n-i} [i]_q e_i h_{n-i}."""
    rhs = SymFunc.zero()
    for i in range(1, n + 1):
        term = sf_basis_element("e", (i,)) * sf_basis_element(
            "h", (n - i,) if n > i else ()
        )
        rhs = rhs + term * (qint(i) * (-1) ** (n - i))

    return rho(n).omega() == rhs


@lru_cache(maxsize=None)
def omega_rho_product(la: Partition) -> SymFunc:
    res = SymFunc.one()
    for part in la:
        res = res * rho(part)

    return res.omega()


@lru_cache(maxsize=None)
def csf_rho(m: HessFunc) -> SymFunc:
    """Chromatic quasisymmetric function as a sum over S_{n,m}.

    csf_q(m) = sum_sigma q^wt(sigma^c) omega(rho_{|tau_1|} ... rho_{|tau_j|}).
    """
    res = SymFunc.zero()
    for la, poly in cycle_type_profile(m).items():
        res = res + omega_rho_product(la) * poly

    return res


def csf_stanley_p(m: HessFunc) -> SymFunc:
    """Classical chromatic symmetric function: sum_sigma omega(p_type)."""
    counts: dict[Partition, int] = {}
    for la, poly in cycle_type_profile(m).items():
        counts[la] = counts.get(la, 0) + int(poly(1))

    return SymFunc(counts).omega()


def _coloring_weights(m: HessFunc, sizes: Sequence[int]) -> QPoly:
    n = m.n
    caps = list(sizes)
    colors = [0] * (n + 1)
    lower = [[i for i in range(1, j) if m(i) >= j] for j in range(n + 1)]
    counts: dict[int, int] = {}

    def _assign(j: int, asc: int) -> None:
        if j > n:
            counts[asc] = counts.get(asc, 0) + 1
            return
        for c, cap in enumerate(caps):
            if cap == 0 or any(colors[i] == c for i in lower[j]):
                continue
            caps[c] -= 1
            colors[j] = c
            _assign(j + 1, asc + sum(1 for i in lower[j] if colors[i] < c))
            caps[c] += 1

    _assign(1, 0)
    return QPoly(counts.get(a, 0) for a in range(max(counts, default=-1) + 1))


def csf_coloring_coefficient(m: HessFunc, exponents: Sequence[int]) -> QPoly:
    """Coefficient of x_1^{a_1} x_2^{a_2} ... in csf_q(m)."""
    check_guard("max_perm_n", m.n)
    if any(a < 0 for a in exponents):
        raise ValueError(f"Negative exponent in {tuple(exponents)}")
    if sum(exponents) != m.n:
        return ZERO
    return _coloring_weights(m, exponents)


def csf_coloring(m: HessFunc) -> SymFunc:
    """csf_q(m) from proper colourings, graded by ascents."""
    check_guard("max_perm_n", m.n)
    return from_basis(
        {mu: _coloring_weights(m, mu) for mu in partitions_of(m.n)}, "m"
    )


@dataclass(frozen=True)
class IncTree:
    """Increasing tree in G_m rooted at 1, with its word under the bijection.

    edges holds (parent, child) pairs listed in the order of the child in
    word.
    """

    word: Word
    edges: tuple[Edge, ...]

    @property
    def size(self) -> int:
        return len(self.word)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.word)


def _check_tree_word(m: HessFunc, word: Sequence[int]) -> None:
    if not word or word[0] != 1:
        raise MalformedTree(f"Tree word {tuple(word)} must start at 1")
    if len(set(word)) != len(word):
        raise MalformedTree(f"Tree word {tuple(word)} repeats a vertex")
    if any(not 1 <= v <= m.n for v in word):
        raise MalformedTree(f"Tree word {tuple(word)} leaves [{m.n}]")
    for a, b in zip(word, word[1:]):
        if b > m(a):
            raise MalformedTree(f"Tree word step {a} -> {b} has {b} > m({a})")


def tree_from_word(m: HessFunc, word: Sequence[int]) -> IncTree:
    """The parent of tau_j is tau_i for the largest i < j with tau_i < tau_j."""
    word = tuple(word)
    _check_tree_word(m, word)

    edges: list[Edge] = []
    for j in range(1, len(word)):
        parent = next(
            word[i] for i in range(j - 1, -1, -1) if word[i] < word[j]
        )
        edges.append((parent, word[j]))

    return IncTree(word=word, edges=tuple(edges))


def word_from_tree(m: HessFunc, edges: Iterable[Edge]) -> IncTree:
    """Inverse of tree_from_word: preorder from 1, larger children first."""
    graph = nx.Graph()
    graph.add_node(1)
    for u, v in edges:
        a, b = min(u, v), max(u, v)
        if a == b or a < 1 or b > m.n or b > m(a):
            raise MalformedTree(f"{{{u}, {v}}} is not an edge of G_m")
        graph.add_edge(a, b)

    if not nx.is_tree(graph):
        raise MalformedTree("Edges do not form a tree containing 1")

    parents = dict(nx.bfs_predecessors(graph, 1))
    for child, parent in parents.items():
        if parent > child:
            raise MalformedTree(
                f"Tree is not increasing at {parent} -> {child}"
            )

    word: list[int] = []
    stack = [1]
    while stack:
        v = stack.pop()
        word.append(v)
        stack.extend(sorted(c for c in graph.neighbors(v) if c > v))

    return tree_from_word(m, word)


def tree_perm_bijection(m: HessFunc, item: IncTree | Sequence[int]) -> IncTree:
    """Maps a word to its tree, or a tree (given by its edges) to its word."""
    if isinstance(item, IncTree):
        return word_from_tree(m, item.edges)
    return tree_from_word(m, item)


def embed(tau: Sequence[int], n: int) -> Word:
    """Appends [n] minus Image(tau) to tau in increasing order."""
    used = set(tau)
    return tuple(tau) + tuple(v for v in range(1, n + 1) if v not in used)


def _iter_tree_words(m: HessFunc, d: int) -> Iterator[Word]:
    used = [False] * (m.n + 1)
    used[1] = True
    word = [1]

    def _extend() -> Iterator[Word]:
        if len(word) == d:
            yield tuple(word)
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


def enum_inc_trees(m: HessFunc, d: int) -> list[IncTree]:
    """Increasing trees of G_m on d vertices rooted at 1, by word."""
    if not 1 <= d <= m.n:
        raise ValueError(f"Tree size {d} outside [1, {m.n}]")
    check_guard("max_perm_n", m.n)
    return [tree_from_word(m, word) for word in _iter_tree_words(m, d)]


def hess_minus_tau(m: HessFunc, tau: Sequence[int]) -> HessFunc:
    """Hessenberg function of G_m with the vertices of tau removed.

    With j_1 < ... < j_k the remaining vertices,
    (m minus tau)(i) = max{i0 : j_{i0} <= m(j_i)}.
    """
    removed = set(tau)
    rest = [v for v in range(1, m.n + 1) if v not in removed]
    values = []
    for j in rest:
        values.append(max(i0 for i0, j0 in enumerate(rest, 1) if j0 <= m(j)))

    return HessFunc(tuple(values))
