"""g_k for an arbitrary graph G with a distinguished vertex v0.

    g_k(G, v0) = sum_{S subset E(G)} (-1)^{|S| - n + k + 1}
                 h_{la0(S) - n + k} p_{la(S)},

where la0(S) is the size of the component of ([n], S) containing v0 and
la(S) lists the sizes of the other components (h_j = 0 for j < 0).
Everything here is at q = 1.
"""

import networkx as nx

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from hessgk.algebra import Partition, as_partition, partitions_of
from hessgk.hessenberg import Edge, HessFunc, indifference_graph
from hessgk.symring import SymFunc, from_basis, sf_basis_element
from hessgk.utils import check_guard, get_logger
from hessgk.utils.errors import EdgeNotIncident, InvalidGraph, KOutOfRange

logger = get_logger(__package__)

SubsetProfile = dict[tuple[int, Partition], int]


def _normalize_edge(u: int, v: int, n: int) -> Edge:
    if u == v:
        raise InvalidGraph(f"Loop at vertex {u}")
    if not (1 <= u <= n and 1 <= v <= n):
        raise InvalidGraph(f"Edge {u}-{v} leaves [{n}]")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class RootedGraph:
    """Simple graph on [n] with a root; parallel edges are collapsed."""

    n: int
    edges: frozenset[Edge]
    root: int = 1

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidGraph(f"A graph needs at least one vertex, n={self.n}")
        if not 1 <= self.root <= self.n:
            raise InvalidGraph(f"Root {self.root} outside [{self.n}]")
        object.__setattr__(
            self,
            "edges",
            frozenset(_normalize_edge(u, v, self.n) for u, v in self.edges),
        )

    @classmethod
    def build(
        cls, n: int, edges: Iterable[tuple[int, int]], root: int = 1
    ) -> "RootedGraph":
        return cls(n=n, edges=frozenset(edges), root=root)

    @classmethod
    def from_hessenberg(cls, m: HessFunc, root: int = 1) -> "RootedGraph":
        return cls(n=m.n, edges=indifference_graph(m), root=root)

    @classmethod
    def parse(cls, text: str) -> "RootedGraph":
        """Parses "n; u-v,u-v,...; root=v0"."""
        chunks = [c.strip() for c in text.split(";")]
        if len(chunks) != 3 or not chunks[2].startswith("root="):
            raise InvalidGraph(f"Expected 'n; u-v,...; root=v0', got {text!r}")
        try:
            n = int(chunks[0])
            root = int(chunks[2][len("root=") :])
            edges = []
            for pair in filter(None, (p.strip() for p in chunks[1].split(","))):
                u, v = pair.split("-")
                edges.append((int(u), int(v)))
        except ValueError:
            raise InvalidGraph(f"Could not parse graph {text!r}")

        return cls.build(n, edges, root)

    def __str__(self) -> str:
        edges = ",".join(f"{u}-{v}" for u, v in self.sorted_edges())
        return f"{self.n}; {edges}; root={self.root}"

    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def with_root(self, root: int) -> "RootedGraph":
        return RootedGraph(n=self.n, edges=self.edges, root=root)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.edges)
        return graph

    def _incident_edge(self, e: tuple[int, int]) -> tuple[Edge, int]:
        edge = _normalize_edge(e[0], e[1], self.n)
        if edge not in self.edges:
            raise EdgeNotIncident(f"{edge} is not an edge of {self}")
        if self.root not in edge:
            raise EdgeNotIncident(f"{edge} is not incident to {self.root}")
        other = edge[0] if edge[1] == self.root else edge[1]
        return edge, other

    def delete_edge(self, e: tuple[int, int]) -> "RootedGraph":
        edge = _normalize_edge(e[0], e[1], self.n)
        if edge not in self.edges:
            raise EdgeNotIncident(f"{edge} is not an edge of {self}")
        return RootedGraph(n=self.n, edges=self.edges - {edge}, root=self.root)

    def contracted_edge_list(self, e: tuple[int, int]) -> list[Edge]:
        """Edges of G/e with multiplicity; the root absorbs the other end.

        Vertices above the absorbed one shift down by 1.
        """
        edge, other = self._incident_edge(e)

        def _relabel(v: int) -> int:
            v = self.root if v == other else v
            return v - 1 if v > other else v

        res = []
        for u, v in self.sorted_edges():
            if (u, v) == edge:
                continue
            a, b = _relabel(u), _relabel(v)
            res.append((a, b) if a < b else (b, a))

        return res

    def contract_edge(self, e: tuple[int, int]) -> "RootedGraph":
        """G/e with parallel edges collapsed, rooted at the merged vertex."""
        _, other = self._incident_edge(e)
        root = self.root - 1 if self.root > other else self.root
        return RootedGraph.build(
            self.n - 1, self.contracted_edge_list(e), root
        )


def _split(n: int, chosen: Iterable[Edge], root: int) -> tuple[int, Partition]:
    graph = nx.Graph()
    graph.add_nodes_from(range(1, n + 1))
    graph.add_edges_from(chosen)
    la0 = 0
    rest = []
    for component in nx.connected_components(graph):
        if root in component:
            la0 = len(component)
        else:
            rest.append(len(component))

    return la0, as_partition(rest)


@lru_cache(maxsize=512)
def _subset_profile(
    n: int, edges: tuple[Edge, ...], root: int
) -> SubsetProfile:
    """sum of (-1)^{|S|} over subsets S of edges, keyed by (la0, la)."""
    check_guard("max_edges", len(edges))
    profile: SubsetProfile = {}
    for mask in range(1 << len(edges)):
        chosen = [edges[i] for i in range(len(edges)) if mask >> i & 1]
        key = _split(n, chosen, root)
        profile[key] = profile.get(key, 0) + (-1) ** len(chosen)

    logger.debug(f"Edge subset profile over {len(edges)} edges, n = {n}")
    return {key: c for key, c in profile.items() if c}


def lambda_split(G: RootedGraph, S: Iterable[tuple[int, int]]) -> tuple[
    int, Partition
]:
    """(la0, la) of the spanning subgraph ([n], S) with respect to the root."""
    chosen = [_normalize_edge(u, v, G.n) for u, v in S]
    missing = [e for e in chosen if e not in G.edges]
    if missing:
        raise InvalidGraph(f"{missing} are not edges of {G}")
    return _split(G.n, chosen, G.root)


def _h(j: int) -> SymFunc:
    return sf_basis_element("h", (j,) if j > 0 else ())


def _e(j: int) -> SymFunc:
    return sf_basis_element("e", (j,) if j > 0 else ())


def _g_from_profile(profile: SubsetProfile, n: int, k: int) -> SymFunc:
    if not 0 <= k < n:
        raise KOutOfRange(f"k = {k} outside [0, {n})")

    sign = -1 if (k - n + 1) % 2 else 1
    res = SymFunc.zero()
    for (la0, la), c in profile.items():
        j = la0 - n + k
        if j < 0:
            continue
        res = res + _h(j) * sf_basis_element("p", la) * (sign * c)

    return res


def g_general(G: RootedGraph, k: int) -> SymFunc:
    """g_k(G, v0) with v0 = G.root, for 0 <= k < n."""
    return _g_from_profile(
        _subset_profile(G.n, G.sorted_edges(), G.root), G.n, k
    )


def g_general_from_edges(
    n: int, edge_list: Sequence[tuple[int, int]], root: int, k: int
) -> SymFunc:
    """g_k over a multiset of edges; repeated edges enter the subset sum."""
    edges = tuple(_normalize_edge(u, v, n) for u, v in edge_list)
    return _g_from_profile(_subset_profile(n, edges, root), n, k)


def gn_pseudo_sum(G: RootedGraph) -> SymFunc:
    """sum_S (-1)^{|S|+1} h_{la0(S)} p_{la(S)}, the k = n version of g_k."""
    res = SymFunc.zero()
    for (la0, la), c in _subset_profile(G.n, G.sorted_edges(), G.root).items():
        res = res + _h(la0) * sf_basis_element("p", la) * (-c)

    return res


def gn_pseudo_check(G: RootedGraph) -> bool:
    """The pseudo g_n plus sum_{k<n} e_{n-k} g_k(G) vanishes."""
    total = gn_pseudo_sum(G)
    for k in range(G.n):
        total = total + _e(G.n - k) * g_general(G, k)

    return total.is_zero()


def csf_general_from_g(G: RootedGraph) -> SymFunc:
    """sum_{k<n} (n-k) e_{n-k} g_k(G, v0)."""
    res = SymFunc.zero()
    for k in range(G.n):
        res = res + _e(G.n - k) * g_general(G, k) * (G.n - k)

    return res


def csf_stanley(G: RootedGraph) -> SymFunc:
    """sum_S (-1)^{|S|} p_{component sizes of ([n], S)}."""
    terms: dict[Partition, int] = {}
    for (la0, la), c in _subset_profile(G.n, G.sorted_edges(), G.root).items():
        key = as_partition((la0,) + la)
        terms[key] = terms.get(key, 0) + c

    return SymFunc(terms)


def _coloring_count(G: RootedGraph, sizes: Sequence[int]) -> int:
    caps = list(sizes)
    colors = [-1] * (G.n + 1)
    lower = [
        [u for u in range(1, v) if (u, v) in G.edges] for v in range(G.n + 1)
    ]

    def _assign(v: int) -> int:
        if v > G.n:
            return 1
        total = 0
        for c, cap in enumerate(caps):
            if cap == 0 or any(colors[u] == c for u in lower[v]):
                continue
            caps[c] -= 1
            colors[v] = c
            total += _assign(v + 1)
            caps[c] += 1
        colors[v] = -1
        return total

    return _assign(1)


def csf_coloring_general(G: RootedGraph) -> SymFunc:
    """Stanley's chromatic symmetric function by counting proper colourings."""
    check_guard("max_perm_n", G.n)
    return from_basis(
        {mu: _coloring_count(G, mu) for mu in partitions_of(G.n)}, "m"
    )


def deletion_contraction_check(G: RootedGraph, e: tuple[int, int]) -> bool:
    """Checks both deletion-contraction identities for an edge at the root.

    For k < n - 1: g_k(G) = g_k(G - e) + g_k(G / e).
    For k = n - 1: g_k(G) = g_k(G - e) - sum_{i<n-1} e_{n-1-i} g_i(G / e).
    """
    deleted = G.delete_edge(e)
    contracted = G.contract_edge(e)
    n = G.n

    for k in range(n - 1):
        lhs = g_general(G, k)
        if lhs != g_general(deleted, k) + g_general(contracted, k):
            logger.warning(f"Deletion-contraction fails at k={k} for {G}")
            return False

    top = g_general(deleted, n - 1)
    for i in range(n - 1):
        top = top - _e(n - 1 - i) * g_general(contracted, i)
    if g_general(G, n - 1) != top:
        logger.warning(f"Deletion-contraction fails at k={n - 1} for {G}")
        return False

    return True


@lru_cache(maxsize=None)
def _atlas() -> tuple[nx.Graph, ...]:
    return tuple(nx.graph_atlas_g())


def connected_graphs(n: int) -> list[RootedGraph]:
    """Connected graphs on n <= 7 vertices up to isomorphism, rooted at 1."""
    if not 1 <= n <= 7:
        raise ValueError(f"The graph atlas covers 1 <= n <= 7, got n={n}")

    res = []
    for graph in _atlas():
        if graph.number_of_nodes() != n or not nx.is_connected(graph):
            continue
        res.append(
            RootedGraph.build(n, ((u + 1, v + 1) for u, v in graph.edges))
        )

    return res
