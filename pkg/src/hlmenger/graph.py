"""Immutable undirected simple graphs with exact connectivity primitives.

Vertices are integers 0..n_vertices-1, edges are canonical (min, max) pairs,
and every operation here is a pure function of its inputs. Connectivity
quantities are exact integers: edge-disjoint path counts come from
unit-capacity max-flow, vertex connectivity from a vertex-splitting
reduction, and a brute-force subset-enumeration oracle is provided as an
independent cross-check of the flow results.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Mapping, Optional

from .flow import DirectedFlow, UnitFlowEngine

Edge = tuple[int, int]


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its configured combinatorial budget."""


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph.

    Construct through build_graph(), which validates ids and rejects loops
    and duplicates. Instances are safe to share across workers; all methods
    are read-only.
    """

    __slots__ = ("n_vertices", "edges", "labels", "_edge_set", "_adj")

    def __init__(self, n_vertices: int, edges: tuple[Edge, ...],
                 labels: Optional[dict[int, str]], _adj: tuple[tuple[int, ...], ...]):
        self.n_vertices = n_vertices
        self.edges = edges                      # canonical, ascending
        self.labels = labels
        self._edge_set = frozenset(edges)
        self._adj = _adj

    # -- basic accessors -------------------------------------------------

    def n_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self._edge_set

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def min_degree(self) -> int:
        if self.n_vertices == 0:
            return 0
        return min(len(a) for a in self._adj)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n_vertices:
            raise ValueError(f"vertex id {v} out of range [0, {self.n_vertices})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n_vertices == other.n_vertices
                and self._edge_set == other._edge_set
                and self.labels == other.labels)

    def __hash__(self) -> int:
        return hash((self.n_vertices, self._edge_set))

    def __repr__(self) -> str:
        return f"Graph(n_vertices={self.n_vertices}, n_edges={len(self.edges)})"


def build_graph(n_vertices: int, edges: Iterable[Edge],
                labels: Optional[Mapping[int, str]] = None) -> Graph:
    """Validate and build an immutable graph.

    Rejects out-of-range ids, self-loops and duplicate edges (after
    canonicalization to (min, max)), naming the offending pair.
    """
    if n_vertices < 0:
        raise ValueError("n_vertices must be non-negative")
    seen: set[Edge] = set()
    canon: list[Edge] = []
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) not allowed")
        if not 0 <= u < n_vertices or not 0 <= v < n_vertices:
            raise ValueError(f"edge ({u}, {v}) has endpoint outside [0, {n_vertices})")
        e = canonical_edge(u, v)
        if e in seen:
            raise ValueError(f"duplicate edge ({u}, {v})")
        seen.add(e)
        canon.append(e)
    canon.sort()
    adj: list[list[int]] = [[] for _ in range(n_vertices)]
    for u, v in canon:
        adj[u].append(v)
        adj[v].append(u)
    label_map = None
    if labels is not None:
        for v in labels:
            if not 0 <= v < n_vertices:
                raise ValueError(f"label for out-of-range vertex {v}")
        label_map = dict(labels)
    return Graph(n_vertices, tuple(canon), label_map,
                 tuple(tuple(a) for a in adj))


@dataclass(frozen=True)
class FaultSet:
    """A set of edges of a specific host graph, marked as faulty."""

    host: Graph
    edges: frozenset[Edge]

    def __post_init__(self):
        for u, v in self.edges:
            if canonical_edge(u, v) not in self.host._edge_set:
                raise ValueError(f"fault edge ({u}, {v}) not in host graph")

    def __len__(self) -> int:
        return len(self.edges)

    @staticmethod
    def of(host: Graph, edges: Iterable[Edge]) -> "FaultSet":
        return FaultSet(host, frozenset(canonical_edge(u, v) for u, v in edges))


@dataclass(frozen=True)
class FlowResult:
    """Exact edge-disjoint path count with a minimum-cut certificate."""

    value: int
    cut: tuple[Edge, ...]


def remove_edges(g: Graph, faults: FaultSet | Iterable[Edge]) -> Graph:
    """New graph on the same vertex set with the fault edges deleted."""
    if isinstance(faults, FaultSet):
        if faults.host is not g and faults.host != g:
            raise ValueError("fault set is hosted by a different graph")
        drop = faults.edges
    else:
        drop = frozenset(canonical_edge(u, v) for u, v in faults)
        foreign = drop - g._edge_set
        if foreign:
            raise ValueError(f"edge {sorted(foreign)[0]} not in graph")
    return build_graph(g.n_vertices, [e for e in g.edges if e not in drop], g.labels)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by minimum id."""
    seen = [False] * g.n_vertices
    out: list[list[int]] = []
    for start in range(g.n_vertices):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        stack = [start]
        while stack:
            u = stack.pop()
            for v in g._adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    stack.append(v)
        comp.sort()
        out.append(comp)
    return out


def largest_component_size(g: Graph) -> int:
    if g.n_vertices == 0:
        return 0
    return max(len(c) for c in components(g))


def is_connected(g: Graph) -> bool:
    return g.n_vertices <= 1 or len(components(g)) == 1


def max_edge_disjoint_paths(g: Graph, u: int, v: int) -> FlowResult:
    """Maximum number of pairwise edge-disjoint u-v paths, with a cut witness.

    By Menger's theorem (edge form) the value equals the minimum u-v edge
    cut; the returned cut achieves it, so |cut| == value and deleting the
    cut separates u from v.
    """
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise ValueError("endpoints must be distinct")
    engine = UnitFlowEngine(g.n_vertices, g.edges)
    value, cut = engine.min_cut(u, v)
    return FlowResult(value, tuple(sorted(cut)))


def brute_force_min_cut(g: Graph, u: int, v: int, limit: int,
                        budget: int = 5_000_000) -> int:
    """Smallest k < limit such that deleting some k edges separates u and v.

    Independent oracle for the max-flow path counter: enumerates edge
    subsets exhaustively in size order and tests separation by plain DFS.
    Refuses (BudgetExceeded) when the number of subsets to visit would pass
    `budget`. Raises ValueError if no cut smaller than `limit` exists.
    """
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise ValueError("endpoints must be distinct")
    m = len(g.edges)
    total = sum(comb(m, k) for k in range(min(limit, m + 1)))
    if total > budget:
        raise BudgetExceeded(
            f"{total} edge subsets exceed the budget of {budget}")

    adj = [[] for _ in range(g.n_vertices)]
    for idx, (a, b) in enumerate(g.edges):
        adj[a].append((b, idx))
        adj[b].append((a, idx))

    removed = bytearray(m)

    def separated() -> bool:
        stack = [u]
        seen = bytearray(g.n_vertices)
        seen[u] = 1
        while stack:
            x = stack.pop()
            for y, idx in adj[x]:
                if not removed[idx] and not seen[y]:
                    if y == v:
                        return False
                    seen[y] = 1
                    stack.append(y)
        return True

    for k in range(min(limit, m + 1)):
        for subset in combinations(range(m), k):
            for idx in subset:
                removed[idx] = 1
            if separated():
                return k
            for idx in subset:
                removed[idx] = 0
    raise ValueError(f"no (u,v)-edge cut of size < {limit} exists")


def edge_connectivity(g: Graph) -> int:
    """Exact lambda(G); 0 for disconnected or single-vertex graphs.

    A minimum edge cut separates vertex 0 from some other vertex, so the
    minimum of max_edge_disjoint_paths(0, v) over all v is exact.
    """
    if g.n_vertices <= 1 or not is_connected(g):
        return 0
    engine = UnitFlowEngine(g.n_vertices, g.edges)
    best = g.min_degree()
    for v in range(1, g.n_vertices):
        best = min(best, engine.max_flow(0, v, cutoff=best))
    return best


def vertex_connectivity(g: Graph) -> int:
    """Exact kappa(G) via vertex splitting; 0 for disconnected graphs.

    Local vertex connectivity between non-adjacent u, v is the max flow
    from u_out to v_in in the directed auxiliary graph where each vertex
    w becomes an arc w_in -> w_out of capacity 1 and each edge becomes two
    uncapped arcs. The global value is the minimum over v0's non-neighbors
    and over non-adjacent pairs of v0's neighbors, v0 a minimum-degree
    vertex (a minimum cut either avoids v0 or splits its neighborhood).
    """
    n = g.n_vertices
    if n <= 1 or not is_connected(g):
        return 0
    if len(g.edges) == n * (n - 1) // 2:
        return n - 1

    inf = n  # larger than any possible vertex cut
    net = DirectedFlow(2 * n)
    for w in range(n):
        net.add_arc(w, w + n, 1)  # w_in -> w_out
    for a, b in g.edges:
        net.add_arc(a + n, b, inf)
        net.add_arc(b + n, a, inf)
    snapshot = net.cap[:]

    def local(u: int, v: int) -> int:
        return net.max_flow(u + n, v, snapshot)

    v0 = min(range(n), key=g.degree)
    best = g.degree(v0)
    closed = set(g.neighbors(v0)) | {v0}
    for v in range(n):
        if v not in closed:
            best = min(best, local(v0, v))
    for x, y in combinations(g.neighbors(v0), 2):
        if not g.has_edge(x, y):
            best = min(best, local(x, y))
    return best
