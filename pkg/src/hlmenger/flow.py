"""Max-flow workhorses for exact connectivity computation.

Internal module. Two solvers live here:

* UnitFlowEngine: undirected unit-capacity flow over one fixed edge layout,
  with a mutable fault mask so campaigns can re-query thousands of fault sets
  without rebuilding anything. Augmentation is BFS (Edmonds-Karp), which is
  exact and more than fast enough for the sizes this package handles
  (worst case ~192 vertices / ~640 edges).
* DirectedFlow: small generic directed solver used only by the
  vertex-splitting reduction for vertex connectivity.

UnitFlowEngine also builds a Gusfield (Gomory-Hu style) equivalent-flow tree,
giving all-pairs minimum edge cut values from n-1 max-flow runs. Property
tests cross-check the tree against direct per-pair flow.
"""

from __future__ import annotations

from collections import deque


class UnitFlowEngine:
    """Reusable unit-capacity max-flow over an undirected edge list.

    Edge k of the canonical edge list becomes the twin arcs 2k (u->v) and
    2k+1 (v->u); the tail of arc a is head[a ^ 1]. Faulted edges keep their
    slots but carry capacity 0, so edge indices stay stable across queries.
    """

    def __init__(self, n_vertices: int, edges):
        self.n = n_vertices
        self.edges = list(edges)
        m = len(self.edges)
        self.head = [0] * (2 * m)
        self.adj: list[list[int]] = [[] for _ in range(n_vertices)]
        for k, (u, v) in enumerate(self.edges):
            self.head[2 * k] = v
            self.head[2 * k + 1] = u
            self.adj[u].append(2 * k)
            self.adj[v].append(2 * k + 1)
        self.base_degrees = [len(a) for a in self.adj]
        self._ones = [1] * (2 * m)
        self._template = self._ones[:]  # capacities with faults zeroed
        self._cap = self._ones[:]       # working residual capacities
        self._fault: tuple[int, ...] = ()
        self.degrees = self.base_degrees[:]

    def set_fault_indices(self, edge_indices) -> None:
        """Install a fault set given as indices into the canonical edge list."""
        tpl = self._template
        for k in self._fault:
            tpl[2 * k] = 1
            tpl[2 * k + 1] = 1
        self._fault = tuple(edge_indices)
        deg = self.base_degrees[:]
        for k in self._fault:
            tpl[2 * k] = 0
            tpl[2 * k + 1] = 0
            u, v = self.edges[k]
            deg[u] -= 1
            deg[v] -= 1
        self.degrees = deg

    def max_flow(self, s: int, t: int, cutoff: int | None = None) -> int:
        """Exact max number of edge-disjoint s-t paths, capped at cutoff."""
        flow, _ = self._run(s, t, cutoff)
        return flow

    def max_flow_with_side(self, s: int, t: int) -> tuple[int, list[bool]]:
        """Max flow plus the source-side reachable set of the final residual."""
        return self._run(s, t, None)

    def min_cut(self, s: int, t: int) -> tuple[int, list[tuple[int, int]]]:
        """(flow value, cut edges) where the cut crosses the residual s-side.

        The returned edges exclude faulted ones and |cut| equals the value.
        """
        flow, side = self._run(s, t, None)
        faulted = set(self._fault)
        cut = [
            (u, v)
            for k, (u, v) in enumerate(self.edges)
            if k not in faulted and side[u] != side[v]
        ]
        return flow, cut

    def _run(self, s: int, t: int, cutoff: int | None) -> tuple[int, list[bool]]:
        cap = self._cap
        cap[:] = self._template
        head = self.head
        adj = self.adj
        n = self.n
        flow = 0
        side = [False] * n
        while cutoff is None or flow < cutoff:
            parent = [-1] * n
            parent[s] = -2
            queue = deque((s,))
            reached = False
            while queue:
                u = queue.popleft()
                for a in adj[u]:
                    if cap[a]:
                        v = head[a]
                        if parent[v] == -1:
                            parent[v] = a
                            if v == t:
                                reached = True
                                queue.clear()
                                break
                            queue.append(v)
            if not reached:
                side = [p != -1 for p in parent]
                break
            v = t
            while v != s:
                a = parent[v]
                cap[a] -= 1
                cap[a ^ 1] += 1
                v = head[a ^ 1]
            flow += 1
        return flow, side

    def gusfield_tree(self) -> tuple[list[int], list[int]]:
        """Equivalent-flow tree: (parent, weight) arrays, vertex 0 is the root.

        The minimum s-t edge cut equals the smallest weight on the s-t path
        of this tree, for every vertex pair.
        """
        n = self.n
        parent = [0] * n
        weight = [0] * n
        for i in range(1, n):
            t = parent[i]
            flow, side = self.max_flow_with_side(i, t)
            weight[i] = flow
            for j in range(i + 1, n):
                if parent[j] == t and side[j]:
                    parent[j] = i
        return parent, weight

    def all_pairs_min_cut(self) -> list[list[int]]:
        """Matrix of min cut values for all pairs, via the Gusfield tree."""
        n = self.n
        parent, weight = self.gusfield_tree()
        tree: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for i in range(1, n):
            tree[i].append((parent[i], weight[i]))
            tree[parent[i]].append((i, weight[i]))
        inf = float("inf")
        out = [[0] * n for _ in range(n)]
        for root in range(n):
            row = out[root]
            seen = [False] * n
            seen[root] = True
            stack = [(root, inf)]
            while stack:
                u, running = stack.pop()
                for v, w in tree[u]:
                    if not seen[v]:
                        seen[v] = True
                        m = running if running < w else w
                        row[v] = m
                        stack.append((v, m))
        return out


class DirectedFlow:
    """Plain BFS-augmenting max flow on a directed graph with integer caps."""

    def __init__(self, n_nodes: int):
        self.n = n_nodes
        self.head: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n_nodes)]

    def add_arc(self, u: int, v: int, capacity: int) -> None:
        self.adj[u].append(len(self.head))
        self.head.append(v)
        self.cap.append(capacity)
        self.adj[v].append(len(self.head))
        self.head.append(u)
        self.cap.append(0)

    def max_flow(self, s: int, t: int, snapshot: list[int] | None = None) -> int:
        """Run to completion; `snapshot` restores capacities first if given."""
        cap = self.cap
        if snapshot is not None:
            cap[:] = snapshot
        head = self.head
        adj = self.adj
        n = self.n
        flow = 0
        while True:
            parent = [-1] * n
            parent[s] = -2
            queue = deque((s,))
            reached = False
            while queue:
                u = queue.popleft()
                for a in adj[u]:
                    if cap[a]:
                        v = head[a]
                        if parent[v] == -1:
                            parent[v] = a
                            if v == t:
                                reached = True
                                queue.clear()
                                break
                            queue.append(v)
            if not reached:
                return flow
            # bottleneck along the path
            bottleneck = None
            v = t
            while v != s:
                a = parent[v]
                if bottleneck is None or cap[a] < bottleneck:
                    bottleneck = cap[a]
                v = head[a ^ 1]
            v = t
            while v != s:
                a = parent[v]
                cap[a] -= bottleneck
                cap[a ^ 1] += bottleneck
                v = head[a ^ 1]
            flow += bottleneck
