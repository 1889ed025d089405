"""Strong Menger edge connectivity verification under edge faults.

A graph is strongly Menger edge connected (SMEC) when every pair of distinct
vertices u, v is joined by min(deg(u), deg(v)) edge-disjoint paths. The
checks here inject edge fault sets into a line graph and verify either the
SMEC predicate or the giant-component floor, exhaustively or by seeded
sampling, in unconditional or conditional (min degree >= 2 after faults)
mode. Two explicit fault constructions certify that the fault-tolerance
bounds are tight.

All pairwise path counts are exact: per fault set the engine builds a
Gusfield equivalent-flow tree (n-1 max-flows) giving every pair's minimum
edge cut, and any violation is re-verified by a direct max-flow that also
extracts the cut certificate. Campaign enumeration order is canonical
(sizes ascending, then lexicographic by edge index) and sampled mode is
reproducible from its seed, so reports are byte-identical across runs and
worker counts.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Optional

from .flow import UnitFlowEngine
from .graph import BudgetExceeded, Edge, FaultSet, Graph, canonical_edge
from .linegraph import LineGraph, vertex_side
from .report import VerificationReport
from .rng import PRNG_NAME, SplitMix64
from . import _campaign_exec as _exec
from ._campaign_exec import smec_violation


@dataclass(frozen=True)
class SmecWitness:
    u: int
    v: int
    path_count: int
    required: int
    cut: tuple[Edge, ...]

    def to_dict(self) -> dict:
        return {
            "pair": [self.u, self.v],
            "path_count": self.path_count,
            "required": self.required,
            "cut": [list(e) for e in self.cut],
        }


@dataclass(frozen=True)
class SmecVerdict:
    holds: bool
    witness: Optional[SmecWitness] = None


@dataclass(frozen=True)
class FaultCampaign:
    """How to sweep fault sets over a graph.

    mode 'exhaustive' visits every canonical fault set of size <= m once;
    'sampled' draws `samples` seeded random sets, 80% of them at the
    maximum size m and 20% at a uniform smaller size (SMEC under faults is
    not assumed monotone in the fault count). In conditional mode sampled
    draws violating min degree >= 2 are rejected and redrawn while
    enumerated or adversarial sets are skipped; both tallies land in
    skipped_conditional. `budget` caps the exhaustive enumeration size.
    """

    mode: str                      # "exhaustive" | "sampled"
    m: int
    conditional: bool = False
    samples: int = 0
    seed: int = 0
    sizes_policy: str = "default"
    adversarial: bool = False
    budget: int = 10_000_000


@dataclass(frozen=True)
class FaultPartition:
    """Fault edges split by where they live relative to the two halves."""

    s1: frozenset[Edge]
    s2: frozenset[Edge]
    sf: frozenset[Edge]


@dataclass(frozen=True)
class TightnessWitness:
    """A constructed fault set certifying a fault-tolerance bound is sharp."""

    fault_set: tuple[Edge, ...]
    u: int
    v: int
    expected_max_paths: int


# ---------------------------------------------------------------------------
# SMEC predicate
# ---------------------------------------------------------------------------


def is_smec(g: Graph) -> SmecVerdict:
    """Does every distinct pair have min(deg u, deg v) edge-disjoint paths?

    Early-exits at the first violating pair in ascending (u, v) order and
    returns it with a minimum-cut certificate of the deficient path count.
    """
    engine = UnitFlowEngine(g.n_vertices, g.edges)
    hit = smec_violation(engine)
    if hit is None:
        return SmecVerdict(holds=True)
    u, v, paths, req = hit
    value, cut = engine.min_cut(u, v)
    if value != paths:
        raise RuntimeError("flow tree and direct max-flow disagree")
    return SmecVerdict(
        holds=False,
        witness=SmecWitness(u, v, paths, req, tuple(sorted(cut))),
    )


# ---------------------------------------------------------------------------
# Fault-set sources
# ---------------------------------------------------------------------------


def _incident_indices(g: Graph) -> list[list[int]]:
    incident: list[list[int]] = [[] for _ in range(g.n_vertices)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        incident[v].append(i)
    return incident


def adversarial_fault_indices(L: LineGraph, budget: int) -> list[tuple[int, ...]]:
    """Deterministic stress suite mirroring the extremal proof cases.

    Includes, deduplicated and capped at `budget` edges per set:
    * the first min(budget, deg v) incident edges of every vertex;
    * for every adjacent pair (v, u): the edges from v to all its other
      neighbors (a near-isolating split, leaving only the v-u link);
    * for every triangle and vertex assignment (u, u1, u2) with u3 the
      lowest remaining neighbor of u2: all edges at u2 except to
      {u, u1, u3} plus all edges at u1 except to {u, u2};
    * every contiguous window of `budget` f-incident edges, when the line
      graph knows its f-vertices.
    """
    g = L.graph
    if budget > len(g.edges):
        raise ValueError("budget exceeds the number of edges")
    incident = _incident_indices(g)
    ordered: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()

    def push(indices: Iterable[int]) -> None:
        key = tuple(sorted(set(indices)))
        if len(key) <= budget and key not in seen:
            seen.add(key)
            ordered.append(key)

    edge_index = {e: i for i, e in enumerate(g.edges)}

    for v in range(g.n_vertices):
        push(incident[v][: min(budget, len(incident[v]))])

    if budget >= 1:
        for v in range(g.n_vertices):
            for u in g.neighbors(v):
                keep = edge_index[canonical_edge(v, u)]
                split = [i for i in incident[v] if i != keep]
                push(split[:budget])

    for u, u1, u2 in _triangles(g):
        for a, b, c in ((u, u1, u2), (u, u2, u1), (u1, u, u2),
                        (u1, u2, u), (u2, u, u1), (u2, u1, u)):
            u3 = min((w for w in g.neighbors(c) if w not in (a, b)),
                     default=None)
            if u3 is None:
                continue
            keep_c = {a, b, u3}
            keep_b = {a, c}
            s = [edge_index[canonical_edge(c, w)]
                 for w in g.neighbors(c) if w not in keep_c]
            s += [edge_index[canonical_edge(b, w)]
                  for w in g.neighbors(b) if w not in keep_b]
            if len(s) <= budget:
                push(s)

    if L.f_vertices and budget >= 1:
        ef = sorted(
            i for i, (a, b) in enumerate(g.edges)
            if a in L.f_vertices or b in L.f_vertices)
        for start in range(len(ef) - budget + 1):
            push(ef[start:start + budget])

    return ordered


def adversarial_fault_sets(L: LineGraph, budget: int) -> list[FaultSet]:
    """The adversarial suite as FaultSet objects hosted by L.graph."""
    edges = L.graph.edges
    return [
        FaultSet.of(L.graph, (edges[i] for i in idx))
        for idx in adversarial_fault_indices(L, budget)
    ]


def _triangles(g: Graph) -> Iterator[tuple[int, int, int]]:
    """All triangles (a, b, c) with a < b < c, in lexicographic order."""
    for a in range(g.n_vertices):
        nbrs = [w for w in g.neighbors(a) if w > a]
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                b, c = nbrs[i], nbrs[j]
                if b > c:
                    b, c = c, b
                if g.has_edge(b, c):
                    yield a, b, c


def _exhaustive_count(n_edges: int, m: int) -> int:
    return sum(comb(n_edges, k) for k in range(m + 1))


def _sample_stream(g: Graph, c: FaultCampaign,
                   counters: dict) -> Iterator[tuple[int, ...]]:
    """Seeded draws; in conditional mode inadmissible draws are redrawn."""
    rng = SplitMix64(c.seed)
    n_edges = len(g.edges)
    base_deg = [g.degree(v) for v in range(g.n_vertices)]
    produced = 0
    while produced < c.samples:
        if c.m == 0:
            size = 0
        elif rng.randbelow(5) < 4:
            size = c.m
        else:
            size = rng.randbelow(c.m)
        idx = tuple(rng.sample_indices(n_edges, size))
        if c.conditional:
            deg = base_deg[:]
            ok = True
            for k in idx:
                a, b = g.edges[k]
                deg[a] -= 1
                deg[b] -= 1
            for k in idx:
                a, b = g.edges[k]
                if deg[a] < 2 or deg[b] < 2:
                    ok = False
                    break
            if not ok:
                counters["skipped_conditional"] += 1
                continue
        produced += 1
        yield idx


def _exhaustive_stream(n_edges: int, m: int) -> Iterator[tuple[int, ...]]:
    for k in range(m + 1):
        yield from combinations(range(n_edges), k)


# ---------------------------------------------------------------------------
# Campaign driver
# ---------------------------------------------------------------------------


def _drive(L: LineGraph, c: FaultCampaign, kind: str, floor: int,
           check_name: str, target: Optional[dict], jobs: int,
           extra_params: Optional[dict] = None) -> VerificationReport:
    g = L.graph
    n_edges = len(g.edges)
    if c.m > n_edges:
        raise ValueError(f"m={c.m} exceeds the {n_edges} available edges")
    if c.mode not in ("exhaustive", "sampled"):
        raise ValueError(f"unknown campaign mode {c.mode!r}")
    if c.mode == "exhaustive":
        total = _exhaustive_count(n_edges, c.m)
        if total > c.budget:
            raise BudgetExceeded(
                f"exhaustive sweep of {total} fault sets exceeds budget {c.budget}")
    elif c.conditional and g.min_degree() < 2:
        # every F has delta(G-F) <= delta(G) < 2: rejection would never end
        raise ValueError("graph already violates the min-degree-2 condition")

    started = time.perf_counter()
    counters = {"visited": 0, "skipped_conditional": 0, "failures": 0}

    adversarial = (adversarial_fault_indices(L, c.m) if c.adversarial else [])

    def stream() -> Iterator[tuple[int, ...]]:
        yield from adversarial
        if c.mode == "exhaustive":
            yield from _exhaustive_stream(n_edges, c.m)
        else:
            yield from _sample_stream(g, c, counters)

    witness = _exec.evaluate_stream(
        g, stream(), kind, floor, c.conditional, counters, jobs)

    if target is None:
        target = {"line_vertices": g.n_vertices, "line_edges": n_edges}
        if L.base_dimension is not None:
            target["base_dimension"] = L.base_dimension
    params = {
        "m": c.m,
        "mode": c.mode,
        "conditional": c.conditional,
        "samples": c.samples if c.mode == "sampled" else None,
        "seed": c.seed if c.mode == "sampled" else None,
        "sizes_policy": c.sizes_policy,
        "adversarial": c.adversarial,
        "adversarial_count": len(adversarial),
        "prng": PRNG_NAME,
        "pair_order": "ascending-lexicographic",
        "fault_order": "sizes-ascending-then-lex-by-edge-index",
    }
    if extra_params:
        params.update(extra_params)
    report = VerificationReport(
        check_name=check_name,
        target=target,
        mode=c.mode,
        parameters=params,
        counts=dict(counters),
        witness=witness,
        timing_seconds=time.perf_counter() - started,
    )
    return report


def run_campaign(L: LineGraph, c: FaultCampaign, jobs: int = 1,
                 target: Optional[dict] = None) -> VerificationReport:
    """Check SMEC of L minus every visited fault set of size <= c.m."""
    name = "cond-ft-smec" if c.conditional else "ft-smec"
    return _drive(L, c, "smec", 0, name, target, jobs)


def check_component_lemma(L: LineGraph, fault_budget: int, floor: int,
                          c: FaultCampaign, jobs: int = 1,
                          target: Optional[dict] = None) -> VerificationReport:
    """Assert L minus each visited fault set keeps a component >= floor."""
    if floor > L.graph.n_vertices:
        raise ValueError("floor exceeds the vertex count")
    c = replace(c, m=fault_budget)
    return _drive(L, c, "component", floor, "component-floor", target, jobs,
                  extra_params={"floor": floor})


# ---------------------------------------------------------------------------
# Tightness constructions
# ---------------------------------------------------------------------------


def _require_dimension(L: LineGraph, minimum: int, what: str) -> int:
    n = L.base_dimension
    if n is None:
        raise ValueError(f"{what} requires a line graph built from a "
                         "hypercube-like network")
    if n < minimum:
        raise ValueError(f"{what} requires dimension >= {minimum}, got {n}")
    return n


def tightness_unconditional(L: LineGraph) -> TightnessWitness:
    """Fault set of size 2n-3 that breaks SMEC, per the sharp bound.

    Deterministic choices: u0 is the lowest vertex id, u its lowest
    neighbor, v the lowest vertex outside u0's closed neighborhood. The
    faults remove every edge at u0 except the one to u, leaving u0 a dead
    end, so at most 2n-3 of u's 2n-2 edges can start disjoint u-v paths.
    """
    n = _require_dimension(L, 3, "the unconditional tightness construction")
    g = L.graph
    u0 = 0
    nbrs = g.neighbors(u0)
    u = min(nbrs)
    closed = set(nbrs) | {u0}
    v = min(w for w in range(g.n_vertices) if w not in closed)
    faults = tuple(sorted(
        canonical_edge(u0, w) for w in nbrs if w != u))
    if len(faults) != 2 * n - 3:
        raise RuntimeError("construction size mismatch; line graph is not "
                           f"{2 * n - 2}-regular")
    return TightnessWitness(faults, u, v, expected_max_paths=2 * n - 3)


def tightness_conditional(L: LineGraph) -> TightnessWitness:
    """Fault set of size 4n-9 with min degree >= 2 that still breaks SMEC.

    The triangle u < u1 < u2 is the three lowest line vertices sharing the
    lowest base vertex; u3 is u2's lowest neighbor outside the triangle.
    The faults strip u2 down to {u, u1, u3} and u1 down to {u, u2}, so the
    set {u, u1, u2} has only 2n-3 outgoing edges and any v outside its
    neighborhood is reachable by at most 2n-3 disjoint paths.
    """
    n = _require_dimension(L, 4, "the conditional tightness construction")
    g = L.graph
    base_x = 0  # base graph is n-regular with n >= 4, so degree >= 3 holds
    clique = sorted(
        i for i, e in enumerate(L.edge_of_vertex) if base_x in e)
    if len(clique) < 3:
        raise RuntimeError("no triangle at the lowest base vertex; "
                           "line graph integrity failure")
    u, u1, u2 = clique[:3]
    u3 = min((w for w in g.neighbors(u2) if w not in (u, u1)), default=None)
    if u3 is None:
        raise RuntimeError("u2 has no neighbor outside the triangle")
    keep_u2 = {u, u1, u3}
    keep_u1 = {u, u2}
    faults = set()
    for w in g.neighbors(u2):
        if w not in keep_u2:
            faults.add(canonical_edge(u2, w))
    for w in g.neighbors(u1):
        if w not in keep_u1:
            faults.add(canonical_edge(u1, w))
    if len(faults) != 4 * n - 9:
        raise RuntimeError("construction size mismatch; line graph is not "
                           f"{2 * n - 2}-regular")
    blocked = set(g.neighbors(u)) | set(g.neighbors(u1)) | set(g.neighbors(u2))
    blocked |= {u, u1, u2}
    v = min(w for w in range(g.n_vertices) if w not in blocked)
    return TightnessWitness(tuple(sorted(faults)), u, v,
                            expected_max_paths=2 * n - 3)


def check_tightness(L: LineGraph, conditional: bool,
                    all_witnesses: bool = False,
                    target: Optional[dict] = None) -> VerificationReport:
    """Run a tightness construction and confirm it certifies a violation.

    The report's `failures` count is the number of confirmed violating
    pairs (1 when the construction works, more under all_witnesses), so a
    working construction yields a counterexample report. With
    all_witnesses=True every admissible v is checked, not only the
    deterministic lowest one.
    """
    started = time.perf_counter()
    n = L.base_dimension
    g = L.graph
    witness = (tightness_conditional(L) if conditional
               else tightness_unconditional(L))
    engine = UnitFlowEngine(g.n_vertices, g.edges)
    edge_index = {e: i for i, e in enumerate(g.edges)}
    engine.set_fault_indices([edge_index[e] for e in witness.fault_set])
    deg = engine.degrees
    min_deg_after = min(deg)

    candidates = [witness.v]
    if all_witnesses:
        if conditional:
            tri = _triangle_of_conditional(L, witness)
            blocked = set(tri)
            for t in tri:
                blocked.update(g.neighbors(t))
        else:
            blocked = set(g.neighbors(0)) | {0}
        candidates = [w for w in range(g.n_vertices) if w not in blocked]

    confirmed = []
    for v in candidates:
        paths = engine.max_flow(witness.u, v)
        required = min(deg[witness.u], deg[v])
        if paths < required:
            _, cut = engine.min_cut(witness.u, v)
            confirmed.append({
                "pair": [witness.u, v],
                "path_count": paths,
                "required": required,
                "cut": sorted([list(e) for e in cut]),
            })

    first = confirmed[0] if confirmed else None
    result_witness = None
    if first is not None:
        result_witness = {
            "fault_edges": [list(e) for e in witness.fault_set],
            "fault_size": len(witness.fault_set),
            "expected_max_paths": witness.expected_max_paths,
            "min_degree_after": min_deg_after,
            **first,
        }
        if conditional:
            tri = _triangle_of_conditional(L, witness)
            result_witness["triangle"] = list(tri)
            result_witness["deg_u1_after"] = deg[tri[1]]
            result_witness["deg_u2_after"] = deg[tri[2]]
    report = VerificationReport(
        check_name="tight-cond" if conditional else "tight-uncond",
        target=target or {"line_vertices": g.n_vertices,
                          "base_dimension": n},
        mode="direct",
        parameters={
            "conditional": conditional,
            "all_witnesses": all_witnesses,
            "expected_fault_size": (4 * n - 9) if conditional else (2 * n - 3),
        },
        counts={"visited": len(candidates), "skipped_conditional": 0,
                "failures": len(confirmed)},
        witness=result_witness,
        details=confirmed if all_witnesses else [],
        timing_seconds=time.perf_counter() - started,
    )
    return report


def _triangle_of_conditional(L: LineGraph, w: TightnessWitness) -> tuple[int, int, int]:
    clique = sorted(i for i, e in enumerate(L.edge_of_vertex) if 0 in e)
    return clique[0], clique[1], clique[2]


# ---------------------------------------------------------------------------
# Fault partition diagnostics
# ---------------------------------------------------------------------------


def partition_faults(L: LineGraph, faults: FaultSet | Iterable[Edge]) -> FaultPartition:
    """Split a fault set into the halves' internal edges and f-incident edges."""
    if L.f_vertices is None:
        raise ValueError("partition requires a line graph with f-vertices")
    if isinstance(faults, FaultSet):
        if faults.host != L.graph:
            raise ValueError("fault set is hosted by a different graph")
        edges = faults.edges
    else:
        edges = frozenset(canonical_edge(u, v) for u, v in faults)
        missing = edges - frozenset(L.graph.edges)
        if missing:
            raise ValueError(f"edge {sorted(missing)[0]} not in the line graph")
    s1, s2, sf = set(), set(), set()
    for a, b in edges:
        sa, sb = vertex_side(L, a), vertex_side(L, b)
        if sa == -1 or sb == -1:
            sf.add((a, b))
        elif sa == 0 and sb == 0:
            s1.add((a, b))
        elif sa == 1 and sb == 1:
            s2.add((a, b))
        else:
            raise RuntimeError(f"edge ({a},{b}) spans the halves without an "
                               "f-vertex; line graph integrity failure")
    return FaultPartition(frozenset(s1), frozenset(s2), frozenset(sf))
