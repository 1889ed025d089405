"""Fault-campaign evaluation loop, inline or across worker processes.

Fault sets are consumed from the caller's stream in canonical order and
evaluated in fixed-size chunks, so the merged counts and the first-in-order
failure witness are identical whatever the worker count. Workers share
nothing: each builds its own flow engine from the (n, edges) layout once.
"""

from __future__ import annotations

from itertools import islice
from multiprocessing import Pool
from typing import Iterator, Optional

from .flow import UnitFlowEngine

_CHUNK_SIZE = 512
_SKIP = "skip"

_WORKER_STATE = None


def smec_violation(engine: UnitFlowEngine) -> Optional[tuple[int, int, int, int]]:
    """First (u, v, paths, required) in ascending pair order, or None.

    All pair values come from the engine's Gusfield tree; pairs whose
    smaller endpoint degree is 0 are vacuous.
    """
    deg = engine.degrees
    cuts = engine.all_pairs_min_cut()
    n = engine.n
    for u in range(n):
        du = deg[u]
        if du == 0:
            continue
        row = cuts[u]
        for v in range(u + 1, n):
            req = du if du < deg[v] else deg[v]
            if req and row[v] < req:
                return u, v, row[v], req
    return None


def largest_component_under_faults(n: int, edges, fault_idx) -> int:
    """Largest component size after deleting the given (sorted) edge indices."""
    parent = list(range(n))
    k = 0
    nf = len(fault_idx)
    for i, (u, v) in enumerate(edges):
        if k < nf and fault_idx[k] == i:
            k += 1
            continue
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        if u != v:
            parent[u] = v
    counts = [0] * n
    best = 0
    for x in range(n):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        c = counts[x] + 1
        counts[x] = c
        if c > best:
            best = c
    return best


def _evaluate_one(engine: UnitFlowEngine, n: int, edges, idx,
                  kind: str, floor: int, conditional: bool):
    """Returns None (pass), a witness dict (fail) or _SKIP (inadmissible)."""
    if kind == "component" and not conditional:
        size = largest_component_under_faults(n, edges, idx)
        if size < floor:
            return {
                "fault_edges": [list(edges[k]) for k in idx],
                "largest_component": size,
                "floor": floor,
            }
        return None

    engine.set_fault_indices(idx)
    if conditional and min(engine.degrees) < 2:
        return _SKIP

    if kind == "component":
        size = largest_component_under_faults(n, edges, idx)
        if size < floor:
            return {
                "fault_edges": [list(edges[k]) for k in idx],
                "largest_component": size,
                "floor": floor,
            }
        return None

    hit = smec_violation(engine)
    if hit is None:
        return None
    u, v, paths, req = hit
    value, cut = engine.min_cut(u, v)
    if value != paths:
        raise RuntimeError("flow tree and direct max-flow disagree")
    return {
        "fault_edges": [list(edges[k]) for k in idx],
        "pair": [u, v],
        "path_count": paths,
        "required": req,
        "cut": sorted([list(e) for e in cut]),
    }


def _init_worker(n, edges, kind, floor, conditional):
    global _WORKER_STATE
    _WORKER_STATE = (UnitFlowEngine(n, edges), n, edges, kind, floor, conditional)


def _run_chunk(chunk):
    engine, n, edges, kind, floor, conditional = _WORKER_STATE
    visited = skipped = failures = 0
    first = None
    for idx in chunk:
        out = _evaluate_one(engine, n, edges, idx, kind, floor, conditional)
        if out is _SKIP:
            skipped += 1
            continue
        visited += 1
        if out is not None:
            failures += 1
            if first is None:
                first = out
    return visited, skipped, failures, first


def _chunks(stream: Iterator, size: int) -> Iterator[list]:
    while True:
        block = list(islice(stream, size))
        if not block:
            return
        yield block


def evaluate_stream(g, stream, kind: str, floor: int, conditional: bool,
                    counters: dict, jobs: int) -> Optional[dict]:
    """Evaluate every fault set; returns the first-in-order failure witness."""
    n = g.n_vertices
    edges = g.edges
    first_witness = None

    if jobs <= 1:
        engine = UnitFlowEngine(n, edges)
        for idx in stream:
            out = _evaluate_one(engine, n, edges, idx, kind, floor, conditional)
            if out is _SKIP:
                counters["skipped_conditional"] += 1
                continue
            counters["visited"] += 1
            if out is not None:
                counters["failures"] += 1
                if first_witness is None:
                    first_witness = out
        return first_witness

    with Pool(jobs, initializer=_init_worker,
              initargs=(n, edges, kind, floor, conditional)) as pool:
        for visited, skipped, failures, first in pool.imap(
                _run_chunk, _chunks(stream, _CHUNK_SIZE)):
            counters["visited"] += visited
            counters["skipped_conditional"] += skipped
            counters["failures"] += failures
            if first is not None and first_witness is None:
                first_witness = first
    return first_witness
