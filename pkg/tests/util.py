"""Shared helpers for the test suite: cached corpus builders and oracles."""

from __future__ import annotations

from functools import lru_cache

from hlmenger import (
    Graph,
    HLNetwork,
    LineGraph,
    NAMED_FAMILIES,
    build_graph,
    components,
    gen_family,
    gen_random_hl,
    max_edge_disjoint_paths,
    remove_edges,
)
from hlmenger.linegraph import line_graph_of_hl
from hlmenger.rng import SplitMix64

RANDOM_SEEDS = (1, 2, 3, 4, 5)


@lru_cache(maxsize=None)
def network(kind: str, n: int, seed: int | None = None) -> HLNetwork:
    if kind == "random":
        return gen_random_hl(n, seed)
    return gen_family(kind, n)


@lru_cache(maxsize=None)
def lgraph(kind: str, n: int, seed: int | None = None) -> LineGraph:
    return line_graph_of_hl(network(kind, n, seed))


def corpus(n: int) -> list[tuple[str, HLNetwork]]:
    """The acceptance corpus: every named family plus five seeded randoms."""
    out = [(kind, network(kind, n)) for kind in NAMED_FAMILIES]
    out.extend((f"random{s}", network("random", n, s)) for s in RANDOM_SEEDS)
    return out


def random_graph(seed: int, max_vertices: int = 8, max_edges: int = 14) -> Graph:
    """Seeded random simple graph within the given size bounds.

    The edge count takes the max of two uniform draws to bias toward
    denser graphs, which exercise larger cut values.
    """
    rng = SplitMix64(seed)
    n = 2 + rng.randbelow(max_vertices - 1)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    cap = min(max_edges, len(pairs))
    k = max(rng.randbelow(cap + 1), rng.randbelow(cap + 1))
    idx = rng.sample_indices(len(pairs), k)
    return build_graph(n, [pairs[i] for i in idx])


def naive_is_smec(g: Graph) -> tuple[bool, tuple | None]:
    """Direct pair-by-pair SMEC check, independent of the Gusfield tree."""
    for u in range(g.n_vertices):
        for v in range(u + 1, g.n_vertices):
            required = min(g.degree(u), g.degree(v))
            if required == 0:
                continue
            if max_edge_disjoint_paths(g, u, v).value < required:
                return False, (u, v)
    return True, None


def cut_disconnects(g: Graph, u: int, v: int, cut) -> bool:
    """True iff removing the cut edges separates u from v in g."""
    stripped = remove_edges(g, [tuple(e) for e in cut])
    comp = next(c for c in components(stripped) if u in c)
    return v not in comp
