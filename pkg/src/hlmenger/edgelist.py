"""Edge-list text format shared by all CLI subcommands.

Layout::

    p <n_vertices> <n_edges>
    e <u> <v>            one line per edge, 0-based, ascending (min,max) order
    l <v> <label>        optional label lines, ascending by vertex

Writers always emit the canonical ordering so identical graphs serialize to
identical bytes.
"""

from __future__ import annotations

from .graph import Graph, build_graph


def dumps(g: Graph) -> str:
    lines = [f"p {g.n_vertices} {len(g.edges)}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    if g.labels:
        lines.extend(f"l {v} {g.labels[v]}" for v in sorted(g.labels))
    return "\n".join(lines) + "\n"


def loads(text: str) -> Graph:
    n_vertices = None
    declared_edges = None
    edges: list[tuple[int, int]] = []
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "p":
            if n_vertices is not None:
                raise ValueError(f"line {lineno}: duplicate p line")
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: expected 'p <n> <m>'")
            n_vertices, declared_edges = int(parts[1]), int(parts[2])
        elif kind == "e":
            if n_vertices is None:
                raise ValueError(f"line {lineno}: e line before p line")
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: expected 'e <u> <v>'")
            edges.append((int(parts[1]), int(parts[2])))
        elif kind == "l":
            if n_vertices is None:
                raise ValueError(f"line {lineno}: l line before p line")
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: expected 'l <v> <label>'")
            labels[int(parts[1])] = parts[2]
        else:
            raise ValueError(f"line {lineno}: unknown record type {kind!r}")
    if n_vertices is None:
        raise ValueError("missing p line")
    if len(edges) != declared_edges:
        raise ValueError(
            f"p line declares {declared_edges} edges but {len(edges)} found")
    return build_graph(n_vertices, edges, labels or None)


def write_file(path, g: Graph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(g))


def read_file(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
