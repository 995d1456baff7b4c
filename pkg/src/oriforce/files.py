"""Plain-text graph files and DOT export.

Undirected file (".ug"): first data line "n m", then m lines "u v" with
u < v, sorted.  Oriented file (".dg"): same header, then one "u v" line per
arc meaning u -> v, in underlying edge order.  Lines starting with "#" are
comments; blank lines are ignored.
"""

from __future__ import annotations

import os
from typing import Iterable

from .errors import ParameterError
from .graphs import Graph, OrientedGraph

UNDIRECTED_SUFFIX = ".ug"
ORIENTED_SUFFIX = ".dg"


def _data_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _parse_header(lines: list[str]) -> tuple[int, int]:
    if not lines:
        raise ParameterError("empty graph file")
    parts = lines[0].split()
    if len(parts) != 2:
        raise ParameterError(f"bad header line {lines[0]!r}; expected 'n m'")
    n, m = int(parts[0]), int(parts[1])
    if len(lines) - 1 != m:
        raise ParameterError(f"header declares {m} lines, found {len(lines) - 1}")
    return n, m


def _parse_pairs(lines: list[str]) -> list[tuple[int, int]]:
    pairs = []
    for line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise ParameterError(f"bad line {line!r}; expected 'u v'")
        pairs.append((int(parts[0]), int(parts[1])))
    return pairs


def read_graph(text: str) -> Graph:
    lines = _data_lines(text)
    n, _ = _parse_header(lines)
    return Graph(n, tuple(_parse_pairs(lines[1:])))


def read_oriented(text: str) -> OrientedGraph:
    lines = _data_lines(text)
    n, _ = _parse_header(lines)
    arcs = _parse_pairs(lines[1:])
    g = Graph(n, tuple(arcs))
    bits = 0
    for t, h in arcs:
        if t < h:
            bits |= 1 << g.edge_index[(t, h)]
    return OrientedGraph(g, bits)


def graph_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def oriented_text(d: OrientedGraph) -> str:
    lines = [f"{d.n} {d.m}"]
    lines += [f"{t} {h}" for t, h in d.arcs]
    return "\n".join(lines) + "\n"


def save(obj: Graph | OrientedGraph, path: str | os.PathLike) -> None:
    text = oriented_text(obj) if isinstance(obj, OrientedGraph) else graph_text(obj)
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)


def load_graph(path: str | os.PathLike) -> Graph:
    with open(path, encoding="ascii") as fh:
        return read_graph(fh.read())


def load_oriented(path: str | os.PathLike) -> OrientedGraph:
    with open(path, encoding="ascii") as fh:
        return read_oriented(fh.read())


def load_any(path: str | os.PathLike) -> Graph | OrientedGraph:
    """Pick the reader from the file suffix (.ug undirected, .dg oriented)."""
    name = os.fspath(path)
    if name.endswith(ORIENTED_SUFFIX):
        return load_oriented(path)
    if name.endswith(UNDIRECTED_SUFFIX):
        return load_graph(path)
    raise ParameterError(
        f"cannot tell the kind of {name!r}; use {UNDIRECTED_SUFFIX} or {ORIENTED_SUFFIX}"
    )


def to_dot(obj: Graph | OrientedGraph, colored: Iterable[int] = ()) -> str:
    """DOT text; vertices in `colored` are rendered filled."""
    filled = set(colored)
    if isinstance(obj, OrientedGraph):
        kind, sep, pairs = "digraph", "->", obj.arcs
    else:
        kind, sep, pairs = "graph", "--", obj.edges
    n = obj.n if isinstance(obj, OrientedGraph) else obj.n
    lines = [f"{kind} G {{"]
    for v in range(n):
        attrs = ' [style="filled"]' if v in filled else ""
        lines.append(f"  {v}{attrs};")
    for a, b in pairs:
        lines.append(f"  {a} {sep} {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
