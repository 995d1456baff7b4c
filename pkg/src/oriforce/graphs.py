"""Graph and orientation data model.

Vertices are the integers 0..n-1.  An undirected edge is stored as a pair
(u, v) with u < v, and the edge list is kept sorted lexicographically, so
edge identity is simply its position in that list.  An orientation packs
one bit per edge into an int: bit i set means edge i = (u, v) is the arc
u -> v (low endpoint towards high endpoint), clear means v -> u.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ParameterError


def _normalize_edges(n: int, edges: Iterable[Sequence[int]]) -> tuple[tuple[int, int], ...]:
    out = []
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise ParameterError(f"loop at vertex {u}")
        if u > v:
            u, v = v, u
        if not (0 <= u < n and 0 <= v < n):
            raise ParameterError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        out.append((u, v))
    out.sort()
    for a, b in zip(out, out[1:]):
        if a == b:
            raise ParameterError(f"duplicate edge {a}")
    return tuple(out)


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError("vertex count must be non-negative")
        object.__setattr__(self, "edges", _normalize_edges(self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def average_degree(self) -> Fraction:
        if self.n == 0:
            return Fraction(0)
        return Fraction(2 * self.m, self.n)

    @cached_property
    def _components(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components, each sorted, ordered by smallest vertex."""
        return self._components

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self._components) == 1

    def bfs_distances(self, source: int) -> list[int]:
        """Distances from source; -1 for unreachable vertices."""
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def diameter(self) -> int | None:
        """Largest pairwise distance, or None if disconnected (or n == 0)."""
        if self.n == 0:
            return None
        best = 0
        for v in range(self.n):
            dist = self.bfs_distances(v)
            if min(dist) < 0:
                return None
            best = max(best, max(dist))
        return best

    def bridges(self) -> list[tuple[int, int]]:
        """Cut edges, found by iterative DFS lowlink."""
        disc = [-1] * self.n
        low = [0] * self.n
        out: list[tuple[int, int]] = []
        timer = 0
        for root in range(self.n):
            if disc[root] >= 0:
                continue
            stack: list[tuple[int, int, int]] = [(root, -1, 0)]
            while stack:
                v, parent, idx = stack.pop()
                if idx == 0:
                    disc[v] = low[v] = timer
                    timer += 1
                nbrs = self.adjacency[v]
                advanced = False
                while idx < len(nbrs):
                    w = nbrs[idx]
                    idx += 1
                    if w == parent:
                        continue
                    if disc[w] < 0:
                        stack.append((v, parent, idx))
                        stack.append((w, v, 0))
                        advanced = True
                        break
                    low[v] = min(low[v], disc[w])
                if advanced:
                    continue
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        out.append((min(parent, v), max(parent, v)))
        out.sort()
        return out

    def is_two_edge_connected(self) -> bool:
        return self.n >= 2 and self.is_connected() and not self.bridges()

    def complement(self) -> "Graph":
        edges = [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.has_edge(u, v)
        ]
        return Graph(self.n, tuple(edges))

    def edge_mask(self, pair_index: dict[tuple[int, int], int]) -> int:
        mask = 0
        for e in self.edges:
            mask |= 1 << pair_index[e]
        return mask


@dataclass(frozen=True)
class OrientedGraph:
    """An orientation of a Graph: exactly one arc per underlying edge."""

    graph: Graph
    bits: int = 0

    def __post_init__(self):
        if not (0 <= self.bits < (1 << self.graph.m)):
            raise ParameterError(
                f"direction bits {self.bits} out of range for {self.graph.m} edges"
            )

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @cached_property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        """One (tail, head) per edge, in underlying edge order."""
        out = []
        for i, (u, v) in enumerate(self.graph.edges):
            out.append((u, v) if self.bits >> i & 1 else (v, u))
        return tuple(out)

    @cached_property
    def out_lists(self) -> tuple[tuple[int, ...], ...]:
        lists: list[list[int]] = [[] for _ in range(self.n)]
        for t, h in self.arcs:
            lists[t].append(h)
        return tuple(tuple(sorted(l)) for l in lists)

    @cached_property
    def in_lists(self) -> tuple[tuple[int, ...], ...]:
        lists: list[list[int]] = [[] for _ in range(self.n)]
        for t, h in self.arcs:
            lists[h].append(t)
        return tuple(tuple(sorted(l)) for l in lists)

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for t, h in self.arcs:
            masks[t] |= 1 << h
        return tuple(masks)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for t, h in self.arcs:
            masks[h] |= 1 << t
        return tuple(masks)

    def out_degree(self, v: int) -> int:
        return len(self.out_lists[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_lists[v])

    @property
    def max_out_degree(self) -> int:
        return max((len(l) for l in self.out_lists), default=0)

    @property
    def min_out_degree(self) -> int:
        return min((len(l) for l in self.out_lists), default=0)

    @property
    def max_in_degree(self) -> int:
        return max((len(l) for l in self.in_lists), default=0)

    @property
    def min_in_degree(self) -> int:
        return min((len(l) for l in self.in_lists), default=0)

    def has_arc(self, t: int, h: int) -> bool:
        return h in self.out_lists[t]

    def sources(self) -> frozenset[int]:
        """Vertices of in-degree 0; these sit in every forcing set."""
        return frozenset(v for v in range(self.n) if not self.in_lists[v])

    def reversal(self) -> "OrientedGraph":
        full = (1 << self.m) - 1
        return OrientedGraph(self.graph, self.bits ^ full)


def orient(g: Graph, direction: Sequence[int] | int) -> OrientedGraph:
    """Orient g by a direction bit per edge (bit/entry i, edge order)."""
    if isinstance(direction, int):
        return OrientedGraph(g, direction)
    if len(direction) != g.m:
        raise ParameterError(
            f"direction vector has length {len(direction)}, expected m={g.m}"
        )
    bits = 0
    for i, b in enumerate(direction):
        if b not in (0, 1):
            raise ParameterError(f"direction entries must be 0 or 1, got {b!r}")
        bits |= b << i
    return OrientedGraph(g, bits)


def reversal(d: OrientedGraph) -> OrientedGraph:
    return d.reversal()


def induced_subgraph(obj, vertices: Iterable[int]):
    """Restrict a Graph or OrientedGraph to a vertex set.

    Vertices are relabeled 0..|W|-1 preserving relative order.  Returns the
    restricted object together with the index map (new index -> old vertex).
    """
    keep = sorted(set(int(v) for v in vertices))
    if not keep:
        raise ParameterError("induced subgraph needs a nonempty vertex set")
    if isinstance(obj, OrientedGraph):
        g = obj.graph
    else:
        g = obj
    if keep[0] < 0 or keep[-1] >= g.n:
        raise ParameterError("vertex set reaches outside the graph")
    pos = {v: i for i, v in enumerate(keep)}
    kept_edges = []
    kept_dirs = []
    for i, (u, v) in enumerate(g.edges):
        if u in pos and v in pos:
            kept_edges.append((pos[u], pos[v]))
            if isinstance(obj, OrientedGraph):
                kept_dirs.append(obj.bits >> i & 1)
    sub = Graph(len(keep), tuple(kept_edges))
    index_map = tuple(keep)
    if isinstance(obj, OrientedGraph):
        bits = 0
        # relabeling preserves endpoint order, so direction bits carry over
        for j, b in enumerate(kept_dirs):
            bits |= b << j
        return OrientedGraph(sub, bits), index_map
    return sub, index_map


def weak_components(d: OrientedGraph) -> list[tuple[int, ...]]:
    """Weakly connected components of an orientation (= components of the
    underlying graph)."""
    return d.graph.components()


def vertex_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def mask_vertices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        lsb = mask & -mask
        out.append(lsb.bit_length() - 1)
        mask ^= lsb
    return tuple(out)
