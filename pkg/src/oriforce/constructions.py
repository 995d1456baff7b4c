"""Orientations built to witness bounds, plus reachability machinery."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParameterError, PreconditionError
from .forcing import closure_set
from .graphs import Graph, OrientedGraph

# ---------------------------------------------------------------------------
# balanced orientation via Eulerian circuits


def balanced_orientation(g: Graph) -> OrientedGraph:
    """Orientation with |out-degree - in-degree| <= 1 at every vertex.

    Join an auxiliary vertex to all odd-degree vertices (making every degree
    even), walk an Eulerian circuit of each component, orient edges along
    the walk, and drop the auxiliary edges.  Deterministic: each circuit
    starts at the smallest vertex with unused edges and always leaves along
    the smallest-index unused edge.
    """
    if g.m == 0:
        return OrientedGraph(g, 0)
    aux = g.n
    edges = list(g.edges)
    odd = [v for v in range(g.n) if g.degree(v) % 2]
    edges += [(v, aux) for v in odd]
    incidence: list[list[int]] = [[] for _ in range(g.n + 1)]
    for i, (u, v) in enumerate(edges):
        incidence[u].append(i)
        incidence[v].append(i)
    used = [False] * len(edges)
    ptr = [0] * (g.n + 1)
    bits = 0
    for start in range(g.n + 1):
        if ptr[start] >= len(incidence[start]):
            continue
        while ptr[start] < len(incidence[start]) and used[incidence[start][ptr[start]]]:
            ptr[start] += 1
        if ptr[start] >= len(incidence[start]):
            continue
        stack = [start]
        walk = []
        while stack:
            v = stack[-1]
            inc = incidence[v]
            while ptr[v] < len(inc) and used[inc[ptr[v]]]:
                ptr[v] += 1
            if ptr[v] == len(inc):
                walk.append(stack.pop())
            else:
                ei = inc[ptr[v]]
                used[ei] = True
                a, b = edges[ei]
                stack.append(b if a == v else a)
        walk.reverse()
        for a, b in zip(walk, walk[1:]):
            if a == aux or b == aux:
                continue
            lo, hi = (a, b) if a < b else (b, a)
            if a == lo:
                bits |= 1 << g.edge_index[(lo, hi)]
    d = OrientedGraph(g, bits)
    for v in range(g.n):
        if abs(d.out_degree(v) - d.in_degree(v)) > 1:  # pragma: no cover
            raise AssertionError("balanced orientation construction out of balance")
    return d


def orient_away_from(g: Graph, independent: Iterable[int]) -> OrientedGraph:
    """Orient every edge at a vertex of the independent set away from it;
    remaining edges run low -> high.  Every member then has in-degree 0, so
    every forcing set of the result contains the whole set."""
    iset = frozenset(int(v) for v in independent)
    if any(v < 0 or v >= g.n for v in iset):
        raise ParameterError("independent set reaches outside the graph")
    for u, v in g.edges:
        if u in iset and v in iset:
            raise PreconditionError(f"set is not independent: edge ({u},{v}) inside it")
    bits = 0
    for i, (u, v) in enumerate(g.edges):
        if v in iset:
            continue  # arc v -> u means bit 0
        bits |= 1 << i  # u in iset, or neither: arc low -> high
    return OrientedGraph(g, bits)


# ---------------------------------------------------------------------------
# orientation of a tree cover


@dataclass(frozen=True)
class TreeCoverOrientation:
    orientation: OrientedGraph
    roots: frozenset[int]
    level: tuple[int, ...]  # level[v] = distance to the root of v's tree

    def to_payload(self) -> dict:
        return {
            "arcs": [list(a) for a in self.orientation.arcs],
            "roots": sorted(self.roots),
            "level": list(self.level),
        }


def tree_cover_orientation(
    g: Graph, cover: Sequence[tuple[Sequence[int], Sequence[tuple[int, int]], int]], k: int
) -> TreeCoverOrientation:
    """Orient g so that the cover's roots form a k-forcing set.

    `cover` lists (vertices, edges, root) parts that must partition the
    vertex set, each part's edges forming a spanning tree of its vertices
    with maximum degree <= k+1 and root degree <= k.  Tree edges point away
    from the roots; every remaining edge points from the higher level to the
    lower (ties: towards the earlier tree, then the smaller vertex), so
    forcing sweeps the levels outward from the roots.
    """
    if k < 1:
        raise ParameterError("k must be a positive integer")
    seen: set[int] = set()
    tree_of = [-1] * g.n
    level = [-1] * g.n
    roots = []
    tree_arcs: set[tuple[int, int]] = set()
    for t, (verts, edges, root) in enumerate(cover):
        vs = sorted(int(v) for v in verts)
        vset = set(vs)
        if len(vset) != len(vs):
            raise PreconditionError(f"part {t} repeats a vertex")
        if seen & vset:
            raise PreconditionError(f"part {t} overlaps an earlier part")
        seen |= vset
        if root not in vset:
            raise PreconditionError(f"part {t}: root {root} is not in the part")
        es = [tuple(sorted((int(a), int(b)))) for a, b in edges]
        if len(es) != len(vs) - 1:
            raise PreconditionError(f"part {t}: {len(es)} edges cannot span {len(vs)} vertices")
        deg: dict[int, int] = {v: 0 for v in vs}
        nbrs: dict[int, list[int]] = {v: [] for v in vs}
        for a, b in es:
            if (a, b) not in g.edge_index:
                raise PreconditionError(f"part {t}: ({a},{b}) is not an edge of the graph")
            if a not in vset or b not in vset:
                raise PreconditionError(f"part {t}: edge ({a},{b}) leaves the part")
            deg[a] += 1
            deg[b] += 1
            nbrs[a].append(b)
            nbrs[b].append(a)
        if max(deg.values()) > k + 1:
            raise PreconditionError(f"part {t}: tree degree exceeds {k + 1}")
        if deg[root] > k:
            raise PreconditionError(f"part {t}: root degree must be at most k={k}")
        # BFS from the root: connectivity check, levels, and arc directions
        level[root] = 0
        tree_of[root] = t
        queue = deque([root])
        reached = 1
        while queue:
            v = queue.popleft()
            for w in nbrs[v]:
                if level[w] < 0:
                    level[w] = level[v] + 1
                    tree_of[w] = t
                    tree_arcs.add((v, w))
                    reached += 1
                    queue.append(w)
        if reached != len(vs):
            raise PreconditionError(f"part {t}: edges do not form a tree on the part")
        roots.append(root)
    if seen != set(range(g.n)):
        raise PreconditionError("cover does not partition the vertex set")

    bits = 0
    for i, (u, v) in enumerate(g.edges):
        if (u, v) in tree_arcs:
            bits |= 1 << i
        elif (v, u) in tree_arcs:
            pass
        else:
            # cross or chord edge: point at the lower level; on equal levels
            # at the earlier tree, then at the smaller index
            key_u = (level[u], tree_of[u], u)
            key_v = (level[v], tree_of[v], v)
            if key_u < key_v:
                pass  # arc v -> u, bit stays 0
            else:
                bits |= 1 << i
    d = OrientedGraph(g, bits)
    root_set = frozenset(roots)
    if closure_set(d, root_set, k) != frozenset(range(g.n)):
        raise AssertionError("tree-cover orientation roots failed to force")
    return TreeCoverOrientation(d, root_set, tuple(level))


# ---------------------------------------------------------------------------
# strong components, condensation, reaching sets


@dataclass(frozen=True)
class Condensation:
    """Strongly connected components (sorted by smallest member) and the
    arcs between them."""

    components: tuple[tuple[int, ...], ...]
    component_of: tuple[int, ...]
    arcs: frozenset[tuple[int, int]]

    def source_components(self) -> list[int]:
        has_in = {b for _, b in self.arcs}
        return [i for i in range(len(self.components)) if i not in has_in]


def condensation(d: OrientedGraph) -> Condensation:
    """Tarjan's algorithm, iteratively."""
    n = d.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    comp_of = [-1] * n
    counter = [0]
    for root in range(n):
        if index[root] >= 0:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = low[v] = counter[0]
                counter[0] += 1
                stack.append(v)
                on_stack[v] = True
            outs = d.out_lists[v]
            recurse = False
            while pi < len(outs):
                w = outs[pi]
                pi += 1
                if index[w] < 0:
                    work.append((v, pi))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    comp_of[w] = len(comps)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    order = sorted(range(len(comps)), key=lambda i: comps[i][0])
    rank = {old: new for new, old in enumerate(order)}
    components = tuple(tuple(comps[i]) for i in order)
    component_of = tuple(rank[comp_of[v]] for v in range(n))
    arcs = frozenset(
        (component_of[t], component_of[h])
        for t, h in d.arcs
        if component_of[t] != component_of[h]
    )
    return Condensation(components, component_of, arcs)


@dataclass(frozen=True)
class ReachingSetResult:
    """A minimum set of roots from which every vertex is reachable, with the
    first-reaching component assignment (vertex -> index into roots)."""

    roots: tuple[int, ...]
    assignment: tuple[int, ...]

    def component(self, i: int) -> tuple[int, ...]:
        return tuple(v for v, r in enumerate(self.assignment) if r == i)


def min_reaching_set(d: OrientedGraph) -> ReachingSetResult:
    """Smallest vertex in each source component of the condensation; the
    number of such roots is the minimum over all reaching sets."""
    if d.n == 0:
        return ReachingSetResult((), ())
    cond = condensation(d)
    roots = sorted(cond.components[i][0] for i in cond.source_components())
    assignment = [-1] * d.n
    for i, r in enumerate(roots):
        frontier = deque([r])
        if assignment[r] < 0:
            assignment[r] = i
        while frontier:
            v = frontier.popleft()
            for w in d.out_lists[v]:
                if assignment[w] < 0:
                    assignment[w] = i
                    frontier.append(w)
    if min(assignment) < 0:  # pragma: no cover
        raise AssertionError("reaching roots failed to reach every vertex")
    return ReachingSetResult(tuple(roots), tuple(assignment))


def is_reachable(d: OrientedGraph) -> bool:
    """Some vertex reaches every other vertex."""
    return d.n >= 1 and len(min_reaching_set(d).roots) == 1


def is_strongly_reachable(d: OrientedGraph) -> bool:
    """Every vertex reaches every other vertex (one strong component)."""
    return d.n >= 1 and len(condensation(d).components) == 1
