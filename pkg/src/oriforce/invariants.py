"""Exact oracles for the classical invariants the solvers are checked against.

Everything here is exhaustive or dynamic programming over vertex subsets and
is intentionally independent of the forcing engine: these values are used to
cross-validate the forcing solvers, so they must not share code paths with
them.  All searches are deterministic; maximum independent sets and cliques
are the lexicographically least optima.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import LimitError, ParameterError
from .graphs import Graph, OrientedGraph, mask_vertices

ALPHA_LIMIT = 20
MATCHING_LIMIT = 16
MIM_LIMIT = 16
PATH_COVER_LIMIT = 14
TREE_COVER_LIMIT = 12
KARY_COVER_LIMIT = 12


@dataclass(frozen=True)
class InvariantValue:
    name: str
    value: int | Fraction
    witness: Any = None

    def to_payload(self) -> dict:
        w = self.witness
        if isinstance(w, frozenset):
            w = sorted(w)
        value = self.value
        if isinstance(value, Fraction):
            value = {"num": value.numerator, "den": value.denominator}
        return {"name": self.name, "value": value, "witness": w}


def _require(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise LimitError(f"{what} is limited to n <= {limit}, got n = {n}")


# ---------------------------------------------------------------------------
# independent sets and cliques


def _max_independent_mask(adj_masks, n: int) -> tuple[int, int]:
    """Size and lexicographically least maximum independent set (as a mask).

    Include-first branch and bound on the lowest available vertex; the first
    optimum found in that order is the lexicographically least one.
    """
    best_size = 0
    best_mask = 0
    full = (1 << n) - 1

    def dfs(avail: int, cur_mask: int, cur_size: int) -> None:
        nonlocal best_size, best_mask
        if not avail:
            if cur_size > best_size:
                best_size, best_mask = cur_size, cur_mask
            return
        if cur_size + avail.bit_count() <= best_size:
            return
        lsb = avail & -avail
        v = lsb.bit_length() - 1
        dfs(avail & ~(adj_masks[v] | lsb), cur_mask | lsb, cur_size + 1)
        dfs(avail ^ lsb, cur_mask, cur_size)

    dfs(full, 0, 0)
    return best_size, best_mask


def independence_number(g: Graph) -> InvariantValue:
    _require(g.n, ALPHA_LIMIT, "independence_number")
    size, mask = _max_independent_mask(g.adj_masks, g.n)
    witness = frozenset(mask_vertices(mask))
    for u in witness:
        if g.adj_masks[u] & mask:
            raise AssertionError("independent-set witness touches an edge")
    return InvariantValue("alpha", size, witness)


def clique_number(g: Graph) -> InvariantValue:
    _require(g.n, ALPHA_LIMIT, "clique_number")
    size, mask = _max_independent_mask(g.complement().adj_masks, g.n)
    witness = frozenset(mask_vertices(mask))
    for u in witness:
        for v in witness:
            if u < v and not g.has_edge(u, v):
                raise AssertionError("clique witness misses an edge")
    return InvariantValue("clique", size, witness)


# ---------------------------------------------------------------------------
# matchings


def matching_number(g: Graph) -> InvariantValue:
    _require(g.n, MATCHING_LIMIT, "matching_number")
    adj = g.adj_masks
    memo: dict[int, int] = {0: 0}

    def best(mask: int) -> int:
        val = memo.get(mask)
        if val is not None:
            return val
        lsb = mask & -mask
        v = lsb.bit_length() - 1
        rest = mask ^ lsb
        val = best(rest)  # leave v unmatched
        cand = adj[v] & rest
        while cand:
            wl = cand & -cand
            cand ^= wl
            val = max(val, 1 + best(rest ^ wl))
        memo[mask] = val
        return val

    full = (1 << g.n) - 1
    value = best(full)
    # deterministic reconstruction: first choice achieving the value
    edges = []
    mask = full
    while mask:
        lsb = mask & -mask
        v = lsb.bit_length() - 1
        rest = mask ^ lsb
        if best(rest) == best(mask):
            mask = rest
            continue
        cand = adj[v] & rest
        while cand:
            wl = cand & -cand
            cand ^= wl
            if 1 + best(rest ^ wl) == best(mask):
                edges.append((v, wl.bit_length() - 1))
                mask = rest ^ wl
                break
    witness = tuple(sorted((min(a, b), max(a, b)) for a, b in edges))
    if len(witness) != value:
        raise AssertionError("matching reconstruction lost edges")
    return InvariantValue("matching", value, witness)


def induced_matching_number(g: Graph) -> InvariantValue:
    """Largest matching whose endpoints induce exactly that matching."""
    _require(g.n, MIM_LIMIT, "induced_matching_number")
    adj = g.adj_masks
    memo: dict[int, int] = {0: 0}

    def best(mask: int) -> int:
        val = memo.get(mask)
        if val is not None:
            return val
        lsb = mask & -mask
        v = lsb.bit_length() - 1
        val = best(mask ^ lsb)  # skip v entirely
        cand = adj[v] & mask
        while cand:
            wl = cand & -cand
            cand ^= wl
            w = wl.bit_length() - 1
            # taking edge (v, w) bans both closed neighbourhoods
            banned = adj[v] | adj[w] | lsb | wl
            val = max(val, 1 + best(mask & ~banned))
        memo[mask] = val
        return val

    full = (1 << g.n) - 1
    value = best(full)
    edges = []
    mask = full
    while mask and len(edges) < value:
        lsb = mask & -mask
        v = lsb.bit_length() - 1
        if best(mask ^ lsb) == best(mask):
            mask ^= lsb
            continue
        cand = adj[v] & mask
        while cand:
            wl = cand & -cand
            cand ^= wl
            w = wl.bit_length() - 1
            banned = adj[v] | adj[w] | lsb | wl
            if 1 + best(mask & ~banned) == best(mask):
                edges.append((v, w))
                mask &= ~banned
                break
    witness = tuple(sorted((min(a, b), max(a, b)) for a, b in edges))
    return InvariantValue("induced_matching", value, witness)


# ---------------------------------------------------------------------------
# covering numbers via subset dynamic programming


def _ham_endpoint_table(adj_masks, n: int) -> list[int]:
    """reach[mask] = vertices that can end a Hamiltonian path of mask."""
    reach = [0] * (1 << n)
    for v in range(n):
        reach[1 << v] = 1 << v
    for mask in range(1, 1 << n):
        if mask & (mask - 1) == 0:
            continue
        r = 0
        rem = mask
        while rem:
            lsb = rem & -rem
            rem ^= lsb
            v = lsb.bit_length() - 1
            if reach[mask ^ lsb] & adj_masks[v]:
                r |= lsb
        reach[mask] = r
    return reach


def _ham_path_from(adj_masks, reach, mask: int, endpoint: int) -> list[int]:
    """Reconstruct a Hamiltonian path of mask ending at endpoint."""
    path = [endpoint]
    cur = endpoint
    while mask != 1 << cur:
        mask ^= 1 << cur
        cand = reach[mask] & adj_masks[cur]
        lsb = cand & -cand
        cur = lsb.bit_length() - 1
        path.append(cur)
    path.reverse()
    return path


def _min_cover(n: int, feasible: list[bool]) -> tuple[int, list[int]]:
    """Partition 0..n-1 into the fewest feasible blocks (subset DP)."""
    full = (1 << n) - 1
    INF = n + 1
    cost = [INF] * (full + 1)
    choice = [0] * (full + 1)
    cost[0] = 0
    for mask in range(1, full + 1):
        low = mask & -mask
        sub = mask
        best = INF
        pick = 0
        while sub:
            if sub & low and feasible[sub]:
                c = cost[mask ^ sub] + 1
                if c < best:
                    best, pick = c, sub
            sub = (sub - 1) & mask
        cost[mask] = best
        choice[mask] = pick
    blocks = []
    mask = full
    while mask:
        blocks.append(choice[mask])
        mask ^= choice[mask]
    return cost[full], blocks


def path_cover_number(g: Graph) -> InvariantValue:
    """Minimum number of vertex-disjoint paths covering all vertices."""
    _require(g.n, PATH_COVER_LIMIT, "path_cover_number")
    if g.n == 0:
        return InvariantValue("rho", 0, ())
    reach = _ham_endpoint_table(g.adj_masks, g.n)
    feasible = [bool(reach[mask]) for mask in range(1 << g.n)]
    value, blocks = _min_cover(g.n, feasible)
    paths = []
    for mask in blocks:
        end = reach[mask] & -reach[mask]
        paths.append(tuple(_ham_path_from(g.adj_masks, reach, mask, end.bit_length() - 1)))
    witness = tuple(sorted(paths))
    _validate_path_cover(g, witness)
    return InvariantValue("rho", value, witness)


def _validate_path_cover(g: Graph, paths) -> None:
    seen: set[int] = set()
    for p in paths:
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                raise AssertionError("path cover witness uses a non-edge")
        if seen & set(p):
            raise AssertionError("path cover witness repeats a vertex")
        seen |= set(p)
    if seen != set(range(g.n)):
        raise AssertionError("path cover witness misses vertices")


def _bounded_degree_spanning_tree(g: Graph, block: int, cap: int) -> list[tuple[int, int]] | None:
    """Edges of a spanning tree of g[block] with maximum degree <= cap,
    or None.  Include/exclude backtracking over the block's edges with a
    connectivity count prune; exact at desk scale."""
    verts = mask_vertices(block)
    nv = len(verts)
    if nv == 1:
        return []
    pos = {v: i for i, v in enumerate(verts)}
    edges = [(u, v) for (u, v) in g.edges if block >> u & 1 and block >> v & 1]
    target = nv - 1

    def find(par, x):
        while par[x] != x:
            par[x] = par[par[x]]
            x = par[x]
        return x

    def bt(idx, par, deg, chosen):
        if len(chosen) == target:
            return list(chosen)
        if len(edges) - idx < target - len(chosen):
            return None
        u, v = edges[idx]
        pu, pv = find(par, pos[u]), find(par, pos[v])
        if pu != pv and deg[pos[u]] < cap and deg[pos[v]] < cap:
            par2 = list(par)
            deg2 = list(deg)
            par2[pu] = pv
            deg2[pos[u]] += 1
            deg2[pos[v]] += 1
            chosen.append((u, v))
            got = bt(idx + 1, par2, deg2, chosen)
            if got is not None:
                return got
            chosen.pop()
        return bt(idx + 1, par, deg, chosen)

    return bt(0, list(range(nv)), [0] * nv, [])


def tree_cover_number(g: Graph, k: int) -> InvariantValue:
    """Minimum number of vertex-disjoint trees of maximum degree <= k+1
    covering all vertices.  Witness parts are (vertices, edges, root) with
    the root a vertex of tree-degree <= k, ready to orient away from."""
    if k < 1:
        raise ParameterError("k must be a positive integer")
    _require(g.n, TREE_COVER_LIMIT, "tree_cover_number")
    if g.n == 0:
        return InvariantValue(f"tree_cover_{k}", 0, ())
    cap = k + 1
    trees: dict[int, list[tuple[int, int]] | None] = {}
    if cap == 2:
        # a degree-<=2 spanning tree is a Hamiltonian path
        reach = _ham_endpoint_table(g.adj_masks, g.n)
        for mask in range(1, 1 << g.n):
            if mask & (mask - 1) == 0:
                trees[mask] = []
            elif reach[mask]:
                end = reach[mask] & -reach[mask]
                path = _ham_path_from(g.adj_masks, reach, mask, end.bit_length() - 1)
                trees[mask] = list(zip(path, path[1:]))
            else:
                trees[mask] = None
    else:
        for mask in range(1, 1 << g.n):
            trees[mask] = _bounded_degree_spanning_tree(g, mask, cap)
    feasible = [False] + [trees[mask] is not None for mask in range(1, 1 << g.n)]
    value, blocks = _min_cover(g.n, feasible)
    parts = []
    for mask in blocks:
        verts = mask_vertices(mask)
        edges = tuple(sorted((min(a, b), max(a, b)) for a, b in trees[mask]))
        deg = {v: 0 for v in verts}
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
        root = min(v for v in verts if deg[v] <= k)
        parts.append((verts, edges, root))
    return InvariantValue(f"tree_cover_{k}", value, tuple(sorted(parts)))


def _directed_ham_path_rooted(out_masks, block: int, root: int) -> list[int] | None:
    """Directed Hamiltonian path of block starting at root, if any."""
    if block.bit_count() == 1:
        return [root]
    frontier = [(1 << root, root)]
    parent: dict[tuple[int, int], tuple[int, int] | None] = {(1 << root, root): None}
    while frontier:
        nxt = []
        for mask, last in frontier:
            ext = out_masks[last] & block & ~mask
            while ext:
                lsb = ext & -ext
                ext ^= lsb
                w = lsb.bit_length() - 1
                key = (mask | lsb, w)
                if key not in parent:
                    parent[key] = (mask, last)
                    if key[0] == block:
                        # walk back
                        path = [w]
                        cur: tuple[int, int] | None = (mask, last)
                        while cur is not None:
                            path.append(cur[1])
                            cur = parent[cur]
                        path.reverse()
                        return path
                    nxt.append(key)
        frontier = nxt
    return None


def _kary_out_tree(d: OrientedGraph, block: int, root: int, k: int) -> dict[int, int] | None:
    """Parent map of a spanning out-tree of d's arcs inside block, rooted at
    root, every vertex with at most k children; None if impossible."""
    if k == 1:
        path = _directed_ham_path_rooted(d.out_masks, block, root)
        if path is None:
            return None
        return {b: a for a, b in zip(path, path[1:])}
    arcs = [(t, h) for (t, h) in d.arcs if block >> t & 1 and block >> h & 1]
    need = block.bit_count() - 1
    if need == 0:
        return {}
    # suffix_heads[i] = heads still reachable using arcs[i:]
    suffix_heads = [0] * (len(arcs) + 1)
    for i in range(len(arcs) - 1, -1, -1):
        suffix_heads[i] = suffix_heads[i + 1] | 1 << arcs[i][1]

    def bt(idx: int, tree: int, kids: dict[int, int], parent: dict[int, int]):
        if len(parent) == need:
            return dict(parent)
        if len(arcs) - idx < need - len(parent):
            return None
        # every uncovered vertex still needs an incoming arc ahead
        if block & ~tree & ~suffix_heads[idx]:
            return None
        t, h = arcs[idx]
        if tree >> t & 1 and not tree >> h & 1 and kids.get(t, 0) < k:
            kids[t] = kids.get(t, 0) + 1
            parent[h] = t
            got = bt(idx + 1, tree | 1 << h, kids, parent)
            if got is not None:
                return got
            kids[t] -= 1
            del parent[h]
        return bt(idx + 1, tree, kids, parent)

    return bt(0, 1 << root, {}, {})


def _induced_kary_block(d: OrientedGraph, block: int, k: int) -> dict[int, int] | None:
    """Strict reading: the arcs inside block must themselves form a k-ary
    out-tree.  Purely structural check, no search."""
    arcs = [(t, h) for (t, h) in d.arcs if block >> t & 1 and block >> h & 1]
    size = block.bit_count()
    if len(arcs) != size - 1:
        return None
    indeg: dict[int, int] = {}
    kids: dict[int, int] = {}
    for t, h in arcs:
        indeg[h] = indeg.get(h, 0) + 1
        kids[t] = kids.get(t, 0) + 1
    if any(c > k for c in kids.values()):
        return None
    roots = [v for v in mask_vertices(block) if indeg.get(v, 0) == 0]
    if len(roots) != 1:
        return None
    # reachability from the single root certifies the tree shape
    seen = 1 << roots[0]
    frontier = [roots[0]]
    out = {v: [] for v in mask_vertices(block)}
    for t, h in arcs:
        out[t].append(h)
    while frontier:
        v = frontier.pop()
        for w in out[v]:
            if not seen >> w & 1:
                seen |= 1 << w
                frontier.append(w)
    if seen != block:
        return None
    return {h: t for t, h in arcs}


def induced_kary_cover_number(d: OrientedGraph, k: int, strict: bool = False) -> InvariantValue:
    """Minimum number of vertex-disjoint k-ary out-trees of d covering all
    vertices.  The default reading allows a tree to be any sub-arc-set of
    the block; strict=True requires the block's full arc set to be the tree."""
    if k < 1:
        raise ParameterError("k must be a positive integer")
    _require(d.n, KARY_COVER_LIMIT, "induced_kary_cover_number")
    if d.n == 0:
        return InvariantValue(f"kary_cover_{k}", 0, ())
    found: dict[int, tuple[int, dict[int, int]] | None] = {}
    for block in range(1, 1 << d.n):
        got = None
        if strict:
            pm = _induced_kary_block(d, block, k)
            if pm is not None:
                roots = [v for v in mask_vertices(block) if v not in pm]
                got = (roots[0], pm)
        else:
            for root in mask_vertices(block):
                pm = _kary_out_tree(d, block, root, k)
                if pm is not None:
                    got = (root, pm)
                    break
        found[block] = got
    feasible = [False] + [found[b] is not None for b in range(1, 1 << d.n)]
    value, blocks = _min_cover(d.n, feasible)
    parts = []
    for mask in blocks:
        root, pm = found[mask]
        parts.append((mask_vertices(mask), root, tuple(sorted((p, c) for c, p in pm.items()))))
    return InvariantValue(f"kary_cover_{k}", value, tuple(sorted(parts)))


def diameter(g: Graph) -> InvariantValue:
    d = g.diameter()
    if d is None:
        raise ParameterError("diameter is defined for nonempty connected graphs")
    return InvariantValue("diameter", d)
