"""Instance universes: exhaustive enumerations and isomorphism folding.

Verification sweeps are phrased over labeled universes (all orientations,
all labeled graphs, all labeled trees).  Since every quantity checked here
is invariant under relabeling, sweeps may fold the labeled universe into
isomorphism classes, solve one representative per class, and account for
the rest by orbit counting; the fold is exact (minimum adjacency mask over
all vertex permutations for graphs, canonical rooted codes for trees), and
class counts are cross-checked against closed-form labeled totals.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations, product
from multiprocessing import get_context
from typing import Iterator, Sequence

from .errors import LimitError, ParameterError
from .graphs import Graph, OrientedGraph

ORIENTATION_ENUM_LIMIT = 24
LABELED_GRAPH_LIMIT = 8
LABELED_TREE_LIMIT = 10
GRAPH_CLASS_LIMIT = 7


def enumerate_orientations(g: Graph, limit: int = ORIENTATION_ENUM_LIMIT) -> Iterator[OrientedGraph]:
    """All 2^m orientations, in increasing order of the direction bits."""
    if g.m > limit:
        raise LimitError(
            f"orientation enumeration is limited to m <= {limit}, got m = {g.m}"
        )
    for bits in range(1 << g.m):
        yield OrientedGraph(g, bits)


def enumerate_labeled_graphs(
    n: int, connected_only: bool = False, limit: int = LABELED_GRAPH_LIMIT
) -> Iterator[Graph]:
    """All labeled graphs on n vertices (optionally connected only)."""
    if n > limit:
        raise LimitError(f"labeled graph enumeration is limited to n <= {limit}, got n = {n}")
    if n < 0:
        raise ParameterError("n must be non-negative")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph(n, tuple(pairs[i] for i in range(len(pairs)) if mask >> i & 1))
        if connected_only and not g.is_connected():
            continue
        yield g


def prufer_edges(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    """Decode a Prufer sequence (length n-2) into the edges of its tree."""
    if n < 3 or len(seq) != n - 2:
        raise ParameterError("a Prufer sequence for n vertices has length n-2, n >= 3")
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        edges.append((leaf, x) if leaf < x else (x, leaf))
        deg[x] -= 1
        if deg[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def enumerate_labeled_trees(n: int, limit: int = LABELED_TREE_LIMIT) -> Iterator[Graph]:
    """All n^(n-2) labeled trees via Prufer decoding (n >= 3); n in {1, 2}
    are the trivial cases."""
    if n > limit:
        raise LimitError(f"labeled tree enumeration is limited to n <= {limit}, got n = {n}")
    if n < 1:
        raise ParameterError("n must be positive")
    if n == 1:
        yield Graph(1)
        return
    if n == 2:
        yield Graph(2, ((0, 1),))
        return
    for seq in product(range(n), repeat=n - 2):
        yield Graph(n, tuple(prufer_edges(seq, n)))


def random_orientation(g: Graph, rng: random.Random) -> OrientedGraph:
    bits = rng.getrandbits(g.m) if g.m else 0
    return OrientedGraph(g, bits)


# ---------------------------------------------------------------------------
# graph isomorphism classes (minimum adjacency mask over all permutations)


_CANON_CACHE: dict[int, tuple[list[tuple[int, int]], list[tuple[int, ...]]]] = {}


def _canon_tables(n: int):
    tables = _CANON_CACHE.get(n)
    if tables is None:
        pairs = list(combinations(range(n), 2))
        idx = {p: i for i, p in enumerate(pairs)}
        edge_maps = []
        for perm in permutations(range(n)):
            edge_maps.append(
                tuple(idx[tuple(sorted((perm[u], perm[v])))] for (u, v) in pairs)
            )
        tables = (pairs, edge_maps)
        _CANON_CACHE[n] = tables
    return tables


def _apply_edge_map(mask: int, em: tuple[int, ...]) -> int:
    out = 0
    while mask:
        lsb = mask & -mask
        mask ^= lsb
        out |= 1 << em[lsb.bit_length() - 1]
    return out


def canonical_graph_key(g: Graph, limit: int = GRAPH_CLASS_LIMIT) -> tuple[int, int]:
    """(n, minimum edge mask over all relabelings): equal keys iff isomorphic."""
    if g.n > limit:
        raise LimitError(f"canonical forms are limited to n <= {limit}, got n = {g.n}")
    if g.n <= 1:
        return (g.n, 0)
    pairs, edge_maps = _canon_tables(g.n)
    idx = {p: i for i, p in enumerate(pairs)}
    mask = 0
    for e in g.edges:
        mask |= 1 << idx[e]
    best = min(_apply_edge_map(mask, em) for em in edge_maps)
    return (g.n, best)


def _mask_connected(mask: int, n: int, pairs) -> bool:
    if n <= 1:
        return True
    adj = [0] * n
    rem = mask
    while rem:
        lsb = rem & -rem
        rem ^= lsb
        u, v = pairs[lsb.bit_length() - 1]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    seen = 1
    frontier = 1
    while frontier:
        nf = 0
        while frontier:
            lsb = frontier & -frontier
            frontier ^= lsb
            nf |= adj[lsb.bit_length() - 1]
        frontier = nf & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


_CLASS_CACHE: dict[int, list[tuple[Graph, int]]] = {}


def connected_graph_classes(n: int, limit: int = 6) -> list[tuple[Graph, int]]:
    """Isomorphism classes of connected graphs on n labeled vertices.

    Returns (representative, labeled count) pairs; representatives carry the
    minimum edge mask of their class, and the counts sum to the number of
    connected labeled graphs on n vertices.
    """
    if n > limit:
        raise LimitError(f"graph class folding is limited to n <= {limit}, got n = {n}")
    if n < 1:
        raise ParameterError("n must be positive")
    cached = _CLASS_CACHE.get(n)
    if cached is not None:
        return cached
    if n == 1:
        result = [(Graph(1), 1)]
        _CLASS_CACHE[n] = result
        return result
    pairs, edge_maps = _canon_tables(n)
    E = len(pairs)
    assigned = bytearray(1 << E)
    result = []
    for mask in range(1 << E):
        if assigned[mask]:
            continue
        orbit = {_apply_edge_map(mask, em) for em in edge_maps}
        for pm in orbit:
            assigned[pm] = 1
        if _mask_connected(mask, n, pairs):
            rep = Graph(n, tuple(pairs[i] for i in range(E) if mask >> i & 1))
            result.append((rep, len(orbit)))
    _CLASS_CACHE[n] = result
    return result


def connected_labeled_count(n: int) -> int:
    """Number of connected labeled graphs, by the classical recurrence
    (an oracle independent of the enumeration above)."""
    from math import comb

    total = [0] * (n + 1)
    for j in range(1, n + 1):
        total[j] = 2 ** comb(j, 2)
    conn = [0] * (n + 1)
    for j in range(1, n + 1):
        s = total[j]
        for i in range(1, j):
            s -= comb(j - 1, i - 1) * conn[i] * total[j - i]
        conn[j] = s
    return conn[n]


# ---------------------------------------------------------------------------
# tree isomorphism classes (canonical rooted codes at the centers)


def tree_code(n: int, edges) -> bytes:
    """Canonical code of a tree: strip leaves layer by layer, give every
    vertex the sorted concatenation of its shed neighbours' codes, and root
    the result at the one or two central vertices."""
    if n == 1:
        return b"C()"
    if n == 2:
        return b"B()()"
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    deg = [len(a) for a in adj]
    removed = [False] * n
    codes = [b""] * n
    child_codes: list[list[bytes]] = [[] for _ in range(n)]
    cur = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        for v in cur:
            removed[v] = True
            cc = child_codes[v]
            cc.sort()
            codes[v] = b"(" + b"".join(cc) + b")"
        remaining -= len(cur)
        for v in cur:
            for w in adj[v]:
                if not removed[w]:
                    child_codes[w].append(codes[v])
                    deg[w] -= 1
        if remaining <= 2:
            break
        cur = [v for v in range(n) if not removed[v] and deg[v] == 1]
    centers = [v for v in range(n) if not removed[v]]
    if len(centers) == 1:
        cc = child_codes[centers[0]]
        cc.sort()
        return b"C(" + b"".join(cc) + b")"
    a, b = centers
    ca = child_codes[a]
    ca.sort()
    cb = child_codes[b]
    cb.sort()
    wa = b"(" + b"".join(ca) + b")"
    wb = b"(" + b"".join(cb) + b")"
    if wb < wa:
        wa, wb = wb, wa
    return b"B" + wa + wb


def tree_from_code(code: bytes) -> Graph:
    """Rebuild the canonically labeled tree from its code (preorder labels)."""
    kind, body = code[:1], code[1:]
    edges: list[tuple[int, int]] = []
    counter = [0]

    def parse(i: int, parent: int) -> int:
        node = counter[0]
        counter[0] += 1
        if parent >= 0:
            edges.append((parent, node))
        if body[i : i + 1] != b"(":
            raise ParameterError(f"malformed tree code {code!r}")
        i += 1
        while body[i : i + 1] == b"(":
            i = parse(i, node)
        if body[i : i + 1] != b")":
            raise ParameterError(f"malformed tree code {code!r}")
        return i + 1

    if kind == b"C":
        end = parse(0, -1)
    elif kind == b"B":
        end = parse(0, -1)
        r2 = counter[0]
        end = parse(end, -1)
        edges.append((0, r2))
    else:
        raise ParameterError(f"malformed tree code {code!r}")
    if end != len(body):
        raise ParameterError(f"malformed tree code {code!r}")
    return Graph(counter[0], tuple(edges))


def _tree_census(n: int, first_digits: Sequence[int]) -> dict[bytes, int]:
    """Count labeled trees by canonical code over Prufer sequences whose
    first digit lies in first_digits.  The peeling uses locally interned
    structure ids and only translates to canonical bytes once per class."""
    intern: dict[tuple, int] = {}
    rev: list[tuple] = []
    counts: dict[int, int] = {}
    kind_of: dict[int, str] = {}

    def intern_id(key: tuple) -> int:
        got = intern.get(key)
        if got is None:
            got = len(rev)
            intern[key] = got
            rev.append(key)
        return got

    tail = n - 3  # digits after the first
    for d0 in first_digits:
        for rest in product(range(n), repeat=tail):
            # ---- decode (inlined Prufer walk) ----
            deg = [1] * n
            deg[d0] += 1
            for x in rest:
                deg[x] += 1
            adj: list[list[int]] = [[] for _ in range(n)]
            ptr = 0
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
            x = d0
            pos = -1
            while True:
                adj[leaf].append(x)
                adj[x].append(leaf)
                deg[x] -= 1
                if deg[x] == 1 and x < ptr:
                    leaf = x
                else:
                    ptr += 1
                    while deg[ptr] != 1:
                        ptr += 1
                    leaf = ptr
                pos += 1
                if pos == tail:
                    break
                x = rest[pos]
            adj[leaf].append(n - 1)
            adj[n - 1].append(leaf)
            # ---- canonical key (inlined center peeling) ----
            for v in range(n):
                deg[v] = len(adj[v])
            removed = [False] * n
            codes = [0] * n
            kids: list[list[int]] = [[] for _ in range(n)]
            cur = [v for v in range(n) if deg[v] == 1]
            remaining = n
            while remaining > 2:
                for v in cur:
                    removed[v] = True
                    kv = kids[v]
                    kv.sort()
                    codes[v] = intern_id(tuple(kv))
                remaining -= len(cur)
                for v in cur:
                    for w in adj[v]:
                        if not removed[w]:
                            kids[w].append(codes[v])
                            deg[w] -= 1
                if remaining <= 2:
                    break
                cur = [v for v in range(n) if not removed[v] and deg[v] == 1]
            centers = [v for v in range(n) if not removed[v]]
            if len(centers) == 1:
                kc = kids[centers[0]]
                kc.sort()
                key = intern_id(tuple(kc))
                kind_of[key] = "C"
            else:
                a, b = centers
                ka = kids[a]
                ka.sort()
                kb = kids[b]
                kb.sort()
                ia, ib = intern_id(tuple(ka)), intern_id(tuple(kb))
                key = intern_id((-1, ia, ib) if ia <= ib else (-1, ib, ia))
                kind_of[key] = "B"
            counts[key] = counts.get(key, 0) + 1

    # translate interned ids into canonical byte codes
    memo: dict[int, bytes] = {}

    def to_bytes(i: int) -> bytes:
        got = memo.get(i)
        if got is None:
            parts = sorted(to_bytes(c) for c in rev[i])
            got = b"(" + b"".join(parts) + b")"
            memo[i] = got
        return got

    out: dict[bytes, int] = {}
    for key, cnt in counts.items():
        if kind_of[key] == "C":
            code = b"C" + to_bytes(key)
        else:
            _, ia, ib = rev[key]
            wa, wb = sorted((to_bytes(ia), to_bytes(ib)))
            code = b"B" + wa + wb
        out[code] = out.get(code, 0) + cnt
    return out


def _tree_census_job(args) -> dict[bytes, int]:
    n, digits = args
    return _tree_census(n, digits)


def tree_classes(n: int, workers: int = 0, limit: int = LABELED_TREE_LIMIT) -> list[tuple[Graph, int]]:
    """Isomorphism classes of trees on n labeled vertices, with labeled
    counts, by sweeping every Prufer sequence.  Counts sum to n^(n-2)."""
    if n > limit:
        raise LimitError(f"tree class folding is limited to n <= {limit}, got n = {n}")
    if n < 1:
        raise ParameterError("n must be positive")
    if n == 1:
        return [(Graph(1), 1)]
    if n == 2:
        return [(Graph(2, ((0, 1),)), 1)]
    if workers and workers > 1 and n >= 7:
        chunks = [(n, [d]) for d in range(n)]
        ctx = get_context("fork")
        with ctx.Pool(workers) as pool:
            parts = pool.map(_tree_census_job, chunks)
        merged: dict[bytes, int] = {}
        for part in parts:
            for code, cnt in part.items():
                merged[code] = merged.get(code, 0) + cnt
    else:
        merged = _tree_census(n, range(n))
    return [(tree_from_code(code), merged[code]) for code in sorted(merged)]
