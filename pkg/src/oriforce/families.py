"""Deterministic generators for the named graph families."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import ParameterError
from .graphs import Graph, OrientedGraph

FAMILIES = (
    "path",
    "cycle",
    "star",
    "complete_bipartite",
    "greedy_tree",
    "gp_graph",
    "gnp_random",
)


@dataclass(frozen=True)
class FamilySpec:
    """A family tag with its parameters; random families carry a seed."""

    family: str
    params: tuple = ()
    seed: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParameterError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        object.__setattr__(self, "params", tuple(self.params))


def path(n: int) -> Graph:
    if n < 1:
        raise ParameterError("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError("cycle needs n >= 3")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return Graph(n, tuple(edges))


def star(n: int) -> Graph:
    """Star of order n: center 0 joined to n-1 leaves."""
    if n < 1:
        raise ParameterError("star needs n >= 1")
    return Graph(n, tuple((0, i) for i in range(1, n)))


def complete_bipartite(x: int, y: int) -> Graph:
    if x < 1 or y < 1:
        raise ParameterError("complete_bipartite needs both parts nonempty")
    edges = tuple((u, x + w) for u in range(x) for w in range(y))
    return Graph(x + y, edges)


def greedy_tree(out_degree: int, layers: int) -> OrientedGraph:
    """Complete out_degree-ary tree with the given number of layers below the
    root, every arc pointing away from the root.

    Order is 1 + out_degree + out_degree^2 + ... + out_degree^layers; the
    internal vertices all have out-degree exactly out_degree and the final
    layer consists of leaves with out-degree 0.
    """
    if out_degree < 1 or layers < 1:
        raise ParameterError("greedy_tree needs out_degree >= 1 and layers >= 1")
    n = sum(out_degree**i for i in range(layers + 1))
    edges = []
    next_label = 1
    frontier = [0]
    for _ in range(layers):
        new_frontier = []
        for parent in frontier:
            for _ in range(out_degree):
                edges.append((parent, next_label))
                new_frontier.append(next_label)
                next_label += 1
        frontier = new_frontier
    g = Graph(n, tuple(edges))
    # parents get lower labels than their children, so every arc is low->high
    return OrientedGraph(g, (1 << g.m) - 1)


def gp_graph(p: int) -> OrientedGraph:
    """The oriented hub-and-path graph on p+1 vertices: a directed path
    x_0 -> x_1 -> ... -> x_{p-1} plus arcs from every odd-position path
    vertex into an extra hub vertex p.  Requires even p >= 6.
    """
    if p < 6 or p % 2:
        raise ParameterError("gp_graph needs an even p >= 6")
    hub = p
    edges = [(i, i + 1) for i in range(p - 1)]
    edges += [(i, hub) for i in range(1, p, 2)]
    g = Graph(p + 1, tuple(edges))
    # path arcs run low->high and hub arcs point at the highest label
    return OrientedGraph(g, (1 << g.m) - 1)


def gnp_random(n: int, prob: float, seed: int) -> Graph:
    """Erdos-Renyi graph drawn pair by pair in lexicographic order from
    random.Random(seed), so runs are bit-reproducible."""
    if n < 0:
        raise ParameterError("gnp_random needs n >= 0")
    if not (0.0 <= prob <= 1.0):
        raise ParameterError("gnp_random needs a probability in [0, 1]")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < prob
    ]
    return Graph(n, tuple(edges))


def generate(spec: FamilySpec) -> Graph | OrientedGraph:
    """Build the graph or orientation described by a FamilySpec."""
    p = spec.params
    try:
        if spec.family == "path":
            return path(int(p[0]))
        if spec.family == "cycle":
            return cycle(int(p[0]))
        if spec.family == "star":
            return star(int(p[0]))
        if spec.family == "complete_bipartite":
            return complete_bipartite(int(p[0]), int(p[1]))
        if spec.family == "greedy_tree":
            return greedy_tree(int(p[0]), int(p[1]))
        if spec.family == "gp_graph":
            return gp_graph(int(p[0]))
        if spec.family == "gnp_random":
            if spec.seed is None:
                raise ParameterError("gnp_random requires a seed")
            return gnp_random(int(p[0]), float(p[1]), spec.seed)
    except IndexError:
        raise ParameterError(
            f"family {spec.family!r} is missing parameters (got {p})"
        ) from None
    raise ParameterError(f"unknown family {spec.family!r}")
