from itertools import combinations

import pytest

from oriforce import families as fam
from oriforce.errors import LimitError
from oriforce.graphs import Graph, orient, reversal
from oriforce.invariants import (
    clique_number,
    independence_number,
    induced_kary_cover_number,
    induced_matching_number,
    matching_number,
    path_cover_number,
    tree_cover_number,
)


def brute_alpha(g):
    best = 0
    for size in range(g.n, -1, -1):
        for sub in combinations(range(g.n), size):
            if all(not g.has_edge(u, v) for u, v in combinations(sub, 2)):
                return size
    return best


def brute_rho(g):
    """Minimum path partition by direct recursion on plain structures."""

    def is_path_seq(order):
        return all(g.has_edge(a, b) for a, b in zip(order, order[1:]))

    from itertools import permutations

    def has_ham_path(block):
        if len(block) == 1:
            return True
        return any(is_path_seq(p) for p in permutations(block))

    def best_cover(rest):
        if not rest:
            return 0
        v = rest[0]
        best = len(rest)
        others = rest[1:]
        for size in range(len(rest) - 1, -1, -1):
            for extra in combinations(others, size):
                block = (v,) + extra
                if has_ham_path(block):
                    remaining = tuple(x for x in others if x not in extra)
                    best = min(best, 1 + best_cover(remaining))
        return best

    return best_cover(tuple(range(g.n)))


SMALL = [
    fam.path(6),
    fam.cycle(5),
    fam.star(5),
    fam.complete_bipartite(2, 3),
    fam.gnp_random(6, 0.5, 11),
    fam.gnp_random(6, 0.3, 12),
    fam.gnp_random(7, 0.6, 13),
]


def test_alpha_against_brute_force():
    for g in SMALL:
        assert independence_number(g).value == brute_alpha(g)


def test_alpha_frozen_values():
    assert independence_number(fam.path(6)).value == 3
    assert independence_number(fam.star(8)).value == 7  # the leaves
    assert independence_number(fam.cycle(5)).value == 2


def test_alpha_witness_is_lex_least_maximum():
    g = fam.path(6)
    assert independence_number(g).witness == frozenset({0, 2, 4})


def test_clique_matching_mim_trivia():
    p2 = fam.path(2)
    assert matching_number(p2).value == 1
    assert induced_matching_number(p2).value == 1
    assert clique_number(p2).value == 2
    k4 = fam.gnp_random(4, 1.0, 1)
    assert clique_number(k4).value == 4
    assert matching_number(k4).value == 2
    assert induced_matching_number(k4).value == 1


def test_matching_against_brute_force():
    def brute_mu(g):
        best = 0
        for size in range(g.m, 0, -1):
            for sub in combinations(g.edges, size):
                ends = [v for e in sub for v in e]
                if len(ends) == len(set(ends)):
                    return size
        return best

    for g in SMALL:
        assert matching_number(g).value == brute_mu(g)


def test_induced_matching_against_brute_force():
    def brute_mim(g):
        for size in range(g.m, 0, -1):
            for sub in combinations(g.edges, size):
                ends = [v for e in sub for v in e]
                if len(ends) != len(set(ends)):
                    continue
                inside = [e for e in g.edges if e[0] in ends and e[1] in ends]
                if len(inside) == size:
                    return size
        return 0

    for g in SMALL:
        assert induced_matching_number(g).value == brute_mim(g)


def test_rho_small_cases():
    assert path_cover_number(fam.path(7)).value == 1
    assert path_cover_number(fam.star(4)).value == 2
    assert path_cover_number(fam.star(8)).value == 6  # one path + 5 leaves
    assert path_cover_number(Graph(3)).value == 3


def test_rho_against_brute_partitions():
    for g in SMALL[:5]:
        assert path_cover_number(g).value == brute_rho(g)


def test_rho_at_most_alpha_on_universe():
    from oriforce.universe import enumerate_labeled_graphs

    for g in enumerate_labeled_graphs(4):
        assert path_cover_number(g).value <= independence_number(g).value


def test_tree_cover_values():
    k13 = fam.star(4)
    assert tree_cover_number(k13, 1).value == 2
    assert tree_cover_number(k13, 2).value == 1
    assert tree_cover_number(k13, 3).value == 1
    assert tree_cover_number(fam.star(7), 5).value == 1  # center degree 6 > k+1=6? no: 6 <= 6
    assert tree_cover_number(fam.star(7), 4).value == 2


def test_tree_cover_1_equals_rho_everywhere_small():
    from oriforce.universe import enumerate_labeled_graphs

    for g in enumerate_labeled_graphs(5):
        assert tree_cover_number(g, 1).value == path_cover_number(g).value


def test_tree_cover_witness_roots_are_light():
    g = fam.gnp_random(7, 0.5, 77)
    for k in (1, 2):
        res = tree_cover_number(g, k)
        seen = set()
        for verts, edges, root in res.witness:
            deg = {v: 0 for v in verts}
            for a, b in edges:
                assert g.has_edge(a, b)
                deg[a] += 1
                deg[b] += 1
            assert max(deg.values()) <= k + 1
            assert deg[root] <= k
            assert len(edges) == len(verts) - 1
            assert not (seen & set(verts))
            seen |= set(verts)
        assert seen == set(range(g.n))


def test_kary_cover_directed_path_and_in_star():
    d = orient(fam.path(6), [1] * 5)
    assert induced_kary_cover_number(d, 1).value == 1
    in_star = reversal(orient(fam.star(4), [1, 1, 1]))
    assert induced_kary_cover_number(in_star, 1).value == 3
    assert induced_kary_cover_number(in_star, 2).value == 3
    # out-star: the whole star is one k-ary tree once k >= 3
    out_star = orient(fam.star(4), [1, 1, 1])
    assert induced_kary_cover_number(out_star, 3).value == 1
    assert induced_kary_cover_number(out_star, 2).value == 2
    assert induced_kary_cover_number(out_star, 1).value == 3


def test_kary_cover_strict_variant():
    # a directed triangle has 3 internal arcs: never a tree on all 3 vertices
    tri = orient(fam.cycle(3), [1, 0, 1])
    assert induced_kary_cover_number(tri, 2, strict=False).value == 1
    assert induced_kary_cover_number(tri, 2, strict=True).value == 2


def test_limits_raise():
    big = Graph(15)
    with pytest.raises(LimitError):
        path_cover_number(big)
    with pytest.raises(LimitError):
        tree_cover_number(Graph(13), 1)
