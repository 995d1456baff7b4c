from itertools import combinations

import pytest

from oriforce import families as fam
from oriforce.errors import LimitError, ParameterError
from oriforce.forcing import is_forcing_set
from oriforce.graphs import Graph, OrientedGraph, orient
from oriforce.solve import (
    max_orientation_forcing,
    min_forcing_number,
    min_orientation_forcing,
    orientation_extremes,
)


def naive_closure(d, colored, k):
    colored = set(colored)
    while True:
        forced = set()
        for u in colored:
            unc = [w for w in d.out_lists[u] if w not in colored]
            if 1 <= len(unc) <= k:
                forced.update(unc)
        if not forced:
            return colored
        colored |= forced


def naive_min_forcing(d, k):
    """Plain subset sweep by size, no pruning; the independent oracle."""
    everything = set(range(d.n))
    for size in range(1, d.n + 1):
        for s in combinations(range(d.n), size):
            if naive_closure(d, s, k) == everything:
                return size
    raise AssertionError


def test_fk_examples():
    out_star4 = orient(fam.star(5), [1] * 4)
    assert min_forcing_number(out_star4, 2).value == 3  # order 5 star, k=2
    assert min_forcing_number(out_star4.reversal(), 2).value == 4
    assert min_forcing_number(fam.greedy_tree(3, 2), 1).value == 9
    for n in (2, 5, 9):
        d = orient(fam.path(n), [1] * (n - 1))
        assert min_forcing_number(d, 1).value == 1
    assert min_forcing_number(fam.gp_graph(6), 1).value == 2


def test_fk_witness_is_least_and_validates():
    d6 = fam.gp_graph(6)
    res = min_forcing_number(d6, 1)
    assert res.witness == frozenset({0, 6})
    assert is_forcing_set(d6, res.witness, 1)


def test_fk_against_naive_oracle():
    import random

    rng = random.Random(4242)
    for _ in range(60):
        n = rng.randint(1, 7)
        g = fam.gnp_random(n, rng.uniform(0.2, 0.8), rng.getrandbits(32))
        d = orient(g, rng.getrandbits(g.m) if g.m else 0)
        k = rng.randint(1, 3)
        assert min_forcing_number(d, k).value == naive_min_forcing(d, k)


def test_fk_edgeless_graph_needs_everything():
    d = OrientedGraph(Graph(4), 0)
    res = min_forcing_number(d, 1)
    assert res.value == 4
    assert res.witness == frozenset(range(4))


def test_fk_additive_across_components():
    g = Graph(6, ((0, 1), (1, 2), (3, 4), (4, 5)))
    d = orient(g, [1, 1, 1, 0])
    parts = [min_forcing_number(orient(fam.path(3), bits), 1).value for bits in ([1, 1], [1, 0])]
    assert min_forcing_number(d, 1).value == sum(parts)


def test_fk_limits_and_parameters():
    with pytest.raises(LimitError):
        min_forcing_number(OrientedGraph(Graph(25), 0), 1)
    with pytest.raises(ParameterError):
        min_forcing_number(OrientedGraph(Graph(0), 0), 1)
    with pytest.raises(ParameterError):
        min_forcing_number(fam.gp_graph(6), 0)


def test_path_extremes():
    for n in range(2, 8):
        p = fam.path(n)
        assert min_orientation_forcing(p, 1).value == 1
        assert max_orientation_forcing(p, 1).value == (n + 1) // 2


def test_mof_star_formula():
    # star of order n: minimum over orientations is n - k - 1 for k < n - 1
    assert min_orientation_forcing(fam.star(7), 3).value == 3
    assert min_orientation_forcing(fam.star(6), 1).value == 4


def test_mof_witness_orientation_is_least():
    p6 = fam.path(6)
    lo = min_orientation_forcing(p6, 1, early_exit=False)
    bits, fset = lo.witness
    assert min_forcing_number(OrientedGraph(p6, bits), 1).value == lo.value
    # bits 0 orients the path high->low: a directed path, already optimal
    assert bits == 0
    assert fset == frozenset({5})


def test_MOF_c4_against_naive_enumeration():
    c4 = fam.cycle(4)
    naive = max(
        naive_min_forcing(OrientedGraph(c4, bits), 1) for bits in range(1 << c4.m)
    )
    res = max_orientation_forcing(c4, 1)
    assert res.value == naive
    assert res.value >= 2  # at least the independence number of C4


def test_extremes_shared_sweep_matches_single_solvers():
    g = fam.gnp_random(5, 0.5, 321)
    for k in (1, 2):
        lo, hi = orientation_extremes(g, k)
        assert lo.value == min_orientation_forcing(g, k, early_exit=False).value
        assert hi.value == max_orientation_forcing(g, k).value
        assert lo.value <= hi.value


def test_monotone_in_k():
    d = fam.gp_graph(8)
    values = [min_forcing_number(d, k).value for k in range(1, 5)]
    assert values == sorted(values, reverse=True)


def test_empty_graph_extremes():
    g = Graph(3)
    lo, hi = orientation_extremes(g, 1)
    assert lo.value == hi.value == 3


def test_orientation_limit():
    with pytest.raises(LimitError):
        max_orientation_forcing(fam.gnp_random(8, 1.0, 5), 1)
