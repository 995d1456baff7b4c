import pytest

from oriforce import families as fam
from oriforce.errors import ParameterError, PreconditionError
from oriforce.forcing import (
    closure,
    closure_set,
    forcing_chains,
    is_forcing_set,
    step,
)
from oriforce.graphs import orient


def naive_closure(d, colored, k):
    """Rule applied round by round on plain sets; independent of the engine."""
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


def test_step_on_gp6():
    d6 = fam.gp_graph(6)
    assert step(d6, {0, 6}, 1) == [(0, 1)]
    assert step(d6, set(range(7)), 1) == []
    with pytest.raises(ParameterError):
        step(d6, set(), 1)
    with pytest.raises(ParameterError):
        step(d6, {0}, 0)


def test_step_out_star_overloaded():
    d = orient(fam.star(5), [1, 1, 1, 1])
    assert step(d, {0}, 2) == []  # 4 uncolored out-neighbours > 2
    assert step(d, {0}, 4) == [(0, 1), (0, 2), (0, 3), (0, 4)]
    assert step(d, {0, 1, 2}, 2) == [(0, 3), (0, 4)]


def test_closure_directed_path():
    d = orient(fam.path(6), [1] * 5)
    tr = closure(d, {0}, 1)
    assert tr.final == frozenset(range(6))
    assert len(tr.rounds) == 5
    assert tr.rounds[0] == ((0, 1),)
    assert tr.text_lines()[0] == "round 1: 0>1"


def test_closure_gp6_stalls():
    d6 = fam.gp_graph(6)
    tr = closure(d6, {0}, 1)
    assert tr.final == frozenset({0, 1})
    assert closure_set(d6, {0, 6}, 1) == frozenset(range(7))


def test_closure_full_set_no_rounds():
    d6 = fam.gp_graph(6)
    tr = closure(d6, range(7), 1)
    assert tr.rounds == ()
    assert tr.final == frozenset(range(7))


def test_closure_agrees_with_naive_rule():
    import random

    rng = random.Random(99)
    for _ in range(300):
        n = rng.randint(1, 9)
        g = fam.gnp_random(n, rng.uniform(0.2, 0.8), rng.getrandbits(32))
        d = orient(g, rng.getrandbits(g.m) if g.m else 0)
        s = {rng.randrange(n) for _ in range(rng.randint(1, n))}
        k = rng.randint(1, 3)
        want = naive_closure(d, s, k)
        assert closure_set(d, s, k) == frozenset(want)
        assert closure(d, s, k).final == frozenset(want)


def test_is_forcing_set_examples():
    d6 = fam.gp_graph(6)
    assert is_forcing_set(d6, {0, 6}, 1)
    assert not is_forcing_set(d6, {0}, 1)
    assert is_forcing_set(d6, range(7), 1)


def test_trace_invariants_hold():
    d6 = fam.gp_graph(6)
    tr = closure(d6, {0, 6}, 1)
    forced = [w for rnd in tr.rounds for _, w in rnd]
    assert len(forced) == len(set(forced))
    assert set(forced).isdisjoint(tr.initial)
    assert tr.final == tr.initial | set(forced)
    assert all(rnd for rnd in tr.rounds)
    # every forcer was colored before its round began
    colored = set(tr.initial)
    for rnd in tr.rounds:
        for u, _ in rnd:
            assert u in colored
        colored |= {w for _, w in rnd}


def test_chains_on_directed_path():
    d = orient(fam.path(6), [1] * 5)
    forest = forcing_chains(d, {0}, 1)
    assert forest.roots == frozenset({0})
    assert forest.components() == [frozenset(range(6))]
    forest.validate(d, 1)


def test_chains_on_gp6():
    d6 = fam.gp_graph(6)
    forest = forcing_chains(d6, {0, 6}, 1)
    comps = forest.components()
    assert len(comps) == 2
    assert frozenset({6}) in comps  # the hub never forces
    forest.validate(d6, 1)


def test_chains_greedy_tree_root_plus_two():
    t = fam.greedy_tree(3, 1)
    forest = forcing_chains(t, {0, 1, 2}, 1)
    comps = forest.components()
    assert len(comps) == 3
    assert sum(len(c) for c in comps) == 4
    forest.validate(t, 1)


def test_chains_require_forcing_set():
    d6 = fam.gp_graph(6)
    with pytest.raises(PreconditionError):
        forcing_chains(d6, {0}, 1)


def test_high_k_forces_everything_reachable():
    d = orient(fam.star(6), [1] * 5)
    assert closure_set(d, {0}, 99) == frozenset(range(6))
