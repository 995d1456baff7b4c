import random
from fractions import Fraction

import pytest

from oriforce import families as fam
from oriforce.bounds import (
    dense_subgraph,
    extremal_bound_report,
    greedy_forcing_set,
    lower_bound_report,
)
from oriforce.errors import InapplicableError
from oriforce.forcing import is_forcing_set
from oriforce.graphs import induced_subgraph, orient
from oriforce.solve import (
    max_orientation_forcing,
    min_forcing_number,
    min_orientation_forcing,
)
from oriforce.universe import enumerate_labeled_graphs, random_orientation


def test_greedy_on_greedy_tree_hits_closed_form():
    for branching in (1, 2, 3, 4):
        for layers in (1, 2, 3):
            t = fam.greedy_tree(branching, layers)
            for k in range(1, branching + 1):
                cert = greedy_forcing_set(t, k)
                expected = 1 + (branching - k) * (branching**layers - 1) // (branching - 1) \
                    if branching > 1 else 1
                assert cert.size == expected
                assert cert.size <= cert.bound


def test_greedy_directed_path_no_stalls():
    d = orient(fam.path(8), [1] * 7)
    cert = greedy_forcing_set(d, 1)
    assert cert.size == 1
    assert cert.repairs == ()
    assert cert.bound == 1


def test_greedy_inapplicable_when_k_exceeds_max_out_degree():
    d = orient(fam.path(5), [1] * 4)
    with pytest.raises(InapplicableError):
        greedy_forcing_set(d, 2)


def test_greedy_certificate_on_random_reachable():
    rng = random.Random(2024)
    tried = 0
    while tried < 40:
        g = fam.gnp_random(rng.randint(2, 9), rng.uniform(0.3, 0.8), rng.getrandbits(32))
        d = random_orientation(g, rng)
        from oriforce.constructions import is_reachable

        if not is_reachable(d):
            continue
        tried += 1
        for k in range(1, d.max_out_degree + 1):
            cert = greedy_forcing_set(d, k)
            assert is_forcing_set(d, cert.forcing_set, k)
            assert cert.size <= cert.bound
            assert min_forcing_number(d, k).value <= cert.size


def test_greedy_multiroot_bound():
    alt = orient(fam.path(6), [1, 0, 1, 0, 1])
    cert = greedy_forcing_set(alt, 1)
    assert cert.roots == (0, 2, 4)
    assert is_forcing_set(alt, cert.forcing_set, 1)
    n, r, dmax = 6, 3, 1
    assert cert.bound == Fraction((dmax - 1) * n + r * 1, dmax)


def test_greedy_strongly_reachable_refinement():
    tri = orient(fam.cycle(3), [1, 0, 1])
    cert = greedy_forcing_set(tri, 1, policy="min_out_degree")
    assert cert.size == 1
    assert cert.bound <= Fraction((1 - 1) * 3 + 1, 1)


def test_lower_bound_report_star_and_alternating():
    out_star = orient(fam.star(5), [1] * 4)  # order-5 star, center out
    rep = lower_bound_report(out_star, 1)
    assert rep.entry("source_count").value == 1
    assert rep.entry("min_out_degree").value == 1
    assert min_forcing_number(out_star, 1).value == 4
    alt = orient(fam.path(4), [1, 0, 1])
    rep = lower_bound_report(alt, 1)
    assert rep.entry("source_count").value == 2
    assert min_forcing_number(alt, 1).value == 2


def test_lower_bounds_never_exceed_exact():
    rng = random.Random(9)
    for _ in range(30):
        g = fam.gnp_random(rng.randint(1, 8), rng.uniform(0.2, 0.8), rng.getrandbits(32))
        d = random_orientation(g, rng)
        for k in (1, 2):
            exact = min_forcing_number(d, k).value
            for entry in lower_bound_report(d, k).entries:
                if entry.applicable:
                    assert entry.value <= exact


def test_dense_subgraph_properties():
    for g in enumerate_labeled_graphs(6, connected_only=True):
        core = dense_subgraph(g)
        assert core
        h, _ = induced_subgraph(g, core)
        assert h.min_degree >= g.average_degree / 2
    k4 = fam.gnp_random(4, 1.0, 3)
    assert dense_subgraph(k4) == frozenset(range(4))
    assert dense_subgraph(fam.path(4)) == frozenset(range(4))


def test_extremal_report_respects_exact_values():
    for g in enumerate_labeled_graphs(5, connected_only=True):
        rep = extremal_bound_report(g, 1)
        lo = min_orientation_forcing(g, 1).value
        hi = max_orientation_forcing(g, 1).value
        for entry in rep.entries:
            if not entry.applicable:
                continue
            if entry.target == "mof_k" and entry.side == "upper":
                assert lo <= entry.value
            elif entry.target in ("MOF_k", "MOF") and entry.side == "lower":
                assert entry.value <= hi
            elif entry.target == "MOF" and entry.side == "upper":
                assert hi <= entry.value


def test_extremal_report_bipartite_reaches_order_minus_one():
    g = fam.complete_bipartite(2, 3)
    rep = extremal_bound_report(g, 1)
    assert rep.entry("order_minus_one").value == 4
    assert max_orientation_forcing(g, 1).value == 4


def test_p6_alpha_entry_equals_exact():
    rep = extremal_bound_report(fam.path(6), 1)
    assert rep.entry("independence").value == 3
    assert max_orientation_forcing(fam.path(6), 1).value == 3


def test_average_degree_entry_gated_on_min_degree():
    rep = extremal_bound_report(fam.path(5), 1)
    assert not rep.entry("average_degree").applicable
    rep = extremal_bound_report(fam.cycle(5), 1)
    assert rep.entry("average_degree").applicable
    assert rep.entry("average_degree").value == (2 * 5 + 5) // (4 * 5)
