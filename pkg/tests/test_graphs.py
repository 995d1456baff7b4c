import pytest

from oriforce import families as fam
from oriforce.errors import ParameterError
from oriforce.graphs import Graph, OrientedGraph, induced_subgraph, orient, reversal


def test_graph_normalizes_and_validates():
    g = Graph(4, ((3, 1), (0, 1), (2, 0)))
    assert g.edges == ((0, 1), (0, 2), (1, 3))
    with pytest.raises(ParameterError):
        Graph(3, ((0, 0),))
    with pytest.raises(ParameterError):
        Graph(3, ((0, 1), (1, 0)))
    with pytest.raises(ParameterError):
        Graph(3, ((0, 3),))


def test_degrees_and_components():
    g = Graph(5, ((0, 1), (1, 2), (3, 4)))
    assert g.degrees() == (1, 2, 1, 1, 1)
    assert g.components() == ((0, 1, 2), (3, 4))
    assert not g.is_connected()
    assert fam.path(4).diameter() == 3
    assert g.diameter() is None


def test_orient_encoding():
    p3 = fam.path(3)
    d = orient(p3, [1, 1])
    assert d.arcs == ((0, 1), (1, 2))
    d2 = orient(p3, [1, 0])
    assert d2.arcs == ((0, 1), (2, 1))
    with pytest.raises(ParameterError):
        orient(p3, [1])
    with pytest.raises(ParameterError):
        orient(p3, [1, 2])


def test_orient_c4_bits_against_sorted_edge_list():
    # C4 edges sort to (0,1),(0,3),(1,2),(2,3); bits 1110 set edges 1,2,3
    c4 = fam.cycle(4)
    assert c4.edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    d = orient(c4, [0, 1, 1, 1])
    assert d.arcs == ((1, 0), (0, 3), (1, 2), (2, 3))


def test_reversal_is_involution_and_flips_degrees():
    d = fam.gp_graph(6)
    r = reversal(d)
    assert reversal(r) == d
    for v in range(d.n):
        assert r.out_degree(v) == d.in_degree(v)
        assert r.in_degree(v) == d.out_degree(v)


def test_reversal_of_out_star():
    d = orient(fam.star(4), [1, 1, 1])
    r = d.reversal()
    assert r.out_degree(0) == 0 and r.in_degree(0) == 3
    assert r.sources() == frozenset({1, 2, 3})


def test_out_plus_in_degree_is_degree():
    g = fam.gnp_random(7, 0.5, 20260809)
    for bits in (0, 13, (1 << g.m) - 1):
        d = OrientedGraph(g, bits)
        for v in range(g.n):
            assert d.out_degree(v) + d.in_degree(v) == g.degree(v)


def test_induced_subgraph_of_gp6():
    d6 = fam.gp_graph(6)
    # the path part alone is a directed path
    h, idx = induced_subgraph(d6, range(6))
    assert idx == (0, 1, 2, 3, 4, 5)
    assert h.arcs == tuple((i, i + 1) for i in range(5))
    # hub plus its in-neighbours is an in-star
    k, idx = induced_subgraph(d6, [6, 1, 3, 5])
    assert idx == (1, 3, 5, 6)
    assert k.arcs == ((0, 3), (1, 3), (2, 3))
    # whole vertex set is the identity
    same, idx = induced_subgraph(d6, range(7))
    assert same == d6


def test_bridges_and_two_edge_connected():
    assert fam.path(4).bridges() == [(0, 1), (1, 2), (2, 3)]
    assert fam.cycle(5).bridges() == []
    assert fam.cycle(5).is_two_edge_connected()
    # two triangles sharing vertex 2: no bridges
    g = Graph(5, ((0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (2, 4)))
    assert g.bridges() == []
    h = Graph(5, ((0, 1), (0, 2), (1, 2), (2, 3), (3, 4)))
    assert h.bridges() == [(2, 3), (3, 4)]
