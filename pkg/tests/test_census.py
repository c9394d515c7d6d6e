from hypothesis import given, settings

from conftest import graphs
from oracles import edge_list, naive_cycles, naive_triangles, to_nx
from turanlab import (
    InvalidEdgeError,
    InvalidParameterError,
    complete,
    count_cycles,
    count_triangles,
    cycle,
    edge_plus_triangle,
    enumerate_graphs,
    extremal_construction,
    heavy_threshold,
    heavy_vertices,
    is_isomorphic,
    triangle_degree,
    triangle_hypergraph,
    triangle_link,
    turan,
)
from turanlab.census import triangle_degrees, triangles

import networkx as nx
import pytest


def test_small_counts():
    assert count_triangles(complete(4)) == 4
    assert count_triangles(complete(3)) == 1
    assert count_triangles(cycle(5)) == 0
    assert count_cycles(complete(4), 4) == 3
    assert count_cycles(complete(5), 5) == 12
    assert count_cycles(cycle(7), 7) == 1
    assert count_cycles(cycle(4), 5) == 0
    with pytest.raises(InvalidParameterError):
        count_cycles(cycle(5), 2)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=9))
def test_triangles_against_oracles(g):
    edges = edge_list(g)
    t = count_triangles(g)
    assert t == naive_triangles(g.n, edges)
    assert t == sum(nx.triangles(to_nx(g)).values()) // 3
    assert triangles(g) == sorted(triangles(g))
    assert len(triangles(g)) == t
    assert edge_plus_triangle(g) == len(edges) + t


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7))
def test_cycles_against_oracle(g):
    for m in range(3, g.n + 1):
        assert count_cycles(g, m) == naive_cycles(g.n, edge_list(g), m)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=10))
def test_triangle_degree_identities(g):
    h = triangle_hypergraph(g)
    assert len(h) == count_triangles(g)
    degs = triangle_degrees(g)
    assert sum(degs) == 3 * len(h)
    per = nx.triangles(to_nx(g))
    for v in range(g.n):
        assert degs[v] == per[v] == h.degree(v)
        assert triangle_link(g, v).edge_count() == degs[v]


def test_triangle_degree_sum_over_census():
    for n in range(0, 8):
        for g in enumerate_graphs(n):
            assert sum(triangle_degrees(g)) == 3 * count_triangles(g)


def test_apex_link_is_turan():
    g = extremal_construction(1, 11)
    link = triangle_link(g, 0)
    assert link.n == 11
    assert link.degree(0) == 0
    assert is_isomorphic(link.induced_subgraph(range(1, 11)), turan(2, 10))
    assert triangle_degree(g, 0) == 25


def test_heavy_vertices():
    g = extremal_construction(2, 10)
    assert heavy_threshold(10, 3) == 5
    assert heavy_threshold(8, 1) == 8
    # an apex sees 8 triangles through the other apex and 16 through T_2(8)
    assert triangle_degree(g, 0) == 8 + 16
    assert heavy_vertices(g, 20) == {0, 1}
    assert heavy_vertices(g, 0) == frozenset(range(10))
    with pytest.raises(InvalidParameterError):
        heavy_threshold(10, 0)
    with pytest.raises(InvalidEdgeError):
        triangle_degree(g, 10)
