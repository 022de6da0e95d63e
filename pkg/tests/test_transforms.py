import pytest
from hypothesis import given, settings

from oracle import contract as oracle_contract
from strongdom.errors import GraphValidationError
from strongdom.graph import Graph, complete, cycle, disjoint_union, path
from strongdom.transforms import contract_edge, delete_edge, k_subdivision, subdivide_edge
from test_graph import graphs


def test_delete_examples():
    assert delete_edge(cycle(7), (0, 6)) == path(7)
    assert delete_edge(path(4), (2, 3)) == disjoint_union(path(3), Graph(1))
    assert delete_edge(complete(3), (0, 1)).edges == ((0, 2), (1, 2))


def test_subdivide_examples():
    g, x = subdivide_edge(cycle(6), (0, 5))
    assert x == 6 and g.n == 7 and set(g.degrees) == {2} and g.is_connected()
    g, x = subdivide_edge(path(2), (0, 1))
    assert g.edges == ((0, 2), (1, 2))
    g, _ = subdivide_edge(path(3), (0, 1))
    assert g.is_tree() and sorted(g.degrees) == [1, 1, 2, 2]


def test_contract_examples():
    assert contract_edge(complete(3), (0, 1)).graph == path(2)
    c7 = contract_edge(cycle(7), (2, 3)).graph
    assert c7.n == 6 and set(c7.degrees) == {2} and c7.is_connected()
    assert contract_edge(complete(4), (1, 3)).graph == complete(3)


def test_contract_vertex_map():
    res = contract_edge(path(5), (1, 2))
    assert res.merged == 1
    assert res.vertex_map == (0, 1, 1, 2, 3)
    assert res.graph == path(4)


@pytest.mark.parametrize("op", [delete_edge, subdivide_edge, contract_edge])
def test_missing_edge_rejected(op):
    with pytest.raises(GraphValidationError):
        op(path(4), (0, 2))


def test_k_subdivision_examples():
    g, _ = k_subdivision(cycle(5), 2)
    assert g.n == 10 and set(g.degrees) == {2} and g.is_connected()
    g, _ = k_subdivision(complete(4), 2)
    assert (g.n, g.m) == (10, 12)
    g, _ = k_subdivision(path(4), 3)
    assert g.n == 10 and g.is_tree() and max(g.degrees) == 2
    with pytest.raises(GraphValidationError):
        k_subdivision(path(3), 0)


def test_k_subdivision_labeling():
    g, lab = k_subdivision(path(3), 4)
    assert lab.superedges[(0, 1)] == (3, 4, 5)
    assert lab.internal(0, 1, 1) == 3
    assert lab.internal(1, 0, 1) == 5
    assert g.has_edge(0, 3) and g.has_edge(5, 1)


@settings(max_examples=150)
@given(graphs(max_n=8))
def test_operation_invariants(g):
    for e in g.edges:
        u, v = e
        d = delete_edge(g, e)
        assert d.n == g.n and d.m == g.m - 1
        assert d.degree(u) == g.degree(u) - 1

        s, x = subdivide_edge(g, e)
        assert (s.n, s.m) == (g.n + 1, g.m + 1)
        assert s.degree(x) == 2 and s.degree(u) == g.degree(u)
        # contracting the new edge gives back G
        back = contract_edge(s, (u, x)).graph
        assert back == g

        c = contract_edge(g, e)
        assert c.graph.n == g.n - 1
        assert c.graph.edges == tuple(oracle_contract(g.n, g.edges, e)[1])
        w = c.merged
        expected = {c.vertex_map[y] for y in (g.neighbors(u) | g.neighbors(v)) - {u, v}}
        assert c.graph.neighbors(w) == expected


@settings(max_examples=80)
@given(graphs(max_n=7))
def test_k_subdivision_invariants(g):
    one, _ = k_subdivision(g, 1)
    assert one == g
    for k in (2, 3, 5):
        h, lab = k_subdivision(g, k)
        assert (h.n, h.m) == (g.n + (k - 1) * g.m, k * g.m)
        assert all(h.degree(v) == g.degree(v) for v in range(g.n))
        assert all(h.degree(x) == 2 for x in range(g.n, h.n))
        assert set(lab.superedges) == set(g.edges)
