import random

import pytest
from hypothesis import given, settings

import oracle
from strongdom.errors import BudgetExhausted, GraphValidationError, ResourceCapError
from strongdom.graph import Graph, complete, cycle, enumerate_labeled_graphs, path, random_graph, random_tree, star
from strongdom.solver import (
    Mode,
    SolverConfig,
    can_dominate,
    gamma_bnb,
    gamma_oracle,
    gamma_st,
    gamma_tree_dp,
    solve,
    verify,
    vertex_order,
)
from strongdom.transforms import k_subdivision
from test_graph import graphs

MODES = list(Mode)


def test_can_dominate():
    assert can_dominate(Mode.STRONG, 1, 3) and not can_dominate(Mode.STRONG, 3, 1)
    assert can_dominate(Mode.WEAK, 3, 1) and not can_dominate(Mode.WEAK, 1, 3)
    assert can_dominate(Mode.PLAIN, 3, 1) and can_dominate(Mode.PLAIN, 1, 3)


def test_verify_examples():
    p3 = path(3)
    assert verify(p3, {1})
    assert not verify(p3, {0})
    assert verify(p3, {0}, Mode.WEAK) is False
    assert verify(p3, {0, 2}, Mode.WEAK)
    with pytest.raises(GraphValidationError):
        verify(p3, {5})


def test_small_values():
    assert gamma_st(Graph(0)) == 0
    assert gamma_st(Graph(3)) == 3
    assert gamma_st(path(2)) == 1
    assert gamma_st(star(5)) == 1
    assert solve(star(5), Mode.WEAK).gamma == 5
    assert gamma_st(complete(5)) == 1


def test_vertex_order_breaks_ties_by_index():
    assert vertex_order(path(4)) == [1, 2, 0, 3]


def test_oracle_cap():
    with pytest.raises(ResourceCapError):
        gamma_oracle(path(13))
    assert gamma_oracle(path(13), config=SolverConfig(oracle_cap=13)).gamma == 5


def test_budget_exhaustion_reports_bounds():
    g = random_graph(40, 0.15, 1)
    with pytest.raises(BudgetExhausted) as info:
        gamma_bnb(g, config=SolverConfig(node_budget=5))
    exc = info.value
    assert 1 <= exc.lower <= exc.upper <= g.n
    assert exc.nodes > 5


def test_tree_dp_rejects_cycles():
    with pytest.raises(GraphValidationError):
        gamma_tree_dp(cycle(4))


def test_config_validation_and_env(monkeypatch):
    with pytest.raises(GraphValidationError):
        SolverConfig(node_budget=0)
    monkeypatch.setenv("STRONGDOM_NODE_BUDGET", "77")
    assert SolverConfig.from_env().node_budget == 77


@pytest.mark.parametrize("n", range(1, 16))
def test_path_and_cycle_values(n):
    assert gamma_st(path(n)) == -(-n // 3)
    if n >= 3:
        assert gamma_st(cycle(n)) == -(-n // 3)


@pytest.mark.parametrize("k,value", [(2, 4), (3, 4), (4, 10), (5, 10)])
def test_k4_subdivisions(k, value):
    assert gamma_st(k_subdivision(complete(4), k)[0]) == value


@pytest.mark.parametrize("mode", MODES)
def test_bnb_matches_independent_oracle_n5(mode):
    for n in range(1, 6):
        for g in enumerate_labeled_graphs(n):
            res = gamma_bnb(g, mode)
            assert res.gamma == oracle.gamma(g.n, g.edges, mode.value), g
            assert len(res.witness) == res.gamma
            assert oracle.dominates(g.n, g.edges, res.witness, mode.value)


@pytest.mark.parametrize("mode", MODES)
def test_three_routes_agree_on_random_graphs(mode):
    rng = random.Random(2024)
    for _ in range(100):
        g = random_graph(rng.randint(1, 8), rng.random(), rng.randrange(10**9))
        a, b = gamma_oracle(g, mode), gamma_bnb(g, mode)
        assert a.gamma == b.gamma
        if g.is_forest():
            assert gamma_tree_dp(g, mode).gamma == a.gamma


@pytest.mark.parametrize("mode", MODES)
def test_tree_dp_witnesses(mode):
    rng = random.Random(99)
    for _ in range(60):
        t = random_tree(rng.randint(1, 25), rng.randrange(10**9))
        res = gamma_tree_dp(t, mode)
        assert res.gamma == gamma_bnb(t, mode).gamma
        assert len(res.witness) == res.gamma and verify(t, res.witness, mode)


def test_solve_is_deterministic():
    g = random_graph(14, 0.3, 5)
    assert solve(g) == solve(g, config=SolverConfig(node_budget=10**7))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_witness_is_minimum_and_valid(g):
    for mode in MODES:
        res = solve(g, mode)
        assert verify(g, res.witness, mode)
        assert len(res.witness) == res.gamma
        # every strong or weak dominating set is a dominating set
        assert res.gamma >= solve(g, Mode.PLAIN).gamma


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_isolated_vertices_are_forced(g):
    isolated = {v for v in range(g.n) if g.degree(v) == 0}
    for mode in MODES:
        assert isolated <= solve(g, mode).witness
