"""Exact strong, weak and plain domination numbers.

Three independent routes compute the same number:

* :func:`gamma_oracle` tests vertex subsets in increasing size (small graphs only);
* :func:`gamma_bnb` is an iterative-deepening set-cover search over bitmasks;
* :func:`gamma_tree_dp` is a linear dynamic program for forests.

Vertex degrees are fixed by the input graph, so "``y`` may dominate ``x``" is a
static relation on the edges and all three routes share only that predicate.
"""

from __future__ import annotations

import itertools
import os
import time
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable

from strongdom.errors import BudgetExhausted, GraphValidationError, ResourceCapError
from strongdom.graph import Graph


class Mode(str, Enum):
    STRONG = "strong"
    WEAK = "weak"
    PLAIN = "plain"


def can_dominate(mode: Mode, deg_x: int, deg_y: int) -> bool:
    """Whether a neighbour ``y`` in the set may dominate the outside vertex ``x``."""
    if mode is Mode.STRONG:
        return deg_x <= deg_y
    if mode is Mode.WEAK:
        return deg_x >= deg_y
    return True


@dataclass(frozen=True)
class SolverConfig:
    oracle_cap: int = 12
    node_budget: int = 2_000_000

    def __post_init__(self):
        if self.oracle_cap < 1 or self.node_budget < 1:
            raise GraphValidationError("solver caps must be positive")

    @classmethod
    def from_env(cls) -> SolverConfig:
        """Defaults, overridden by ``STRONGDOM_ORACLE_CAP`` / ``STRONGDOM_NODE_BUDGET``."""
        return cls(
            oracle_cap=int(os.environ.get("STRONGDOM_ORACLE_CAP", cls.oracle_cap)),
            node_budget=int(os.environ.get("STRONGDOM_NODE_BUDGET", cls.node_budget)),
        )


DEFAULT_CONFIG = SolverConfig.from_env()


@dataclass(frozen=True)
class SolveResult:
    gamma: int
    witness: frozenset[int]
    mode: Mode
    method: str
    nodes: int
    elapsed: float = field(default=0.0, compare=False)


def vertex_order(g: Graph) -> list[int]:
    """Tie-breaking order: descending degree, then ascending id."""
    degs = g.degrees
    return sorted(range(g.n), key=lambda v: (-degs[v], v))


def verify(g: Graph, d: Iterable[int], mode: Mode = Mode.STRONG) -> bool:
    """Check the definition directly: every vertex outside ``d`` needs a
    neighbour in ``d`` that may dominate it under ``mode``."""
    d = set(d)
    if not d <= set(range(g.n)):
        raise GraphValidationError(f"vertex set {sorted(d)} is not a subset of 0..{g.n - 1}")
    for x in range(g.n):
        if x in d:
            continue
        if not any(can_dominate(mode, g.degree(x), g.degree(y)) for y in g.neighbors(x) if y in d):
            return False
    return True


def gamma_oracle(g: Graph, mode: Mode = Mode.STRONG, config: SolverConfig = DEFAULT_CONFIG) -> SolveResult:
    """Brute force over subsets in increasing size; the reference answer."""
    if g.n > config.oracle_cap:
        raise ResourceCapError(f"oracle is capped at {config.oracle_cap} vertices, got {g.n}")
    start = time.perf_counter()
    order = vertex_order(g)
    tested = 0
    for size in range(g.n + 1):
        for subset in itertools.combinations(order, size):
            tested += 1
            if verify(g, subset, mode):
                return SolveResult(size, frozenset(subset), mode, "oracle", tested,
                                   time.perf_counter() - start)
    raise AssertionError("the full vertex set always dominates")  # pragma: no cover


# -- branch and bound ----------------------------------------------------------

def _cover_masks(g: Graph, mode: Mode) -> tuple[list[int], list[int]]:
    """``cand[x]``: vertices whose selection dominates ``x`` (``x`` included).
    ``cover[y]``: vertices dominated once ``y`` is selected."""
    degs = g.degrees
    cand = [1 << x for x in range(g.n)]
    cover = [1 << y for y in range(g.n)]
    for x in range(g.n):
        for y in g.neighbors(x):
            if can_dominate(mode, degs[x], degs[y]):
                cand[x] |= 1 << y
                cover[y] |= 1 << x
    return cand, cover


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Search:
    def __init__(self, g: Graph, mode: Mode, budget: int):
        self.cand, self.cover = _cover_masks(g, mode)
        self.order = vertex_order(g)
        self.budget = budget
        self.nodes = 0
        self.failed: dict[int, int] = {}

    def greedy(self, undominated: int, pool: list[int]) -> list[int]:
        chosen = []
        while undominated:
            best = max(pool, key=lambda y: (self.cover[y] & undominated).bit_count())
            chosen.append(best)
            undominated &= ~self.cover[best]
        return chosen

    def dfs(self, undominated: int, k: int, pool: list[int]) -> list[int] | None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _OutOfBudget
        if not undominated:
            return []
        if k == 0 or self.failed.get(undominated, -1) >= k:
            return None
        reach = max((self.cover[y] & undominated).bit_count() for y in pool)
        if reach * k < undominated.bit_count():
            self.failed[undominated] = max(self.failed.get(undominated, -1), k)
            return None
        x = min(_bits(undominated), key=lambda v: self.cand[v].bit_count())
        options = self.cand[x]
        for y in self.order:
            if options >> y & 1:
                rest = self.dfs(undominated & ~self.cover[y], k - 1, pool)
                if rest is not None:
                    return [y, *rest]
        self.failed[undominated] = max(self.failed.get(undominated, -1), k)
        return None


class _OutOfBudget(Exception):
    pass


def component_lower_bound(g: Graph, comp: Iterable[int]) -> int:
    comp = list(comp)
    delta = max(g.degree(v) for v in comp)
    return -(-len(comp) // (delta + 1))


def gamma_bnb(g: Graph, mode: Mode = Mode.STRONG, config: SolverConfig = DEFAULT_CONFIG) -> SolveResult:
    """Iterative deepening on the target size, per connected component.

    For each target the search branches on the undominated vertex with the
    fewest candidate dominators and prunes when the remaining selections,
    each covering at most the best single cover, cannot reach every
    undominated vertex. Failed (undominated set, budget) states are memoised.
    """
    start = time.perf_counter()
    search = _Search(g, mode, config.node_budget)
    comps = g.components
    lbs = [component_lower_bound(g, c) for c in comps]
    witness: list[int] = []
    solved = 0
    for idx, comp in enumerate(comps):
        pool = [v for v in search.order if v in set(comp)]
        target = sum(1 << v for v in comp)
        s = lbs[idx]
        try:
            while True:
                found = search.dfs(target, s, pool)
                if found is not None:
                    break
                s += 1
        except _OutOfBudget:
            upper = solved + len(search.greedy(target, pool)) + sum(
                len(search.greedy(sum(1 << v for v in c), [v for v in search.order if v in set(c)]))
                for c in comps[idx + 1:])
            lower = solved + s + sum(lbs[idx + 1:])
            raise BudgetExhausted("branch-and-bound node budget exhausted", lower, upper,
                                  search.nodes) from None
        witness.extend(found)
        solved += len(found)
    return SolveResult(solved, frozenset(witness), mode, "bnb", search.nodes,
                       time.perf_counter() - start)


# -- forests ------------------------------------------------------------------

_INF = float("inf")


def gamma_tree_dp(g: Graph, mode: Mode = Mode.STRONG) -> SolveResult:
    """Three-state DP on each tree of a forest.

    States of a vertex ``v`` given its subtree: ``IN`` (v selected), ``DOM``
    (v outside, dominated by a selected child), ``OPEN`` (v outside and left
    for its parent to dominate).
    """
    if not g.is_forest():
        raise GraphValidationError("tree DP requires an acyclic graph")
    start = time.perf_counter()
    degs = g.degrees
    parent = [-1] * g.n
    children: list[list[int]] = [[] for _ in range(g.n)]
    order: list[int] = []
    roots = [comp[0] for comp in g.components]
    for r in roots:
        stack = [r]
        while stack:
            v = stack.pop()
            order.append(v)
            for c in sorted(g.neighbors(v), reverse=True):
                if c != parent[v]:
                    parent[c] = v
                    children[v].append(c)
                    stack.append(c)
    for ch in children:
        ch.reverse()

    cost_in = [0.0] * g.n
    cost_dom = [0.0] * g.n
    cost_open = [0.0] * g.n
    pick: list[int] = [-1] * g.n
    for v in reversed(order):
        total_in = 1.0
        base = 0.0
        extra, best_child = _INF, -1
        for c in children[v]:
            settled = min(cost_in[c], cost_dom[c])
            base += settled
            child_open = cost_open[c] if can_dominate(mode, degs[c], degs[v]) else _INF
            total_in += min(cost_in[c], cost_dom[c], child_open)
            if can_dominate(mode, degs[v], degs[c]) and cost_in[c] - settled < extra:
                extra, best_child = cost_in[c] - settled, c
        cost_in[v] = total_in
        cost_open[v] = base
        cost_dom[v] = base + extra
        pick[v] = best_child

    witness: list[int] = []
    state = {}
    for r in roots:
        state[r] = "in" if cost_in[r] <= cost_dom[r] else "dom"
    for v in order:
        s = state[v]
        if s == "in":
            witness.append(v)
        for c in children[v]:
            if s == "dom" and c == pick[v]:
                state[c] = "in"
                continue
            options = [("in", cost_in[c]), ("dom", cost_dom[c])]
            if s == "in" and can_dominate(mode, degs[c], degs[v]):
                options.append(("open", cost_open[c]))
            state[c] = min(options, key=lambda t: t[1])[0]
    gamma = int(sum(min(cost_in[r], cost_dom[r]) for r in roots))
    assert gamma == len(witness)
    return SolveResult(gamma, frozenset(witness), mode, "tree-dp", g.n, time.perf_counter() - start)


# -- dispatch -----------------------------------------------------------------

@lru_cache(maxsize=1 << 18)
def _solve_default(g: Graph, mode: Mode) -> SolveResult:
    if g.is_forest():
        return gamma_tree_dp(g, mode)
    return gamma_bnb(g, mode)


def solve(g: Graph, mode: Mode = Mode.STRONG, config: SolverConfig | None = None) -> SolveResult:
    """Tree DP on forests, branch-and-bound otherwise.

    Results under the default configuration are memoised per graph.
    """
    mode = Mode(mode)
    if config is None or config == DEFAULT_CONFIG:
        return _solve_default(g, mode)
    if g.is_forest():
        return gamma_tree_dp(g, mode)
    return gamma_bnb(g, mode, config)


def gamma_st(g: Graph) -> int:
    return solve(g, Mode.STRONG).gamma
