"""Simple undirected graphs on vertices ``0..n-1`` and the families used in the audits."""

from __future__ import annotations

import itertools
import json
import random
import re
from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from typing import Iterable, Iterator, NamedTuple

from strongdom.errors import GraphValidationError, ResourceCapError

Edge = tuple[int, int]

ENUMERATION_CAP = 6


def as_edge(u: int, v: int) -> Edge:
    """Canonical form of the unordered pair {u, v}: ``(min, max)``."""
    if u == v:
        raise GraphValidationError(f"loop edge ({u}, {v})")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph.

    Edges are stored canonically (``u < v``, sorted), so two graphs compare
    equal exactly when they have the same vertex count and edge set under the
    identity labeling.
    """

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise GraphValidationError(f"negative vertex count {n}")
        seen: set[Edge] = set()
        adj: list[set[int]] = [set() for _ in range(n)]
        for pair in edges:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            e = as_edge(u, v)
            if e in seen:
                raise GraphValidationError(f"duplicate edge {e}")
            seen.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        self._adj = tuple(frozenset(a) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adj)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._adj[u]

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Open neighborhoods as integer bitmasks."""
        return tuple(sum(1 << w for w in a) for a in self._adj)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], [s]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
                        comp.append(y)
            out.append(tuple(sorted(comp)))
        return tuple(out)

    def is_connected(self) -> bool:
        return len(self.components) <= 1

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components)

    def is_tree(self) -> bool:
        return self.n > 0 and self.m == self.n - 1 and self.is_connected()

    def subgraph(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabeled to ``0..k-1``; also returns new->old ids."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(keep), edges), keep

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def build_graph(n: int, edges: Iterable[Iterable[int]]) -> Graph:
    return Graph(n, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges: list[Edge] = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


# -- named families -----------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def path(n: int) -> Graph:
    if n < 1:
        raise GraphValidationError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphValidationError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphValidationError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphValidationError(f"complete bipartite needs both sides >= 1, got {a}, {b}")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    if leaves < 1:
        raise GraphValidationError(f"star needs at least one leaf, got {leaves}")
    return complete_bipartite(1, leaves)


@dataclass(frozen=True)
class CoronaLabeling:
    """Where the factors of a corona product live in the product.

    Hub ``i`` (the image of vertex ``i`` of the first factor) is vertex ``i``;
    vertex ``v`` of copy ``i`` of the second factor is ``copies[i][v]``.
    """

    hubs: tuple[int, ...]
    copies: tuple[tuple[int, ...], ...]

    def copy_vertex(self, i: int, v: int) -> int:
        return self.copies[i][v]


def corona(g1: Graph, g2: Graph) -> tuple[Graph, CoronaLabeling]:
    """Corona product: one copy of ``g1`` plus ``|V(g1)|`` copies of ``g2``,
    with hub ``i`` joined to every vertex of copy ``i``."""
    n1, n2 = g1.n, g2.n
    if n1 < 1:
        raise GraphValidationError("corona needs a nonempty first factor")
    edges = list(g1.edges)
    copies = []
    for i in range(n1):
        base = n1 + i * n2
        copies.append(tuple(range(base, base + n2)))
        edges.extend((base + a, base + b) for a, b in g2.edges)
        edges.extend((i, base + v) for v in range(n2))
    return Graph(n1 + n1 * n2, edges), CoronaLabeling(tuple(range(n1)), tuple(copies))


@dataclass(frozen=True)
class FamilySpec:
    """A named family with its integer parameters.

    ``family`` is one of path, cycle, complete, complete-bipartite, star,
    empty, corona or fixture.  Corona takes its factors through ``graphs``;
    fixture takes the figure id through ``name``.
    """

    family: str
    params: tuple[int, ...] = ()
    graphs: tuple[Graph, ...] = ()
    name: str = ""


_SIMPLE = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete-bipartite": (complete_bipartite, 2),
    "star": (star, 1),
    "empty": (empty_graph, 1),
}


def generate(spec: FamilySpec) -> Graph:
    """Build the graph described by ``spec``.

    Corona labelings are returned by :func:`corona` itself; this entry point
    only yields the product graph.
    """
    if spec.family in _SIMPLE:
        fn, arity = _SIMPLE[spec.family]
        if len(spec.params) != arity:
            raise GraphValidationError(f"{spec.family} takes {arity} parameter(s), got {spec.params}")
        return fn(*spec.params)
    if spec.family == "corona":
        if len(spec.graphs) != 2:
            raise GraphValidationError("corona takes exactly two factor graphs")
        return corona(*spec.graphs)[0]
    if spec.family == "fixture":
        return fixture(spec.name)[0]
    raise GraphValidationError(f"unknown family {spec.family!r}")


_TOKEN = re.compile(r"^(P|C|K|S|E)(\d+)(?:,(\d+))?$")


def named_graph(token: str) -> Graph:
    """Parse shorthand such as ``P4``, ``C6``, ``K4``, ``K2,3``, ``S5`` (star
    with 5 leaves) or ``E4`` (4 isolated vertices)."""
    match = _TOKEN.match(token.strip())
    if not match:
        raise GraphValidationError(f"unrecognised graph token {token!r}")
    kind, a, b = match.group(1), int(match.group(2)), match.group(3)
    if b is not None:
        if kind != "K":
            raise GraphValidationError(f"only K takes two parameters: {token!r}")
        return complete_bipartite(a, int(b))
    return {"P": path, "C": cycle, "K": complete, "S": star, "E": empty_graph}[kind](a)


# -- figure fixtures ----------------------------------------------------------

FIXTURE_IDS = ("fig1-G", "fig2-H", "fig3-G", "fig4-H")


def _fixture_dir():
    return resources.files("strongdom") / "data" / "fixtures"


def fixture_metadata(fid: str) -> dict:
    """Named vertices and exhibited vertex sets recorded alongside a fixture."""
    if fid not in FIXTURE_IDS:
        raise KeyError(f"unknown fixture {fid!r}; expected one of {FIXTURE_IDS}")
    return json.loads((_fixture_dir() / "fixtures.json").read_text())[fid]


def fixture(fid: str) -> tuple[Graph, Edge]:
    """Load a figure graph and its marked edge ``uv``."""
    from strongdom.io import parse_edge_list

    meta = fixture_metadata(fid)
    g = parse_edge_list((_fixture_dir() / f"{fid}.el").read_text())
    u, v = meta["edge"]
    return g, as_edge(u, v)


# -- enumeration and random graphs --------------------------------------------

def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on ``n`` vertices, ordered by edge bitmask.

    Pair ``k`` of the mask follows graph6 order: (0,1), (0,2), (1,2), (0,3), ...
    """
    if n < 0:
        raise GraphValidationError(f"negative vertex count {n}")
    if n > ENUMERATION_CAP:
        raise ResourceCapError(f"enumeration is capped at n <= {ENUMERATION_CAP}, got {n}")
    pairs = [(i, j) for j in range(n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        yield Graph(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) driven by ``random.Random(seed)``."""
    if not 0.0 <= p <= 1.0:
        raise GraphValidationError(f"edge probability must lie in [0, 1], got {p}")
    if n < 1:
        raise GraphValidationError(f"random graph needs n >= 1, got {n}")
    rng = random.Random(seed)
    return Graph(n, [(i, j) for i, j in itertools.combinations(range(n), 2) if rng.random() < p])


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree on ``n`` vertices from a random Prüfer sequence."""
    if n < 1:
        raise GraphValidationError(f"random tree needs n >= 1, got {n}")
    if n <= 2:
        return path(n)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (v for v in range(n) if degree[v] == 1)
    edges.append((u, w))
    return Graph(n, edges)


class GraphStats(NamedTuple):
    min_degree: int
    max_degree: int
    pendants: int
    connected: bool
    tree: bool


def graph_stats(g: Graph) -> GraphStats:
    if g.n == 0:
        raise GraphValidationError("degree statistics are undefined on the empty vertex set")
    degs = g.degrees
    return GraphStats(min(degs), max(degs), degs.count(1), g.is_connected(), g.is_tree())
