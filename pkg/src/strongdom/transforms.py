"""Edge deletion, edge subdivision, edge contraction and k-subdivision.

Every operation returns a fresh :class:`~strongdom.graph.Graph` and, where
vertices are created or merged, enough provenance to find them again.
"""

from __future__ import annotations

from dataclasses import dataclass

from strongdom.errors import GraphValidationError
from strongdom.graph import Edge, Graph, as_edge


def _require_edge(g: Graph, e: Edge) -> Edge:
    u, v = as_edge(*e)
    if not g.has_edge(u, v):
        raise GraphValidationError(f"{(u, v)} is not an edge of the graph")
    return u, v


def delete_edge(g: Graph, e: Edge) -> Graph:
    """G - e on the same vertex ids."""
    e = _require_edge(g, e)
    return Graph(g.n, [f for f in g.edges if f != e])


def subdivide_edge(g: Graph, e: Edge) -> tuple[Graph, int]:
    """G_e: replace ``uv`` by ``u - x - v``. The new vertex ``x`` gets id ``n``."""
    u, v = _require_edge(g, e)
    x = g.n
    edges = [f for f in g.edges if f != (u, v)]
    edges += [(u, x), (x, v)]
    return Graph(g.n + 1, edges), x


@dataclass(frozen=True)
class ContractionResult:
    graph: Graph
    merged: int
    vertex_map: tuple[int, ...]
    """``vertex_map[old]`` is the id of ``old`` in the contracted graph."""


def contract_edge(g: Graph, e: Edge) -> ContractionResult:
    """G/e as a simple graph: ``u`` and ``v`` merge into ``min(u, v)``,
    parallel edges coalesce, the loop disappears, and ids above ``max(u, v)``
    shift down by one."""
    u, v = _require_edge(g, e)
    vertex_map = tuple(u if x == v else (x - 1 if x > v else x) for x in range(g.n))
    edges = set()
    for a, b in g.edges:
        a2, b2 = vertex_map[a], vertex_map[b]
        if a2 != b2:
            edges.add(as_edge(a2, b2))
    return ContractionResult(Graph(g.n - 1, edges), u, vertex_map)


@dataclass(frozen=True)
class SubdivisionLabeling:
    """Provenance of a k-subdivision.

    ``superedges[(i, j)]`` lists the internal vertices of the path that
    replaced edge ``ij`` (``i < j``), ordered by their distance 1..k-1 from
    ``i``. Original vertices keep their ids, so ``vertex_map`` is the identity.
    """

    k: int
    superedges: dict[Edge, tuple[int, ...]]
    vertex_map: tuple[int, ...]

    def internal(self, i: int, j: int, l: int) -> int:
        """Internal vertex at distance ``l`` from ``i`` on the superedge ``ij``."""
        if i < j:
            return self.superedges[(i, j)][l - 1]
        return self.superedges[(j, i)][self.k - 1 - l]


def k_subdivision(g: Graph, k: int) -> tuple[Graph, SubdivisionLabeling]:
    """Replace every edge by a path of length ``k``.

    The result has ``n + (k-1)m`` vertices and ``km`` edges; internal vertices
    are appended edge by edge in sorted edge order.
    """
    if k < 1:
        raise GraphValidationError(f"k-subdivision needs k >= 1, got {k}")
    nxt = g.n
    edges: list[Edge] = []
    superedges: dict[Edge, tuple[int, ...]] = {}
    for i, j in g.edges:
        internal = tuple(range(nxt, nxt + k - 1))
        nxt += k - 1
        chain = (i, *internal, j)
        edges.extend(zip(chain, chain[1:]))
        superedges[(i, j)] = internal
    return Graph(nxt, edges), SubdivisionLabeling(k, superedges, tuple(range(g.n)))
