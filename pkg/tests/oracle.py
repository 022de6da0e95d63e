"""Reference implementations written directly from the definitions.

Nothing here imports the solver; graphs are plain ``(n, edges)`` pairs so the
oracle cannot inherit a bug from the library's data structures.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def adjacency(n, edges):
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def dominates(n, edges, subset, mode="strong"):
    adj = adjacency(n, edges)
    deg = {v: len(adj[v]) for v in adj}
    chosen = set(subset)
    for x in range(n):
        if x in chosen:
            continue
        ok = False
        for y in adj[x] & chosen:
            if mode == "plain" or (mode == "strong" and deg[x] <= deg[y]) or (mode == "weak" and deg[x] >= deg[y]):
                ok = True
        if not ok:
            return False
    return True


def gamma(n, edges, mode="strong"):
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            if dominates(n, edges, subset, mode):
                return size
    raise AssertionError


def path_edges(n):
    return [(i, i + 1) for i in range(n - 1)]


def cycle_edges(n):
    return path_edges(n) + [(0, n - 1)]


def delete(n, edges, e):
    return n, [f for f in edges if set(f) != set(e)]


def subdivide(n, edges, e):
    u, v = e
    return n + 1, [f for f in edges if set(f) != set(e)] + [(u, n), (n, v)]


def contract(n, edges, e):
    u, v = sorted(e)
    relabel = {x: (u if x == v else x - (x > v)) for x in range(n)}
    out = {tuple(sorted((relabel[a], relabel[b]))) for a, b in edges if relabel[a] != relabel[b]}
    return n - 1, sorted(out)


def corollary_bounds(alpha, beta):
    return Fraction(alpha - beta, 3), Fraction(alpha + beta + 2, 3)


def graph6_encode(n, edges):
    """Textbook graph6 for n <= 62."""
    es = {tuple(sorted(e)) for e in edges}
    bits = "".join("1" if (i, j) in es else "0" for j in range(n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    return chr(n + 63) + "".join(chr(int(bits[i:i + 6], 2) + 63) for i in range(0, len(bits), 6))
