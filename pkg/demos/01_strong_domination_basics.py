"""
Strong domination in five minutes
=================================

A set D strongly dominates a graph when every vertex outside D has a
neighbour inside D of at least its own degree.  This walk-through computes a
few domination numbers and looks at the witness sets behind them.
"""

from strongdom import Mode, named_graph, solve, verify
from strongdom.graph import path, star

# Paths and cycles need one vertex in three.
for n in (4, 7, 10):
    print(f"P{n}: gamma_st = {solve(path(n)).gamma}")

# A star is dominated by its centre, but the weak variant needs every leaf:
# a leaf may only dominate neighbours of smaller or equal degree.
s = star(5)
for mode in Mode:
    res = solve(s, mode)
    print(f"star with 5 leaves, {mode.value:6s}: gamma = {res.gamma}, witness = {sorted(res.witness)}")

# The witness can be checked against the definition directly.
g = named_graph("K2,3")
res = solve(g)
print("K2,3 witness", sorted(res.witness), "verifies:", verify(g, res.witness))

# Forests go through a linear dynamic program; everything else through an
# exact branch-and-bound search.  The method is recorded on the result.
print("methods:", solve(path(30)).method, solve(named_graph("C9")).method)
