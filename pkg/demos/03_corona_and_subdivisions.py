"""
Corona products and k-subdivisions
==================================

In a corona G1 o G2 every hub vertex of G1 carries its own copy of G2.  The
hubs alone strongly dominate, which this script confirms before measuring how
single-edge changes move the value.  The second half looks at replacing
every edge by a path of length k.
"""

from collections import Counter

from strongdom import audit_corona_deletion, audit_corona_subdivision, audit_ksub, named_graph
from strongdom.audits import corona_edge_classes

g1, g2 = named_graph("C3"), named_graph("P2")
tally = Counter()
for cls in corona_edge_classes(g1, g2):
    for fn in (audit_corona_deletion, audit_corona_subdivision):
        a = fn(g1, g2, cls)
        delta = a.value - a.quantities["gamma_st_product"]
        predicted = a.lower - a.quantities["gamma_st_product"]
        tally[(a.theorem, type(cls).__name__, predicted, delta)] += 1

print("theorem, edge class, predicted delta, measured delta -> count")
for key, count in sorted(tally.items()):
    print("  ", key, "->", count)
# Cross edges leave the value unchanged here.  The detached copy vertex is
# still dominated by its copy neighbour, so the predicted +1 never shows up.

for token, k in [("K4", 2), ("K4", 5), ("C5", 2), ("P4", 6)]:
    for a in audit_ksub(named_graph(token), k):
        print(f"{token}^(1/{k}) {a.kind:13s} predicted {a.predicted}, solved {a.solved}, passed {a.passed}")
