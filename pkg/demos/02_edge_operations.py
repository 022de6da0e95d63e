"""
How one edge changes the strong domination number
=================================================

Deleting, subdividing and contracting an edge shift gamma_st by bounded
amounts.  Each audit computes the exact values and reports which side of its
bound, if any, is attained.
"""

from strongdom import audit_corollary, audit_edge_contraction, audit_edge_deletion, audit_edge_subdivision
from strongdom.graph import cycle, path

# Deleting a pendant edge of P6 strands a vertex: the upper bound is attained.
a = audit_edge_deletion(path(6), (4, 5))
print(f"P6 - pendant edge: {a.lower} <= {a.value} <= {a.upper}  tight upper: {a.tight_upper}")

# Subdividing a cycle moves between C_{3k} and C_{3k+1}.
for n in (6, 7):
    a = audit_edge_subdivision(cycle(n), (0, 1))
    print(f"C{n} subdivided:     {a.lower} <= {a.value} <= {a.upper}")

# Contraction: C7/e = C6 sits exactly on the lower bound.
a = audit_edge_contraction(cycle(7), (0, 1))
print(f"C7 / e:            {a.lower} <= {a.value} <= {a.upper}")

# The lower contraction bound is not universal.  Contracting a pendant edge
# of P4 leaves P3, whose centre alone dominates.
a = audit_edge_contraction(path(4), (0, 1))
print(f"P4 / pendant edge: {a.lower} <= {a.value}?  passed: {a.passed}")

# Combining all three operations sandwiches gamma_st between exact rationals.
c = audit_corollary(cycle(7), (0, 1))
print(f"C7 sandwich: {c.lower} <= {c.gamma} <= {c.upper}")
