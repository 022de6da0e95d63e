"""
Figure trees and the deletion/subdivision equality search
=========================================================

Four hand-built trees illustrate when the edge bounds are attained.  The
audit reports the measured slack on each side instead of assuming equality.
Afterwards we list small graphs where deleting and subdividing an edge give
the same strong domination number.
"""

from collections import Counter

from strongdom import audit_fixture_tightness, search_equal_deletion_subdivision
from strongdom.audits import equality_pool
from strongdom.graph import FIXTURE_IDS
from strongdom.io import write_graph6

for fid in FIXTURE_IDS:
    a = audit_fixture_tightness(fid)
    n = a.notes
    print(f"{fid}: {a.theorem} {a.lower} <= {a.value} <= {a.upper}; "
          f"claimed {n['claimed_tight_side']} side attained: {n['claimed_side_attained']}")

hits = search_equal_deletion_subdivision(equality_pool(5, seed=0))
by_order = Counter(g.n for g, _ in hits)
print("equality pairs by order:", dict(sorted(by_order.items())))
print("a few:", [(write_graph6(g), e) for g, e in hits[:5]])
