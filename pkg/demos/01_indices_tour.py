"""
A tour of the distance-based indices
====================================

Everything starts from one table: for each ordered pair of vertices
``(u, v)`` count the vertices strictly closer to ``u`` than to ``v``.
Every index in the package is a different way of summarising that table.
"""

import numpy as np

from periscope.constructions import path, spider, star
from periscope.graph import parse_graph6, to_graph6
from periscope.indices import closeness_counts, index_report

# The path on three vertices.  The middle vertex is closer to itself and
# to one end than the other end is, so the row for vertex 1 dominates.
p3 = path(3)
cc = closeness_counts(p3)
print("closeness counts of P3")
print(cc.counts)

# ``closer_than[u, v]`` is True when u beats v in that comparison; summing
# it gives the peripherality index.
print("peripherality matrix")
print(cc.closer_than.astype(int))

# A full report in one call.  ``breakdown=True`` adds the per-vertex,
# per-edge and per-pair contributions that sum to each total.
report = index_report(spider([1, 1, 2]), breakdown=True)
print(report.to_json())

# P4 and the star S3 are the smallest pair where the star has the larger
# Trinajstic index.
for name, g in (("P4", path(4)), ("S3", star(3))):
    print(f"{name}: NT = {index_report(g).nt}")

# graph6 round trip, the format used by the command line and the search.
g = parse_graph6("D?{")
assert to_graph6(g) == "D?{"
print("D?{ has degree sequence", np.sort(g.degrees)[::-1].tolist())
