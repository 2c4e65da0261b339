"""
Ultra NT-balanced graphs that are not regular
=============================================

The rhombic dodecahedron and rhombic triacontahedron have two vertex
degrees, yet every pair of vertices sees a symmetric distribution of
distance differences.  The property survives Cartesian products with
complete graphs and cycles.
"""

import numpy as np

from periscope.constructions import complete, cycle, rhombic_dodecahedron, rhombic_triacontahedron
from periscope.experiments import verify_ultra_closure
from periscope.indices import closeness_counts, is_ultra_nt_balanced, nt_graph
from periscope.search import find_nt_balanced

for name, g in (("rhombic dodecahedron", rhombic_dodecahedron()), ("rhombic triacontahedron", rhombic_triacontahedron())):
    cc = closeness_counts(g)
    print(f"{name}: n={g.n}, degrees {sorted(set(g.degrees.tolist()))}, "
          f"NT={nt_graph(cc)}, ultra={is_ultra_nt_balanced(cc)}")

# One pair's histogram of d(u, x) - d(v, x), indexed from -diam to +diam.
cc = closeness_counts(rhombic_dodecahedron())
hist = cc.diff_histograms[0, 8]
print("difference histogram for vertices 0 and 8:", hist.tolist())
assert np.array_equal(hist, hist[::-1])

rd = rhombic_dodecahedron()
for row in verify_ultra_closure([("RD x K3", rd, complete(3)), ("RD x C5", rd, cycle(5))]):
    print(f"{row.label}: n={row.n}, ultra={row.ultra}, NT={row.nt}, regular={row.regular}")

# Every NT-balanced connected graph on up to seven vertices is also ultra
# NT-balanced.
for n in range(1, 8):
    balanced = find_nt_balanced(n)
    rogue = find_nt_balanced(n, require_not_ultra=True)
    print(f"n={n}: {len(balanced)} NT-balanced, {len(rogue)} of them not ultra")
