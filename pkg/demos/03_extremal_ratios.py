"""
How fast do the extremal constructions approach their constants?
================================================================

Each family is built at growing sizes and its index is normalised by the
matching power of ``n``.  At desk scale the ratios sit below the limiting
constants and creep towards them.
"""

from periscope.constructions import eperi_extremal_layout
from periscope.experiments import ratio_sweep

# Clique sizes of the edge-peripherality construction for a few s.
for s in (8, 50, 200):
    lay = eperi_extremal_layout(s)
    print(f"s={s}: i_max={lay.i_max}, cliques={lay.clique_sizes}, n={lay.n}")

sweeps = {
    "espr_extremal": [5, 10, 25, 50],
    "balanced_spider": [5, 10, 20],
    "pendant_clique": [20, 50, 100],
    "complete_tripartite": [10, 20, 40],
    "eperi_extremal": [50, 100, 200],
}

for family, params in sweeps.items():
    rep = ratio_sweep(family, params)
    print()
    print(f"{family}: {rep.index} / n^{rep.exponent}, target {rep.target:.6f}")
    for row in rep.rows:
        print(f"  param={row.param:4d}  n={row.n:5d}  ratio={row.ratio:.6f}")
    print(f"  gap at largest n: {100 * rep.relative_gap():.2f}%")

# CSV is the interchange format for plotting elsewhere.
print()
print(ratio_sweep("espr_extremal", [5, 10]).to_csv())
