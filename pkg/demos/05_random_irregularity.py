"""
Irregularity of random graphs
=============================

For ``G(n, p)`` the expected irregularity grows like
``p * sqrt(p(1-p)/pi) * n**2.5``.  We compare a seeded Monte-Carlo run
against that leading term and against the exact finite-n expectation.
"""

from periscope.experiments import expected_irr_exact, monte_carlo_irr, predicted_irr

for p in (0.3, 0.5):
    rep = monte_carlo_irr(200, p, trials=50, seed=2023)
    exact = expected_irr_exact(200, p)
    print(f"p={p}: sample mean {rep.sample_mean:.0f} (sd {rep.sample_std:.0f}), "
          f"leading term {rep.predicted:.0f}, exact {exact:.0f}, "
          f"rel err vs leading term {100 * rep.relative_error:.2f}%")

# The leading term overshoots by a shrinking amount as n grows.
for n in (50, 200, 800, 3200):
    print(f"n={n:5d}: exact / leading term = {expected_irr_exact(n, 0.5) / predicted_irr(n, 0.5):.5f}")
