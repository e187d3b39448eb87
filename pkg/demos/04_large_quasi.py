"""Checking large data sets.

The generator plants a small quasi-separated core inside a large cloud
that a hyperplane separates, so the correct verdict is known in advance.
Above a million displacement pairs the classifier works on hull vertices
only, which keeps the check fast.
"""

import time

from hullcheck import classify, lp_separation
from hullcheck.catalog import make_quasi

for n, d in ((100, 2), (2_000, 3), (10_000, 2)):
    L = make_quasi(n, d, seed=1)
    t = time.perf_counter()
    rep = classify(L)
    t_el = time.perf_counter() - t
    t = time.perf_counter()
    sep = lp_separation(L).separated
    t_lp = time.perf_counter() - t
    print(f"n = {n:6d}, d = {d}: {rep.status} in {t_el:.2f} s (vertex reduction: {rep.reduced}); "
          f"LP says separated = {sep} in {t_lp:.2f} s")
