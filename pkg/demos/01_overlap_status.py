"""Deciding whether a logistic-regression fit can exist.

The maximum likelihood estimate exists and is unique exactly when the Case
and Non-Case runs overlap: the origin must lie strictly inside the convex
hull of all Case-minus-Non-Case displacements.  hullcheck answers this with
an empirical likelihood fit and cross-checks it with two linear programs.
"""

import numpy as np

from hullcheck import Dataset, classify, lp_separation
from hullcheck.fixtures import W0
from hullcheck.status import origin_interior_lp

print("The 16-run demonstration set, three predictors:")
rep = classify(W0)
m = rep.marginals
print(f"  status {rep.status}, total weight {rep.w_tot:.10f}, rank {rep.rank}")
print(f"  common point S = F = {np.round(m.S, 6)}")
print("  Case weights    ", np.round(m.u1, 8))
print("  Non-Case weights", np.round(m.u0, 8))

print("\nThree one-dimensional sets show the other verdicts:")
examples = {
    "Cases on both sides of a Non-Case": Dataset([[1.0], [-1.0], [0.0]], [1, 1, 0]),
    "a shared design point, otherwise split": Dataset([[0.0], [0.0], [1.0]], [1, 0, 0]),
    "Cases strictly above Non-Cases": Dataset([[1.0], [0.0]], [1, 0]),
}
for label, L in examples.items():
    r = classify(L)
    v = lp_separation(L)
    print(f"  {label:40s} {str(r.status):20s} LP separated={v.separated}, interior={origin_interior_lp(L)}")

print("\nOverlap inside a line is not overlap in the plane:")
flat = Dataset([[1.0, 0.0], [-1.0, 0.0], [0.0, 0.0]], [1, 1, 0])
print(f"  {classify(flat).status} (displacement rank {classify(flat).rank} of 2)")
