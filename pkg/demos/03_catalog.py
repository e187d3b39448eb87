"""The catalog of minimal configurations up to three dimensions.

Type II configurations are assembled from smaller ones either by adding
them in complementary directions or by linking them through shared runs.
The three-dimensional linked family is recovered by a lattice search that
stacks a planar basis under or between two new runs.
"""

import sys
from pathlib import Path

from hullcheck.catalog import SEARCH_TABLE, add_compose, equivalent, get_entry, identify, lattice_search, load_catalog
from hullcheck.fixtures import A1, W1, W2
from hullcheck.render import RenderSpec, render_svg

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(exist_ok=True)

print(f"{len(load_catalog())} catalog entries")
print("The demonstration cores are catalog members:")
for name, L in (("W1", W1), ("W2", W2)):
    print(f"  {name} -> {identify(L).id}")

b = get_entry("b").data
print("\nThe five-dimensional reference set A1 is three simplex pairs added together:",
      equivalent(A1, add_compose([b, b, b]), allow_flip=False))

print("\nLattice search, one line per basis and layer:")
for basis, loc in SEARCH_TABLE:
    r = lattice_search(basis, loc)
    ids = " ".join(f"{i}x{c}" for i, c in r.ids_found)
    print(f"  {basis} {loc:6s} overlap {r.overlap_count:3d}  Type II {r.type2_count:2d}  new {r.new_count}  {ids}")

for name, ids in (("type1", list("abcdef")), ("added", [f"A{i}" for i in range(1, 10)]),
                  ("linked", [f"L{i}" for i in range(1, 18)])):
    path = out / f"{name}.svg"
    path.write_text(render_svg(RenderSpec(ids)), encoding="utf-8")
    print(f"wrote {path}")
