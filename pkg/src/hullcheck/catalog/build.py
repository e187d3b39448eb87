"""Regenerating the catalog from its generators and searches.

Type I entries come from the standard forms, the one- and two-dimensional
added entries from the add composer and the two-dimensional linked entries
from the planar lattice search.  Three-dimensional added entries are the
equivalence classes of every admissible add of lower-dimensional entries;
three-dimensional linked entries are the classes found by the spatial
lattice search, labelled so that every search cell reproduces the
published ids and repeat counts.
"""

from __future__ import annotations

import json
from collections import Counter
from itertools import combinations_with_replacement, product

from ..errors import CompositionFailed
from ..forms import make_standard_type1
from ..minimal import Kind
from .compose import add_compose
from .equivalence import canonical_key, flip_key, overlap_family
from .formats import add_formats, format_label
from .search import PLACEMENTS, candidates, _evaluate
from .store import CatalogEntry, entry_to_dict, identify, natural_id_key

__all__ = [
    "SEARCH_TABLE",
    "TYPE1_IDS",
    "LINK_FAMILIES",
    "piece_format",
    "enumerate_added",
    "added_classes",
    "label_linked",
    "build_catalog",
    "catalog_json",
]

TYPE1_IDS = {"a": (0, 0), "b": (0, 1), "c": (0, 2), "d": (1, 1), "e": (0, 3), "f": (1, 2)}

# ids and repeat counts of the three-dimensional search, per (basis, location)
SEARCH_TABLE = {
    ("c", "bottom"): {"L2": 1, "L3": 3, "L8": 1, "L10": 9},
    ("c", "middle"): {"L1": 1, "L4": 3, "L7": 6, "L9": 3, "L11": 1},
    ("d", "bottom"): {"L6": 4, "L11": 2, "L13": 8},
    ("d", "middle"): {"L5": 4, "L10": 8, "L12": 2},
    ("j", "bottom"): {"L17": 1},
    ("j", "middle"): {"L14": 1},
    ("k", "bottom"): {"L15": 1},
    ("k", "middle"): {"L16": 1},
    ("l", "bottom"): {"L16": 1},
    ("l", "middle"): {"L17": 1},
}

# linked ids grouped by format, in catalog order
LINK_FAMILIES = {
    "∪12": [f"L{i}" for i in range(1, 7)],
    "∪2²": [f"L{i}" for i in range(7, 14)],
    "∪1³": [f"L{i}" for i in range(14, 18)],
}

ADDED_ORDER = ((0, 0, 0, 0), (0, 0, 1), (0, 2), (1, 1))


def piece_format(L, prefix="∪", eps=1e-8):
    """Format label from the dimensions of the minimal overlapping proper subsets."""
    fam = [(m, r) for m, r in overlap_family(L, eps) if m != (1 << L.n) - 1]
    pieces = [r for m, r in fam if not any(o != m and o & m == o for o, _ in fam)]
    return prefix + format_label(pieces)


def _lower_catalog(entries):
    """Component choices by own-span dimension: each entry and, when distinct, its flip."""
    by_dim = {}
    for e in entries:
        choices = [(e.id, e.data)]
        if canonical_key(e.data.flipped()) != canonical_key(e.data):
            choices.append((e.id + "'", e.data.flipped()))
        by_dim.setdefault(e.d_eff, []).extend(choices)
    return by_dim


def added_classes(d, lower):
    """Equivalence classes of adds in dimension ``d``, formats with more components first.

    ``lower`` maps a dimension to ``(id, dataset)`` component choices.
    Returns ``(format, component ids, dataset)`` triples; an add equivalent
    to one already produced (for instance a doubleton added to an added
    configuration) is dropped.
    """
    formats = sorted(add_formats(d), key=lambda f: (-f.m, f.dims))
    seen, out = set(), []
    for fmt in formats:
        mult = Counter(fmt.dims)
        per_dim = [
            list(combinations_with_replacement(lower.get(v, []), k)) for v, k in sorted(mult.items())
        ]
        for picks in product(*per_dim):
            choice = [c for group in picks for c in group]
            try:
                C = add_compose([c[1] for c in choice])
            except CompositionFailed:
                continue
            k = flip_key(C)
            if k not in seen:
                seen.add(k)
                out.append((fmt.label, [c[0] for c in choice], C))
    return out


def enumerate_added(d, catalog=None):
    """Added configurations of dimension 2 or 3, one per equivalence class.

    Components are drawn from the catalog entries of lower dimension (and
    their response flips).  Each class is returned as a catalog entry whose
    id is the matching catalog id, or ``new-k`` when the catalog has none.
    """
    if d not in (2, 3):
        raise ValueError("added catalogs are enumerated for d = 2 or 3")
    from .store import load_catalog

    entries = list(catalog if catalog is not None else load_catalog())
    lower = _lower_catalog([e for e in entries if e.d_eff < d])
    out, k = [], 0
    for label, _, C in added_classes(d, lower):
        m = identify(C, catalog=catalog, check=False)
        if not m.known:
            k += 1
        out.append(CatalogEntry(m.id if m.known else f"new-{k}", C, Kind.TYPE_II, label))
    return out


def _search_classes(dimension, cells):
    """Minimal Type II candidates of each cell grouped into equivalence classes."""
    classes, per_cell = {}, {}
    for basis, location in cells:
        cnt = Counter()
        for L in candidates(basis, location, dimension):
            if _evaluate(L, 1e-8)[1]:
                k = flip_key(L)
                classes.setdefault(k, L)
                cnt[k] += 1
        per_cell[(basis, location)] = cnt
    return classes, per_cell


def label_linked(table=SEARCH_TABLE):
    """Label the spatial search classes so that every cell matches ``table``.

    A class may take an id only if its piece format matches the id's
    family and, in every cell where it occurs, the id is listed there with
    the same repeat count.  Forced choices are propagated until every class
    has one id.

    Returns
    -------
    dict
        id -> example dataset (the first candidate of that class).

    Raises
    ------
    RuntimeError
        If the search results admit no consistent labelling, or more than one.
    """
    classes, per_cell = _search_classes(3, list(table))
    family = {i: f for f, ids in LINK_FAMILIES.items() for i in ids}
    options = {}
    for k, L in classes.items():
        fmt = piece_format(L)
        opts = {i for i in family if family[i] == fmt}
        for cell, cnt in per_cell.items():
            if k in cnt:
                opts &= {i for i, c in table[cell].items() if c == cnt[k]}
        options[k] = opts
    changed = True
    while changed:
        changed = False
        for k, opts in options.items():
            if len(opts) == 1:
                (i,) = opts
                for k2, o2 in options.items():
                    if k2 != k and i in o2:
                        o2.discard(i)
                        changed = True
    if any(len(o) != 1 for o in options.values()):
        raise RuntimeError("lattice search admits no unique labelling of the published table")
    label = {k: next(iter(o)) for k, o in options.items()}
    for cell, cnt in per_cell.items():
        if {label[k]: c for k, c in cnt.items()} != table[cell]:
            raise RuntimeError(f"search cell {cell} does not reproduce the published counts")
    return {label[k]: classes[k] for k in sorted(classes, key=lambda k: natural_id_key(label[k]))}


def build_catalog():
    """Regenerate every catalog entry, in catalog order."""
    entries = []
    for eid, (d1, d0) in TYPE1_IDS.items():
        entries.append(CatalogEntry(eid, make_standard_type1(d1, d0), Kind.TYPE_I, f"Λ({d1},{d0})"))
    a, b = entries[0].data, entries[1].data
    for eid, comps, fmt in (("g", [a, a], "+0²"), ("h", [a, b], "+01"), ("i", [a, a, a], "+0³")):
        entries.append(CatalogEntry(eid, add_compose(comps), Kind.TYPE_II, fmt))
    for eid in ("j", "k", "l"):
        pts, ys = PLACEMENTS[3][eid]
        from ..dataset import Dataset

        entries.append(CatalogEntry(eid, Dataset(pts, ys), Kind.TYPE_II, "∪1²"))
    lower = _lower_catalog(entries)
    for n, (fmt, _, C) in enumerate(added_classes(3, lower), start=1):
        entries.append(CatalogEntry(f"A{n}", _integral(C), Kind.TYPE_II, fmt))
    for eid, L in label_linked().items():
        fam = next(f for f, ids in LINK_FAMILIES.items() if eid in ids)
        entries.append(CatalogEntry(eid, L, Kind.TYPE_II, fam))
    return entries


def _integral(L):
    from ..dataset import Dataset

    return Dataset(L.x, L.y)


def catalog_json(entries):
    """Serialized catalog with one entry per line."""
    lines = [json.dumps(entry_to_dict(e), ensure_ascii=False) for e in entries]
    return '{"entries": [\n' + ",\n".join(lines) + "\n]}\n"
