"""Lattice completeness searches for linked configurations.

A basis configuration of dimension ``k`` is laid in one layer of a stack of
three parallel lattices (unit spacing, layers at offsets -1, 0, 1).  Two new
runs go into the other two layers at the same lattice position, and every
position of a 5-point (one new dimension) or 5x5 (two) lattice is tried with
each of the four response pairs.  Candidates that overlap and are minimal
are matched against the catalog.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from ..dataset import Dataset
from ..errors import UnknownBasis
from ..minimal import verify_minimal
from ..status import Status, classify, span_project
from .equivalence import flip_key
from .store import CatalogEntry, identify, natural_id_key

__all__ = ["SearchReport", "PLACEMENTS", "LOCATIONS", "RESPONSE_PAIRS", "lattice_search", "candidates"]

LOCATIONS = {"bottom": -1, "middle": 0}
RESPONSE_PAIRS = ((0, 0), (0, 1), (1, 0), (1, 1))

# Basis placements on the inner positions of the base lattice, as
# (coordinates, responses).  The Case of c sits at the centre of a Non-Case
# triangle one of whose edges passes through the lattice point (0, -1).
PLACEMENTS = {
    3: {
        "c": ([(0, 0), (-1, -1), (0, 1), (1, -1)], [1, 0, 0, 0]),
        "d": ([(1, 0), (-1, 0), (0, 1), (0, -1)], [1, 1, 0, 0]),
        "j": ([(0, 0), (-1, 0), (1, 0), (0, -1), (0, 1)], [1, 0, 0, 0, 0]),
        "k": ([(-1, -1), (0, -1), (1, -1), (-1, 0), (-1, 1)], [0, 1, 0, 1, 0]),
        "l": ([(0, -1), (-1, -1), (1, -1), (0, 0), (0, 1)], [1, 0, 0, 0, 1]),
    },
    2: {
        "a": ([(0,), (0,)], [1, 0]),
        "b": ([(-1,), (0,), (1,)], [0, 1, 0]),
        "g": ([(-1,), (-1,), (1,), (1,)], [1, 0, 1, 0]),
    },
}


@dataclass(frozen=True, eq=False)
class SearchReport:
    basis: str
    location: str
    dimension: int
    candidates: int
    overlap_count: int
    type2_count: int
    new_count: int
    ids_found: list
    examples: dict = field(default_factory=dict, repr=False)

    def to_dict(self):
        return {
            "basis": self.basis,
            "location": self.location,
            "dimension": self.dimension,
            "candidates": self.candidates,
            "overlap": self.overlap_count,
            "type2": self.type2_count,
            "new": self.new_count,
            "ids": [[i, c] for i, c in self.ids_found],
        }


def _basis_id(basis):
    return basis.id if isinstance(basis, CatalogEntry) else str(basis)


def candidates(basis, location, dimension=3):
    """The lattice candidates of one search cell, in trial order."""
    name = _basis_id(basis)
    if dimension not in PLACEMENTS or name not in PLACEMENTS[dimension]:
        raise UnknownBasis(f"no {dimension}D search placement for basis {name!r}")
    if location not in LOCATIONS:
        raise ValueError(f"location must be one of {sorted(LOCATIONS)}")
    pts, ys = PLACEMENTS[dimension][name]
    base = LOCATIONS[location]
    free = [z for z in (-1, 0, 1) if z != base]
    k = dimension - 1
    rid = [f"B{i + 1}" for i in range(len(pts))] + ["P1", "P2"]
    out = []
    for pos in product(range(-2, 3), repeat=k):
        for r1, r2 in RESPONSE_PAIRS:
            x = [tuple(p) + (base,) for p in pts] + [pos + (free[0],), pos + (free[1],)]
            out.append(Dataset(np.array(x, dtype=float), np.r_[ys, r1, r2], rid))
    return out


def _evaluate(L, eps):
    if classify(L, eps).status is not Status.OVERLAP:
        return (False, False)
    return (True, L.n > span_project(L)[1] + 2 and verify_minimal(L, eps))


def lattice_search(basis, location, dimension=3, catalog=None, eps=1e-8, workers=1):
    """Run one (basis, location) cell of the lattice search.

    Minimal candidates are identified against the catalog, and the report
    lists the ids found with their repeat counts.  Minimal candidates
    matching no entry are grouped by equivalence and counted as new;
    their examples are kept under ``new-1``, ``new-2``, ...  ``workers > 1``
    evaluates candidates in a process pool; results are reduced in
    candidate order either way.

    Raises
    ------
    UnknownBasis
        If the basis has no placement for the requested dimension.
    """
    cands = candidates(basis, location, dimension)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            verdicts = list(pool.map(_evaluate, cands, [eps] * len(cands)))
    else:
        verdicts = [_evaluate(L, eps) for L in cands]
    counts, examples = Counter(), {}
    new_keys = {}
    for L, (ov, minimal) in zip(cands, verdicts):
        if not minimal:
            continue
        match = identify(L, eps, catalog=catalog, check=False)
        if match.known:
            label = match.id
        else:
            key = flip_key(L, eps)
            label = new_keys.setdefault(key, f"new-{len(new_keys) + 1}")
        counts[label] += 1
        examples.setdefault(label, L)
    ids = sorted(counts.items(), key=lambda kv: natural_id_key(kv[0]))
    return SearchReport(
        basis=_basis_id(basis),
        location=location,
        dimension=dimension,
        candidates=len(cands),
        overlap_count=sum(ov for ov, _ in verdicts),
        type2_count=sum(m for _, m in verdicts),
        new_count=len(new_keys),
        ids_found=ids,
        examples=examples,
    )
