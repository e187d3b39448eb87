"""Structural equivalence of minimal overlap configurations.

A configuration is described by its overlap family: every subset of runs
that overlaps inside its own affine span, tagged with that span's
dimension.  For a Type I configuration the family is the full run set
alone; a Type II configuration adds the lower-dimensional pieces it is
assembled from and records which runs they share.  Two configurations are
equivalent when a response-preserving relabeling of runs maps one family
onto the other, optionally after swapping responses.  Canonical keys turn
the relabeling search into a dictionary lookup.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from ..minimal import overlaps_in_span
from ..status import span_project

__all__ = ["overlap_family", "canonical_key", "flip_key", "keys", "equivalent", "MAX_RUNS"]

MAX_RUNS = 14
MAX_RELABELINGS = 500_000


def overlap_family(L, eps=1e-8):
    """Bitmasks and span dimensions of the run subsets overlapping in their own span.

    Only subsets holding both responses can overlap, so the rest are skipped.
    """
    if L.n > MAX_RUNS:
        raise ValueError(f"overlap family needs at most {MAX_RUNS} runs, got {L.n}")
    y = np.asarray(L.y)
    fam = []
    for k in range(2, L.n + 1):
        for rows in combinations(range(L.n), k):
            ys = y[list(rows)]
            if ys.min() == ys.max():
                continue
            S = L.subset(np.array(rows))
            if overlaps_in_span(S, eps):
                fam.append((sum(1 << i for i in rows), span_project(S)[1]))
    return fam


@lru_cache(maxsize=None)
def _relabelings(n1, n0):
    p1 = list(permutations(range(n1)))
    p0 = list(permutations(range(n1, n1 + n0)))
    if len(p1) * len(p0) > MAX_RELABELINGS:
        raise ValueError("configuration too large for exhaustive relabeling")
    return np.array([a + b for a in p1 for b in p0], dtype=np.int64).reshape(-1, n1 + n0)


def _key_from_family(y, fam):
    y = np.asarray(y)
    order = np.concatenate([np.flatnonzero(y == 1), np.flatnonzero(y == 0)])
    pos = np.empty(len(y), dtype=np.int64)
    pos[order] = np.arange(len(y))
    n1 = int(np.sum(y == 1))
    n0 = len(y) - n1
    if not fam:
        return (n1, n0, ())
    masks = np.array([m for m, _ in fam], dtype=np.int64)
    dims = np.array([r for _, r in fam], dtype=np.int64)
    bits = (masks[:, None] >> np.arange(len(y))) & 1  # (K, n) in original labels
    bits = bits[:, order]  # Case-first labels
    perms = _relabelings(n1, n0)  # (P, n): new label of each Case-first label
    mapped = bits @ (1 << perms.T)  # (K, P)
    codes = mapped * 64 + dims[:, None]
    codes.sort(axis=0)
    cols = codes.T  # one sorted code list per relabeling
    best = tuple(int(v) for v in np.unique(cols, axis=0)[0])
    return (n1, n0, best)


def canonical_key(L, eps=1e-8):
    """Key shared exactly by configurations related by a response-preserving relabeling."""
    return _key_from_family(L.y, overlap_family(L, eps))


def flip_key(L, eps=1e-8):
    """Key that also identifies a configuration with its response flip."""
    return keys(L, eps)[1]


def keys(L, eps=1e-8):
    """Both the canonical key and the flip key, from one overlap family."""
    fam = overlap_family(L, eps)  # a flip leaves the family unchanged
    ck = _key_from_family(L.y, fam)
    return ck, min(ck, _key_from_family(1 - np.asarray(L.y), fam))


def equivalent(A, B, allow_flip=True, eps=1e-8):
    if allow_flip:
        return flip_key(A, eps) == flip_key(B, eps)
    return canonical_key(A, eps) == canonical_key(B, eps)
