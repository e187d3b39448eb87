"""Minimal overlap configurations.

Deflation removes runs from overlapping data while overlap survives,
leaving a configuration in which every single removal destroys overlap.
Overlap of a subset is judged inside the subset's own affine span, so
lower-dimensional cores embedded in higher-dimensional data are recognized.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .dataset import Dataset, shuffle
from .errors import BudgetExceeded, NotMinimal, NotOverlapping
from .status import Status, classify, classify_in_span, span_project

__all__ = [
    "Kind",
    "MinimalConfig",
    "DepthReport",
    "overlaps_in_span",
    "deflate",
    "deflate_shuffled",
    "verify_minimal",
    "config_kind",
    "doubleton_count",
    "removal_depths",
    "DEPTH_BUDGET",
]

DEPTH_BUDGET = 10_000_000
COINCIDE_TOL = 1e-9


class Kind(str, enum.Enum):
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"

    def __str__(self):
        return self.value


@dataclass(frozen=True, eq=False)
class MinimalConfig:
    data: Dataset
    kind: Kind
    d_eff: int
    n: int
    doubleton_count: int

    def to_dict(self):
        return {
            "kind": self.kind.value,
            "d_eff": self.d_eff,
            "n": self.n,
            "doubletons": self.doubleton_count,
        }


@dataclass(frozen=True)
class DepthReport:
    n_overlap: int | None
    n_complete: int | None
    witness_overlap: tuple | None
    witness_complete: tuple | None
    k_max: int

    def to_dict(self):
        nc = self.n_complete if self.n_complete is not None else f"not found <= {self.k_max}"
        no = self.n_overlap if self.n_overlap is not None else f"not found <= {self.k_max}"
        return {
            "n_overlap": no,
            "n_complete": nc,
            "witness_overlap": list(self.witness_overlap) if self.witness_overlap else None,
            "witness_complete": list(self.witness_complete) if self.witness_complete else None,
        }


def overlaps_in_span(L, eps=1e-8):
    return classify_in_span(L, eps).status is Status.OVERLAP


def verify_minimal(M, eps=1e-8):
    """True when ``M`` overlaps in its own span and every single removal destroys that."""
    if M.n == 0 or not overlaps_in_span(M, eps):
        return False
    return not any(overlaps_in_span(M.drop([i]), eps) for i in range(M.n))


def doubleton_count(L, tol=COINCIDE_TOL):
    """Number of distinct design points carrying both a Case and a Non-Case run."""
    x = np.asarray(L.x, dtype=float)
    if L.n == 0:
        return 0
    scale = max(1.0, np.abs(x).max(initial=0.0))
    group = -np.ones(L.n, dtype=int)
    g = 0
    for i in range(L.n):
        if group[i] >= 0:
            continue
        close = np.abs(x - x[i]).max(axis=1) <= tol * scale
        group[close & (group < 0)] = g
        g += 1
    count = 0
    for k in range(g):
        ys = set(L.y[group == k].tolist())
        count += ys == {0, 1}
    return count


def config_kind(M, eps=1e-8):
    """Type I when a minimal configuration has ``n = d_eff + 2`` runs."""
    if not verify_minimal(M, eps):
        raise NotMinimal("configuration is not minimal overlapping")
    _, r = span_project(M)
    return Kind.TYPE_I if M.n == r + 2 else Kind.TYPE_II


def _minimal_config(M):
    _, r = span_project(M)
    kind = Kind.TYPE_I if M.n == r + 2 else Kind.TYPE_II
    return MinimalConfig(M, kind, r, M.n, doubleton_count(M))


def deflate(L, order=None, seed=None, eps=1e-8):
    """Greedily drop runs while overlap (in own span) survives.

    Runs are visited in ``order`` (row indices; default the current row
    order, or a seeded random order when ``seed`` is given) and the pass is
    repeated until no run can be dropped.

    Raises
    ------
    NotOverlapping
        If ``L`` does not overlap within its own span.
    """
    if not overlaps_in_span(L, eps):
        raise NotOverlapping("input does not overlap within its affine span")
    if order is None:
        order = (
            np.random.default_rng(seed).permutation(L.n) if seed is not None else np.arange(L.n)
        )
    order = [int(i) for i in order]
    if sorted(order) != list(range(L.n)):
        raise ValueError("order must be a permutation of the row indices")
    kept = list(order)
    changed = True
    while changed:
        changed = False
        for i in list(kept):
            trial = [k for k in kept if k != i]
            if trial and overlaps_in_span(L.subset(np.array(sorted(trial))), eps):
                kept = trial
                changed = True
    M = L.subset(np.array(sorted(kept)))
    assert verify_minimal(M, eps)
    return _minimal_config(M)


def deflate_shuffled(L, seed, eps=1e-8):
    """Deflate a seeded shuffle of ``L``; rows keep their original order in the result."""
    S = shuffle(L, seed)
    core = deflate(S, eps=eps).data
    keep = sorted(L.index_of(r) for r in core.rid)
    return _minimal_config(L.subset(np.array(keep)))


def removal_depths(L, k_max, eps=1e-8, budget=DEPTH_BUDGET):
    """Fewest removals that destroy overlap and that yield complete separation.

    Subsets are tried by increasing size, lexicographically within a size,
    so the reported witnesses are the first minimal ones.  Removing every
    run of one response counts as complete separation.
    """
    if classify(L, eps).status is not Status.OVERLAP:
        raise NotOverlapping("removal depth needs overlapping data")
    k_max = min(int(k_max), L.n)
    total = sum(comb(L.n, k) for k in range(1, k_max + 1))
    if total > budget:
        raise BudgetExceeded(f"{total} subsets exceed the budget of {budget}")
    n_ov = n_co = None
    w_ov = w_co = None
    for k in range(1, k_max + 1):
        for rows in combinations(range(L.n), k):
            st = classify(L.drop(list(rows)), eps).status
            if n_ov is None and st is not Status.OVERLAP:
                n_ov, w_ov = k, tuple(L.rid[i] for i in rows)
            if st in (Status.COMPLETE, Status.NO_MIXED):
                n_co, w_co = k, tuple(L.rid[i] for i in rows)
                break
        if n_co is not None:
            break
    return DepthReport(n_ov, n_co, w_ov, w_co, k_max)
