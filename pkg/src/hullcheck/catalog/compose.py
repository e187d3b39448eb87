"""Assembling configurations: the add composer and the quasi-separated generator."""

from __future__ import annotations

import numpy as np

from ..dataset import Dataset
from ..errors import BadShape, CompositionFailed
from ..forms import unit_simplex
from ..minimal import verify_minimal
from ..status import Status, classify, span_project

__all__ = ["add_compose", "own_coordinates", "make_quasi", "random_affine"]


def own_coordinates(L):
    """Coordinates of ``L`` in its own affine span, kept as-is when already full rank."""
    P, r = span_project(L)
    if r == L.d:
        return np.asarray(L.x, dtype=float)
    return np.asarray(P.x, dtype=float)


def random_affine(x, seed):
    """Apply a seeded, well-conditioned random invertible affine map to the rows of ``x``."""
    rng = np.random.default_rng(seed)
    d = x.shape[1]
    while True:
        A = rng.normal(size=(d, d))
        if np.linalg.cond(A) < 50:
            break
    return x @ A + rng.normal(size=d)


def add_compose(components, seed=None, eps=1e-8):
    """Add minimal configurations along complementary directions.

    Each component keeps its own coordinates in a private block of columns,
    and ``m - 1`` further columns place component ``i`` at vertex ``i`` of
    ``unit_simplex(m - 1)``.  The result has ``sum(d_i) + m - 1`` columns and
    every run of every component.  A ``seed`` applies a random invertible
    affine map to the result.

    Raises
    ------
    CompositionFailed
        If the result does not overlap or is not minimal.
    """
    comps = list(components)
    if len(comps) < 2:
        raise ValueError("adding needs at least two components")
    blocks = [own_coordinates(C) if C.n else np.zeros((0, 0)) for C in comps]
    dims = [0 if not np.any(b) else b.shape[1] for b in blocks]
    m = len(comps)
    d = sum(dims) + m - 1
    anchors = unit_simplex(m - 1)
    xs, ys, rids = [], [], []
    col = 0
    for i, (C, B, di) in enumerate(zip(comps, blocks, dims)):
        rows = np.zeros((C.n, d))
        if di:
            rows[:, col:col + di] = B
        rows[:, sum(dims):] = anchors[i]
        col += di
        xs.append(rows)
        ys.append(np.asarray(C.y))
        rids.extend(f"{i + 1}.{r}" for r in C.rid)
    x = np.vstack(xs)
    if seed is not None:
        x = random_affine(x, seed)
    out = Dataset(x, np.concatenate(ys), rids)
    status = classify(out, eps).status
    if status is not Status.OVERLAP:
        raise CompositionFailed(f"added configuration shows {status}, not overlap")
    if not verify_minimal(out, eps):
        raise CompositionFailed("added configuration is not minimal")
    return out


def make_quasi(n, d, seed):
    """Quasi-separated data of any size around a small fixed core.

    The core is a doubleton at the origin with Non-Case runs at the unit
    vectors, which is what remains of the ``(d+1)``-doubleton configuration
    after dropping the Case run from all but one doubleton.  The remaining
    ``n - d - 2`` runs are random and strictly separated by a hyperplane
    through the origin whose normal has positive entries: Cases on the
    negative side, Non-Cases on the positive side, each at least one unit
    away.  The hyperplane touches the data only at the doubleton, so the
    result is quasi-separated and of full rank.

    Raises
    ------
    BadShape
        If ``n < d + 2`` or ``d < 1``.
    """
    if d < 1 or n < d + 2:
        raise BadShape(f"need d >= 1 and n >= d + 2, got n={n}, d={d}")
    rng = np.random.default_rng(seed)
    a = np.abs(rng.normal(size=d)) + 0.1
    a /= np.linalg.norm(a)
    core_x = np.vstack([np.zeros((2, d)), np.eye(d)])
    core_y = np.r_[1, 0, np.zeros(d, dtype=int)]
    k = n - d - 2
    y = rng.integers(0, 2, size=k)
    z = rng.normal(size=(k, d)) * 2.0
    z -= np.outer(z @ a, a)
    side = np.where(y == 1, -1.0, 1.0)
    z += np.outer(side * (1.0 + rng.exponential(size=k)), a)
    x = np.vstack([core_x, z])
    rid = ["Q1", "Q0"] + [f"U{i + 1}" for i in range(d)] + [f"R{i + 1}" for i in range(k)]
    return Dataset(x, np.r_[core_y, y], rid)
