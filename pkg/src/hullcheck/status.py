"""Four-way overlap status and two linear-programming oracles.

:func:`classify` reads the status off the EL total weight and the rank of
the displacements.  :func:`lp_separation` and :func:`origin_interior_lp`
answer the same question by linear programming and serve as independent
checks.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .dataset import Dataset, Displacements, displacements, extended_rank, matrix_rank, RANK_TOL
from .elcore import SolverOptions, el_solve, el_solve_blocked, marginal_weights
from .errors import NonFinite
from .lp import simplex

__all__ = [
    "Status",
    "OverlapReport",
    "SeparationVerdict",
    "classify",
    "classify_in_span",
    "span_project",
    "lp_separation",
    "origin_interior_lp",
    "extreme_reduce",
    "EPS",
    "PAIR_LIMIT",
]

EPS = 1e-8
PAIR_LIMIT = 1_000_000
LP_STRICT_TOL = 1e-7
INTERIOR_TOL = 1e-10


class Status(str, enum.Enum):
    OVERLAP = "Overlap"
    QUASI = "QuasiSeparation"
    COMPLETE = "CompleteSeparation"
    NO_MIXED = "NoMixedResults"

    def __str__(self):
        return self.value

    @property
    def exit_code(self):
        return {"Overlap": 0, "QuasiSeparation": 2, "CompleteSeparation": 3, "NoMixedResults": 4}[self.value]


@dataclass(frozen=True, eq=False)
class OverlapReport:
    status: Status
    rank: int | None
    w_tot: float | None
    marginals: object
    epsilon: float
    d: int
    solution: object = None
    reduced: bool = False

    def to_dict(self):
        out = {
            "status": self.status.value,
            "rank": self.rank,
            "d": self.d,
            "w_tot": self.w_tot,
            "epsilon": self.epsilon,
        }
        if self.marginals is not None:
            out["marginals"] = self.marginals.to_dict()
        if self.reduced:
            out["reduced"] = True
        return out


@dataclass(frozen=True, eq=False)
class SeparationVerdict:
    separated: bool
    direction: np.ndarray
    lp_value: float
    intercept: float = 0.0


def _band(w_tot, full_rank, eps):
    if w_tot < eps:
        return Status.COMPLETE
    if full_rank and w_tot > 1 - eps:
        return Status.OVERLAP
    return Status.QUASI


def classify(L, eps=EPS, opts=None, pair_limit=PAIR_LIMIT):
    """Overlap status of ``L`` from the EL total weight and ``rank(delta)``.

    Boundary values ``w_tot == eps`` and ``w_tot == 1 - eps`` fall in the
    quasi-separation band.  Inputs with more than ``pair_limit`` displacement
    pairs are first reduced to the extreme points of each response group,
    which leaves the status unchanged; marginals for such inputs come from a
    blocked solve over all pairs.
    """
    if not np.all(np.isfinite(L.x)):
        raise NonFinite("predictors contain non-finite entries")
    if L.n1 * L.n0 == 0:
        return OverlapReport(Status.NO_MIXED, None, None, None, eps, L.d)
    if L.n1 * L.n0 > pair_limit:
        return _classify_large(L, eps, opts, pair_limit)
    D = displacements(L)
    r = matrix_rank(D.delta)
    sol = el_solve(D, opts)
    status = _band(sol.w_tot, r == L.d, eps)
    marg = marginal_weights(sol, D, L) if status is Status.OVERLAP else None
    return OverlapReport(status, r, sol.w_tot, marg, eps, L.d, sol)


def _classify_large(L, eps, opts, pair_limit):
    R = extreme_reduce(L)
    r = extended_rank(L.x) - 1
    if R.n1 * R.n0 > pair_limit:
        raise MemoryError(f"{R.n1 * R.n0} extreme pairs exceed the pair limit")
    sol = el_solve(displacements(R), opts)
    status = _band(sol.w_tot, r == L.d, eps)
    marg, w_tot, full = None, sol.w_tot, sol
    if status is Status.OVERLAP:
        full, marg = el_solve_blocked(L, opts)
        w_tot = full.w_tot
    return OverlapReport(status, r, w_tot, marg, eps, L.d, full, reduced=True)


def span_project(L, tol=RANK_TOL):
    """Express ``L`` in orthonormal coordinates of its own affine span.

    Returns the projected dataset and its dimension.  Coordinates are taken
    about the first row so that integer inputs stay well scaled.
    """
    x = np.asarray(L.x, dtype=float)
    if L.n == 0:
        return L.with_x(np.zeros((0, 0))), 0
    c = x - x.mean(axis=0)
    if not np.any(c):
        return L.with_x(np.zeros((L.n, 0))), 0
    _, s, vt = np.linalg.svd(c, full_matrices=False)
    r = int(np.sum(s > tol * s[0]))
    return L.with_x(c @ vt[:r].T), r


def classify_in_span(L, eps=EPS, opts=None):
    """Classify ``L`` after restricting it to the affine span of its rows."""
    P, _ = span_project(L)
    return classify(P, eps, opts)


def _extreme_rows(x):
    """Indices of rows of ``x`` that include every vertex of their convex hull."""
    n = x.shape[0]
    if n <= 2:
        return np.arange(n)
    c = x - x.mean(axis=0)
    _, s, vt = np.linalg.svd(c, full_matrices=False)
    if s[0] == 0:
        return np.arange(1)
    r = int(np.sum(s > RANK_TOL * s[0]))
    p = c @ vt[:r].T
    if r == 1:
        return np.unique([np.argmin(p[:, 0]), np.argmax(p[:, 0])])
    if n <= r + 1:
        return np.arange(n)
    from scipy.spatial import ConvexHull, QhullError

    try:
        return np.sort(ConvexHull(p).vertices)
    except QhullError:
        return np.arange(n)


def extreme_reduce(L):
    """Drop rows that are not hull vertices of their response group.

    Overlap status depends on the data only through the convex hulls of the
    two groups, so the reduction preserves it exactly.
    """
    keep = []
    for idx in (L.case_idx, L.noncase_idx):
        if idx.size:
            keep.append(idx[_extreme_rows(L.x[idx])])
    return L.subset(np.sort(np.concatenate(keep)))


def _standardize(x):
    m = x.mean(axis=0) if x.shape[0] else np.zeros(x.shape[1])
    s = np.abs(x - m).max(axis=0) if x.shape[0] else np.ones(x.shape[1])
    s[s == 0] = 1.0
    return (x - m) / s, m, s


def lp_separation(L, strict_tol=LP_STRICT_TOL):
    """Search for a hyperplane weakly separating Cases from Non-Cases.

    Solves ``max sum_i s_i`` over ``|b|_inf <= 1``, free ``b0`` and
    ``0 <= s_i <= 1`` with ``s_i <= x_i.b + b0`` for Cases and
    ``s_j <= -(x_j.b + b0)`` for Non-Cases, through its (d+1)-row dual.  The
    data are separated when the optimum exceeds ``strict_tol`` or the
    displacements are rank deficient.
    """
    if L.n1 * L.n0 == 0:
        raise ValueError("separation needs mixed responses")
    n, d = L.n, L.d
    xs, m, sc = _standardize(np.asarray(L.x, dtype=float))
    sigma = np.where(L.y == 1, 1.0, -1.0)
    cols = (np.column_stack([xs, np.ones(n)]) * sigma[:, None]).T  # (d+1, n)
    eye = np.vstack([np.eye(d), np.zeros((1, d))])
    A = np.hstack([cols, cols, -eye, eye])
    c = np.concatenate([-np.ones(n), np.zeros(n), np.ones(2 * d)])
    ub = np.concatenate([np.ones(n), np.full(n + 2 * d, np.inf)])
    res = simplex(c, A, np.zeros(d + 1), ub=ub)
    assert res.success, f"separation LP failed: {res.status}"  # zero is always feasible
    value = max(0.0, n + res.fun)
    bt, b0t = -res.duals[:d], -res.duals[d]
    b = bt / sc
    b0 = b0t - b @ m
    rank = extended_rank(L.x) - 1
    separated = value > strict_tol or rank < d
    if value > strict_tol:
        norm = np.abs(b).max()
        direction, intercept = (b / norm, b0 / norm) if norm > 0 else (b, b0)
    elif rank < d:
        # a normal to the affine span puts every run on one hyperplane
        _, _, vt = np.linalg.svd(L.x - L.x[0])
        direction = vt[-1] / np.abs(vt[-1]).max()
        intercept = -float(direction @ L.x[0])
    else:
        direction, intercept = np.zeros(d), 0.0
    return SeparationVerdict(bool(separated), np.asarray(direction, dtype=float), float(value), float(intercept))


def origin_interior_lp(delta, tol=INTERIOR_TOL):
    """Whether the origin is interior to the convex hull of the rows of ``delta``.

    Maximizes the smallest weight ``t`` over convex weights with zero
    weighted mean; interior means ``t > tol`` and full column rank.  A
    :class:`Dataset` argument is answered through the equivalent row-level
    problem (positive Case and Non-Case weights with a common mean), which
    avoids materializing every pair.
    """
    if isinstance(delta, Dataset):
        return _silvapulle_lp(delta, tol)
    if isinstance(delta, Displacements):
        delta = delta.delta
    delta = np.atleast_2d(np.asarray(delta, dtype=float))
    N, d = delta.shape
    if N == 0:
        raise ValueError("no displacement rows")
    sc = np.abs(delta).max(axis=0)
    sc[sc == 0] = 1.0
    ds = delta / sc
    tot = ds.sum(axis=0)
    # w = y + t with y >= 0 and t = tp - tm
    A = np.vstack([
        np.concatenate([np.ones(N), [N, -N]]),
        np.hstack([ds.T, tot[:, None], -tot[:, None]]),
    ])
    b = np.concatenate([[1.0], np.zeros(d)])
    c = np.concatenate([np.zeros(N), [-1.0, 1.0]])
    res = simplex(c, A, b)
    if not res.success:
        return False
    t = -res.fun
    return bool(t > tol and matrix_rank(delta) == d)


def _silvapulle_lp(L, tol):
    if L.n1 * L.n0 == 0:
        return False
    x1, x0 = L.x1, L.x0
    n1, n0, d = x1.shape[0], x0.shape[0], L.d
    xs, _, _ = _standardize(np.asarray(L.x, dtype=float))
    xs1, xs0 = xs[L.y == 1], xs[L.y == 0]
    # u = y + t for both groups
    A = np.zeros((d + 2, n1 + n0 + 2))
    A[0, :n1] = 1.0
    A[1, n1:n1 + n0] = 1.0
    A[2:, :n1] = xs1.T
    A[2:, n1:n1 + n0] = -xs0.T
    tcol = np.concatenate([[n1, n0], xs1.sum(axis=0) - xs0.sum(axis=0)])
    A[:, -2] = tcol
    A[:, -1] = -tcol
    b = np.concatenate([[1.0, 1.0], np.zeros(d)])
    c = np.zeros(n1 + n0 + 2)
    c[-2], c[-1] = -1.0, 1.0
    res = simplex(c, A, b)
    if not res.success:
        return False
    return bool(-res.fun > tol and extended_rank(L.x) - 1 == d)
