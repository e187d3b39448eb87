"""Dense bounded-variable primal simplex.

Solves ``min c.x  s.t.  A x = b,  lb <= x <= ub`` with a two-phase tableau
method.  Nonbasic variables sit at either bound, so box constraints cost no
extra rows.  The entering variable is the one with the largest reduced
cost; after a run of degenerate pivots the choice switches to Bland's
smallest-index rule, which rules out cycling on the highly degenerate
problems produced by the overlap oracles.  Problems here have a handful of rows and up to a few
hundred thousand columns, which suits a dense tableau.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["LPResult", "simplex"]

BLAND_AFTER = 20

OPTIMAL, INFEASIBLE, UNBOUNDED, ITERATION_LIMIT = "optimal", "infeasible", "unbounded", "iteration_limit"


@dataclass
class LPResult:
    x: np.ndarray
    fun: float
    status: str
    duals: np.ndarray
    iterations: int

    @property
    def success(self):
        return self.status == OPTIMAL


class _Tableau:
    def __init__(self, T, rhs, basis, ub, at_upper, tol):
        self.T = T  # B^-1 [A | I]
        self.rhs = rhs  # current basic values
        self.basis = basis
        self.ub = ub  # shifted upper bounds (lower bounds are 0)
        self.at_upper = at_upper
        self.tol = tol
        self.iterations = 0
        self.degenerate_run = 0

    def run(self, cost, allowed, max_iter):
        T, tol = self.T, self.tol
        m = T.shape[0]
        while self.iterations < max_iter:
            cb = cost[self.basis]
            red = cost - cb @ T
            red[self.basis] = 0.0
            cand = allowed & (
                ((~self.at_upper) & (red < -tol)) | (self.at_upper & (red > tol))
            )
            if not cand.any():
                return OPTIMAL
            if self.degenerate_run < BLAND_AFTER:
                j = int(np.argmax(np.where(cand, np.abs(red), -1.0)))  # Dantzig
            else:
                j = int(np.argmax(cand))  # Bland: smallest eligible index
            s = -1.0 if self.at_upper[j] else 1.0
            col = T[:, j] * s  # basic values change by -theta * col
            # ratio test; the entering variable's own bound flip competes as index j
            theta, leave, leave_key, leave_to_upper = self.ub[j], -1, j, False
            ubb = self.ub[self.basis]
            for i in range(m):
                a = col[i]
                if a > tol:
                    r, to_up = self.rhs[i] / a, False
                elif a < -tol and np.isfinite(ubb[i]):
                    r, to_up = (self.rhs[i] - ubb[i]) / a, True
                else:
                    continue
                r = max(r, 0.0)
                key = self.basis[i]
                if r < theta - tol or (r <= theta + tol and key < leave_key):
                    theta, leave, leave_key, leave_to_upper = r, i, key, to_up
            if not np.isfinite(theta):
                return UNBOUNDED
            self.iterations += 1
            self.degenerate_run = self.degenerate_run + 1 if theta <= tol else 0
            self.rhs -= theta * col
            if leave < 0:
                # bound flip of the entering variable, basis unchanged
                self.at_upper[j] = not self.at_upper[j]
                continue
            old = self.basis[leave]
            self.at_upper[old] = leave_to_upper
            enter_val = (self.ub[j] - theta) if self.at_upper[j] else theta
            piv = T[leave, j]
            T[leave] /= piv
            others = np.arange(m) != leave
            T[others] -= np.outer(T[others, j], T[leave])
            self.rhs[leave] = enter_val
            self.basis[leave] = j
            self.at_upper[j] = False
        return ITERATION_LIMIT


def simplex(c, A_eq, b_eq, lb=None, ub=None, tol=1e-9, max_iter=None):
    """Minimize ``c @ x`` subject to ``A_eq @ x == b_eq`` and ``lb <= x <= ub``.

    Lower bounds must be finite; upper bounds may be ``inf``.  ``duals`` are
    the equality-row multipliers ``y`` with ``c - A.T @ y`` the reduced costs.
    """
    c = np.asarray(c, dtype=float)
    A = np.atleast_2d(np.asarray(A_eq, dtype=float))
    b = np.asarray(b_eq, dtype=float).ravel()
    m, n = A.shape
    lb = np.zeros(n) if lb is None else np.asarray(lb, dtype=float)
    ub = np.full(n, np.inf) if ub is None else np.asarray(ub, dtype=float)
    if not np.all(np.isfinite(lb)):
        raise ValueError("lower bounds must be finite")
    if np.any(ub < lb - tol):
        return LPResult(np.full(n, np.nan), np.nan, INFEASIBLE, np.full(m, np.nan), 0)
    if max_iter is None:
        max_iter = 50 * (m + n) + 1000

    # boxed variables with negative cost start at their upper bound
    start_up = (c < 0) & np.isfinite(ub)
    x_start = np.where(start_up, ub, lb)
    rhs0 = b - A @ x_start
    sign = np.where(rhs0 < 0, -1.0, 1.0)
    T = np.hstack([A * sign[:, None], np.eye(m)])
    rhs = rhs0 * sign
    ubs = np.concatenate([ub - lb, np.full(m, np.inf)])
    basis = np.arange(n, n + m)
    at_upper = np.concatenate([start_up, np.zeros(m, dtype=bool)])
    tab = _Tableau(T, rhs.copy(), basis, ubs, at_upper, tol)

    # phase I: drive artificials to zero
    cost1 = np.concatenate([np.zeros(n), np.ones(m)])
    allowed = np.ones(n + m, dtype=bool)
    st = tab.run(cost1, allowed, max_iter)
    scale = max(1.0, np.abs(rhs).max(initial=0.0))
    if st == ITERATION_LIMIT:
        return _result(tab, lb, c, n, m, sign, st)
    infeas = cost1[tab.basis] @ tab.rhs
    if infeas > 1e3 * tol * scale:
        return _result(tab, lb, c, n, m, sign, INFEASIBLE)

    # phase II: artificials pinned at zero
    tab.ub[n:] = 0.0
    allowed[n:] = False
    cost2 = np.concatenate([c, np.zeros(m)])
    st = tab.run(cost2, allowed, max_iter)
    return _result(tab, lb, c, n, m, sign, st)


def _result(tab, lb, c, n, m, sign, status):
    xs = np.where(tab.at_upper, tab.ub, 0.0)
    xs = np.where(np.isfinite(xs), xs, 0.0)
    xs[tab.basis] = tab.rhs
    x = xs[:n] + lb
    cb = np.concatenate([c, np.zeros(m)])[tab.basis]
    # B^-1 sits in the artificial columns (up to the row signs)
    Binv = tab.T[:, n:] * sign[None, :]
    duals = cb @ Binv
    return LPResult(x, float(c @ x), status, duals, tab.iterations)
