"""Empirical likelihood for a zero mean displacement.

The dual problem minimizes ``f(lam) = -sum_k c_k log*(1 + lam . delta_k)`` over
the multiplier ``lam``, where ``log*`` is the logarithm continued below
``1/N`` by its second-order Taylor polynomial so that ``f`` is finite and
convex everywhere.  Under overlap the minimizer is finite and the weights
``c_k / (N (1 + lam . delta_k))`` sum to one; under separation ``lam``
diverges and the recovered total weight collapses.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dataset import Displacements, displacements
from .errors import DegenerateWeights, NonFinite

__all__ = [
    "SolverOptions",
    "ELSolution",
    "Marginals",
    "log_star",
    "dual_objective",
    "el_solve",
    "el_solve_blocked",
    "marginal_weights",
    "reconstruct_product_weights",
]

ARMIJO_SLOPE = 0.3
MAX_HALVINGS = 40


@dataclass(frozen=True)
class SolverOptions:
    max_iter: int = 100
    decrement_tol: float = 1e-12
    grad_tol: float = 1e-10


@dataclass(frozen=True, eq=False)
class ELSolution:
    """Result of :func:`el_solve`.

    ``weights`` are flattened in the Case-major pair order of the
    displacements they were computed from.
    """

    lam: np.ndarray
    weights: np.ndarray
    w_tot: float
    iterations: int
    decrement: float
    converged: bool

    @property
    def lambda_(self):
        return self.lam

    def to_dict(self):
        return {
            "lambda": self.lam.tolist(),
            "w_tot": self.w_tot,
            "iterations": self.iterations,
            "decrement": self.decrement,
            "converged": self.converged,
        }


@dataclass(frozen=True, eq=False)
class Marginals:
    u1: np.ndarray
    u0: np.ndarray
    S: np.ndarray
    F: np.ndarray

    def to_dict(self):
        return {k: getattr(self, k).tolist() for k in ("u1", "u0", "S", "F")}


def log_star(z, n):
    """Pseudo-logarithm with knot at ``1/n`` and its first two derivatives.

    Above the knot this is ``log z``; below it the quadratic that matches the
    value, slope and curvature of ``log`` at the knot.

    Returns
    -------
    value, d1, d2 : ndarray or float
    """
    eps = 1.0 / n
    z = np.asarray(z, dtype=float)
    low = z < eps
    zs = np.where(low, eps, z)
    value = np.log(zs)
    d1 = 1.0 / zs
    d2 = -1.0 / zs**2
    if np.any(low):
        r = z / eps
        value = np.where(low, np.log(eps) - 1.5 + 2.0 * r - 0.5 * r**2, value)
        d1 = np.where(low, 2.0 / eps - z / eps**2, d1)
        d2 = np.where(low, -1.0 / eps**2, d2)
    if value.ndim == 0:
        return float(value), float(d1), float(d2)
    return value, d1, d2


def dual_objective(lam, delta, c=None, n_eff=None):
    """Value, gradient and Hessian of the EL dual at ``lam``."""
    delta = np.asarray(delta, dtype=float)
    c = np.ones(delta.shape[0]) if c is None else np.asarray(c, dtype=float)
    n_eff = c.sum() if n_eff is None else n_eff
    z = 1.0 + delta @ np.asarray(lam, dtype=float)
    v, d1, d2 = log_star(z, n_eff)
    f = -np.dot(c, v)
    g = -delta.T @ (c * d1)
    H = -(delta.T * (c * d2)) @ delta
    return f, g, H


def _as_delta(D):
    if isinstance(D, Displacements):
        return np.asarray(D.delta, dtype=float), D.pair_weights()
    delta = np.atleast_2d(np.asarray(D, dtype=float))
    return delta, np.ones(delta.shape[0])


def el_solve(D, opts=None, counts=None):
    """Solve the EL problem for a zero displacement mean.

    Parameters
    ----------
    D : Displacements or array_like, shape (N, d)
        Displacement rows; pair weights are taken from ``D.weights`` when
        present, or from ``counts``.
    opts : SolverOptions, optional

    Returns
    -------
    ELSolution
    """
    opts = opts or SolverOptions()
    delta, c = _as_delta(D)
    if counts is not None:
        c = np.asarray(counts, dtype=float)
    if delta.shape[0] == 0:
        raise ValueError("no displacement rows")
    if not np.all(np.isfinite(delta)):
        raise NonFinite("displacements contain non-finite entries")
    n_eff = c.sum()
    if n_eff <= 0:
        raise DegenerateWeights("pair weights sum to zero")

    # per-column scaling; lam is mapped back at the end
    scale = np.abs(delta).max(axis=0)
    scale[scale == 0] = 1.0
    ds = delta / scale

    lam, it, dec2, converged = _newton(
        lambda lam: dual_objective(lam, ds, c, n_eff), ds.shape[1], opts
    )
    z = 1.0 + ds @ lam
    w = np.maximum(c * log_star(z, n_eff)[1] / n_eff, 0.0)
    return ELSolution(
        lam=lam / scale,
        weights=w,
        w_tot=float(w.sum()),
        iterations=it,
        decrement=float(np.sqrt(max(dec2, 0.0))) if np.isfinite(dec2) else float("inf"),
        converged=converged,
    )


def _newton(oracle, d, opts):
    """Damped Newton with Armijo backtracking from ``lam = 0``."""
    lam = np.zeros(d)
    f, g, H = oracle(lam)
    converged = False
    dec2 = np.inf
    it = 0
    while True:
        if np.max(np.abs(g), initial=0.0) < opts.grad_tol:
            converged = True
            break
        # least squares keeps going when the Hessian is singular
        step = np.linalg.lstsq(H, -g, rcond=None)[0]
        dec2 = float(-g @ step)
        if dec2 / 2 < opts.decrement_tol:
            converged = True
            # one undamped polishing step; quadratic convergence makes it cheap accuracy
            fc = oracle(lam + step)
            if np.isfinite(fc[0]) and fc[0] <= f + 1e-12 * max(1.0, abs(f)):
                lam = lam + step
                f, g, H = fc
            break
        if it >= opts.max_iter:
            break
        it += 1
        t = 1.0
        slope = g @ step
        for _ in range(MAX_HALVINGS):
            cand = lam + t * step
            fc = oracle(cand)
            if fc[0] <= f + ARMIJO_SLOPE * t * slope:
                break
            t *= 0.5
        else:
            break
        lam = cand
        f, g, H = fc
    return lam, it, dec2, converged


def _pair_blocks(L, block_pairs):
    x1, x0 = L.x1, L.x0
    c1, c0 = L.counts[L.y == 1], L.counts[L.y == 0]
    step = max(1, block_pairs // max(1, x0.shape[0]))
    for s in range(0, x1.shape[0], step):
        blk = slice(s, s + step)
        delta = (x1[blk, None, :] - x0[None, :, :]).reshape(-1, L.d)
        yield blk, delta, np.outer(c1[blk], c0).ravel()


def el_solve_blocked(L, opts=None, block_pairs=200_000):
    """EL solve over all pairs of ``L`` without materializing the displacements.

    Returns the solution (with ``weights=None``) and its marginals.
    """
    opts = opts or SolverOptions()
    x1, x0 = L.x1, L.x0
    if not (np.all(np.isfinite(x1)) and np.all(np.isfinite(x0))):
        raise NonFinite("predictors contain non-finite entries")
    scale = np.maximum(x1.max(axis=0) - x0.min(axis=0), x0.max(axis=0) - x1.min(axis=0))
    scale[scale == 0] = 1.0
    n_eff = float(L.counts[L.y == 1].sum() * L.counts[L.y == 0].sum())
    Ls = L.with_x(L.x / scale)

    def oracle(lam):
        f, g, H = 0.0, np.zeros(L.d), np.zeros((L.d, L.d))
        for _, ds, c in _pair_blocks(Ls, block_pairs):
            fb, gb, Hb = dual_objective(lam, ds, c, n_eff)
            f, g, H = f + fb, g + gb, H + Hb
        return f, g, H

    lam, it, dec2, converged = _newton(oracle, L.d, opts)
    u1 = np.zeros(x1.shape[0])
    u0 = np.zeros(x0.shape[0])
    for blk, ds, c in _pair_blocks(Ls, block_pairs):
        w = np.maximum(c * log_star(1.0 + ds @ lam, n_eff)[1] / n_eff, 0.0)
        W = w.reshape(-1, x0.shape[0])
        u1[blk] = W.sum(axis=1)
        u0 += W.sum(axis=0)
    w_tot = float(u1.sum())
    sol = ELSolution(
        lam=lam / scale,
        weights=None,
        w_tot=w_tot,
        iterations=it,
        decrement=float(np.sqrt(max(dec2, 0.0))) if np.isfinite(dec2) else float("inf"),
        converged=converged,
    )
    if w_tot <= 0:
        return sol, None
    u1, u0 = u1 / w_tot, u0 / w_tot
    return sol, Marginals(u1=u1, u0=u0, S=u1 @ x1, F=u0 @ x0)


def marginal_weights(sol, D, L, eps=1e-8):
    """Case and Non-Case marginal weights and the common point ``S = F``."""
    if sol.w_tot <= eps:
        raise DegenerateWeights(f"total weight {sol.w_tot:.3g} is too small")
    if D is None:
        D = displacements(L)
    W = np.asarray(sol.weights).reshape(D.n1, D.n0) / sol.w_tot
    u1 = W.sum(axis=1)
    u0 = W.sum(axis=0)
    return Marginals(u1=u1, u0=u0, S=u1 @ L.x1, F=u0 @ L.x0)


def reconstruct_product_weights(u1, u0):
    """Outer-product pair weights built from marginal weights."""
    return np.outer(np.asarray(u1, dtype=float), np.asarray(u0, dtype=float))
