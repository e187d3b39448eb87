"""Canonical forms of Type I configurations.

A Type I configuration is a pair of overlapping simplexes: ``d1 + 1`` Cases
and ``d0 + 1`` Non-Cases in dimension ``d = d1 + d0``.  Every such
configuration is an affine image of the standard matrix ``Lambda(d1, d0)``
built from unit simplexes, and the map back is recovered from the EL
weights through the interim form ``V = diag(u1, u0) (X - 1 S)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .dataset import Dataset
from .errors import NotMinimal, NotOverlapping, NotTypeI, SingularVminus
from .minimal import Kind, config_kind
from .status import Status, classify, span_project

__all__ = [
    "StandardForm",
    "unit_simplex",
    "regular_simplex",
    "make_standard_type1",
    "make_equidistant",
    "interim_form",
    "to_standard_form",
]


@dataclass(frozen=True, eq=False)
class StandardForm:
    lambda_matrix: np.ndarray
    d1: int
    d0: int
    u1: np.ndarray
    u0: np.ndarray

    @property
    def dataset(self):
        n1 = self.d1 + 1
        y = np.r_[np.ones(n1, dtype=int), np.zeros(self.d0 + 1, dtype=int)]
        return Dataset(self.lambda_matrix, y)

    def to_dict(self):
        return {
            "d1": self.d1,
            "d0": self.d0,
            "lambda": self.lambda_matrix.tolist(),
            "u1": self.u1.tolist(),
            "u0": self.u0.tolist(),
        }


def unit_simplex(n):
    """The unit ``n``-simplex: identity rows followed by a row of ``-1``.

    ``unit_simplex(0)`` is the single point ``[[0]]``.
    """
    if n < 0:
        raise ValueError("simplex dimension must be nonnegative")
    if n == 0:
        return np.zeros((1, 1))
    return np.vstack([np.eye(n), -np.ones((1, n))])


def regular_simplex(n):
    """Vertices of a regular ``n``-simplex centred at the origin with unit norms.

    Vertex ``i`` is the centred basis vector ``e_i - 1/(n+1)`` of ``R^(n+1)``,
    written in the Helmert basis of the sum-zero hyperplane and normalized,
    so that ``v_i . v_j = -1/n`` for ``i != j``.
    """
    if n == 0:
        return np.zeros((1, 1))
    m = n + 1
    # Helmert rows: (1, -1, 0..)/sqrt2, (1, 1, -2, 0..)/sqrt6, ...
    H = np.zeros((n, m))
    for k in range(1, m):
        H[k - 1, :k] = 1.0
        H[k - 1, k] = -k
        H[k - 1] /= np.sqrt(k * (k + 1))
    V = (np.eye(m) - 1.0 / m) @ H.T
    return V / np.linalg.norm(V, axis=1, keepdims=True)


def _blocks(top, bottom, d1, d0):
    if d1 == 0 and d0 == 0:
        return np.zeros((2, 1))
    rows1 = top.shape[0]
    rows0 = bottom.shape[0]
    x = np.zeros((rows1 + rows0, d1 + d0))
    if d1:
        x[:rows1, :d1] = top
    if d0:
        x[rows1:, d1:] = bottom
    return x


def _type1_dataset(x, d1, d0, prefix=("C", "N")):
    y = np.r_[np.ones(d1 + 1, dtype=int), np.zeros(d0 + 1, dtype=int)]
    rid = [f"{prefix[0]}{i + 1}" for i in range(d1 + 1)] + [
        f"{prefix[1]}{i + 1}" for i in range(d0 + 1)
    ]
    return Dataset(x, y, rid)


def make_standard_type1(d1, d0):
    """Standard Type I configuration ``Lambda(d1, d0)``.

    The first ``d1 + 1`` rows are Cases forming ``unit_simplex(d1)`` in the
    leading coordinates; the remaining ``d0 + 1`` rows are Non-Cases forming
    ``unit_simplex(d0)`` in the trailing ones.  A zero-dimensional simplex is
    the single point at the origin.

    Examples
    --------
    >>> make_standard_type1(0, 1).x.ravel().tolist()
    [0.0, 1.0, -1.0]
    """
    if d1 < 0 or d0 < 0:
        raise ValueError("simplex dimensions must be nonnegative")
    x = _blocks(unit_simplex(d1)[:, :d1], unit_simplex(d0)[:, :d0], d1, d0)
    return _type1_dataset(x, d1, d0)


def make_equidistant(d1, d0):
    """Type I configuration built from two regular simplexes centred at the origin."""
    if d1 + d0 < 1:
        raise ValueError("equidistant form needs d1 + d0 >= 1")
    x = _blocks(regular_simplex(d1)[:, :d1], regular_simplex(d0)[:, :d0], d1, d0)
    return _type1_dataset(x, d1, d0)


def interim_form(L, eps=1e-8):
    """``V = diag(u1, u0) (X - 1 S)`` with rows in Case-then-Non-Case order.

    Raises
    ------
    NotOverlapping
        If ``L`` does not overlap, so that no EL marginals exist.
    """
    L = L.case_first()
    rep = classify(L, eps)
    if rep.status is not Status.OVERLAP:
        raise NotOverlapping(f"interim form needs overlap, data show {rep.status}")
    m = rep.marginals
    u = np.concatenate([m.u1, m.u0])
    return u[:, None] * (np.asarray(L.x, dtype=float) - m.S[None, :])


def _natural(s):
    return [(0, int(t), "") if t.isdigit() else (1, 0, t) for t in re.findall(r"\d+|\D+", s)]


def to_standard_form(L, eps=1e-8):
    """Standard form of a Type I configuration.

    Rows are ordered by response (Cases first) and then by row id.  Dropping
    the last Case and the last Non-Case row of the interim form ``V`` leaves
    an invertible ``d x d`` matrix ``V_-``, and ``Lambda = V V_-^{-1}``.
    Input living in a proper affine subspace is first expressed in
    coordinates of its own span.

    Raises
    ------
    NotTypeI
        If ``L`` is not a minimal configuration with ``n = d + 2`` runs.
    """
    try:
        kind = config_kind(L, eps)
    except NotMinimal as exc:
        raise NotTypeI(str(exc)) from None
    if kind is not Kind.TYPE_I:
        raise NotTypeI(f"configuration has {L.n} runs, which makes it Type II")
    order = sorted(range(L.n), key=lambda i: (-int(L.y[i]), _natural(L.rid[i])))
    L = L.subset(np.array(order))
    P, r = span_project(L)
    n1, n0 = L.n1, L.n0
    if r == 0:
        lam = np.zeros((2, 1))
    else:
        V = interim_form(P, eps)
        keep = np.ones(L.n, dtype=bool)
        keep[[n1 - 1, L.n - 1]] = False
        Vm = V[keep]
        cond = np.linalg.cond(Vm)
        if not np.isfinite(cond) or cond > 1e12:
            raise SingularVminus("reduced interim form is singular")
        lam = np.linalg.solve(Vm.T, V.T).T
        snap = np.round(lam)
        lam = np.where(np.abs(lam - snap) < 1e-9, snap, lam) + 0.0
    if r == 0:
        u1, u0 = np.full(n1, 1.0 / n1), np.full(n0, 1.0 / n0)
    else:
        m = classify(L.with_x(lam), eps).marginals
        u1, u0 = m.u1, m.u0
    return StandardForm(lambda_matrix=lam, d1=n1 - 1, d0=n0 - 1, u1=u1, u0=u0)
