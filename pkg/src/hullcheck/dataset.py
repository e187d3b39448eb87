"""Binary-response data sets and their Case-minus-Non-Case displacements.

A dataset is the triple ``(x, y, rid)`` used throughout the package, plus
optional nonnegative ``counts`` that act as observation weights.  The
displacement matrix holds every Case-row minus Non-Case-row difference and is
the object whose convex hull decides overlap.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import NoMixedResults, NonFinite, ParseError, ValidationError

__all__ = [
    "Dataset",
    "Displacements",
    "load_dataset",
    "displacements",
    "matrix_rank",
    "shuffle",
    "extended_rank",
]

RANK_TOL = 1e-8


def _frozen(a):
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Dataset:
    """Binary-response predictor data.

    Parameters
    ----------
    x : array_like, shape (n, d)
        Predictor rows.
    y : array_like, shape (n,)
        Responses, 1 for Case and 0 for Non-Case.
    rid : sequence of str, optional
        Distinct row identifiers; defaults to ``"1" .. "n"``.
    counts : array_like, optional
        Nonnegative row weights; defaults to all ones.
    """

    x: np.ndarray
    y: np.ndarray
    rid: tuple = None
    counts: np.ndarray = None
    weighted: bool = field(default=False, init=False)

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        if x.ndim == 1:
            x = x.reshape(-1, 1)
        if x.ndim != 2:
            raise ValidationError("predictor matrix must be 2-D", field="x")
        n = x.shape[0]
        y = np.asarray(self.y)
        if y.ndim != 1 or y.shape[0] != n:
            raise ValidationError(f"expected {n} responses, got {y.size}", field="y")
        if n and not np.all(np.isin(y, (0, 1))):
            raise ValidationError("responses must be 0 or 1", field="y")
        rid = self.rid
        if rid is None:
            rid = tuple(str(i + 1) for i in range(n))
        rid = tuple(str(r) for r in rid)
        if len(rid) != n:
            raise ValidationError(f"expected {n} row ids, got {len(rid)}", field="rid")
        if len(set(rid)) != n:
            seen = set()
            dup = next(r for r in rid if r in seen or seen.add(r))
            raise ValidationError(f"duplicate row id {dup!r}", field="rid")
        weighted = self.counts is not None
        counts = np.ones(n) if self.counts is None else np.asarray(self.counts, dtype=float)
        if counts.shape != (n,):
            raise ValidationError(f"expected {n} counts", field="counts")
        if np.any(~np.isfinite(counts)) or np.any(counts < 0):
            raise ValidationError("counts must be finite and nonnegative", field="counts")
        object.__setattr__(self, "x", _frozen(x))
        object.__setattr__(self, "y", _frozen(y.astype(np.int8)))
        object.__setattr__(self, "rid", rid)
        object.__setattr__(self, "counts", _frozen(counts))
        object.__setattr__(self, "weighted", weighted)

    @property
    def n(self):
        return self.x.shape[0]

    @property
    def d(self):
        return self.x.shape[1]

    @property
    def case_idx(self):
        return np.flatnonzero(self.y == 1)

    @property
    def noncase_idx(self):
        return np.flatnonzero(self.y == 0)

    @property
    def n1(self):
        return int(np.sum(self.y == 1))

    @property
    def n0(self):
        return int(np.sum(self.y == 0))

    @property
    def x1(self):
        return self.x[self.y == 1]

    @property
    def x0(self):
        return self.x[self.y == 0]

    def subset(self, rows):
        """Return the dataset restricted to ``rows`` (indices or boolean mask)."""
        rows = np.arange(self.n)[rows]
        return Dataset(
            self.x[rows],
            self.y[rows],
            tuple(self.rid[i] for i in rows),
            self.counts[rows] if self.weighted else None,
        )

    def drop(self, rows):
        keep = np.ones(self.n, dtype=bool)
        keep[np.asarray(rows, dtype=int)] = False
        return self.subset(keep)

    def with_x(self, x):
        return Dataset(x, self.y, self.rid, self.counts if self.weighted else None)

    def flipped(self):
        """Swap Case and Non-Case responses."""
        return Dataset(self.x, 1 - self.y, self.rid, self.counts if self.weighted else None)

    def sorted_by_rid(self):
        return self.subset(np.array(sorted(range(self.n), key=lambda i: self.rid[i]), dtype=int))

    def case_first(self):
        """Rows reordered Case block first, then Non-Case, stable within blocks."""
        return self.subset(np.concatenate([self.case_idx, self.noncase_idx]))

    def index_of(self, rid):
        return self.rid.index(str(rid))

    def equals(self, other, atol=0.0):
        return (
            self.x.shape == other.x.shape
            and np.allclose(self.x, other.x, rtol=0, atol=atol)
            and np.array_equal(self.y, other.y)
            and self.rid == other.rid
            and np.allclose(self.counts, other.counts)
        )

    def to_csv(self, with_counts=None):
        with_counts = self.weighted if with_counts is None else with_counts
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        header = ["rid"] + [f"x{j + 1}" for j in range(self.d)] + ["y"]
        if with_counts:
            header.append("count")
        w.writerow(header)
        for i in range(self.n):
            row = [self.rid[i]] + [_fmt(v) for v in self.x[i]] + [int(self.y[i])]
            if with_counts:
                row.append(_fmt(self.counts[i]))
            w.writerow(row)
        return buf.getvalue()

    def to_json(self):
        out = {"x": self.x.tolist(), "y": self.y.astype(int).tolist(), "rid": list(self.rid)}
        if self.weighted:
            out["counts"] = self.counts.tolist()
        return out

    def __repr__(self):
        return f"Dataset(n={self.n}, d={self.d}, n1={self.n1}, n0={self.n0})"


def _fmt(v):
    v = float(v)
    if v == int(v) and abs(v) < 1e15:
        return str(int(v))
    return repr(v)


@dataclass(frozen=True, eq=False)
class Displacements:
    """Case-minus-Non-Case predictor differences in Case-major pair order.

    ``pairs[k] = (i, j)`` indexes the i-th Case row and j-th Non-Case row, both
    0-based within their response group.  ``weights`` is ``None`` for
    unweighted data, else the product of the two row counts.
    """

    delta: np.ndarray
    pairs: np.ndarray
    n1: int
    n0: int
    weights: np.ndarray = None

    @property
    def N(self):
        return self.delta.shape[0]

    @property
    def d(self):
        return self.delta.shape[1]

    def pair_weights(self):
        return np.ones(self.N) if self.weights is None else self.weights


def displacements(L):
    """All pairwise Case-minus-Non-Case differences of ``L``.

    Raises
    ------
    NoMixedResults
        If the responses are all identical.
    """
    x1, x0 = L.x1, L.x0
    n1, n0 = x1.shape[0], x0.shape[0]
    if n1 * n0 == 0:
        raise NoMixedResults("displacements need at least one Case and one Non-Case")
    delta = (x1[:, None, :] - x0[None, :, :]).reshape(n1 * n0, L.d)
    ii, jj = np.meshgrid(np.arange(n1), np.arange(n0), indexing="ij")
    pairs = np.column_stack([ii.ravel(), jj.ravel()])
    weights = None
    if L.weighted:
        c1, c0 = L.counts[L.y == 1], L.counts[L.y == 0]
        weights = _frozen(np.outer(c1, c0).ravel())
    return Displacements(_frozen(delta), _frozen(pairs), n1, n0, weights)


def matrix_rank(M, tol=RANK_TOL):
    """Numerical rank: singular values above ``tol`` times the largest one."""
    M = np.atleast_2d(np.asarray(M, dtype=float))
    if M.size == 0:
        return 0
    if not np.all(np.isfinite(M)):
        raise NonFinite("matrix has non-finite entries")
    s = np.linalg.svd(M, compute_uv=False)
    if s[0] == 0:
        return 0
    return int(np.sum(s > tol * s[0]))


def extended_rank(x, tol=RANK_TOL):
    """Rank of the extended matrix ``(1, x)``."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    # rank(1, X) = 1 + rank(X - any row); avoids mixing the unit column's scale
    if x.shape[0] == 0:
        return 0
    return 1 + matrix_rank(x - x[0], tol) if x.shape[0] > 1 else 1


def shuffle(L, seed):
    """Randomly permute the rows of ``L``; deterministic for a given seed."""
    perm = np.random.default_rng(seed).permutation(L.n)
    return L.subset(perm)


def load_dataset(source, format="csv"):
    """Parse a dataset from a path, text, bytes or binary/text stream.

    CSV files carry the header ``rid,x1,...,xd,y[,count]``; JSON files hold an
    object with keys ``x``, ``y``, ``rid`` and optionally ``counts``.
    """
    text = _read_text(source)
    if format == "csv":
        return _parse_csv(text)
    if format == "json":
        return _parse_json(text)
    raise ValueError(f"unknown format {format!r}")


def _read_text(source):
    if hasattr(source, "read"):
        data = source.read()
    elif isinstance(source, (bytes, bytearray)):
        data = bytes(source)
    elif isinstance(source, str) and "\n" not in source and not source.lstrip().startswith(("{", "rid")):
        with open(source, "rb") as fh:
            data = fh.read()
    else:
        data = source
    if isinstance(data, (bytes, bytearray)):
        data = data.decode("utf-8-sig")
    return data


def _parse_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    rows = [(k + 1, r) for k, r in enumerate(rows) if r and any(c.strip() for c in r)]
    if not rows:
        raise ParseError("empty input", line=1)
    hline, header = rows[0]
    header = [h.strip() for h in header]
    if header[0] != "rid" or "y" not in header:
        raise ParseError("header must be rid,x1,...,xd,y[,count]", line=hline)
    yi = header.index("y")
    xcols = header[1:yi]
    if xcols != [f"x{j + 1}" for j in range(len(xcols))]:
        raise ParseError("predictor columns must be named x1..xd", line=hline)
    has_count = len(header) == yi + 2 and header[yi + 1] == "count"
    if len(header) != yi + 1 + has_count:
        raise ParseError("unexpected trailing columns", line=hline)
    xs, ys, rids, counts = [], [], [], []
    seen = {}
    for line, rec in rows[1:]:
        if len(rec) != len(header):
            raise ParseError(f"expected {len(header)} fields, got {len(rec)}", line=line)
        rid = rec[0].strip()
        if rid in seen:
            raise ValidationError(f"duplicate row id {rid!r} (first on line {seen[rid]})", field="rid", line=line)
        seen[rid] = line
        try:
            xrow = [float(v) for v in rec[1:yi]]
            yv = float(rec[yi])
            cv = float(rec[yi + 1]) if has_count else 1.0
        except ValueError as exc:
            raise ParseError(str(exc), line=line) from None
        if not all(np.isfinite(xrow)):
            raise ValidationError("non-finite predictor", field="x", line=line)
        if yv not in (0.0, 1.0):
            raise ValidationError(f"response {rec[yi].strip()} is not 0 or 1", field="y", line=line)
        if not np.isfinite(cv) or cv < 0:
            raise ValidationError("count must be nonnegative", field="count", line=line)
        xs.append(xrow)
        ys.append(int(yv))
        rids.append(rid)
        counts.append(cv)
    x = np.array(xs, dtype=float).reshape(len(xs), len(xcols))
    return Dataset(x, np.array(ys, dtype=int), tuple(rids), np.array(counts) if has_count else None)


def _parse_json(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    if not isinstance(obj, dict) or "x" not in obj or "y" not in obj:
        raise ParseError("expected an object with keys x, y, rid")
    x = obj["x"]
    if not isinstance(x, list) or any(not isinstance(r, list) for r in x):
        raise ParseError("x must be a list of rows")
    widths = {len(r) for r in x}
    if len(widths) > 1:
        raise ParseError("ragged predictor rows")
    try:
        xa = np.array(x, dtype=float).reshape(len(x), widths.pop() if widths else 0)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad predictor value: {exc}") from None
    if not np.all(np.isfinite(xa)):
        raise ValidationError("non-finite predictor", field="x")
    return Dataset(xa, np.asarray(obj["y"]), obj.get("rid"), obj.get("counts"))
