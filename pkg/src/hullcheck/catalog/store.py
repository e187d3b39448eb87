"""The embedded catalog of minimal configurations in dimensions up to three.

Ids follow the published catalog: ``a``-``f`` are the Type I configurations
with ``d1 <= d0`` for ``d <= 3``; ``g``-``l`` the Type II configurations in
one and two dimensions; ``A1``-``A9`` the added and ``L1``-``L17`` the
linked Type II configurations in three dimensions.  Entries are stored as
integer lattice coordinates in ``data/catalog.json``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import numpy as np

from ..dataset import Dataset
from ..errors import DimensionUnsupported, NotMinimal
from ..minimal import Kind, verify_minimal
from ..status import span_project
from .equivalence import keys

__all__ = [
    "CatalogEntry",
    "CatalogMatch",
    "UNKNOWN",
    "load_catalog",
    "get_entry",
    "identify",
    "entry_to_dict",
    "entry_from_dict",
    "natural_id_key",
]

UNKNOWN = "Unknown"
MAX_IDENTIFY_DIM = 3


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    id: str
    data: Dataset
    kind: Kind
    format: str

    @property
    def d_eff(self):
        return span_project(self.data)[1]

    @property
    def n(self):
        return self.data.n


@dataclass(frozen=True)
class CatalogMatch:
    id: str
    flip: bool = False

    @property
    def known(self):
        return self.id != UNKNOWN

    def to_dict(self):
        return {"id": self.id, "flip": self.flip}


def natural_id_key(s):
    head = s.rstrip("0123456789")
    tail = s[len(head):]
    return (len(head), head, int(tail) if tail else -1)


def _plain(v):
    f = float(v)
    return int(f) if f.is_integer() else f


def entry_to_dict(e):
    return {
        "id": e.id,
        "format": e.format,
        "kind": e.kind.value,
        "x": [[_plain(v) for v in row] for row in np.asarray(e.data.x)],
        "y": [int(v) for v in e.data.y],
    }


def entry_from_dict(obj):
    x = np.asarray(obj["x"], dtype=float)
    if x.ndim == 1:
        x = x.reshape(-1, 1)
    return CatalogEntry(obj["id"], Dataset(x, obj["y"]), Kind(obj["kind"]), obj["format"])


@lru_cache(maxsize=1)
def load_catalog():
    """All catalog entries, in catalog order."""
    text = resources.files("hullcheck").joinpath("data/catalog.json").read_text()
    return tuple(entry_from_dict(o) for o in json.loads(text)["entries"])


def get_entry(entry_id):
    for e in load_catalog():
        if e.id == entry_id:
            return e
    raise KeyError(entry_id)


def _invariants(L):
    return (span_project(L)[1], L.n, tuple(sorted((L.n1, L.n0))))


@lru_cache(maxsize=1)
def _index():
    idx = {}
    for e in load_catalog():
        idx.setdefault(_invariants(e.data), []).append(e)
    return idx


@lru_cache(maxsize=None)
def _entry_keys(entry_id):
    return keys(get_entry(entry_id).data)


def identify(M, eps=1e-8, catalog=None, check=True):
    """Catalog id of the entry equivalent to ``M``, possibly after a response flip.

    Candidates are first narrowed by cheap invariants (own-span dimension,
    run count, group sizes up to a flip) and then compared through the
    overlap-family canonical key.  ``flip`` is true when ``M`` matches the
    entry only after swapping responses.

    Raises
    ------
    NotMinimal
        If ``M`` is not a minimal overlap configuration (skipped with
        ``check=False``).
    DimensionUnsupported
        If ``M`` spans more than three dimensions.
    """
    r = span_project(M)[1]
    if r > MAX_IDENTIFY_DIM:
        raise DimensionUnsupported(f"the catalog covers d <= {MAX_IDENTIFY_DIM}, got {r}")
    if check and not verify_minimal(M, eps):
        raise NotMinimal("only minimal overlap configurations can be identified")
    if catalog is None:
        candidates = _index().get(_invariants(M), [])
        known = [(e.id, *_entry_keys(e.id)) for e in candidates]
    else:
        inv = _invariants(M)
        known = [(e.id, *keys(e.data, eps)) for e in catalog if _invariants(e.data) == inv]
    if not known:
        return CatalogMatch(UNKNOWN)
    ck, fk = keys(M, eps)
    for eid, eck, efk in known:
        if eck == ck:
            return CatalogMatch(eid, False)
    for eid, eck, efk in known:
        if efk == fk:
            return CatalogMatch(eid, True)
    return CatalogMatch(UNKNOWN)
