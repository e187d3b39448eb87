"""Add and link format templates.

An add format lists the dimensions of disjoint components that are placed
in complementary directions; the component dimensions of a ``d``-dimensional
add come from partitions of ``d + 1`` into at least two parts, each part
reduced by one.  A link format lists the dimensions of Type I components
that share runs, together with a scope index that lets one format reach
several ambient dimensions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement

__all__ = [
    "AddFormat",
    "LinkFormat",
    "partitions_min2",
    "add_formats",
    "link_formats",
    "format_label",
]

_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def format_label(dims):
    """Compact label such as ``0²1`` for the multiset ``(0, 0, 1)``."""
    out = []
    for v, k in sorted(Counter(dims).items()):
        out.append(str(v) + (str(k).translate(_SUPERSCRIPT) if k > 1 else ""))
    return "".join(out)


@dataclass(frozen=True)
class AddFormat:
    dims: tuple

    @property
    def m(self):
        return len(self.dims)

    @property
    def d(self):
        return sum(self.dims) + self.m - 1

    @property
    def label(self):
        return "+" + format_label(self.dims)


@dataclass(frozen=True)
class LinkFormat:
    dims: tuple
    s: int = 0

    @property
    def m(self):
        return len(self.dims)

    @property
    def d_max(self):
        return max(self.dims)

    @property
    def d(self):
        return self.d_max + self.m - 1 + self.s

    @property
    def n(self):
        return self.d + self.m + 1

    @property
    def label(self):
        return "∪" + format_label(self.dims)


def partitions_min2(n):
    """Partitions of ``n`` into at least two parts, largest part first.

    Partitions are listed in reverse lexicographic order, so there are
    ``p(n) - 1`` of them (the one-part partition is left out).

    >>> partitions_min2(4)
    [(3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 2:
        raise ValueError("need n >= 2")

    def parts(rest, cap):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in parts(rest - p, p):
                yield (p,) + tail

    return [p for p in parts(n, n) if len(p) >= 2]


def add_formats(d):
    """Add formats of dimension ``d`` as non-decreasing component dimensions."""
    if d < 1:
        raise ValueError("need d >= 1")
    return [AddFormat(tuple(sorted(p - 1 for p in part))) for part in partitions_min2(d + 1)]


def link_formats(d):
    """Link formats reaching dimension ``d``.

    Components have dimension at least one.  For ``m`` components with
    largest dimension ``d_max`` the others are chosen with replacement from
    ``1..d_max`` and the scope ``s = d - d_max - m + 1`` must satisfy
    ``0 <= s <= d_max - 1``.
    """
    if d < 2:
        raise ValueError("need d >= 2")
    out = []
    for d_max in range(1, d):
        for m in range(2, d - d_max + 2):
            s = d - d_max - m + 1
            if not 0 <= s <= d_max - 1:
                continue
            for rest in combinations_with_replacement(range(1, d_max + 1), m - 1):
                out.append(LinkFormat(tuple(sorted(rest + (d_max,))), s))
    return sorted(out, key=lambda f: (f.s, f.d_max, f.m, f.dims))
