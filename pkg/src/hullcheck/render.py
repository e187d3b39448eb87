"""SVG pictures of configurations in one to three dimensions.

Every distinct design point is drawn as a circle holding one icon: ``X``
for Cases, ``O`` for Non-Cases and a crossed circle for a doubleton.
Three-dimensional data use a fixed orthographic view from 30 degrees of
azimuth and 25 degrees of elevation.  Its viewing direction has
irrational component ratios, so distinct lattice points never land on the
same spot (a true isometric view would merge points along ``(1, 1, 1)``).
The ``iso`` projection option selects this view.  Output depends only on
the input, so identical requests give byte-identical documents.
"""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

import numpy as np

from .dataset import Dataset
from .errors import DimensionUnsupported
from .status import span_project

__all__ = ["RenderSpec", "render_svg", "design_points", "project"]

PANEL = 200.0
TITLE = 18.0
PAD = 12.0
COINCIDE_TOL = 1e-9
AZIMUTH = np.radians(30.0)
ELEVATION = np.radians(25.0)


@dataclass(frozen=True)
class RenderSpec:
    """What to draw.

    ``input`` is a :class:`Dataset` or a sequence of catalog ids; a list of
    ids is drawn as a gallery with ``columns`` panels per row.
    """

    input: object
    projection: str = "iso"
    icon_size: float = 14.0
    grid: bool = True
    columns: int = 6
    title: str | None = None


def design_points(L, tol=COINCIDE_TOL):
    """Distinct design points with their (Case count, Non-Case count)."""
    x = np.asarray(L.x, dtype=float)
    scale = max(1.0, float(np.abs(x).max(initial=0.0)))
    pts, counts = [], []
    for row, y in zip(x, L.y):
        for k, p in enumerate(pts):
            if np.abs(p - row).max() <= tol * scale:
                counts[k][0 if y == 1 else 1] += 1
                break
        else:
            pts.append(row)
            counts.append([1, 0] if y == 1 else [0, 1])
    return np.array(pts).reshape(len(pts), x.shape[1]), [tuple(c) for c in counts]


def _coordinates(L):
    if L.d <= 3:
        return np.asarray(L.x, dtype=float)
    P, r = span_project(L)
    if r > 3:
        raise DimensionUnsupported(f"cannot draw a {r}-dimensional configuration")
    return np.asarray(P.x, dtype=float)


def project(x, projection="iso"):
    """Screen coordinates (right, up) of points in up to three dimensions."""
    x = np.asarray(x, dtype=float)
    n, d = x.shape
    if d == 0:
        return np.zeros((n, 2))
    if d == 1:
        return np.column_stack([x[:, 0], np.zeros(n)])
    if d == 2:
        return x.copy()
    if projection == "xy":
        return x[:, :2].copy()
    if projection != "iso":
        raise ValueError("projection must be 'xy' or 'iso'")
    ca, sa = np.cos(AZIMUTH), np.sin(AZIMUTH)
    u = x[:, 0] * ca - x[:, 1] * sa
    v = x[:, 2] * np.cos(ELEVATION) - (x[:, 0] * sa + x[:, 1] * ca) * np.sin(ELEVATION)
    return np.column_stack([u, v])


def _f(v):
    return f"{v:.2f}"


def _icon(cx, cy, r, counts):
    ncase, nnon = counts
    out = [f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(r)}" class="site"/>']
    a = 0.55 * r
    if ncase:
        out.append(
            f'<path d="M{_f(cx - a)} {_f(cy - a)}L{_f(cx + a)} {_f(cy + a)}'
            f'M{_f(cx - a)} {_f(cy + a)}L{_f(cx + a)} {_f(cy - a)}" class="case"/>'
        )
    if nnon:
        rr = 0.78 * r if ncase else 0.6 * r
        out.append(f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(rr)}" class="noncase"/>')
    if ncase > 1 or nnon > 1:
        label = "/".join(str(c) for c in counts)
        out.append(f'<text x="{_f(cx + r)}" y="{_f(cy - r)}" class="mult">{label}</text>')
    return out


def _panel(L, ox, oy, spec, title):
    x = _coordinates(L)
    pts, counts = design_points(L.with_x(x))
    scr = project(pts, spec.projection)
    r = spec.icon_size / 2
    drops = x.shape[1] == 3 and spec.projection == "iso"
    extent = scr
    if drops:
        feet = pts.copy()
        feet[:, 2] = pts[:, 2].min()
        extent = np.vstack([scr, project(feet)])
    lo, hi = extent.min(axis=0), extent.max(axis=0)
    span = max(float((hi - lo).max()), 1.0)
    top = TITLE if title else 0.0
    s = (PANEL - top - 2 * (r + PAD)) / span
    mid = (lo + hi) / 2

    def to_px(p):
        return ox + PANEL / 2 + s * (p[0] - mid[0]), oy + top + (PANEL - top) / 2 - s * (p[1] - mid[1])

    out = []
    if title:
        out.append(f'<text x="{_f(ox + PANEL / 2)}" y="{_f(oy + 14)}" class="title">{escape(title)}</text>')
    if spec.grid and x.shape[1] in (1, 2):
        out.extend(_grid(pts, to_px))
    if drops:
        out.extend(_drop_lines(pts, scr, to_px))
    order = sorted(range(len(pts)), key=lambda i: (-scr[i][1], scr[i][0]))
    for i in order:
        cx, cy = to_px(scr[i])
        out.extend(_icon(cx, cy, r, counts[i]))
    return out


def _grid(pts, to_px):
    lo = np.floor(pts.min(axis=0)).astype(int)
    hi = np.ceil(pts.max(axis=0)).astype(int)
    out = []
    if pts.shape[1] == 1:
        if hi[0] == lo[0]:
            return out
        a, b = to_px((lo[0], 0.0)), to_px((hi[0], 0.0))
        out.append(f'<line x1="{_f(a[0])}" y1="{_f(a[1])}" x2="{_f(b[0])}" y2="{_f(b[1])}" class="grid"/>')
        return out
    for gx in range(lo[0], hi[0] + 1):
        a, b = to_px((gx, lo[1])), to_px((gx, hi[1]))
        out.append(f'<line x1="{_f(a[0])}" y1="{_f(a[1])}" x2="{_f(b[0])}" y2="{_f(b[1])}" class="grid"/>')
    for gy in range(lo[1], hi[1] + 1):
        a, b = to_px((lo[0], gy)), to_px((hi[0], gy))
        out.append(f'<line x1="{_f(a[0])}" y1="{_f(a[1])}" x2="{_f(b[0])}" y2="{_f(b[1])}" class="grid"/>')
    return out


def _drop_lines(pts, scr, to_px):
    # vertical guides from each point to the lowest layer help read depth
    zmin = pts[:, 2].min()
    out = []
    for p, q in zip(pts, scr):
        if p[2] > zmin:
            foot = project(np.array([[p[0], p[1], zmin]]))[0]
            a, b = to_px(q), to_px(foot)
            out.append(f'<line x1="{_f(a[0])}" y1="{_f(a[1])}" x2="{_f(b[0])}" y2="{_f(b[1])}" class="grid"/>')
    return out


STYLE = (
    ".site{fill:#fff;stroke:#888;stroke-width:1}"
    ".case{stroke:#b2182b;stroke-width:2;fill:none}"
    ".noncase{stroke:#2166ac;stroke-width:2;fill:none}"
    ".grid{stroke:#ddd;stroke-width:1}"
    ".title{font:12px sans-serif;text-anchor:middle}"
    ".mult{font:9px sans-serif}"
)


def render_svg(spec):
    """SVG 1.1 document for a dataset or a gallery of catalog ids.

    Raises
    ------
    DimensionUnsupported
        If a configuration spans more than three dimensions.
    """
    if isinstance(spec.input, Dataset):
        panels = [(spec.input, spec.title)]
    else:
        from .catalog import get_entry

        panels = [(get_entry(i).data, i) for i in spec.input]
    cols = max(1, min(spec.columns, len(panels)))
    rows = -(-len(panels) // cols)
    width, height = cols * PANEL, rows * PANEL
    body = []
    for k, (L, title) in enumerate(panels):
        ox, oy = (k % cols) * PANEL, (k // cols) * PANEL
        body.append(f'<g class="panel" id="panel-{k + 1}">')
        body.extend(_panel(L, ox, oy, spec, title))
        body.append("</g>")
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_f(width)}" '
        f'height="{_f(height)}" viewBox="0 0 {_f(width)} {_f(height)}">\n'
        f"<style>{STYLE}</style>\n"
    )
    return head + "\n".join(body) + "\n</svg>\n"
