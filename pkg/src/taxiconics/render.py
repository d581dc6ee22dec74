"""Deterministic SVG rendering of sections and parameter-space rasters.

Exact rational geometry is clipped to the viewport before any float appears;
rational-to-decimal conversion happens only here, at 12 significant digits,
so identical inputs produce byte-identical SVG.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ._rat import rat
from .geometry import Line2, Point2, Segment
from .sections import ConicSection


@dataclass
class RenderSpec:
    viewport: Optional[tuple] = None  # (xmin, ymin, xmax, ymax), rationals
    width: int = 480
    styles: dict = field(default_factory=lambda: dict(_DEFAULT_STYLES))


_DEFAULT_STYLES = {
    "section": 'stroke="#1f3a93" stroke-width="2.5" fill="none"',
    "trace": 'stroke="#444444" stroke-width="1.2" stroke-dasharray="7 4" fill="none"',
    "ref_line": 'stroke="#c8c8c8" stroke-width="0.8" fill="none"',
    "vertex": 'fill="#c0392b" stroke="none"',
    "aux": 'fill="none" stroke="#2e8b57" stroke-width="1.2"',
    "strip": 'stroke="#e4b64c" stroke-width="1" stroke-dasharray="3 3" fill="none"',
    "ukappa_boundary": 'stroke="#888888" stroke-width="1" fill="none"',
}


def _fmt(v: float) -> str:
    return f"{float(v):.12g}"


def _clip_param(q: Point2, d: Point2, t_lo, t_hi, box):
    """Clip q + t d, t in [t_lo, t_hi] (None = unbounded), to a rational box."""
    xmin, ymin, xmax, ymax = box
    lo, hi = t_lo, t_hi
    for c0, c1 in (
        (q.x1 - xmin, d.x1),  # x >= xmin
        (xmax - q.x1, -d.x1),  # x <= xmax
        (q.x2 - ymin, d.x2),
        (ymax - q.x2, -d.x2),
    ):
        if c1 == 0:
            if c0 < 0:
                return None
            continue
        bound = -c0 / c1
        if c1 > 0:
            if lo is None or bound > lo:
                lo = bound
        else:
            if hi is None or bound < hi:
                hi = bound
    if lo is None or hi is None or lo > hi:
        return None
    return lo, hi


class _Canvas:
    def __init__(self, box, width):
        self.box = tuple(rat(c) for c in box)
        xmin, ymin, xmax, ymax = self.box
        if xmax <= xmin or ymax <= ymin:
            raise ValueError("viewport must have positive extent")
        self.scale = width / float(xmax - xmin)
        self.width = width
        self.height = float(ymax - ymin) * self.scale

    def to_px(self, p: Point2):
        xmin, _, _, ymax = self.box
        return (
            float(p.x1 - xmin) * self.scale,
            float(ymax - p.x2) * self.scale,
        )

    def path(self, a: Point2, b: Point2, style: str) -> str:
        ax, ay = self.to_px(a)
        bx, by = self.to_px(b)
        return (
            f'<path d="M {_fmt(ax)} {_fmt(ay)} L {_fmt(bx)} {_fmt(by)}" {style}/>'
        )

    def clipped_piece(self, piece, style: str) -> Optional[str]:
        if isinstance(piece, Segment):
            q, d = piece.a, piece.b - piece.a
            t = _clip_param(q, d, rat(0), rat(1), self.box)
        else:
            q, d = piece.base, piece.direction
            t = _clip_param(q, d, rat(0), None, self.box)
        if t is None or t[0] == t[1]:
            return None
        p0 = Point2(q.x1 + t[0] * d.x1, q.x2 + t[0] * d.x2)
        p1 = Point2(q.x1 + t[1] * d.x1, q.x2 + t[1] * d.x2)
        return self.path(p0, p1, style)

    def clipped_line(self, g: Line2, style: str) -> Optional[str]:
        if g.c2 != 0:
            q = Point2(rat(0), -g.c0 / g.c2)
        else:
            q = Point2(-g.c0 / g.c1, rat(0))
        d = g.direction()
        t = _clip_param(q, d, None, None, self.box)
        if t is None or t[0] == t[1]:
            return None
        p0 = Point2(q.x1 + t[0] * d.x1, q.x2 + t[0] * d.x2)
        p1 = Point2(q.x1 + t[1] * d.x1, q.x2 + t[1] * d.x2)
        return self.path(p0, p1, style)

    def marker(self, p: Point2, radius: float, style: str) -> str:
        x, y = self.to_px(p)
        return f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(radius)}" {style}/>'


def _svg_document(canvas: _Canvas, body: list[str]) -> str:
    head = (
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(canvas.width)}" height="{_fmt(canvas.height)}" '
        f'viewBox="0 0 {_fmt(canvas.width)} {_fmt(canvas.height)}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def default_viewport(section: ConicSection, pad=1):
    xs, ys = [], []
    for piece in section.pieces:
        pts = (piece.a, piece.b) if isinstance(piece, Segment) else (piece.base,)
        for p in pts:
            xs.append(p.x1)
            ys.append(p.x2)
    for v in section.vertices:
        if v.location.is_finite:
            xs.append(v.location.point.x1)
            ys.append(v.location.point.x2)
    for a in section.aux_points:
        if a.active and a.location.is_finite:
            xs.append(a.location.point.x1)
            ys.append(a.location.point.x2)
    if not xs:
        xs, ys = [rat(0)], [rat(0)]
    pad = rat(pad)
    return (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)


def render_section(section: ConicSection, spec: Optional[RenderSpec] = None) -> str:
    """SVG for a section: pieces, dashed trace, light reference lines, and
    markers for vertices and active auxiliary points.

    Rays are clipped to the viewport; markers are always emitted (outside the
    viewBox they are simply not visible), so a non-overlapping viewport still
    yields a valid document with markers only.
    """
    if spec is None:
        spec = RenderSpec()
    box = spec.viewport if spec.viewport is not None else default_viewport(section)
    canvas = _Canvas(box, spec.width)
    styles = spec.styles
    body: list[str] = []
    for _, g, _active in section.ref_lines:
        el = canvas.clipped_line(g, styles["ref_line"])
        if el:
            body.append(el)
    if section.trace is not None:
        el = canvas.clipped_line(section.trace, styles["trace"])
        if el:
            body.append(el)
    for piece in section.pieces:
        el = canvas.clipped_piece(piece, styles["section"])
        if el:
            body.append(el)
    for v in section.vertices:
        if v.location.is_finite:
            body.append(canvas.marker(v.location.point, 3.2, styles["vertex"]))
    for a in section.aux_points:
        if a.active and a.location.is_finite:
            body.append(canvas.marker(a.location.point, 2.6, styles["aux"]))
    return _svg_document(canvas, body)


_CELL_FILL = {
    "E": "#7fc97f",
    "P": "#fdc086",
    "H": "#beaed4",
    "D": "#e0e0e0",
}


def render_raster(rows: list[str], bbox, kappa=None, width: int = 480,
                  ukappa_boundary: bool = False) -> str:
    """SVG heat-map of a classification raster (row 0 at the bottom).

    With ukappa_boundary, overlays the disks and square whose arrangement
    bounds the ellipse region of the perpendicular case.
    """
    n = len(rows)
    box = tuple(rat(c) for c in bbox)
    canvas = _Canvas(box, width)
    xmin, ymin, xmax, ymax = canvas.box
    cell_w = float(xmax - xmin) * canvas.scale / n
    cell_h = float(ymax - ymin) * canvas.scale / n
    body = []
    for iy, row in enumerate(rows):
        for ix, letter in enumerate(row):
            x = ix * cell_w
            y = (n - 1 - iy) * cell_h
            body.append(
                f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(cell_w)}" '
                f'height="{_fmt(cell_h)}" fill="{_CELL_FILL[letter]}"/>'
            )
    if ukappa_boundary and kappa is not None:
        k = float(rat(kappa))
        style = _DEFAULT_STYLES["ukappa_boundary"]

        def circle(cx, cy, r):
            px, py = canvas.to_px(Point2(rat(0), rat(0)))
            x = px + cx * canvas.scale
            y = py - cy * canvas.scale
            body.append(
                f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(r * canvas.scale)}" {style}/>'
            )

        circle(0.0, 0.0, k ** -0.5)
        if k < 1:
            r = 1.0 / (2 * k)
            for cx, cy in ((r, 0.0), (-r, 0.0), (0.0, r), (0.0, -r)):
                circle(cx, cy, r)
        else:
            half = 1.0 / k
            px, py = canvas.to_px(Point2(rat(0), rat(0)))
            s = half * canvas.scale
            body.append(
                f'<rect x="{_fmt(px - s)}" y="{_fmt(py - s)}" '
                f'width="{_fmt(2 * s)}" height="{_fmt(2 * s)}" {style}/>'
            )
    return _svg_document(canvas, body)
