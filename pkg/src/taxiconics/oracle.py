"""Brute-force numeric and exact-grid verification of the closed forms.

The oracles deliberately avoid the closed-form machinery: line distance is
minimized by a dense scan plus ternary refinement of the convex map
t -> sum |x_i - a_i t|; vertices are re-found by bisection of
d(x, ell) - kappa d(x, P) along reference lines; and the section pieces are
checked against an exact-residual scan on a rational grid.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ._rat import Rat, rat, rat_str
from .cones import ConeSpec
from .errors import NoSignChange
from .geometry import Point2, Segment, piece_contains
from .metric import Point3, dist_to_line, dist_to_plane
from .sections import ConicSection, build_section


@dataclass(frozen=True)
class OracleConfig:
    grid_n: int = 201
    t_scan_range: float = 100.0
    t_scan_steps: int = 10001
    refine_iters: int = 200
    tol: float = 1e-9

    def __post_init__(self):
        if self.grid_n < 3 or self.grid_n % 2 == 0:
            raise ValueError("grid_n must be odd and at least 3")
        if self.tol <= 0:
            raise ValueError("tol must be positive")


DEFAULT_CONFIG = OracleConfig()


def _line_f_numpy(x, a, ts):
    return (
        np.abs(float(x[0]) - float(a[0]) * ts)
        + np.abs(float(x[1]) - float(a[1]) * ts)
        + np.abs(float(x[2]) - float(a[2]) * ts)
    )


def numeric_dist_to_line(x, a_triple, cfg: OracleConfig = DEFAULT_CONFIG) -> float:
    """min_t sum |x_i - a_i t| by dense scan plus ternary refinement."""
    xs = tuple(x)
    ts = np.linspace(-cfg.t_scan_range, cfg.t_scan_range, cfg.t_scan_steps)
    values = _line_f_numpy(xs, a_triple, ts)
    k = int(np.argmin(values))
    lo = ts[max(k - 1, 0)]
    hi = ts[min(k + 1, len(ts) - 1)]

    def f(t):
        return sum(abs(float(c) - float(ai) * t) for c, ai in zip(xs, a_triple))

    for _ in range(cfg.refine_iters):
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        if f(m1) < f(m2):
            hi = m2
        else:
            lo = m1
        if hi - lo < cfg.tol / 16:
            break
    return f((lo + hi) / 2.0)


def numeric_dist_to_plane(x, a_triple, cfg: OracleConfig = DEFAULT_CONFIG) -> float:
    """min over plane points of the taxicab distance, by iterative grid zoom.

    The plane A . y = 0 is parametrized by the two coordinates with the
    largest remaining |A| component solving for the third.
    """
    A = [float(c) for c in a_triple]
    xs = [float(c) for c in x]
    k = max(range(3), key=lambda i: abs(A[i]))
    i, j = [m for m in range(3) if m != k]

    def dist(u, v):
        w = -(A[i] * u + A[j] * v) / A[k]
        y = [0.0, 0.0, 0.0]
        y[i], y[j], y[k] = u, v, w
        return sum(abs(p - q) for p, q in zip(xs, y))

    cu, cv = xs[i], xs[j]
    half = max(1.0, 2.0 * sum(abs(c) for c in xs))
    best = dist(cu, cv)
    for _ in range(60):
        us = np.linspace(cu - half, cu + half, 41)
        vs = np.linspace(cv - half, cv + half, 41)
        grid = [(dist(u, v), u, v) for u in us for v in vs]
        best, cu, cv = min(grid)
        half *= 0.1
        if half < cfg.tol / 16:
            break
    return best


def _g_along_ref(cone: ConeSpec, ref_index: int):
    """g(t) = d(x(t), ell) - kappa d(x(t), P) along reference line ref_index.

    rho^1 is parametrized by x1, rho^2 by x2, rho^3 by the multiplier r in
    (r a1, r a2).
    """
    line = cone.line

    def point_at(t: Rat) -> Point3:
        if line.is_horizontal or ref_index == 3:
            return Point3(line.a1 * t, line.a2 * t, rat(1))
        if ref_index == 1:
            return Point3(t, line.a2, rat(1))
        return Point3(line.a1, t, rat(1))

    def g(t: float) -> float:
        p = point_at(_rational_from_float(float(t)))
        return float(dist_to_line(p, line)) - float(cone.kappa) * float(
            dist_to_plane(p, cone.plane)
        )

    return g


def _rational_from_float(t: float) -> Rat:
    num, den = t.as_integer_ratio()
    return rat(num, den)


def vertex_bisection(
    cone: ConeSpec,
    ref_index: int,
    interval: tuple[float, float],
    cfg: OracleConfig = DEFAULT_CONFIG,
) -> float:
    """Root of d(x, ell) - kappa d(x, P) on a reference line by bisection."""
    g, _ = _g_along_ref(cone, ref_index)
    lo, hi = float(interval[0]), float(interval[1])
    glo, ghi = g(lo), g(hi)
    if glo == 0.0:
        return lo
    if ghi == 0.0:
        return hi
    if (glo > 0) == (ghi > 0):
        raise NoSignChange(f"g({lo}) = {glo} and g({hi}) = {ghi} have equal signs")
    for _ in range(cfg.refine_iters):
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if gm == 0.0:
            return mid
        if (gm > 0) == (glo > 0):
            lo, glo = mid, gm
        else:
            hi, ghi = mid, gm
        if hi - lo < cfg.tol / 16:
            break
    return 0.5 * (lo + hi)


def scan_reference_roots(
    cone: ConeSpec,
    ref_index: int,
    window: tuple[float, float] = (-50.0, 50.0),
    steps: int = 4001,
    cfg: OracleConfig = DEFAULT_CONFIG,
) -> list[float]:
    """All bracketed roots of g along a reference line inside a window."""
    g, _ = _g_along_ref(cone, ref_index)
    ts = np.linspace(window[0], window[1], steps)
    values = [g(float(t)) for t in ts]
    roots = []
    for k in range(len(ts) - 1):
        v0, v1 = values[k], values[k + 1]
        if v0 == 0.0:
            roots.append(float(ts[k]))
        elif (v0 > 0) != (v1 > 0):
            roots.append(vertex_bisection(cone, ref_index, (float(ts[k]), float(ts[k + 1])), cfg))
    if values[-1] == 0.0:
        roots.append(float(ts[-1]))
    # merge near-duplicates from exact hits adjacent to sign changes
    merged: list[float] = []
    for r in sorted(roots):
        if not merged or abs(r - merged[-1]) > 16 * cfg.tol:
            merged.append(r)
    return merged


def exact_residual(cone: ConeSpec, p: Point2) -> Rat:
    """d(x, ell) - kappa d(x, P) at the slicing-plane point p, exact."""
    x = Point3(p.x1, p.x2, rat(1))
    return dist_to_line(x, cone.line) - cone.kappa * dist_to_plane(x, cone.plane)


def section_bbox(section: ConicSection, pad=1) -> tuple[Rat, Rat, Rat, Rat]:
    """Bounding box of the finite features of a section, padded."""
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
    pad = rat(pad)
    return (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)


@dataclass
class ScanReport:
    points_checked: int
    zero_residual_points: int
    max_residual_off_section: float
    violations: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "points_checked": self.points_checked,
            "zero_residual_points": self.zero_residual_points,
            "max_residual_off_section": self.max_residual_off_section,
            "violations": list(self.violations),
        }


def grid_residual_scan(
    cone: ConeSpec,
    section: Optional[ConicSection] = None,
    bbox: Optional[tuple] = None,
    cfg: OracleConfig = DEFAULT_CONFIG,
) -> ScanReport:
    """Exact residual on a rational grid; zero set must lie on the pieces."""
    if section is None:
        section = build_section(cone)
    if bbox is None:
        bbox = section_bbox(section)
    x0, y0, x1, y1 = (rat(c) for c in bbox)
    n = cfg.grid_n
    dx = (x1 - x0) / (n - 1)
    dy = (y1 - y0) / (n - 1)
    zeros = 0
    max_off = rat(0)
    violations: list[str] = []
    for iy in range(n):
        y = y0 + iy * dy
        for ix in range(n):
            p = Point2(x0 + ix * dx, y)
            r = exact_residual(cone, p)
            if r == 0:
                zeros += 1
                if not any(piece_contains(piece, p) for piece in section.pieces):
                    violations.append(
                        f"zero residual off pieces at ({rat_str(p.x1)}, {rat_str(p.x2)})"
                    )
            else:
                max_off = max(max_off, abs(r))
    return ScanReport(n * n, zeros, float(max_off), violations)


def sample_piece_points(piece, count: int, rng) -> list[Point2]:
    """Random rational points on a piece (interior parameters)."""
    from .geometry import piece_point_at

    out = []
    for _ in range(count):
        num = rng.randrange(1, 1000)
        if isinstance(piece, Segment):
            t = rat(num, 1000)
        else:
            t = rat(rng.randrange(1, 10000), 997)
        out.append(piece_point_at(piece, t))
    return out


def verify_cone(cone: ConeSpec, cfg: OracleConfig = DEFAULT_CONFIG, rng=None) -> dict:
    """Full verification report for one cone.

    Checks vertex exactness, residuals of sampled piece points, vertex
    reproduction by bisection, and the exact-zero coverage of a padded grid
    scan.  The report's "violations" list must be empty for a pass.
    """
    import random

    if rng is None:
        rng = random.Random(0)
    section = build_section(cone)
    violations: list[str] = []

    finite_vertices = [v for v in section.vertices if v.location.is_finite]
    for v in finite_vertices:
        if exact_residual(cone, v.location.point) != 0:
            violations.append(f"vertex {v.label} violates the cone equation")

    sampled = 0
    for piece in section.pieces:
        for p in sample_piece_points(piece, 12, rng):
            sampled += 1
            if exact_residual(cone, p) != 0:
                violations.append(
                    f"piece point ({rat_str(p.x1)}, {rat_str(p.x2)}) has nonzero residual"
                )

    bisected = 0
    for v in finite_vertices:
        t = _vertex_parameter(cone, v)
        try:
            root = vertex_bisection(
                cone, v.ref_index, (float(t) - 0.75, float(t) + 0.75), cfg
            )
            bisected += 1
            if abs(root - float(t)) > 1e-6:
                violations.append(f"bisection missed vertex {v.label}")
        except NoSignChange:
            pass  # tangential crossing; covered by the exact residual check

    scan = grid_residual_scan(cone, section, cfg=cfg)
    violations.extend(scan.violations)

    return {
        "cone": {
            "A": [rat_str(cone.plane.A1), rat_str(cone.plane.A2), str(cone.plane.delta)],
            "a": [rat_str(cone.line.a1), rat_str(cone.line.a2), str(cone.line.a3)],
            "kappa": rat_str(cone.kappa),
        },
        "class": section.klass,
        "vertices_checked": len(finite_vertices),
        "piece_points_checked": sampled,
        "vertices_bisected": bisected,
        "grid": scan.to_json(),
        "violations": violations,
        "passed": not violations,
    }


def _vertex_parameter(cone: ConeSpec, v) -> Rat:
    """Parameter of a finite vertex along its reference line."""
    p = v.location.point
    line = cone.line
    if line.is_horizontal or v.ref_index == 3:
        if line.a1 != 0:
            return p.x1 / line.a1
        return p.x2 / line.a2
    if v.ref_index == 1:
        return p.x1
    return p.x2
