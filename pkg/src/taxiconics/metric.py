"""Taxicab distances in R^3: point-point, point-plane, point-line.

Distance to a plane is |A.x| / max_i |A_i|.  Distance to a line ell_a is the
minimum of the convex map t -> sum_i |x_i - a_i t|, attained at t = x_i/a_i
for an index i selected by dominance of the parameter components, or by
wedge membership (middle value of the x_i/a_i) when no component dominates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator, Optional

from ._rat import Rat, rat
from .errors import ZeroComponent, ZeroVector

if TYPE_CHECKING:  # only for annotations; cones.py imports this module
    from .cones import LineParams, PlaneParams

INF = math.inf

DOMINANT = "dominant"
TRANSITIONAL = "transitionally_dominant"
NONE = "none"

# Tie-break for the rare parameter vectors where two components transitionally
# dominate at once (possible only when the third component is zero, e.g.
# (1,0,1) or (1,1,0)).  Preferring index 3 keeps transitionally-steep lines on
# the d_{1,2} partial distance, consistent with steep-line similarity;
# preferring 1 over 2 matches the |a1| >= |a2| convention for horizontal lines.
_TIE_ORDER = (3, 1, 2)


@dataclass(frozen=True)
class Point3:
    x1: Rat
    x2: Rat
    x3: Rat

    def __iter__(self) -> Iterator[Rat]:
        yield self.x1
        yield self.x2
        yield self.x3


def point3(x1, x2, x3) -> Point3:
    return Point3(rat(x1), rat(x2), rat(x3))


@dataclass(frozen=True)
class DominanceClass:
    kind: str  # DOMINANT, TRANSITIONAL or NONE
    index: Optional[int]  # 1-based; None iff kind == NONE

    @property
    def is_dominant(self) -> bool:
        return self.kind == DOMINANT

    @property
    def is_transitional(self) -> bool:
        return self.kind == TRANSITIONAL


def dominance_class(v) -> DominanceClass:
    """Classify which component of a nonzero triple (transitionally) dominates."""
    v = tuple(rat(c) for c in v)
    if all(c == 0 for c in v):
        raise ZeroVector("dominance is undefined for the zero vector")
    mags = [abs(c) for c in v]
    total = sum(mags)
    transitional = []
    for i in _TIE_ORDER:
        rest = total - mags[i - 1]
        if mags[i - 1] > rest:
            return DominanceClass(DOMINANT, i)
        if mags[i - 1] == rest:
            transitional.append(i)
    if transitional:
        return DominanceClass(TRANSITIONAL, transitional[0])
    return DominanceClass(NONE, None)


def taxicab_dist(x: Point3, y: Point3) -> Rat:
    return abs(x.x1 - y.x1) + abs(x.x2 - y.x2) + abs(x.x3 - y.x3)


def _plane_value(x: Point3, a_triple) -> Rat:
    return a_triple[0] * x.x1 + a_triple[1] * x.x2 + a_triple[2] * x.x3


def partial_plane_dist(x: Point3, a_triple, i: int):
    """d_i(x, P): move only coordinate i; +inf when the move cannot reach P."""
    a_triple = tuple(rat(c) for c in a_triple)
    value = _plane_value(x, a_triple)
    if a_triple[i - 1] == 0:
        return Rat(0) if value == 0 else INF
    return abs(value) / abs(a_triple[i - 1])


def dist_to_plane_raw(x: Point3, a_triple) -> Rat:
    a_triple = tuple(rat(c) for c in a_triple)
    m = max(abs(c) for c in a_triple)
    if m == 0:
        raise ZeroVector("plane parameter must be nonzero")
    return abs(_plane_value(x, a_triple)) / m


def dist_to_plane(x: Point3, plane: "PlaneParams") -> Rat:
    """Taxicab distance from x to the plane P_A, exact."""
    return abs(plane.A1 * x.x1 + plane.A2 * x.x2 + plane.delta * x.x3) / plane.M


def _line_f(x: Point3, a, t: Rat) -> Rat:
    return abs(x.x1 - a[0] * t) + abs(x.x2 - a[1] * t) + abs(x.x3 - a[2] * t)


def partial_line_dist(x: Point3, a_triple, pair):
    """d_{j,k}(x, ell): move only coordinates j and k.

    Returns +inf when the third coordinate pins the line parameter to an
    unreachable value (a_i = 0 with x_i != 0).
    """
    a = tuple(rat(c) for c in a_triple)
    xs = tuple(x)
    j, k = pair
    (i,) = set((1, 2, 3)) - {j, k}
    if a[i - 1] != 0:
        return _line_f(x, a, xs[i - 1] / a[i - 1])
    if xs[i - 1] != 0:
        return INF
    # line parameter free: two-term convex minimum at the heavier slope
    cands = [m for m in (j, k) if a[m - 1] != 0]
    if not cands:
        raise ZeroVector("line parameter must be nonzero")
    m = max(cands, key=lambda idx: abs(a[idx - 1]))
    return _line_f(x, a, xs[m - 1] / a[m - 1])


def dist_to_line_raw(x: Point3, a_triple) -> Rat:
    """Taxicab distance from x to the line through the origin along a_triple."""
    a = tuple(rat(c) for c in a_triple)
    dom = dominance_class(a)
    xs = tuple(x)
    if dom.index is not None:
        i = dom.index
        return _line_f(x, a, xs[i - 1] / a[i - 1])
    # no dominance: all components nonzero, minimize at the middle value
    values = sorted(xs[i] / a[i] for i in range(3))
    return _line_f(x, a, values[1])


def dist_to_line(x: Point3, line: "LineParams") -> Rat:
    a = (line.a1, line.a2, rat(line.a3))
    dom = line.dominance
    xs = tuple(x)
    if dom.index is not None:
        i = dom.index
        return _line_f(x, a, xs[i - 1] / a[i - 1])
    values = sorted(xs[i] / a[i] for i in range(3))
    return _line_f(x, a, values[1])


def wedge_index(x: Point3, line: "LineParams") -> set[int]:
    """Indices i with x in the double-wedge W^i.

    Defined only when all three line components are nonzero; two indices on a
    boundary plane P^i, all three on the line itself.
    """
    a = (line.a1, line.a2, rat(line.a3))
    if any(c == 0 for c in a):
        raise ZeroComponent("wedges are undefined for coordinate lines")
    xs = tuple(x)
    values = [xs[i] / a[i] for i in range(3)]
    # a duplicated value is always the middle of the sorted triple
    middle = sorted(values)[1]
    return {i + 1 for i, v in enumerate(values) if v == middle}
