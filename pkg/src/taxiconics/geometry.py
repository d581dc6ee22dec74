"""Exact 2-D affine/projective primitives on the slicing plane.

Points, lines, segments and rays with rational coordinates.  Lines and
directions are canonicalized so that value equality is plain structural
equality, and points at infinity are explicit values rather than sentinel
coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional, Union

from ._rat import Rat, rat, rat_str, sign
from .errors import CoincidentPoints, IdenticalLines


@dataclass(frozen=True)
class Point2:
    x1: Rat
    x2: Rat

    def __iter__(self) -> Iterator[Rat]:
        yield self.x1
        yield self.x2

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x1 - other.x1, self.x2 - other.x2)

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.x1 + other.x1, self.x2 + other.x2)

    def scaled(self, s: Rat) -> "Point2":
        return Point2(self.x1 * s, self.x2 * s)

    def to_json(self) -> list[str]:
        return [rat_str(self.x1), rat_str(self.x2)]


def point2(x1, x2) -> Point2:
    return Point2(rat(x1), rat(x2))


def cross(u: Point2, v: Point2) -> Rat:
    return u.x1 * v.x2 - u.x2 * v.x1


def primitive_direction(dx, dy) -> Point2:
    """Scale a nonzero rational vector to coprime integers, keeping orientation."""
    dx, dy = rat(dx), rat(dy)
    if dx == 0 and dy == 0:
        raise ValueError("zero direction")
    nx, dxden = int(dx.numerator), int(dx.denominator)
    ny, dyden = int(dy.numerator), int(dy.denominator)
    # common denominator, then divide by content
    ax = nx * dyden
    ay = ny * dxden
    g = gcd(abs(ax), abs(ay))
    return Point2(Rat(ax // g), Rat(ay // g))


def projective_direction(dx, dy) -> Point2:
    """Primitive direction with the first nonzero coordinate positive.

    Collapses d and -d, which name the same point at infinity.
    """
    d = primitive_direction(dx, dy)
    lead = d.x1 if d.x1 != 0 else d.x2
    if lead < 0:
        return Point2(-d.x1, -d.x2)
    return d


@dataclass(frozen=True)
class ExtendedPoint:
    """A point of the slicing plane, finite or at infinity along a direction."""

    point: Optional[Point2]
    direction: Optional[Point2]

    @staticmethod
    def finite(p: Point2) -> "ExtendedPoint":
        return ExtendedPoint(p, None)

    @staticmethod
    def at_infinity(dx, dy) -> "ExtendedPoint":
        return ExtendedPoint(None, projective_direction(dx, dy))

    @property
    def is_finite(self) -> bool:
        return self.point is not None

    def to_json(self):
        if self.is_finite:
            return {"xy": self.point.to_json()}
        return {"at_infinity": True, "dir": self.direction.to_json()}


@dataclass(frozen=True)
class Line2:
    """Locus c1*x1 + c2*x2 + c0 = 0, canonicalized.

    Coefficients are coprime integers with the leading nonzero one of
    (c1, c2) positive, so equal lines compare equal.
    """

    c1: Rat
    c2: Rat
    c0: Rat

    @staticmethod
    def of(c1, c2, c0) -> "Line2":
        c1, c2, c0 = rat(c1), rat(c2), rat(c0)
        if c1 == 0 and c2 == 0:
            raise ValueError("degenerate line: (c1, c2) must be nonzero")
        den = int(c1.denominator) * int(c2.denominator) * int(c0.denominator)
        ints = [int(c * den) for c in (c1, c2, c0)]
        g = gcd(gcd(abs(ints[0]), abs(ints[1])), abs(ints[2]))
        ints = [v // g for v in ints]
        lead = ints[0] if ints[0] != 0 else ints[1]
        if lead < 0:
            ints = [-v for v in ints]
        return Line2(Rat(ints[0]), Rat(ints[1]), Rat(ints[2]))

    def value_at(self, p: Point2) -> Rat:
        return self.c1 * p.x1 + self.c2 * p.x2 + self.c0

    def direction(self) -> Point2:
        return primitive_direction(-self.c2, self.c1)

    def is_parallel_to(self, other: "Line2") -> bool:
        return self.c1 * other.c2 == self.c2 * other.c1

    def to_json(self) -> list[str]:
        return [rat_str(self.c1), rat_str(self.c2), rat_str(self.c0)]


def line_through(p: Point2, q: Point2) -> Line2:
    if p == q:
        raise CoincidentPoints(f"cannot span a line: {p} = {q}")
    c1 = q.x2 - p.x2
    c2 = p.x1 - q.x1
    c0 = -(c1 * p.x1 + c2 * p.x2)
    return Line2.of(c1, c2, c0)


def intersect_lines(g: Line2, h: Line2) -> ExtendedPoint:
    if g == h:
        raise IdenticalLines(f"lines coincide: {g}")
    det = g.c1 * h.c2 - g.c2 * h.c1
    if det == 0:
        return ExtendedPoint.at_infinity(-g.c2, g.c1)
    x1 = (g.c2 * h.c0 - g.c0 * h.c2) / det
    x2 = (g.c0 * h.c1 - g.c1 * h.c0) / det
    return ExtendedPoint.finite(Point2(x1, x2))


def side_of_line(g: Line2, p: Point2) -> int:
    """Exact sign of the line form at p: -1, 0 or +1."""
    return sign(g.value_at(p))


@dataclass(frozen=True)
class Segment:
    """Closed segment with distinct endpoints, stored lexicographically."""

    a: Point2
    b: Point2

    @staticmethod
    def of(p: Point2, q: Point2) -> "Segment":
        if p == q:
            raise ValueError("degenerate segment")
        if (q.x1, q.x2) < (p.x1, p.x2):
            p, q = q, p
        return Segment(p, q)

    def to_json(self):
        return {"kind": "segment", "a": self.a.to_json(), "b": self.b.to_json()}


@dataclass(frozen=True)
class Ray:
    """Closed ray from base along a primitive direction (orientation kept)."""

    base: Point2
    direction: Point2

    @staticmethod
    def of(base: Point2, dx, dy) -> "Ray":
        return Ray(base, primitive_direction(dx, dy))

    def to_json(self):
        return {"kind": "ray", "base": self.base.to_json(), "dir": self.direction.to_json()}


Piece = Union[Segment, Ray]


def piece_sort_key(piece: Piece):
    if isinstance(piece, Segment):
        return (0, piece.a.x1, piece.a.x2, piece.b.x1, piece.b.x2)
    return (1, piece.base.x1, piece.base.x2, piece.direction.x1, piece.direction.x2)


def piece_contains(piece: Piece, p: Point2) -> bool:
    """Exact membership of p in a segment or ray."""
    if isinstance(piece, Segment):
        d = piece.b - piece.a
        r = p - piece.a
        if cross(d, r) != 0:
            return False
        t = (r.x1 * d.x1 + r.x2 * d.x2)  # numerator of projection, denom > 0
        return 0 <= t <= d.x1 * d.x1 + d.x2 * d.x2
    d = piece.direction
    r = p - piece.base
    if cross(d, r) != 0:
        return False
    return r.x1 * d.x1 + r.x2 * d.x2 >= 0


def piece_point_at(piece: Piece, t: Rat) -> Point2:
    """Point at parameter t: segments over [0, 1], rays over [0, inf)."""
    if isinstance(piece, Segment):
        return Point2(
            piece.a.x1 + t * (piece.b.x1 - piece.a.x1),
            piece.a.x2 + t * (piece.b.x2 - piece.a.x2),
        )
    return Point2(
        piece.base.x1 + t * piece.direction.x1,
        piece.base.x2 + t * piece.direction.x2,
    )
