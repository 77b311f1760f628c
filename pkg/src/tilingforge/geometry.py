"""Exact planar primitives over Q(sqrt3).

Every predicate here decides with qr3_sign on exact field values; no
floating-point comparison participates in any decision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import QRoot3, qr3_sign


class GeometryError(RuntimeError):
    pass


@dataclass(frozen=True)
class Point:
    x: QRoot3
    y: QRoot3

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, k) -> "Point":
        return Point(self.x * k, self.y * k)

    def lex_key(self):
        return (self.x.n1, self.x.n3, self.x.den, self.y.n1, self.y.n3, self.y.den)

    def lex_less(self, other: "Point") -> bool:
        if self.x != other.x:
            return self.x < other.x
        return self.y < other.y

    def to_json(self):
        return [self.x.to_json(), self.y.to_json()]

    @staticmethod
    def from_json(obj) -> "Point":
        return Point(QRoot3.from_json(obj[0]), QRoot3.from_json(obj[1]))

    def __repr__(self):
        return f"({self.x}, {self.y})"


def pt(x, y) -> Point:
    return Point(QRoot3(Fraction(x)) if not isinstance(x, QRoot3) else x,
                 QRoot3(Fraction(y)) if not isinstance(y, QRoot3) else y)


def cross(u: Point, v: Point) -> QRoot3:
    return u.x * v.y - u.y * v.x


def dot(u: Point, v: Point) -> QRoot3:
    return u.x * v.x + u.y * v.y


def orientation(a: Point, b: Point, c: Point) -> int:
    """+1 for counterclockwise a->b->c, -1 clockwise, 0 collinear."""
    return qr3_sign(cross(b - a, c - a))


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """p lies on the closed segment [a, b]."""
    if orientation(a, b, p) != 0:
        return False
    return qr3_sign(dot(p - a, b - a)) >= 0 and qr3_sign(dot(p - b, a - b)) >= 0


def on_open_segment(p: Point, a: Point, b: Point) -> bool:
    """p lies strictly inside the segment (a, b)."""
    if orientation(a, b, p) != 0:
        return False
    return qr3_sign(dot(p - a, b - a)) > 0 and qr3_sign(dot(p - b, a - b)) > 0


def segments_properly_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Open segments ab and cd cross in a single interior point."""
    o1, o2 = orientation(a, b, c), orientation(a, b, d)
    o3, o4 = orientation(c, d, a), orientation(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def segment_length(a: Point, b: Point) -> QRoot3:
    """Exact length; raises if it leaves Q(sqrt3) (closure violation)."""
    d = b - a
    sq = dot(d, d)
    root = sq.sqrt()
    if root is None:
        raise GeometryError(f"segment length sqrt({sq}) is not in Q(sqrt3)")
    return root


def unit_direction(a: Point, b: Point) -> Point:
    ln = segment_length(a, b)
    d = b - a
    return Point(d.x / ln, d.y / ln)


def point_in_polygon(p: Point, vertices: Sequence[Point]) -> str:
    """'inside' / 'on' / 'outside' for a simple polygon.

    Division-free crossing count: an upward edge crossing the rightward ray
    from p has p strictly to its left, a downward edge strictly to its
    right; boundary points are detected first.
    """
    n = len(vertices)
    for i in range(n):
        if on_segment(p, vertices[i], vertices[(i + 1) % n]):
            return "on"
    crossings = 0
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        sa = qr3_sign(a.y - p.y)
        sb = qr3_sign(b.y - p.y)
        if sa <= 0 and sb > 0:  # upward, a at or below the ray, b above
            if orientation(a, b, p) > 0:
                crossings += 1
        elif sb <= 0 and sa > 0:  # downward
            if orientation(a, b, p) < 0:
                crossings += 1
    return "inside" if crossings % 2 == 1 else "outside"


def polygon_area_twice(vertices: Sequence[Point]) -> QRoot3:
    acc = QRoot3(0)
    n = len(vertices)
    for i in range(n):
        acc = acc + cross(vertices[i], vertices[(i + 1) % n])
    return acc


# ---------------------------------------------------------------------------
# exact angle values, represented by unnormalized (cos, sin) vectors


@dataclass(frozen=True)
class AngleVec:
    """An angle in (0, 2*pi), represented by any positive multiple of
    (cos(theta), sin(theta)).  Supports exact comparison and subtraction
    of exactly-known rotations."""

    c: QRoot3
    s: QRoot3

    def __post_init__(self):
        if self.c.is_zero() and self.s.is_zero():
            raise GeometryError("zero angle vector")

    @staticmethod
    def between(u: Point, w: Point) -> "AngleVec":
        """Counterclockwise angle from direction u to direction w."""
        return AngleVec(dot(u, w), cross(u, w))

    def _band(self) -> int:
        ss = qr3_sign(self.s)
        if ss > 0:
            return 0  # (0, pi)
        if ss == 0:
            return 1 if qr3_sign(self.c) < 0 else 3  # pi, or 0 mod 2pi
        return 2  # (pi, 2pi)

    def is_zero_mod_2pi(self) -> bool:
        return self._band() == 3

    def is_pi(self) -> bool:
        return self._band() == 1

    def is_reflex(self) -> bool:
        return self._band() == 2

    def __eq__(self, other) -> bool:
        if not isinstance(other, AngleVec):
            return NotImplemented
        return (
            self._band() == other._band()
            and cross(Point(self.c, self.s), Point(other.c, other.s)).is_zero()
        )

    def __hash__(self):
        raise TypeError("AngleVec is not hashable; use ray_key()")

    def less_than(self, other: "AngleVec") -> bool:
        b1, b2 = self._band(), other._band()
        # band 3 is angle zero (smallest); then (0,pi), pi, (pi,2pi)
        order = {3: 0, 0: 1, 1: 2, 2: 3}
        if order[b1] != order[b2]:
            return order[b1] < order[b2]
        if b1 in (1, 3):
            return False
        return qr3_sign(cross(Point(self.c, self.s), Point(other.c, other.s))) > 0

    def minus_rotation(self, cos_phi: QRoot3, sin_phi: QRoot3) -> "AngleVec":
        """Angle value minus phi, where (cos_phi, sin_phi) is exact."""
        return AngleVec(self.c * cos_phi + self.s * sin_phi,
                        self.s * cos_phi - self.c * sin_phi)

    def ray_key(self):
        """Canonical hashable key for the ray of (c, s)."""
        if not self.c.is_zero():
            slope = self.s / self.c
            return (qr3_sign(self.c), slope.n1, slope.n3, slope.den)
        return (0, qr3_sign(self.s), None, None)

    def to_float(self) -> float:
        import math

        return math.atan2(float(self.s), float(self.c)) % (2 * math.pi)


def relative_angle(reference: Point, d: Point) -> AngleVec:
    """Angle of direction d measured counterclockwise from direction
    reference, as an AngleVec (in (0, 2pi); equality with 0 not allowed)."""
    return AngleVec(dot(reference, d), cross(reference, d))
