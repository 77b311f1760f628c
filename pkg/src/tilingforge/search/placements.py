"""Corner-filling placement enumeration.

At the active corner of the region the filling is canonical: the first
tile against the outgoing boundary edge is placed, so every candidate has
one tile angle at the corner and one tile edge starting along the
outgoing edge.  Filling counterclockwise-first is exhaustive: any tiling,
restricted to a corner, lists its tiles in ccw order from the outgoing
edge, and each becomes the flush candidate once its predecessors are
placed.  Two candidates per angle arise from the two ways to assign the
angle's adjacent edges; they are mirror images of each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from ..exactnum import QRoot3
from ..geometry import (
    AngleVec,
    GeometryError,
    Point,
    dot,
    on_open_segment,
    orientation,
    segment_length,
    segments_properly_cross,
    unit_direction,
)
from ..tilealgebra import TileShape
from .region import Polygon


@dataclass(frozen=True)
class Placement:
    """One congruent copy of the tile: ccw vertices, chirality flag."""

    vertices: tuple[Point, Point, Point]
    mirrored: bool

    def to_json(self):
        return {"v": [v.to_json() for v in self.vertices], "mirrored": self.mirrored}

    @staticmethod
    def from_json(obj) -> "Placement":
        verts = tuple(Point.from_json(v) for v in obj["v"])
        if len(verts) != 3:
            raise ValueError("placement needs exactly three vertices")
        return Placement(verts, bool(obj["mirrored"]))


@dataclass(frozen=True)
class Candidate:
    placement: Placement
    corner: Point
    angle_name: str  # which tile angle sits at the corner


class TileGeometry:
    """Derived exact data for one tile: angle vectors, adjacent edge
    lengths, representable corner angles and representable edge lengths."""

    def __init__(self, tile: TileShape):
        self.tile = tile
        self.angles = []
        for name, (e1, e2) in (("alpha", (tile.b, tile.c)),
                               ("beta", (tile.a, tile.c)),
                               ("gamma", (tile.a, tile.b))):
            cos_v, sin_v = tile.angle_vec(name)
            self.angles.append((name, cos_v, sin_v, e1, e2))
        self.side_lengths = (tile.a, tile.b, tile.c)
        self._angle_rays = self._representable_angle_rays()
        self._length_cache: dict[tuple, bool] = {}

    # -- representable corner angles -----------------------------------------

    def _representable_angle_rays(self) -> frozenset:
        """Ray keys of every angle i*alpha + j*beta + k*gamma in (0, 2*pi).

        Bounds on i, j, k come from float estimates with a safety margin;
        values that wrap past 2*pi can only weaken the filter, never
        exclude a legal angle.
        """
        fa = math.acos(max(-1.0, min(1.0, float(self.tile.cos_alpha))))
        fb = math.acos(max(-1.0, min(1.0, float(self.tile.cos_beta))))
        two_pi = 2 * math.pi
        rays = set()
        i_max = int(two_pi / fa) + 1
        j_max = int(two_pi / fb) + 1
        for k in (0, 1, 2):
            for i in range(i_max + 1):
                for j in range(j_max + 1):
                    if i == j == k == 0:
                        continue
                    approx = i * fa + j * fb + k * (2 * math.pi / 3)
                    if approx > two_pi + 1e-9:
                        continue
                    vec = _compose_angle(self, i, j, k)
                    ang = AngleVec(vec[0], vec[1])
                    if not ang.is_zero_mod_2pi():
                        rays.add(ang.ray_key())
        return frozenset(rays)

    def angle_representable(self, ang: AngleVec) -> bool:
        return ang.ray_key() in self._angle_rays

    # -- representable edge lengths -------------------------------------------

    def length_representable(self, length: QRoot3) -> bool:
        """length = p*a + q*b + r*c with nonnegative integers, exactly."""
        key = (length.n1, length.n3, length.den)
        hit = self._length_cache.get(key)
        if hit is not None:
            return hit
        a, b, c = self.side_lengths
        result = False
        rc = QRoot3(0)
        while rc <= length and not result:
            qb = rc
            while qb <= length and not result:
                rest = length - qb
                ratio = rest / a
                if ratio.is_rational():
                    f = ratio.as_rational()
                    if f >= 0 and f.denominator == 1:
                        result = True
                qb = qb + b
            rc = rc + c
        self._length_cache[key] = result
        return result


def _compose_angle(geom: TileGeometry, i: int, j: int, k: int):
    c, s = QRoot3(1), QRoot3(0)
    for count, (_, cos_v, sin_v, _, _) in zip((i, j, k), geom.angles):
        for _ in range(count):
            c, s = c * cos_v - s * sin_v, c * sin_v + s * cos_v
    return (c, s)


def placement_chirality(tile: TileShape, p: Placement) -> Optional[bool]:
    """False for a direct copy, True for a mirrored one, None if the
    placement is not congruent to the tile.

    A direct copy lists its edge lengths counterclockwise as a rotation of
    (c, a, b) (starting at the alpha vertex); a mirrored one as (b, a, c).
    For an isosceles tile the two orders agree and direct is reported.
    """
    v = p.vertices
    if orientation(*v) <= 0:
        return None
    try:
        lens = tuple(segment_length(v[i], v[(i + 1) % 3]) for i in range(3))
    except GeometryError:
        return None
    a, b, c = tile.a, tile.b, tile.c
    direct = (c, a, b)
    mirrored = (b, a, c)
    for shift in range(3):
        rotated = (lens[shift], lens[(shift + 1) % 3], lens[(shift + 2) % 3])
        if rotated == direct:
            return False
    for shift in range(3):
        rotated = (lens[shift], lens[(shift + 1) % 3], lens[(shift + 2) % 3])
        if rotated == mirrored:
            return True
    return None


def select_corner(region: Polygon) -> int:
    """Index of the corner with the smallest interior angle; ties broken by
    lexicographic vertex order."""
    best = None
    best_idx = -1
    for i in range(len(region)):
        ang = region.interior_angle(i)
        if best is None or ang.less_than(best) or (
            ang == best and region.vertices[i].lex_less(region.vertices[best_idx])
        ):
            best, best_idx = ang, i
    return best_idx


def _rotate_dir(u: Point, cos_v: QRoot3, sin_v: QRoot3) -> Point:
    return Point(u.x * cos_v - u.y * sin_v, u.x * sin_v + u.y * cos_v)


def tile_fits_in_region(region: Polygon, tri: tuple[Point, Point, Point]) -> bool:
    """Exact containment: no proper edge crossing, every tile sub-edge
    midpoint inside or on the region, no boundary portion inside the tile."""
    tri_edges = [(tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])]
    reg_edges = list(region.edges())
    for a, b in tri_edges:
        for c, d in reg_edges:
            if segments_properly_cross(a, b, c, d):
                return False
    if any(region.contains(p) == "outside" for p in tri):
        return False
    reg_pts = list(region.vertices)
    for a, b in tri_edges:
        stops = [p for p in reg_pts if on_open_segment(p, a, b)]
        stops.sort(key=lambda p: _param(p, a, b))
        prev = a
        for p in stops + [b]:
            mid = Point((prev.x + p.x) / 2, (prev.y + p.y) / 2)
            if region.contains(mid) == "outside":
                return False
            prev = p
    for c, d in reg_edges:
        stops = [p for p in tri if on_open_segment(p, c, d)]
        stops.sort(key=lambda p: _param(p, c, d))
        prev = c
        for p in stops + [d]:
            mid = Point((prev.x + p.x) / 2, (prev.y + p.y) / 2)
            if _strictly_inside_triangle(mid, tri):
                return False
            prev = p
    return True


def _param(p: Point, a: Point, b: Point) -> QRoot3:
    # QRoot3 is totally ordered, so it can serve as a sort key directly
    return dot(p - a, b - a)


def _strictly_inside_triangle(p: Point, tri) -> bool:
    return all(orientation(tri[i], tri[(i + 1) % 3], p) > 0 for i in range(3))


def candidate_placements(
    region: Polygon,
    corner: int,
    geom: TileGeometry,
    allow_mirror: bool = True,
    check_fit: bool = True,
) -> list[Candidate]:
    """All tile placements with an angle flush at the given corner and an
    edge starting along the outgoing boundary edge, in canonical order.

    Filters: the tile angle fits (the rest of the corner is zero or still a
    nonnegative combination of tile angles), the flush boundary edge keeps
    a representable remainder (or the far corner is reflex and the tile
    overhangs it, which the exact containment check then vets), and the
    tile lies inside the region.
    """
    v = region.vertices[corner]
    nxt = region.vertices[(corner + 1) % len(region)]
    theta = region.interior_angle(corner)
    u_hat = unit_direction(v, nxt)
    boundary_len = region.edge_length(corner)
    next_angle_reflex = region.interior_angle((corner + 1) % len(region)).is_reflex()

    out: list[Candidate] = []
    seen = set()
    for name, cos_v, sin_v, e1, e2 in geom.angles:
        phi = AngleVec(cos_v, sin_v)
        if theta.less_than(phi):
            continue
        rest = theta.minus_rotation(cos_v, sin_v)
        if not rest.is_zero_mod_2pi() and not geom.angle_representable(rest):
            continue
        ray_dir = _rotate_dir(u_hat, cos_v, sin_v)
        for flush_len, other_len in ((e1, e2), (e2, e1)):
            if flush_len > boundary_len and not next_angle_reflex:
                continue
            if flush_len < boundary_len:
                if not geom.length_representable(boundary_len - flush_len):
                    continue
            f = v + u_hat.scale(flush_len)
            g = v + ray_dir.scale(other_len)
            placement_vertices = (v, f, g)
            key = tuple(sorted(p.lex_key() for p in placement_vertices))
            if key in seen:
                continue
            mirrored = placement_chirality(geom.tile, Placement(placement_vertices, False))
            assert mirrored is not None, "constructed placement must be congruent"
            if mirrored and not allow_mirror:
                continue
            if check_fit and not tile_fits_in_region(region, placement_vertices):
                continue
            seen.add(key)
            out.append(Candidate(Placement(placement_vertices, mirrored), v, name))
    return out
