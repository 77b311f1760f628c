"""Necessary conditions on a putative tiling.

Vertex splittings (how the target's corner angles decompose into tile
angles), boundary compositions (the 3x3 nonnegative-integer matrix taking
tile sides to target sides), exact area counts, and the coefficient pair
of the side product XZ after eliminating a^2 through the law of cosines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .exactnum import QRoot3, qr3_sign
from .tilealgebra import TileShape


class ConstraintError(ValueError):
    pass


@dataclass(frozen=True)
class VertexSplit:
    """Total counts (P, Q, R) of alpha, beta, gamma angles at the three
    target corners together."""

    P: int
    Q: int
    R: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.P, self.Q, self.R)

    def angle_equation_holds(self, alpha_over_pi: Optional[Fraction]) -> bool:
        """P*alpha + Q*beta + R*gamma = pi, with beta = pi/3 - alpha."""
        if alpha_over_pi is None:
            return self.P == self.Q and Fraction(self.Q, 3) + Fraction(2 * self.R, 3) == 1
        f = Fraction(alpha_over_pi)
        return self.P * f + self.Q * (Fraction(1, 3) - f) + self.R * Fraction(2, 3) == 1


# A corner of the target that is not split carries one tile angle; a split
# corner carries at least two.  Together with R <= 1 (two gamma angles
# exceed pi) the workable enumeration constraint is P + Q >= 4, which keeps
# (0,4,0) and drops the similar-triangle splitting (1,1,1).
_MIN_PQ = 4


def enumerate_vertex_splits(
    alpha_over_pi: Optional[Fraction], bound: int = 12
) -> list[VertexSplit]:
    """All (P, Q, R) with R <= 1, P + Q >= 4 and the angle sum exact.

    ``alpha_over_pi`` is the exact value of alpha/pi, or None when alpha is
    not a rational multiple of pi (then only the coefficientwise solution
    (3,3,0) survives).  Always contains (3,3,0).
    """
    if alpha_over_pi is not None and not (0 < alpha_over_pi < Fraction(1, 6)):
        raise ConstraintError("alpha must lie strictly between 0 and pi/6")
    out = []
    for R in (0, 1):
        for P in range(0, bound + 1):
            for Q in range(0, bound + 1):
                if P + Q < _MIN_PQ:
                    continue
                vs = VertexSplit(P, Q, R)
                if vs.angle_equation_holds(alpha_over_pi):
                    out.append(vs)
    assert VertexSplit(3, 3, 0) in out
    return sorted(out, key=lambda v: (v.R, v.Q, v.P))


def solve_alpha_from_split(P: int, Q: int, R: int) -> Fraction:
    """alpha/pi = (2R + Q - 3) / (3 (Q - P)); defined only when P != Q
    (the splitting system's determinant is 3(Q - P))."""
    if P == Q:
        raise ConstraintError("P = Q makes the splitting system singular")
    return Fraction(2 * R + Q - 3, 3 * (Q - P))


# ---------------------------------------------------------------------------
# target triangle specification


def _rotvec_mul(u: tuple[QRoot3, QRoot3], v: tuple[QRoot3, QRoot3]) -> tuple[QRoot3, QRoot3]:
    return (u[0] * v[0] - u[1] * v[1], u[0] * v[1] + u[1] * v[0])


def combo_angle_vec(tile: TileShape, combo: tuple[int, int, int]) -> tuple[QRoot3, QRoot3]:
    """Exact (cos, sin) of i*alpha + j*beta + k*gamma."""
    acc = (QRoot3(1), QRoot3(0))
    for count, name in zip(combo, ("alpha", "beta", "gamma")):
        vec = tile.angle_vec(name)
        for _ in range(count):
            acc = _rotvec_mul(acc, vec)
    return acc


def corner_angle_combos(tile: TileShape) -> list[tuple[tuple[int, int, int], tuple[QRoot3, QRoot3]]]:
    """All combinations i*alpha + j*beta + k*gamma strictly between 0 and pi,
    with their exact (cos, sin)."""
    fa = math.acos(min(1.0, max(-1.0, float(tile.cos_alpha))))
    fb = math.acos(min(1.0, max(-1.0, float(tile.cos_beta))))
    out = []
    i_max = int(math.pi / fa + 1e-9) + 1
    j_max = int(math.pi / fb + 1e-9) + 1
    for k in (0, 1):
        for i in range(i_max + 1):
            for j in range(j_max + 1):
                if i == j == k == 0:
                    continue
                approx = i * fa + j * fb + k * (2 * math.pi / 3)
                if approx > math.pi + 1e-9:
                    continue
                vec = combo_angle_vec(tile, (i, j, k))
                if qr3_sign(vec[1]) > 0:  # strictly inside (0, pi)
                    out.append(((i, j, k), vec))
    return out


@dataclass(frozen=True)
class TriangleSpec:
    """Target triangle: sides X >= Y >= Z and, per corner opposite each
    side, the tile-angle combination (i, j, k) composing that corner."""

    angles: tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]
    X: QRoot3
    Y: QRoot3
    Z: QRoot3

    def sides(self) -> tuple[QRoot3, QRoot3, QRoot3]:
        return (self.X, self.Y, self.Z)

    def to_json(self) -> dict:
        return {
            "X": self.X.to_json(),
            "Y": self.Y.to_json(),
            "Z": self.Z.to_json(),
            "angles": [list(a) for a in self.angles],
        }

    @staticmethod
    def from_json(obj) -> "TriangleSpec":
        return TriangleSpec(
            tuple(tuple(a) for a in obj["angles"]),  # type: ignore[arg-type]
            QRoot3.from_json(obj["X"]),
            QRoot3.from_json(obj["Y"]),
            QRoot3.from_json(obj["Z"]),
        )


def triangle_spec(tile: TileShape, sides: Sequence[QRoot3]) -> TriangleSpec:
    """Build a TriangleSpec from three side lengths, resolving every corner
    angle into a tile-angle combination; rejects targets whose angles are
    not expressible."""
    if len(sides) != 3 or any(qr3_sign(s) <= 0 for s in sides):
        raise ConstraintError("need three positive side lengths")
    X, Y, Z = _sort_desc(sides)
    if X >= Y + Z:
        raise ConstraintError("degenerate triangle")
    combos = sorted(corner_angle_combos(tile), key=lambda cv: (sum(cv[0]), cv[0]))

    def match(cos_val: QRoot3) -> tuple[int, int, int]:
        # several combinations can share a value (e.g. 2a+2b = gamma);
        # report the one with the fewest angles
        for combo, (c, _s) in combos:
            if c == cos_val:
                return combo
        raise ConstraintError(
            f"target corner with cos = {cos_val} is not a combination of tile angles"
        )

    cos_A = (Y * Y + Z * Z - X * X) / (2 * Y * Z)
    cos_B = (X * X + Z * Z - Y * Y) / (2 * X * Z)
    cos_C = (X * X + Y * Y - Z * Z) / (2 * X * Y)
    spec = TriangleSpec((match(cos_A), match(cos_B), match(cos_C)), X, Y, Z)
    _assert_angle_sum(tile, spec)
    return spec


def _sort_desc(sides: Sequence[QRoot3]) -> tuple[QRoot3, QRoot3, QRoot3]:
    lst = list(sides)
    for i in range(len(lst)):
        for j in range(i + 1, len(lst)):
            if lst[j] > lst[i]:
                lst[i], lst[j] = lst[j], lst[i]
    return (lst[0], lst[1], lst[2])


def _assert_angle_sum(tile: TileShape, spec: TriangleSpec):
    acc = (QRoot3(1), QRoot3(0))
    for combo in spec.angles:
        acc = _rotvec_mul(acc, combo_angle_vec(tile, combo))
    if not (acc[0] == QRoot3(-1) and acc[1].is_zero()):
        raise ConstraintError("corner angles do not sum to pi")


def triangle_area(X: QRoot3, Y: QRoot3, Z: QRoot3) -> QRoot3:
    """Exact area from side lengths; 16 A^2 is the Heron polynomial."""
    sq = (
        2 * (X * X * Y * Y + Y * Y * Z * Z + Z * Z * X * X)
        - X ** 4 - Y ** 4 - Z ** 4
    )
    root = sq.sqrt()
    if root is None:
        raise ConstraintError("triangle area is not in Q(sqrt3)")
    return root / 4


# ---------------------------------------------------------------------------
# d-matrices


@dataclass(frozen=True)
class DMatrix:
    """Boundary composition: row * (a, b, c) = side, rows for X, Y, Z.
    Entry names follow the fixed letter layout
    (p, d, e / g, m, f / h, l, r)."""

    rows: tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]

    @property
    def p(self): return self.rows[0][0]
    @property
    def d(self): return self.rows[0][1]
    @property
    def e(self): return self.rows[0][2]
    @property
    def g(self): return self.rows[1][0]
    @property
    def m(self): return self.rows[1][1]
    @property
    def f(self): return self.rows[1][2]
    @property
    def h(self): return self.rows[2][0]
    @property
    def l(self): return self.rows[2][1]
    @property
    def r(self): return self.rows[2][2]

    def reproduces(self, tile: TileShape, tri: TriangleSpec) -> bool:
        sides = tri.sides()
        for row, side in zip(self.rows, sides):
            if row[0] * tile.a + row[1] * tile.b + row[2] * tile.c != side:
                return False
        return True

    def c_columns_positive(self) -> bool:
        """Every target side carries at least one c edge (entries e, f, r)."""
        return self.e > 0 and self.f > 0 and self.r > 0

    def to_json(self) -> list:
        return [list(r) for r in self.rows]


def side_compositions(tile: TileShape, side: QRoot3) -> list[tuple[int, int, int]]:
    """Nonnegative integer (u1, u2, u3) with u1 a + u2 b + u3 c = side."""
    out = []
    u3 = 0
    while True:
        rest3 = side - u3 * tile.c
        if qr3_sign(rest3) < 0:
            break
        u2 = 0
        while True:
            rest2 = rest3 - u2 * tile.b
            if qr3_sign(rest2) < 0:
                break
            q = rest2 / tile.a
            if q.is_rational():
                u1 = q.as_rational()
                if u1.denominator == 1 and u1 >= 0:
                    out.append((int(u1), u2, u3))
            u2 += 1
        u3 += 1
    return sorted(out)


def enumerate_dmatrices(tile: TileShape, tri: TriangleSpec) -> list[DMatrix]:
    """All boundary-composition matrices; empty when some side of the target
    cannot be written as a nonnegative combination of tile sides."""
    per_side = [side_compositions(tile, s) for s in tri.sides()]
    return [DMatrix((r1, r2, r3)) for r1, r2, r3 in product(*per_side)]


def area_count(tile: TileShape, tri: TriangleSpec) -> Fraction:
    """Area(target) / Area(tile), exact; integrality is the tiling-necessary
    condition the caller checks."""
    ratio = triangle_area(*tri.sides()) / tile.area
    if not ratio.is_rational():
        raise ConstraintError("area quotient is irrational; no tiling is possible")
    return ratio.as_rational()


# ---------------------------------------------------------------------------
# XZ product coefficients


def xz_coefficients(
    row_x: tuple, row_z: tuple, lam: Fraction, mu: Fraction
) -> tuple[Fraction, Fraction]:
    """(rational part, coefficient of a*c) of XZ = (pa + db + ec)(ha + lb + rc)
    after substituting b = lam*a + mu*c and eliminating a^2 via
    a^2 = -mu(2 lam + 1)/(1 + lam + lam^2) ac + c^2 (1 - mu^2)/(1 + lam + lam^2),
    with the tile scaled so c^2 = 3/4."""
    p, d, e = (Fraction(v) for v in row_x)
    h, l, r = (Fraction(v) for v in row_z)
    lam, mu = Fraction(lam), Fraction(mu)
    if lam < 0 or mu < 0:
        raise ConstraintError("need lam, mu >= 0")
    denom = 1 + lam + lam * lam
    c2 = Fraction(3, 4)
    a_coeff = (p + lam * d) * (h + lam * l)
    rational_part = a_coeff * c2 * (1 - mu * mu) / denom + c2 * (d * mu + e) * (l * mu + r)
    ac_part = (
        a_coeff * (-mu * (2 * lam + 1)) / denom
        + (d * mu + e) * (h + lam * l)
        + (p + lam * d) * (l * mu + r)
    )
    return (rational_part, ac_part)


def area_equation_nac_holds(tile: TileShape, n: int, X: QRoot3, Z: QRoot3) -> bool:
    """N a c = X Z, the area equation when the corner between X and Z is beta."""
    return n * tile.a * tile.c == X * Z


def area_equation_nab_holds(tile: TileShape, n: int, X: QRoot3, Z: QRoot3) -> bool:
    """N a b = X Z, the area equation when the corner between X and Z is pi/3."""
    return n * tile.a * tile.b == X * Z
