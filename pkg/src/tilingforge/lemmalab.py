"""A named, runnable suite of exact identity checks.

Every check compares engine-computed exact values against recorded
reference constants.  All comparisons are exact; there are no tolerances
anywhere in this module.  Checks are independent and their result order
is fixed by the registry order.

Conventions used by the norm-table checks: for an angle theta = pi*num/den
the tabulated value is  2^phi(n) * prod_{gcd(j,n)=1} sin(j*theta), which
equals the Galois-product norm of (zeta^m - zeta^-m) times (-1)^(phi(n)/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import _poly
from .exactnum import (
    COS_PI_12,
    SIN_2PI_3,
    SIN_PI_4,
    SIN_PI_12,
    CycloElem,
    GaloisMap,
    QTower,
    euler_phi,
    galois_apply,
    prime_splitting,
    sin_as_cyclo,
)


@dataclass(frozen=True)
class CheckEntry:
    name: str
    expected: str
    computed: str
    ok: bool


@dataclass(frozen=True)
class LemmaCheck:
    id: str
    status: str  # "pass" | "fail"
    details: tuple[CheckEntry, ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "details": [
                {"name": e.name, "expected": e.expected, "computed": e.computed, "ok": e.ok}
                for e in self.details
            ],
        }


def _finish(check_id: str, entries: list[CheckEntry]) -> LemmaCheck:
    status = "pass" if all(e.ok for e in entries) else "fail"
    return LemmaCheck(check_id, status, tuple(entries))


def _entry(name: str, expected, computed) -> CheckEntry:
    return CheckEntry(name, str(expected), str(computed), expected == computed)


# ---------------------------------------------------------------------------
# norm tables


def sine_product_value(num: int, den: int, n: int) -> Fraction:
    """2^phi(n) * prod over units j mod n of sin(j * pi * num/den), exact.

    Computed as the product of (zeta^(j m) - zeta^(-j m)) in Q[zeta_N] with
    N = 2*den and m = num, divided by i^phi(n).
    """
    N = 2 * den
    prod = CycloElem.one(N)
    count = 0
    for j in range(1, n + 1):
        if math.gcd(j, n) == 1:
            prod = prod * sin_as_cyclo(j * num, N)
            count += 1
    assert count == euler_phi(n)
    value = prod.rational_value()  # raises if the product failed to be rational
    sign = -1 if (count // 2) % 2 else 1  # 1 / i^phi(n)
    return value * sign


_NORM_TABLE_15 = [
    ("2i sin(2pi/15)", 2, 15, 30, Fraction(1)),
    ("2i sin(pi/5)", 1, 5, 30, Fraction(25)),
    ("2i sin(3pi/5)", 3, 5, 30, Fraction(25)),
]

_NORM_TABLE_9 = [
    ("2i sin(pi/9)", 1, 9, 18, Fraction(-3)),
    ("2i sin(pi/6)", 1, 6, 18, Fraction(1)),
    ("2i sin(pi/3)", 1, 3, 18, Fraction(-27)),
    ("2i sin(5pi/9)", 5, 9, 18, Fraction(-3)),
]


def _norm_table_check(check_id: str, table) -> LemmaCheck:
    entries = []
    for name, num, den, n, expected in table:
        got = sine_product_value(num, den, n)
        entries.append(_entry(f"sine-product norm of {name} over units mod {n}", expected, got))
    return _finish(check_id, entries)


def verify_norm_table_15() -> LemmaCheck:
    return _norm_table_check("norm-table-15", _NORM_TABLE_15)


def verify_norm_table_9() -> LemmaCheck:
    return _norm_table_check("norm-table-9", _NORM_TABLE_9)


# ---------------------------------------------------------------------------
# prime splitting


def verify_prime_splitting_facts() -> LemmaCheck:
    entries = [
        _entry("(e,f,g) for p=3 in Q(zeta_30)", (2, 4, 1), prime_splitting(3, 30)),
        _entry("residue norm 3^f at n=30", 81, 3 ** prime_splitting(3, 30)[1]),
        _entry("(e,f,g) for p=3 in Q(zeta_18)", (6, 1, 1), prime_splitting(3, 18)),
        _entry("residue norm 3^f at n=18", 3, 3 ** prime_splitting(3, 18)[1]),
    ]
    return _finish("prime-splitting", entries)


# ---------------------------------------------------------------------------
# the quartic ring of a = sin(pi/12)


_QUARTIC = _poly.make([1, 0, -16, 0, 16])  # 16 a^4 - 16 a^2 + 1


def _qring(coeffs) -> _poly.Poly:
    """Reduce a polynomial in a modulo the quartic."""
    _, rem = _poly.divmod_poly(_poly.make(coeffs), _QUARTIC)
    return rem


def _qring_mul(p, q) -> _poly.Poly:
    _, rem = _poly.divmod_poly(_poly.mul(p, q), _QUARTIC)
    return rem


def _fmt_poly(p: _poly.Poly) -> str:
    if not p:
        return "0"
    terms = []
    for e, c in enumerate(p):
        if c == 0:
            continue
        terms.append(f"{c}" if e == 0 else (f"{c}*a" if e == 1 else f"{c}*a^{e}"))
    return " + ".join(terms)


def verify_minpoly_pi12() -> LemmaCheck:
    """sqrt3 = 2 - 4a^2, b = 3a - 4a^3, c = 1 - 2a^2 in Q[a]/(16a^4-16a^2+1),
    cross-checked against the tower field with a = (sqrt6 - sqrt2)/4."""
    a = _poly.make([0, 1])
    sqrt3 = _qring([2, 0, -4])
    b = _qring([0, 3, 0, -4])
    c = _qring([1, 0, -2])
    entries = [
        _entry("(2 - 4a^2)^2 = 3", "0", _fmt_poly(_poly.sub(_qring_mul(sqrt3, sqrt3), _poly.make([3])))),
        _entry("(3a - 4a^3)^2 = 1/2", "0",
               _fmt_poly(_poly.sub(_qring_mul(b, b), _poly.make([Fraction(1, 2)])))),
        _entry("(1 - 2a^2)^2 = 3/4", "0",
               _fmt_poly(_poly.sub(_qring_mul(c, c), _poly.make([Fraction(3, 4)])))),
    ]
    # second route: the same identities in Q(sqrt2, sqrt3)
    at = SIN_PI_12
    a2 = at * at
    quartic_val = 16 * (a2 * a2) - 16 * a2 + QTower(1)
    entries.append(_entry("16a^4 - 16a^2 + 1 at a = (sqrt6-sqrt2)/4", "0",
                          "0" if quartic_val.is_zero() else repr(quartic_val)))
    entries.append(_entry("3a - 4a^3 equals sqrt2/2 in the tower", "0",
                          "0" if (3 * at - 4 * (at * a2) - SIN_PI_4).is_zero() else "nonzero"))
    entries.append(_entry("1 - 2a^2 equals sqrt3/2 in the tower", "0",
                          "0" if (QTower(1) - 2 * a2 - SIN_2PI_3).is_zero() else "nonzero"))
    return _finish("minpoly-pi12", entries)


def verify_minpoly_pi12_area() -> LemmaCheck:
    """Reduction of the scaled area expression a*b/2 against the recorded
    reference constant 1/8 - (3/2) a^2.

    The reduction of (1/2) a (3a - 4a^3) is 1/8 - (1/2) a^2; the recorded
    reference does not match it, and this check reports the difference
    rather than adjusting either side.
    """
    a = _poly.make([0, 1])
    b = _qring([0, 3, 0, -4])
    half_ab = _qring_mul(_poly.mul(a, _poly.make([Fraction(1, 2)])), b)
    chain = _qring([0, 0, Fraction(3, 2), 0, -2])  # 3/2 a^2 - 2 a^4, reduced
    reference = _poly.make([Fraction(1, 8), 0, Fraction(-3, 2)])
    entries = [
        _entry("chain step: a*b/2 = 3/2 a^2 - 2 a^4", _fmt_poly(chain), _fmt_poly(half_ab)),
        _entry("reference constant 1/8 - 3/2 a^2 for a*b/2",
               _fmt_poly(reference), _fmt_poly(half_ab)),
    ]
    return _finish("minpoly-pi12-area", entries)


def verify_area_pi12() -> LemmaCheck:
    """sin(pi/12) sin(pi/4) sin(2pi/3) = 3/8 - sqrt3/8 in Q(sqrt2, sqrt3)."""
    product = SIN_PI_12 * SIN_PI_4 * SIN_2PI_3
    expected = QTower(Fraction(3, 8), 0, Fraction(-1, 8), 0)
    entries = [
        _entry("sin(pi/12) = (sqrt6 - sqrt2)/4", repr(QTower(0, Fraction(-1, 4), 0, Fraction(1, 4))),
               repr(SIN_PI_12)),
        _entry("cos(pi/12) = (sqrt6 + sqrt2)/4", repr(QTower(0, Fraction(1, 4), 0, Fraction(1, 4))),
               repr(COS_PI_12)),
        _entry("sin(pi/12) sin(pi/4) sin(2pi/3)", repr(expected), repr(product)),
    ]
    return _finish("area-pi12", entries)


# ---------------------------------------------------------------------------
# the two zeta-reductions at n = 18


_VARS = ("p", "q", "r", "m", "n", "l")


class VarPoly:
    """Sparse polynomial in (p, q, r, m, n, l) with CycloElem coefficients."""

    def __init__(self, n: int, terms: Optional[dict] = None):
        self.n = n
        self.terms: dict[tuple[int, ...], CycloElem] = terms or {}

    @staticmethod
    def var(n: int, name: str) -> "VarPoly":
        expo = tuple(1 if v == name else 0 for v in _VARS)
        return VarPoly(n, {expo: CycloElem.one(n)})

    @staticmethod
    def scalar(n: int, c: CycloElem) -> "VarPoly":
        return VarPoly(n, {(0,) * len(_VARS): c})

    def _add_term(self, expo, coeff):
        cur = self.terms.get(expo)
        new = coeff if cur is None else cur + coeff
        if new.is_zero():
            self.terms.pop(expo, None)
        else:
            self.terms[expo] = new

    def __add__(self, other: "VarPoly") -> "VarPoly":
        out = VarPoly(self.n, dict(self.terms))
        for e, c in other.terms.items():
            out._add_term(e, c)
        return out

    def __sub__(self, other: "VarPoly") -> "VarPoly":
        return self + other.scale(Fraction(-1))

    def scale(self, k) -> "VarPoly":
        return VarPoly(self.n, {e: c * k for e, c in self.terms.items()})

    def scale_elem(self, k: CycloElem) -> "VarPoly":
        return VarPoly(self.n, {e: c * k for e, c in self.terms.items() if not (c * k).is_zero()})

    def __mul__(self, other: "VarPoly") -> "VarPoly":
        out = VarPoly(self.n)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out._add_term(tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
        return out

    def zeta_coefficient_tables(self) -> list[dict[str, int]]:
        """For each zeta-power slot, the integer polynomial in the variables,
        keyed by monomial name like 'mp' (letters sorted to a canonical key)."""
        phi = euler_phi(self.n)
        tables: list[dict[str, int]] = [dict() for _ in range(phi)]
        for expo, coeff in self.terms.items():
            name = "".join(sorted(v * k for v, k in zip(_VARS, expo)))
            for t, c in enumerate(coeff.coeffs):
                if c != 0:
                    if c.denominator != 1:
                        raise AssertionError("non-integer reduction coefficient")
                    tables[t][name] = tables[t].get(name, 0) + c.numerator
        return [dict(sorted(t.items())) for t in tables]


def _fmt_table(t: dict[str, int]) -> str:
    return " ".join(f"{'+' if v >= 0 else ''}{v}{k}" for k, v in sorted(t.items())) or "0"


def reduction_systems() -> tuple[list[dict[str, int]], list[dict[str, int]]]:
    """Compute both zeta-reductions exactly.

    With A, B, C, D the elements 2i sin(k pi/9) for k = 1, 2, 3, 4 and
    U = pA + qB + rC, V = mA + nB + lC, U* = pD - qA - rC, V* = mD - nA - lC,
    the two systems are zeta^14 (A U V - B U* V*) and zeta^16 (A U* V* + D U V),
    reduced in Q[zeta_18]; each returns six integer coefficient tables.
    """
    n = 18
    A = VarPoly.scalar(n, sin_as_cyclo(1, n))
    B = VarPoly.scalar(n, sin_as_cyclo(2, n))
    C = VarPoly.scalar(n, sin_as_cyclo(3, n))
    D = VarPoly.scalar(n, sin_as_cyclo(4, n))
    p, q, r, m, nn, l = (VarPoly.var(n, v) for v in _VARS)
    U = (p * A) + (q * B) + (r * C)
    V = (m * A) + (nn * B) + (l * C)
    Us = (p * D) - (q * A) - (r * C)
    Vs = (m * D) - (nn * A) - (l * C)
    s1 = (A * U * V) - (B * Us * Vs)
    s2 = (A * Us * Vs) + (D * U * V)
    s1 = s1.scale_elem(CycloElem.zeta_pow(n, 14))
    s2 = s2.scale_elem(CycloElem.zeta_pow(n, 16))
    return (s1.zeta_coefficient_tables(), s2.zeta_coefficient_tables())


# Recorded reference tables.  In the first system the slots for zeta^2,
# zeta^3 and zeta^4 are reconstructed from partially garbled source lines
# ("-3q", "-4m", "-6r"); the best-effort readings are kept as recorded and
# the check reports where the computation disagrees with them.
PRINTED_SYSTEM_1 = [
    {"mp": -2, "np": 1, "mq": 1, "nq": -2, "lr": -3},
    {"mp": 2, "np": -1, "mq": -1, "nq": 2, "lr": 3},
    {"lp": -6, "mp": 4, "np": -2, "mq": -2, "nq": -1, "mr": -6},
    {"mp": 4, "np": -2, "mq": -3, "nq": 4, "lr": 6},
    {"mp": -4, "np": 2, "mq": 3, "nq": -4, "lr": -6},
    {"lp": 3, "mp": -2, "np": 1, "mq": 1, "nq": 1, "mr": 3},
]

PRINTED_SYSTEM_2 = [
    {"mp": 2, "np": -1, "mq": -1, "nq": 2, "lr": 3},
    {"mp": 1, "np": -2, "lq": -3, "mq": -2, "nq": 1, "nr": -3},
    {"mp": -4, "np": 2, "mq": 2, "nq": -4, "lr": -6},
    {"mp": -4, "np": 2, "mq": 2, "nq": -4, "lr": -6},
    {"mp": 1, "np": -2, "lq": -3, "mq": -2, "nq": 1, "nr": -3},
    {"mp": 2, "np": -1, "mq": -1, "nq": 2, "lr": 3},
]


def _canon_table(t: dict[str, int]) -> dict[str, int]:
    return {("".join(sorted(k))): v for k, v in t.items()}


def _reduction_check(check_id: str, computed, printed, extra: list[CheckEntry]) -> LemmaCheck:
    entries = []
    for t, (got, ref) in enumerate(zip(computed, printed)):
        entries.append(
            _entry(f"coefficient of zeta^{t}", _fmt_table(_canon_table(ref)), _fmt_table(got))
        )
    entries.extend(extra)
    return _finish(check_id, entries)


def verify_reduction_first_system() -> LemmaCheck:
    s1, _ = reduction_systems()

    def combine(ta, tb, ka, kb):
        keys = set(ta) | set(tb)
        return {k: ka * ta.get(k, 0) + kb * tb.get(k, 0) for k in keys if ka * ta.get(k, 0) + kb * tb.get(k, 0)}

    # consequences the surrounding argument actually uses
    extra = [
        _entry("zeta^1 = -zeta^0", _fmt_table({}), _fmt_table(combine(s1[1], s1[0], 1, 1))),
        _entry("zeta^3 = -2 zeta^0", _fmt_table({}), _fmt_table(combine(s1[3], s1[0], 1, 2))),
        _entry("zeta^2 = -2 zeta^5", _fmt_table({}), _fmt_table(combine(s1[2], s1[5], 1, 2))),
        _entry(
            "zeta^0 - zeta^5 = -3(lp + mr + nq + lr)",
            _fmt_table({"lp": -3, "mr": -3, "nq": -3, "lr": -3}),
            _fmt_table(combine(s1[0], s1[5], 1, -1)),
        ),
    ]
    return _reduction_check("reduction-A-eq-alpha", s1, PRINTED_SYSTEM_1, extra)


def verify_reduction_second_system() -> LemmaCheck:
    _, s2 = reduction_systems()
    return _reduction_check("reduction-A-eq-2alpha", s2, PRINTED_SYSTEM_2, [])


# ---------------------------------------------------------------------------
# sigma actions in Q(zeta_24)


def _sine24(m: int) -> CycloElem:
    """The field element equal to the real number sin(m*pi/12) in Q(zeta_24)."""
    two_i = 2 * CycloElem.zeta_pow(24, 6)
    return sin_as_cyclo(m, 24) * two_i.inverse()


def verify_sigma_actions() -> LemmaCheck:
    n = 24
    i = CycloElem.zeta_pow(n, 6)
    sin_a, sin_b, sin_g = _sine24(1), _sine24(3), _sine24(8)
    cos_a = (CycloElem.zeta_pow(n, 1) + CycloElem.zeta_pow(n, -1)) * Fraction(1, 2)
    sqrt3 = 2 * _sine24(4)  # 2 sin(pi/3)
    s5, s7, s13 = (GaloisMap(n, j) for j in (5, 7, 13))

    def img(x, g):
        return galois_apply(x, g)

    entries = [
        _entry("sigma5 fixes i = zeta^6", "fixed", "fixed" if img(i, s5) == i else "moved"),
        _entry("sigma5: sin(beta) -> -sin(beta)", "negated",
               "negated" if img(sin_b, s5) == -sin_b else "other"),
        _entry("sigma5: sin(gamma) -> -sin(gamma)", "negated",
               "negated" if img(sin_g, s5) == -sin_g else "other"),
        _entry("sigma5: sin(alpha) -> sin(5 alpha) = cos(alpha)", "equal",
               "equal" if img(sin_a, s5) == _sine24(5) == cos_a else "other"),
        _entry("sigma5 fixes sin(beta) sin(gamma)", "fixed",
               "fixed" if img(sin_b * sin_g, s5) == sin_b * sin_g else "moved"),
        _entry("sigma5: sqrt3 -> -sqrt3", "negated",
               "negated" if img(sqrt3, s5) == -sqrt3 else "other"),
        _entry("sigma13 fixes i", "fixed", "fixed" if img(i, s13) == i else "moved"),
        _entry("sigma13 fixes sin(gamma)", "fixed",
               "fixed" if img(sin_g, s13) == sin_g else "moved"),
        _entry("sigma13: sin(alpha) -> -sin(alpha)", "negated",
               "negated" if img(sin_a, s13) == -sin_a else "other"),
        _entry("sigma13: 2i sin(beta) -> -2i sin(beta) (element form)", "negated",
               "negated" if img(sin_as_cyclo(3, n), s13) == -sin_as_cyclo(3, n) else "other"),
        _entry("sigma13 fixes sqrt3", "fixed",
               "fixed" if img(sqrt3, s13) == sqrt3 else "moved"),
        _entry("sigma7: i -> -i", "negated", "negated" if img(i, s7) == -i else "other"),
        _entry("sigma7 fixes sin(beta)", "fixed",
               "fixed" if img(sin_b, s7) == sin_b else "moved"),
        _entry("sigma7: sin(gamma) -> -sin(gamma)", "negated",
               "negated" if img(sin_g, s7) == -sin_g else "other"),
        _entry("sigma7: 2i sin(alpha) -> 2i sin(7 alpha) (element form)", "equal",
               "equal" if img(sin_as_cyclo(1, n), s7) == sin_as_cyclo(7, n) else "other"),
        _entry("sigma7: sin(alpha) -> -sin(7 alpha) = -cos(alpha)", "equal",
               "equal" if img(sin_a, s7) == -_sine24(7) == -cos_a else "other"),
    ]
    return _finish("sigma-actions-24", entries)


# ---------------------------------------------------------------------------
# the cosine-ratio formula


def _cos_ratio_via_scaled_tile(x: Fraction) -> Fraction:
    """cos(alpha)/cos(beta) for the 120-degree tile with a/b = x, scaled so
    c = sqrt3/2; only b^2 = (3/4)/(x^2+x+1) enters, so the value is rational."""
    b2 = Fraction(3, 4) / (x * x + x + 1)
    c2 = Fraction(3, 4)
    num = x * (b2 + c2 - x * x * b2)
    den = x * x * b2 + c2 - b2
    return num / den


def verify_simpletrig(samples: Optional[list[Fraction]] = None) -> LemmaCheck:
    if samples is None:
        samples = [Fraction(1), Fraction(3, 5), Fraction(5, 16), Fraction(8, 7),
                   Fraction(2, 9), Fraction(7, 3), Fraction(12, 35)]
    entries = []
    for x in samples:
        xi = (x + 2) / (2 * x + 1)
        got = _cos_ratio_via_scaled_tile(Fraction(x))
        entries.append(_entry(f"cos ratio at a/b = {x} equals (x+2)/(2x+1)", xi, got))
    return _finish("simpletrig", entries)


# ---------------------------------------------------------------------------
# registry


CHECKS: dict[str, Callable[[], LemmaCheck]] = {
    "norm-table-15": verify_norm_table_15,
    "norm-table-9": verify_norm_table_9,
    "prime-splitting": verify_prime_splitting_facts,
    "minpoly-pi12": verify_minpoly_pi12,
    "minpoly-pi12-area": verify_minpoly_pi12_area,
    "area-pi12": verify_area_pi12,
    "reduction-A-eq-alpha": verify_reduction_first_system,
    "reduction-A-eq-2alpha": verify_reduction_second_system,
    "sigma-actions-24": verify_sigma_actions,
    "simpletrig": verify_simpletrig,
}


def run_checks(ids: Optional[list[str]] = None) -> list[LemmaCheck]:
    """Run all (or the selected) checks, in registry order."""
    if ids is None:
        selected = list(CHECKS)
    else:
        unknown = [i for i in ids if i not in CHECKS]
        if unknown:
            raise KeyError(f"unknown lemma id(s): {', '.join(unknown)}")
        selected = [i for i in CHECKS if i in set(ids)]
    return [CHECKS[i]() for i in selected]
