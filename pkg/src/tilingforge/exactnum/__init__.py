"""Exact number arithmetic: rationals, Q(sqrt3), Q(sqrt2, sqrt3), cyclotomics."""

from fractions import Fraction

from .qfield import (
    QR3_ONE,
    QR3_ZERO,
    SQRT3,
    COS_PI_12,
    SIN_2PI_3,
    SIN_PI_4,
    SIN_PI_12,
    QRoot3,
    QTower,
    qr3_sign,
    rat_from_str,
    rat_to_str,
    rational_sqrt,
)
from .cyclo import (
    CycloElem,
    GaloisMap,
    cyclo_reduce,
    cyclotomic_poly,
    float_crosscheck,
    galois_apply,
    norm,
    sin_as_cyclo,
)
from .numth import euler_phi, is_prime, multiplicative_order, niven_classify, prime_splitting

Rational = Fraction

__all__ = [
    "Rational",
    "QRoot3",
    "QTower",
    "QR3_ZERO",
    "QR3_ONE",
    "SQRT3",
    "SIN_PI_12",
    "COS_PI_12",
    "SIN_PI_4",
    "SIN_2PI_3",
    "qr3_sign",
    "rational_sqrt",
    "rat_to_str",
    "rat_from_str",
    "CycloElem",
    "GaloisMap",
    "cyclotomic_poly",
    "cyclo_reduce",
    "sin_as_cyclo",
    "galois_apply",
    "norm",
    "float_crosscheck",
    "euler_phi",
    "is_prime",
    "multiplicative_order",
    "niven_classify",
    "prime_splitting",
]
