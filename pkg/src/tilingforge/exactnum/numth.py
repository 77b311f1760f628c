"""Small number-theoretic helpers: totient, angle classification, prime splitting."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# The only rational cosine values of rational multiples of pi.  An angle
# theta with rational cos(theta) has theta/pi rational iff cos is here.
_RATIONAL_COSINES = {
    Fraction(1): Fraction(0),
    Fraction(1, 2): Fraction(1, 3),
    Fraction(0): Fraction(1, 2),
    Fraction(-1, 2): Fraction(2, 3),
    Fraction(-1): Fraction(1),
}


def niven_classify(c: Fraction) -> Optional[Fraction]:
    """theta/pi for theta = arccos(c), when it is rational; else None."""
    c = Fraction(c)
    if not (-1 <= c <= 1):
        raise ValueError(f"cosine value {c} outside [-1, 1]")
    return _RATIONAL_COSINES.get(c)


def multiplicative_order(a: int, m: int) -> int:
    if m == 1:
        return 1
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit mod {m}")
    k, x = 1, a % m
    while x != 1:
        x = (x * a) % m
        k += 1
    return k


def prime_splitting(p: int, n: int) -> tuple[int, int, int]:
    """(e, f, g) for the rational prime p in Q(zeta_n).

    Write n = p^k * m with p not dividing m.  Then e = phi(p^k), f is the
    multiplicative order of p mod m, and g = phi(m) / f.  The residue norm
    of each prime above p is p^f.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 2:
        raise ValueError("n must be >= 2")
    k, m = 0, n
    while m % p == 0:
        m //= p
        k += 1
    e = euler_phi(p**k)
    f = multiplicative_order(p, m)
    g = euler_phi(m) // f
    return (e, f, g)
