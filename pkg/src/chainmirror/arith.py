"""Exact rational helpers: fractional parts, congruences, serialization.

Everything downstream works over `fractions.Fraction`, which already gives
reduced numerator/denominator with positive denominator and arbitrary
precision integers.  No floating point is used anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor, gcd

__all__ = ["Rational", "frac_part", "solve_congruence", "gcd", "rat_str", "rat_from_str"]

Rational = Fraction


def frac_part(r) -> Fraction:
    """Fractional part {r} in [0, 1); {-1/3} = 2/3."""
    r = Fraction(r)
    return r - floor(r)


def solve_congruence(a: int, b: int, n: int) -> int | None:
    """Least x in [0, n) with a*x == b (mod n), or None if no solution.

    Solvable iff gcd(a, n) divides b.  The result is verified by direct
    substitution before returning.
    """
    if n < 1:
        raise ValueError("modulus must be >= 1")
    a_red, b_red = a % n, b % n
    g = gcd(a_red, n)  # == n when a_red == 0
    if b_red % g != 0:
        return None
    # reduce to the coprime congruence (a/g) x == b/g  (mod n/g); its unique
    # solution is also the least nonnegative solution of the original one
    n1 = n // g
    x = (b_red // g) * pow(a_red // g, -1, n1) % n1 if n1 > 1 else 0
    assert (a * x - b) % n == 0
    return x


def rat_str(r) -> str:
    """Canonical "num/den" rendering, denominator always present ("4/1")."""
    r = Fraction(r)
    return f"{r.numerator}/{r.denominator}"


def rat_from_str(s: str) -> Fraction:
    num, den = s.split("/")
    return Fraction(int(num), int(den))
