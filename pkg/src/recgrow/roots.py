"""Certified n-th roots and rational powers on a decimal grid.

The primitives here return Fractions of the form r / 10^digits that bracket
an irrational root from one side, with the defining inequality (r/10^s)^n <= x
or >= x holding *exactly*.  Each bound is also within one grid ulp of the true
root, so callers control accuracy purely through ``digits``.  Correctness
never depends on floating point: floors come from integer square/Newton
roots, and every endpoint can be re-raised to its power and compared in
exact rational arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction


def floor_pow2_root(x: int, l: int) -> int:
    """floor(x^(1/2^l)) for x >= 0.

    Repeated floor-sqrt composes exactly: floor(sqrt(floor(sqrt(x)))) equals
    floor(x^(1/4)), and so on.
    """
    if x < 0:
        raise ValueError("negative radicand")
    for _ in range(l):
        x = math.isqrt(x)
    return x


def floor_nth_root(x: int, n: int) -> int:
    """Largest r with r^n <= x, for x >= 0, n >= 1.

    Integer Newton iteration, then clamped; the final adjustment loops make
    the result exact regardless of how the iteration landed.
    """
    if x < 0:
        raise ValueError("negative radicand")
    if n < 1:
        raise ValueError("root order must be >= 1")
    if n == 1 or x in (0, 1):
        return x
    if n & (n - 1) == 0:
        return floor_pow2_root(x, n.bit_length() - 1)
    r = 1 << -(-x.bit_length() // n)  # 2^ceil(bits/n) >= true root
    while True:
        s = ((n - 1) * r + x // r ** (n - 1)) // n
        if s >= r:
            break
        r = s
    while r ** n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r


def ceil_nth_root(x: int, n: int) -> int:
    """Smallest r with r^n >= x, for x >= 0, n >= 1."""
    r = floor_nth_root(x, n)
    return r if r ** n == x else r + 1


def nth_root_lower(x: Fraction, n: int, digits: int) -> Fraction:
    """Largest grid point r/10^digits with (r/10^digits)^n <= x.

    The true root lies in [result, result + 10^-digits).
    """
    if x < 0:
        raise ValueError("negative radicand")
    scale = 10 ** digits
    scaled = (x.numerator * scale ** n) // x.denominator
    return Fraction(floor_nth_root(scaled, n), scale)


def nth_root_upper(x: Fraction, n: int, digits: int) -> Fraction:
    """Smallest grid point t/10^digits with (t/10^digits)^n >= x.

    The true root lies in (result - 10^-digits, result].
    """
    if x < 0:
        raise ValueError("negative radicand")
    scale = 10 ** digits
    num = x.numerator * scale ** n
    scaled = -((-num) // x.denominator)  # ceil division
    return Fraction(ceil_nth_root(scaled, n), scale)


def pow_lower(x: Fraction, exponent: Fraction, digits: int) -> Fraction:
    """Certified lower bound for x^exponent, x >= 0, exponent >= 0.

    Exact (not rounded) when the exponent is an integer; otherwise the bound
    sits on the 10^-digits grid via x^(u/v) = (x^u)^(1/v).
    """
    if exponent < 0:
        raise ValueError("negative exponents not supported")
    if exponent.denominator == 1:
        return x ** int(exponent)
    return nth_root_lower(x ** exponent.numerator, exponent.denominator, digits)


def pow_upper(x: Fraction, exponent: Fraction, digits: int) -> Fraction:
    """Certified upper bound for x^exponent; exact for integer exponents."""
    if exponent < 0:
        raise ValueError("negative exponents not supported")
    if exponent.denominator == 1:
        return x ** int(exponent)
    return nth_root_upper(x ** exponent.numerator, exponent.denominator, digits)


def digits_for(target: Fraction) -> int:
    """Smallest s >= 0 with 10^-s <= target (target > 0).

    Bit-length estimate first, then exact adjustment, so the answer is
    correct even when the estimate is off by one.
    """
    if target <= 0:
        raise ValueError("target must be positive")
    if target >= 1:
        return 0
    inv = 1 / target
    s = max(0, int((inv.numerator.bit_length() - inv.denominator.bit_length()) * 0.30103) - 1)
    while Fraction(1, 10 ** s) > target:
        s += 1
    while s > 0 and Fraction(1, 10 ** (s - 1)) <= target:
        s -= 1
    return s
