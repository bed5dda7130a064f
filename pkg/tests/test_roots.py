import random
from fractions import Fraction

import pytest

from recgrow.roots import (
    ceil_nth_root,
    digits_for,
    floor_nth_root,
    floor_pow2_root,
    nth_root_lower,
    nth_root_upper,
    pow_lower,
    pow_upper,
)

F = Fraction


def test_floor_root_edges():
    assert floor_nth_root(0, 5) == 0
    assert floor_nth_root(1, 5) == 1
    assert floor_nth_root(31, 5) == 1
    assert floor_nth_root(32, 5) == 2
    assert floor_nth_root(7, 1) == 7
    with pytest.raises(ValueError):
        floor_nth_root(-1, 2)
    with pytest.raises(ValueError):
        floor_nth_root(4, 0)


def test_floor_root_randomized():
    rng = random.Random(99)
    for _ in range(400):
        n = rng.randint(1, 11)
        x = rng.randint(0, 10 ** rng.randint(1, 50))
        r = floor_nth_root(x, n)
        assert r ** n <= x < (r + 1) ** n


def test_ceil_root():
    assert ceil_nth_root(27, 3) == 3
    assert ceil_nth_root(28, 3) == 4
    assert ceil_nth_root(0, 4) == 0
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 8)
        x = rng.randint(1, 10 ** 30)
        r = ceil_nth_root(x, n)
        assert (r - 1) ** n < x <= r ** n


def test_pow2_root_matches_general_root():
    rng = random.Random(321)
    for _ in range(100):
        l = rng.randint(1, 6)
        x = rng.randint(0, 10 ** 40)
        assert floor_pow2_root(x, l) == floor_nth_root(x, 2 ** l)


def test_rational_root_brackets():
    rng = random.Random(12)
    for _ in range(60):
        x = F(rng.randint(1, 10 ** 12), rng.randint(1, 10 ** 6))
        n = rng.randint(2, 9)
        digits = rng.randint(1, 25)
        lo = nth_root_lower(x, n, digits)
        hi = nth_root_upper(x, n, digits)
        assert lo ** n <= x <= hi ** n
        assert hi - lo <= 2 * F(1, 10 ** digits)


def test_exact_roots_hit_the_grid_point():
    assert nth_root_lower(F(25), 2, 6) == 5 == nth_root_upper(F(25), 2, 6)
    assert nth_root_lower(F(1, 8), 3, 4) == F(1, 2) == nth_root_upper(F(1, 8), 3, 4)


def test_pow_bounds():
    # integer exponents are exact, no rounding
    assert pow_lower(F(3, 2), F(4), 1) == F(81, 16) == pow_upper(F(3, 2), F(4), 1)
    # 2^(3/2) = 2.8284271247461903...
    lo = pow_lower(F(2), F(3, 2), 12)
    hi = pow_upper(F(2), F(3, 2), 12)
    assert lo ** 2 <= F(2) ** 3 <= hi ** 2
    assert hi - lo <= 2 * F(1, 10 ** 12)
    assert str(lo).startswith("1414213562373/") or lo == F(2828427124746, 10 ** 12)
    with pytest.raises(ValueError):
        pow_lower(F(2), F(-1, 2), 5)


def test_digits_for():
    assert digits_for(F(1)) == 0
    assert digits_for(F(3, 10)) == 1
    assert digits_for(F(1, 1000)) == 3
    assert digits_for(F(1, 999)) == 3
    assert digits_for(F(1, 1001)) == 4
    # exact adjustment must survive a huge magnitude gap
    assert digits_for(F(1, 10 ** 500)) == 500
    with pytest.raises(ValueError):
        digits_for(F(0))
