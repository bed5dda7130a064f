"""Exact evaluation of the quadratic recursion D(n+1) = a + b*D(n)^2.

All arithmetic is over arbitrary-precision rationals (``fractions.Fraction``).
When a, b and the seed are integers every term stays an integer (denominator
1), which the exact representation preserves automatically.  Floating point
appears nowhere: the bound certificates downstream are exact inequalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import CapExceededError, InvalidParamsError

RationalLike = Union[Fraction, int, str]

#: Default cap on the largest computable index.  The bit size of D(n) grows
#: like 2^n, so D(30) for a = b = 1 already has ~6e8 bits.
DEFAULT_CAP = 30


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce ints, "p/q" / decimal strings, or Fractions to an exact Fraction."""
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float {value!r}; pass int, str or Fraction")
    return Fraction(value)


@dataclass(frozen=True)
class Params:
    """Coefficients (a, b) and seed d0 of the recursion, as exact rationals.

    Construction only coerces types; use :func:`validate_params` (or
    :func:`evaluate`, which calls it) to check the growth conditions
    b > 0, 4ab >= 1, d0 > 0.
    """

    a: Fraction
    b: Fraction
    d0: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))
        object.__setattr__(self, "d0", as_fraction(self.d0))

    def is_integer(self) -> bool:
        """True when a, b and d0 are all integers (the whole orbit is then integral)."""
        return self.a.denominator == self.b.denominator == self.d0.denominator == 1


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a parameter check: ok, or a list of named violations."""

    ok: bool
    violations: tuple[tuple[str, Fraction], ...] = ()

    def __post_init__(self):
        assert self.ok == (not self.violations)


@dataclass(frozen=True)
class SequenceTable:
    """Exact values D(0..N) for one parameter set.

    A plain container: tables produced by :func:`evaluate` satisfy the
    recursion exactly, but nothing stops tests from hand-building broken
    tables to exercise the checkers.
    """

    params: Params
    values: tuple[Fraction, ...]

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]


def validate_params(a: RationalLike, b: RationalLike, d0: RationalLike = 1) -> ValidationReport:
    """Check the conditions b > 0, 4ab >= 1, d0 > 0 in exact arithmetic.

    Invalid inputs produce a failing report (with the offending exact values
    as witnesses), never an exception.
    """
    a, b, d0 = as_fraction(a), as_fraction(b), as_fraction(d0)
    violations = []
    if not b > 0:
        violations.append(("b > 0", b))
    if not 4 * a * b >= 1:
        violations.append(("4ab >= 1", 4 * a * b))
    if not d0 > 0:
        violations.append(("d0 > 0", d0))
    return ValidationReport(ok=not violations, violations=tuple(violations))


def evaluate(params: Params, n_max: int, cap: int = DEFAULT_CAP) -> SequenceTable:
    """Return the exact table D(0..n_max).

    Pure and deterministic.  Raises :class:`InvalidParamsError` when the
    growth conditions fail and :class:`CapExceededError` when n_max exceeds
    the cap (override ``cap`` to go further at your own memory's risk).
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    if n_max > cap:
        raise CapExceededError(f"n_max={n_max} exceeds cap={cap}; term sizes grow like 2^n bits")
    report = validate_params(params.a, params.b, params.d0)
    if not report.ok:
        raise InvalidParamsError(report)
    values = [params.d0]
    for _ in range(n_max):
        values.append(params.a + params.b * values[-1] ** 2)
    return SequenceTable(params=params, values=tuple(values))


def is_monotone(table: SequenceTable) -> bool:
    """True iff D(n+1) >= D(n) for all n, by exact comparison (non-strict,
    so the fixed-point orbit at 4ab = 1, d0 = 1/(2b) counts as monotone)."""
    if not table.values:
        raise ValueError("empty table")
    return all(x <= y for x, y in zip(table.values, table.values[1:]))
