"""Square-matrix analog D(n+1) = A + B*D(n)^2 with exact rational entries.

Entries are restricted to nonnegative rationals, which keeps the iteration
entrywise monotone and lets the scalar theory transfer through a
submultiplicative norm: with the max-row-sum norm, the scalar sequence
S(0) = ||D0||, S(n+1) = ||A|| + ||B||*S(n)^2 dominates ||D(n)|| for all n.
At m = 1 everything collapses to the scalar recursion bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceededError
from .recurrence import Params, SequenceTable, as_fraction

Matrix = tuple[tuple[Fraction, ...], ...]

#: Matrix-specific cap: every entry grows like the scalar terms, times m^2 of them.
MATRIX_DEFAULT_CAP = 16


def as_matrix(rows) -> Matrix:
    """Coerce nested rationals to a square tuple-of-tuples matrix."""
    mat = tuple(tuple(as_fraction(x) for x in row) for row in rows)
    m = len(mat)
    if m == 0 or any(len(row) != m for row in mat):
        raise ValueError("matrix must be square and nonempty")
    return mat


def mat_add(x: Matrix, y: Matrix) -> Matrix:
    return tuple(tuple(a + b for a, b in zip(rx, ry)) for rx, ry in zip(x, y))


def mat_mul(x: Matrix, y: Matrix) -> Matrix:
    m = len(x)
    if len(y) != m:
        raise ValueError(f"dimension mismatch: {m} vs {len(y)}")
    yt = tuple(zip(*y))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in yt) for row in x)


def max_row_sum(x: Matrix) -> Fraction:
    """Max-row-sum norm; submultiplicative, exactly computable in rationals."""
    return max(sum(row, Fraction(0)) for row in x)


def entrywise_leq(x: Matrix, y: Matrix) -> bool:
    return all(a <= b for rx, ry in zip(x, y) for a, b in zip(rx, ry))


@dataclass(frozen=True)
class MatrixParams:
    """Nonnegative coefficient matrices A, B and seed D0, all m x m."""

    a: Matrix
    b: Matrix
    d0: Matrix

    def __post_init__(self):
        object.__setattr__(self, "a", as_matrix(self.a))
        object.__setattr__(self, "b", as_matrix(self.b))
        object.__setattr__(self, "d0", as_matrix(self.d0))
        dims = {len(self.a), len(self.b), len(self.d0)}
        if len(dims) != 1:
            raise ValueError(f"inconsistent dimensions {sorted(dims)}")
        for name in ("a", "b", "d0"):
            mat = getattr(self, name)
            if any(x < 0 for row in mat for x in row):
                raise ValueError(f"matrix {name} has a negative entry")

    @property
    def dim(self) -> int:
        return len(self.a)


def evaluate_matrix(mp: MatrixParams, n_max: int, cap: int = MATRIX_DEFAULT_CAP) -> tuple[Matrix, ...]:
    """Exact matrix orbit D(0..n_max) under D(n+1) = A + B*D(n)^2."""
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    if n_max > cap:
        raise CapExceededError(f"n_max={n_max} exceeds matrix cap={cap}")
    seq = [mp.d0]
    for _ in range(n_max):
        cur = seq[-1]
        seq.append(mat_add(mp.a, mat_mul(mp.b, mat_mul(cur, cur))))
    return tuple(seq)


def scalar_envelope(mp: MatrixParams, n_max: int, cap: int = MATRIX_DEFAULT_CAP) -> SequenceTable:
    """Scalar norm envelope S with S(0) = ||D0||, S(n+1) = ||A|| + ||B||*S(n)^2.

    Dominates ||D(n)|| for every n by submultiplicativity and the triangle
    inequality; iterated directly since the norm coefficients need not
    satisfy the scalar growth conditions.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    if n_max > cap:
        raise CapExceededError(f"n_max={n_max} exceeds matrix cap={cap}")
    na, nb, nd0 = max_row_sum(mp.a), max_row_sum(mp.b), max_row_sum(mp.d0)
    values = [nd0]
    for _ in range(n_max):
        values.append(na + nb * values[-1] ** 2)
    return SequenceTable(params=Params(a=na, b=nb, d0=nd0), values=tuple(values))
