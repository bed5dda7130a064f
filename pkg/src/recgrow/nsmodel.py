"""Term-count model for successive-substitution (Picard) iterations.

For a d-dimensional bilinear step u_{n+1} = u_0 + G[u_n, u_n], squaring a sum
of D(n) independent summands under a d x d x d coefficient tensor yields
d^2 * D(n)^2 bilinear terms, plus the u_0 term:

    D(n+1) = 1 + d^2 * D(n)^2,    D(0) = 1,

i.e. the quadratic recursion with a = 1, b = d^2.  Counts are worst case: no
credit is taken for symmetry cancellations inside the tensor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .recurrence import DEFAULT_CAP, Params, evaluate


def _params_for(d: int) -> Params:
    if d < 1:
        raise ValueError(f"dimension d must be >= 1, got {d}")
    return Params(a=Fraction(1), b=Fraction(d * d), d0=Fraction(1))


def term_count(d: int, n: int, cap: int = DEFAULT_CAP) -> int:
    """Independent summands in the n-th iterate for spatial dimension d."""
    table = evaluate(_params_for(d), n, cap=cap)
    value = table[n]
    assert value.denominator == 1
    return int(value)


def summand_budget(d: int, n: int, cap: int = DEFAULT_CAP) -> int:
    """Bilinear-term count d^2 * D(n)^2 before adding the u_0 term.

    Equals term_count(d, n+1) - 1.
    """
    return d * d * term_count(d, n, cap=cap) ** 2


@dataclass(frozen=True)
class NsModel:
    """Inputs for a cost projection: dimension, iteration depth, bytes/term."""

    d: int
    iterations: int
    bytes_per_term: int = 16

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"dimension d must be >= 1, got {self.d}")
        if self.iterations < 1:
            raise ValueError(f"iterations must be >= 1, got {self.iterations}")
        if self.bytes_per_term < 1:
            raise ValueError(f"bytes_per_term must be >= 1, got {self.bytes_per_term}")


@dataclass(frozen=True)
class CostRow:
    n: int
    terms: int
    projected_bytes: int


@dataclass(frozen=True)
class CostProjection:
    model: NsModel
    rows: tuple[CostRow, ...]
    budget: Optional[int]
    first_over_budget: Optional[int]


def cost_projection(model: NsModel, budget: Optional[int] = None, cap: int = DEFAULT_CAP) -> CostProjection:
    """Rows (n, term count, bytes) for n = 1..iterations, exact arithmetic.

    When a byte budget is given, ``first_over_budget`` is the smallest n whose
    projection exceeds it (None if none does).
    """
    table = evaluate(_params_for(model.d), model.iterations, cap=cap)
    rows = []
    first_over = None
    for n in range(1, model.iterations + 1):
        terms = int(table[n])
        projected = terms * model.bytes_per_term
        rows.append(CostRow(n=n, terms=terms, projected_bytes=projected))
        if budget is not None and first_over is None and projected > budget:
            first_over = n
    return CostProjection(model=model, rows=tuple(rows), budget=budget, first_over_budget=first_over)


# Widely circulated reference table for the d = 3 case.  Entries from n = 3
# onward are inconsistent with the defining recursion: 811802 = 901^2 + 1,
# i.e. the continuation was computed with quadratic coefficient 1 instead of
# d^2 = 9, and the later entries (including the two approximate ones) keep
# squaring that slip.
PUBLISHED_3D_EXACT = (1, 10, 901, 811802, 659022487205, 434310638641864388712026)
PUBLISHED_3D_APPROX = {6: "1.886257308e47", 7: "3.5579666e94"}


@dataclass(frozen=True)
class DiscrepancyRow:
    """One published-vs-recomputed comparison; ``matches`` is None when the
    published figure is only approximate."""

    n: int
    published: str
    published_exact: bool
    recomputed: int
    matches: Optional[bool]


def published_3d_discrepancies(cap: int = DEFAULT_CAP) -> tuple[DiscrepancyRow, ...]:
    """Compare the published d = 3 table against exact recomputation."""
    n_top = max(PUBLISHED_3D_APPROX)
    rows = []
    for n in range(n_top + 1):
        recomputed = term_count(3, n, cap=cap)
        if n < len(PUBLISHED_3D_EXACT):
            pub = PUBLISHED_3D_EXACT[n]
            rows.append(
                DiscrepancyRow(
                    n=n,
                    published=str(pub),
                    published_exact=True,
                    recomputed=recomputed,
                    matches=pub == recomputed,
                )
            )
        else:
            rows.append(
                DiscrepancyRow(
                    n=n,
                    published=PUBLISHED_3D_APPROX[n],
                    published_exact=False,
                    recomputed=recomputed,
                    matches=None,
                )
            )
    return tuple(rows)
