"""Quartic-symbol criterion for realizing the extension totally real.

Applicable only when all three parts are positive and no prime = 3 (mod 4)
divides the discriminant; then every prime entering the quartic symbols
satisfies the preconditions, and the criterion compares a product of
quartic symbols against a product of quadratic ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._intmath import prime_factors
from .symbols import kronecker, quartic_symbol_composite

__all__ = ["InfinityVerdict", "infinity_verdict"]


@dataclass(frozen=True)
class InfinityVerdict:
    applicable: bool
    lhs: int | None
    rhs: int | None
    totally_real: bool | None

    @staticmethod
    def not_applicable() -> "InfinityVerdict":
        return InfinityVerdict(False, None, None, None)


def infinity_verdict(d1: int, d2: int, d3: int) -> InfinityVerdict:
    """Decide whether the construction admits a totally real realization.

    The verdict is `totally_real = (lhs == rhs)` where lhs multiplies the
    three quartic symbols (d_j*d_k / d_i)_4 and rhs the three quadratic
    symbols (d_i / d_j) over the unordered pairs.
    """
    d = d1 * d2 * d3
    if d < 0 or d1 < 0 or d2 < 0 or d3 < 0:
        return InfinityVerdict.not_applicable()
    if any(q % 4 == 3 for q in prime_factors(d)):
        return InfinityVerdict.not_applicable()
    parts = (d1, d2, d3)
    lhs = 1
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        lhs *= quartic_symbol_composite(parts[j] * parts[k], parts[i])
    rhs = kronecker(d1, d2) * kronecker(d1, d3) * kronecker(d2, d3)
    return InfinityVerdict(True, lhs, rhs, lhs == rhs)
