"""Reduction analysis of the tame cyclic subcover z^m = prod (x - x_i)^{a_i}.

The branch divisor lives on the reduction: residues x-bar_i in a finite
field F_{p^d} with exponents a_i mod m. Normalization folds exponents
into [1, m - 1] (dropping points whose exponent vanishes mod m) and
re-checks that m divides the exponent sum, the condition for the
subcover to be unramified at infinity. The divisor has multiplicative
type when the normalized exponent sum is exactly m, and the reduced
product is an m-th power in k(x) precisely when every residue class
carries exponent sum 0 mod m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisibilityViolation
from .finitefield import FFElement, FiniteField

__all__ = [
    "BranchDivisor",
    "normalize",
    "is_multiplicative_type",
    "mth_power_reduction_test",
    "tail_fraction",
    "exponent_sum_identity",
]


@dataclass(frozen=True)
class BranchDivisor:
    """Branch data of the degree-m Kummer subcover: residues with
    exponents. The point at infinity is excluded by convention (move
    it with a coordinate change before building the divisor)."""

    m: int
    field: FiniteField
    points: tuple[tuple[FFElement, int], ...]

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("Kummer degree m must be >= 2")
        if math.gcd(self.m, self.field.p) != 1:
            raise ValueError("m must be prime to the residue characteristic")
        pts = []
        for residue, exponent in self.points:
            if not isinstance(residue, FFElement) or residue.field != self.field:
                raise ValueError("residues must lie in the divisor's field")
            pts.append((residue, int(exponent)))
        object.__setattr__(self, "points", tuple(pts))

    @property
    def is_degenerate(self) -> bool:
        """No support left: the subcover is trivial."""
        return not self.points

    def exponent_sum(self) -> int:
        return sum(a for _, a in self.points)


def normalize(raw: BranchDivisor) -> BranchDivisor:
    """Fold exponents into [1, m - 1] mod m, dropping annihilated
    points, and re-verify that m divides the exponent sum. A divisor
    that fails the divisibility check does not describe a subcover
    unramified at infinity: DivisibilityViolation."""
    m = raw.m
    points = tuple(
        (residue, a % m) for residue, a in raw.points if a % m != 0
    )
    out = BranchDivisor(m=m, field=raw.field, points=points)
    if out.exponent_sum() % m != 0:
        raise DivisibilityViolation(
            f"normalized exponent sum {out.exponent_sum()} is not "
            f"divisible by m = {m}"
        )
    return out


def is_multiplicative_type(d: BranchDivisor) -> bool:
    """Exponent sum exactly m (assumes a normalized divisor)."""
    return d.exponent_sum() == d.m


def mth_power_reduction_test(d: BranchDivisor) -> dict:
    """Group points by residue and sum exponents per class mod m.

    The product prod (x - x_i)^{a_i} is an m-th power in k(x) iff every
    class sum vanishes mod m; the class sums are returned as the
    certificate, keyed by residue."""
    class_sums: dict[FFElement, int] = {}
    for residue, a in d.points:
        class_sums[residue] = (class_sums.get(residue, 0) + a) % d.m
    return {
        "is_mth_power": all(v == 0 for v in class_sums.values()),
        "class_sums": class_sums,
    }


def tail_fraction(a_i: int, m: int) -> Fraction:
    """(a_i mod m)/m: the fractional part of the effective
    ramification invariant of the tail containing the point."""
    if m < 1:
        raise ValueError("m must be positive")
    return Fraction(a_i % m, m)


def exponent_sum_identity(d: BranchDivisor, r: int) -> bool:
    """Whether the normalized exponent sum equals m*(r - 2), the
    consistency condition tying the divisor to a vanishing-cycles
    configuration with r branch points."""
    if r < 3:
        raise ValueError("r must be >= 3")
    return d.exponent_sum() == d.m * (r - 2)
