"""Tail invariant configurations allowed by the vanishing cycles formula.

For a cover with r branch points the effective ramification invariants
sigma_b of the etale tails satisfy

    r - 2 = sum over new tails (sigma_b - 1) + sum over primitive tails sigma_b

with every sigma_b a positive element of (1/m_G)Z and every new tail
obeying sigma_b >= 1 + 1/m_G. This module checks the identity exactly
and enumerates all configurations under the per-tail bound
sigma <= r - 1 (sufficient: all contributions to the identity are
positive, so larger invariants can never appear in a solution).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import MalformedInvariant

__all__ = [
    "TailInvariant",
    "TailConfiguration",
    "check_formula",
    "enumerate_configurations",
    "fractional_sum",
    "all_noninteger",
    "PRIMITIVE",
    "NEW",
]

PRIMITIVE = "primitive"
NEW = "new"


@dataclass(frozen=True)
class TailInvariant:
    """One effective ramification invariant with its tail kind; m_b,
    the prime-to-p part of the local group order, is optional
    metadata that no identity here consumes."""

    sigma: Fraction
    kind: str
    m_b: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "sigma", Fraction(self.sigma))
        if self.kind not in (PRIMITIVE, NEW):
            raise ValueError(f"kind must be primitive or new, got {self.kind!r}")
        if self.sigma <= 0:
            raise ValueError("invariants are positive")
        if self.m_b is not None and self.m_b < 1:
            raise ValueError("m_b must be a positive integer")


@dataclass(frozen=True)
class TailConfiguration:
    """A multiset of tail invariants for an r-point cover with
    normalizer index m_g. Tails are stored sorted (primitive first,
    then by value) so equal multisets compare equal."""

    r: int
    m_g: int
    tails: tuple[TailInvariant, ...]

    def __post_init__(self):
        if self.r < 3:
            raise ValueError("r must be >= 3")
        if self.m_g < 1:
            raise ValueError("m_g must be >= 1")
        ordered = tuple(
            sorted(self.tails, key=lambda t: (t.kind != PRIMITIVE, t.sigma))
        )
        object.__setattr__(self, "tails", ordered)

    def primitives(self) -> tuple[TailInvariant, ...]:
        return tuple(t for t in self.tails if t.kind == PRIMITIVE)

    def new_tails(self) -> tuple[TailInvariant, ...]:
        return tuple(t for t in self.tails if t.kind == NEW)


def _validate_tails(c: TailConfiguration) -> None:
    bound = 1 + Fraction(1, c.m_g)
    for t in c.tails:
        if (t.sigma * c.m_g).denominator != 1:
            raise MalformedInvariant(
                f"sigma = {t.sigma} is not a multiple of 1/{c.m_g}"
            )
        if t.kind == NEW and t.sigma < bound:
            raise MalformedInvariant(
                f"new tail invariant {t.sigma} below the bound {bound}"
            )


def check_formula(c: TailConfiguration) -> bool:
    """Exact test of the vanishing cycles identity; raises
    MalformedInvariant first if any tail violates the denominator or
    new-tail constraints."""
    _validate_tails(c)
    total = sum(
        (t.sigma - 1 if t.kind == NEW else t.sigma) for t in c.tails
    )
    return total == c.r - 2


def enumerate_configurations(
    r: int, m_g: int, n_prim: int, max_new: int
) -> list[TailConfiguration]:
    """The complete, duplicate-free list of configurations with
    exactly n_prim primitive tails and at most max_new new tails
    satisfying the identity, in canonical sorted order.

    An empty list is a valid result (for instance m_g = 2 with
    r = 3, n_prim = 3: the minimal primitive sum already exceeds 1).
    """
    if r < 3:
        raise ValueError("r must be >= 3")
    if m_g < 1 or n_prim < 0 or max_new < 0:
        raise ValueError("m_g >= 1 and nonnegative tail counts required")
    target = Fraction(r - 2)
    # per-tail search bound: contributions are positive, so any
    # invariant above r - 1 would overshoot on its own
    prim_values = [Fraction(k, m_g) for k in range(1, (r - 1) * m_g + 1)]
    new_values = [v for v in prim_values if v >= 1 + Fraction(1, m_g)]

    prim_sets: list[tuple[tuple[Fraction, ...], Fraction]] = []

    def build_prim(start: int, chosen: list[Fraction], acc: Fraction) -> None:
        if acc > target:
            return
        if len(chosen) == n_prim:
            prim_sets.append((tuple(chosen), acc))
            return
        for i in range(start, len(prim_values)):
            v = prim_values[i]
            if acc + v > target:
                break
            chosen.append(v)
            build_prim(i, chosen, acc + v)
            chosen.pop()

    if n_prim == 0:
        prim_sets.append(((), Fraction(0)))
    else:
        build_prim(0, [], Fraction(0))

    results: list[TailConfiguration] = []

    def build_new(
        start: int, chosen: list[Fraction], acc: Fraction, prim: tuple[Fraction, ...]
    ) -> None:
        if acc == target:
            tails = tuple(
                TailInvariant(v, PRIMITIVE) for v in prim
            ) + tuple(TailInvariant(v, NEW) for v in chosen)
            results.append(TailConfiguration(r, m_g, tails))
        if len(chosen) == max_new or acc >= target:
            return
        for i in range(start, len(new_values)):
            v = new_values[i]
            if acc + (v - 1) > target:
                break
            chosen.append(v)
            build_new(i, chosen, acc + (v - 1), prim)
            chosen.pop()

    for prim, acc in prim_sets:
        build_new(0, [], acc, prim)

    results.sort(
        key=lambda c: (
            tuple(t.sigma for t in c.primitives()),
            tuple(t.sigma for t in c.new_tails()),
        )
    )
    return results


def fractional_sum(c: TailConfiguration) -> Fraction:
    """Sum of the fractional parts of all invariants. For every
    three-point configuration produced by the enumeration this is 1,
    the mechanism behind the multiplicative-type dichotomy."""
    return sum((t.sigma - int(t.sigma) for t in c.tails), Fraction(0))


def all_noninteger(c: TailConfiguration) -> bool:
    """Whether every invariant has a nonzero fractional part."""
    return all(t.sigma.denominator != 1 for t in c.tails)
