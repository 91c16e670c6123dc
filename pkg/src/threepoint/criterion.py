"""The good-reduction verdict.

A three-point Galois cover whose group has a cyclic p-Sylow subgroup
has potentially good reduction whenever e(K) * m_G < p - 1, realized
over a tame extension of degree dividing the exponent of the center;
with trivial center the reduction is good outright. When the
inequality fails the criterion is silent, so the verdict is
Inconclusive rather than "bad".
"""

from __future__ import annotations

from dataclasses import dataclass

from . import ntheory
from .errors import BranchingInconsistent, PrimeMismatch, SylowNotCyclic
from .groups import GroupProfile

__all__ = [
    "FieldProfile",
    "Verdict",
    "decide",
    "branching_gate",
    "class_count_equivalence",
    "POTENTIALLY_GOOD",
    "INCONCLUSIVE",
]

POTENTIALLY_GOOD = "PotentiallyGood"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class FieldProfile:
    """The base field data the criterion consumes: the residue
    characteristic and the absolute ramification index e(K), with the
    valuation normalized so the value group is Z."""

    p: int
    absolute_ramification_index: int
    residue_field_note: str = (
        "residue field algebraically closed; K finite over Frac(W(k))"
    )

    def __post_init__(self):
        if not ntheory.is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.absolute_ramification_index < 1:
            raise ValueError("absolute ramification index must be >= 1")


@dataclass(frozen=True)
class Verdict:
    status: str
    tame_degree_divides: int | None
    good_reduction_outright: bool
    reasons: tuple[str, ...]

    def __post_init__(self):
        if self.status not in (POTENTIALLY_GOOD, INCONCLUSIVE):
            raise ValueError(f"unknown status {self.status!r}")
        if (self.status == POTENTIALLY_GOOD) != (self.tame_degree_divides is not None):
            raise ValueError("tame degree bound present iff potentially good")
        if self.good_reduction_outright and self.tame_degree_divides != 1:
            raise ValueError("good outright forces tame degree 1")


def branching_gate(indices: list[int], p: int) -> bool:
    """True iff no branching index is divisible by p (a necessary
    consequence when the criterion applies)."""
    if not indices:
        raise ValueError("branching gate needs at least one index")
    if any(i < 1 for i in indices):
        raise ValueError("branching indices are positive integers")
    return all(i % p != 0 for i in indices)


def decide(
    gp: GroupProfile,
    fp: FieldProfile,
    branching_indices: list[int] | None = None,
) -> Verdict:
    """Apply the criterion to a group profile over a field profile.

    Strict integer comparison e(K) * m_G < p - 1; no rationals, no
    rounding. Optional branching indices are cross-checked: a
    PotentiallyGood verdict together with a p-divisible index is
    contradictory input and raises BranchingInconsistent.
    """
    if gp.p != fp.p:
        raise PrimeMismatch(f"profile has p = {gp.p}, field has p = {fp.p}")
    if not gp.sylow_cyclic:
        raise SylowNotCyclic(
            "the criterion requires a cyclic p-Sylow subgroup"
        )
    if gp.m_invariant is None:
        raise SylowNotCyclic("profile lacks the normalizer-centralizer index")
    e = fp.absolute_ramification_index
    m = gp.m_invariant
    p = gp.p
    lhs = e * m
    if lhs < p - 1:
        reasons = [
            f"e(K)*m_G = {e}*{m} = {lhs} < {p - 1} = p - 1",
            f"tame degree divides the center exponent {gp.center_exponent}",
        ]
        if branching_indices is not None:
            if not branching_gate(branching_indices, p):
                raise BranchingInconsistent(
                    f"criterion fires but an index in {branching_indices} "
                    f"is divisible by p = {p}"
                )
            reasons.append(
                f"branching indices {branching_indices} all prime to p"
            )
        outright = gp.center_exponent == 1
        if outright:
            reasons.append("center is trivial: good reduction outright")
        return Verdict(
            status=POTENTIALLY_GOOD,
            tame_degree_divides=gp.center_exponent,
            good_reduction_outright=outright,
            reasons=tuple(reasons),
        )
    reasons = [
        f"hypothesis fails: e(K)*m_G = {e}*{m} = {lhs} >= {p - 1} = p - 1",
        "the criterion gives no information; the cover may still have "
        "good reduction",
    ]
    if branching_indices is not None:
        gate = branching_gate(branching_indices, p)
        reasons.append(
            f"branching indices {branching_indices} "
            f"{'all prime to' if gate else 'not all prime to'} p (recorded)"
        )
    return Verdict(
        status=INCONCLUSIVE,
        tame_degree_divides=None,
        good_reduction_outright=False,
        reasons=tuple(reasons),
    )


def class_count_equivalence(gp: GroupProfile) -> bool:
    """Whether order_p_class_count * m_G = p - 1, the identity tying
    the class count of order-p elements to the normalizer index. Holds
    for every profile computed by this package; the entry point exists
    to vet externally supplied profiles."""
    if not gp.sylow_cyclic or gp.p_valuation < 1:
        raise ValueError(
            "class count identity needs a cyclic Sylow of positive order"
        )
    if gp.m_invariant is None:
        return False
    return gp.order_p_class_count * gp.m_invariant == gp.p - 1
