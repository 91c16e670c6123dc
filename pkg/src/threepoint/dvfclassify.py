"""Classifying Z/p^n Kummer extensions of mixed-characteristic
complete discretely valued fields from attribute descriptors.

A descriptor records the finitely many attributes the taxonomy
consumes: degree p^n, the absolute ramification index e(K) of the
base, the valuation of the Kummer generator a, whether the residue of
a unit-normalized generator is a p-th power in the residue field,
whether the base contains the p^n-th roots of unity, and the
ramification index e(L/K) of the extension itself. Classes:

  * MuType: generated by a p^n-th root of a unit whose residue is not
    a p-th power, with the roots of unity present. Weakly unramified
    with inseparable residue extension of degree p^n (so fiercely
    ramified).
  * NaivelyRamified: the uniformizer index e(L/K) exceeds 1.
  * Unramified: weakly unramified with separable residue extension.
  * FiercelyRamifiedOther: weakly unramified, inseparable residue
    extension, but not of mu type.
  * Indeterminate: the attributes under-determine the class. This is
    a first-class outcome, never an error.

Descriptors are caller-asserted; contradictions that are visible from
the attributes alone raise InconsistentDescriptor.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import ntheory
from .errors import HypothesisUnmet, InconsistentDescriptor, NonFaithful
from .localfield import SemidirectAction

__all__ = [
    "ExtensionDescriptor",
    "classify",
    "low_ram_forces_naive",
    "mu_lift_equivalence",
    "pval0_divisibility",
    "UNRAMIFIED",
    "NAIVELY_RAMIFIED",
    "MU_TYPE",
    "FIERCELY_RAMIFIED_OTHER",
    "INDETERMINATE",
    "CLASSES",
]

UNRAMIFIED = "Unramified"
NAIVELY_RAMIFIED = "NaivelyRamified"
MU_TYPE = "MuType"
FIERCELY_RAMIFIED_OTHER = "FiercelyRamifiedOther"
INDETERMINATE = "Indeterminate"
CLASSES = (
    UNRAMIFIED,
    NAIVELY_RAMIFIED,
    MU_TYPE,
    FIERCELY_RAMIFIED_OTHER,
    INDETERMINATE,
)


@dataclass(frozen=True)
class ExtensionDescriptor:
    """Attributes of K(a^{1/p^n})/K over a mixed-characteristic base.

    residue_extension_separable is tri-state: None means the caller
    does not know, which routes weakly unramified non-mu descriptors
    to Indeterminate.
    """

    p: int
    n: int
    e_K: int
    v_a: int
    residue_is_pth_power: bool
    contains_zeta: bool
    uniformizer_index: int
    residue_extension_separable: bool | None = None

    def __post_init__(self):
        if not ntheory.is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.n < 1:
            raise ValueError("extension degree exponent n must be >= 1")
        if self.e_K < 1:
            raise ValueError("absolute ramification index must be >= 1")
        if self.uniformizer_index < 1:
            raise ValueError("uniformizer index must be >= 1")
        if self.p**self.n % self.uniformizer_index != 0:
            raise ValueError("uniformizer index must divide p^n")


def _mu_pattern(d: ExtensionDescriptor) -> bool:
    return d.contains_zeta and d.v_a == 0 and not d.residue_is_pth_power


def classify(d: ExtensionDescriptor) -> str:
    """Resolve the descriptor to a taxonomy class.

    The mu pattern (roots of unity present, unit generator, residue
    not a p-th power) forces weak unramifiedness, so combining it with
    uniformizer_index > 1 or a separable-residue claim raises
    InconsistentDescriptor rather than guessing.
    """
    if _mu_pattern(d):
        if d.uniformizer_index > 1:
            raise InconsistentDescriptor(
                "mu-type pattern is weakly unramified, but the "
                f"uniformizer index is {d.uniformizer_index}"
            )
        if d.residue_extension_separable is True:
            raise InconsistentDescriptor(
                "mu-type pattern has an inseparable residue extension, "
                "but the descriptor claims separability"
            )
        return MU_TYPE
    if d.uniformizer_index > 1:
        return NAIVELY_RAMIFIED
    if d.residue_extension_separable is True:
        return UNRAMIFIED
    if d.residue_extension_separable is False:
        return FIERCELY_RAMIFIED_OTHER
    return INDETERMINATE


def low_ram_forces_naive(d: ExtensionDescriptor) -> bool:
    """Whether e(K) < p - 1, which forces every ramified Z/p-extension
    to be naively ramified. Only meaningful for n = 1.

    When the bound holds but the descriptor describes a ramified yet
    weakly unramified extension, the attributes contradict the bound
    and InconsistentDescriptor is raised.
    """
    if d.n != 1:
        raise ValueError("the low-ramification bound is a Z/p statement")
    bound = d.e_K < d.p - 1
    if bound and d.uniformizer_index == 1:
        cls = classify(d)
        if cls in (MU_TYPE, FIERCELY_RAMIFIED_OTHER):
            raise InconsistentDescriptor(
                f"e(K) = {d.e_K} < p - 1 forces naive ramification, but "
                f"the descriptor classifies as {cls}"
            )
    return bound


def mu_lift_equivalence(
    base: ExtensionDescriptor,
    full: ExtensionDescriptor,
    base_unramified: bool,
) -> bool:
    """Whether the Z/p subextension descriptor and the full Z/p^n
    descriptor are mu-type simultaneously.

    Valid only when the tower sits over an absolutely unramified base
    with algebraically closed residue field (asserted by the caller
    through base_unramified) and both descriptors are determinate;
    otherwise HypothesisUnmet. A False return is a violation of the
    lifting equivalence and should be treated as a data error by the
    caller, never silently accepted.
    """
    if not base_unramified:
        raise HypothesisUnmet(
            "the lifting equivalence requires an absolutely unramified base"
        )
    if base.n != 1:
        raise ValueError("base descriptor must describe the Z/p subextension")
    if base.p != full.p:
        raise ValueError("descriptors disagree on p")
    if full.n < base.n:
        raise ValueError("full extension degree below the base degree")
    c_base = classify(base)
    c_full = classify(full)
    if INDETERMINATE in (c_base, c_full):
        raise HypothesisUnmet(
            "equivalence undecidable: a descriptor is indeterminate"
        )
    return (c_base == MU_TYPE) == (c_full == MU_TYPE)


def pval0_divisibility(action: SemidirectAction, v_a: int) -> bool:
    """Whether p divides v_a. For a non-commutative Z/p x| Z/m Kummer
    datum this must hold; a failing input is not realizable."""
    if action.nu % action.p == 1:
        raise NonFaithful(
            "divisibility statement needs a non-commutative action"
        )
    return v_a % action.p == 0
