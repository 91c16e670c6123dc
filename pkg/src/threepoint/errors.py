"""Exception types shared across the package.

The command line front end maps these to exit codes: CapExceeded (a
resource cap, not bad input) exits 3, every other ThreepointError
exits 2.
"""

__all__ = [
    "ThreepointError",
    "CapExceeded",
    "SylowNotCyclic",
    "PrimeMismatch",
    "BranchingInconsistent",
    "CongruenceNotSatisfied",
    "MalformedInvariant",
    "DivisibilityViolation",
    "DenominatorMismatch",
    "NonFaithful",
    "InconsistentDescriptor",
    "HypothesisUnmet",
    "NotCoprime",
    "ParamsInvalid",
]


class ThreepointError(Exception):
    """Base class for all errors this package raises deliberately."""


class CapExceeded(ThreepointError):
    """A group closure grew past the configured element cap."""


class SylowNotCyclic(ThreepointError):
    """An operation requiring a cyclic p-Sylow subgroup was given a
    profile without one."""


class PrimeMismatch(ThreepointError):
    """Group profile and field profile disagree on the prime p."""


class BranchingInconsistent(ThreepointError):
    """Supplied branching indices contradict a verdict: the reduction
    criterion fired, yet some index is divisible by p."""


class CongruenceNotSatisfied(ThreepointError):
    """The multiplicative-order congruence backing the closed-form
    projective-linear Sylow description fails for these parameters."""


class MalformedInvariant(ThreepointError):
    """A tail invariant violates the denominator or lower-bound
    constraints."""


class DivisibilityViolation(ThreepointError):
    """Branch divisor exponent sum is not divisible by the Kummer
    degree m."""


class DenominatorMismatch(ThreepointError):
    """A ramification invariant does not have the denominator the
    consistency congruence requires."""


class NonFaithful(ThreepointError):
    """The semidirect action is trivial mod p (nu = 1), so the
    non-commutative valuation argument does not apply."""


class InconsistentDescriptor(ThreepointError):
    """Extension descriptor attributes contradict each other."""


class HypothesisUnmet(ThreepointError):
    """A lemma-level equivalence was invoked without its hypotheses."""


class NotCoprime(ThreepointError):
    """Multiplicative order requested for a base divisible by p."""


class ParamsInvalid(ThreepointError):
    """Search parameters fail the congruence preconditions."""
