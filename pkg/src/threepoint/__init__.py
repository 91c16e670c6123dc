"""Exact arithmetic around a good-reduction criterion for three-point
Galois covers whose Galois group has a cyclic p-Sylow subgroup.

The central test is the strict integer inequality e(K) * m_G < p - 1,
where e(K) is the absolute ramification index of the base field and
m_G = |N_G(P)| / |Z_G(P)| for a p-Sylow subgroup P. When it holds the
cover has potentially good reduction, attained over a tame extension
whose degree divides the exponent of the center of G; with trivial
center the reduction is good outright. The supporting modules compute
group invariants, tail configurations allowed by the vanishing cycles
formula, Kummer branch-divisor reductions, Artin-Schreier conductors
with Herbrand transition functions, a taxonomy of discrete valuation
field extensions, and a search for certified PGL_m(q) examples.
"""

from .criterion import (
    INCONCLUSIVE,
    POTENTIALLY_GOOD,
    FieldProfile,
    Verdict,
    branching_gate,
    class_count_equivalence,
    decide,
)
from .dvfclassify import (
    ExtensionDescriptor,
    classify,
    low_ram_forces_naive,
    mu_lift_equivalence,
    pval0_divisibility,
)
from .errors import (
    BranchingInconsistent,
    CapExceeded,
    CongruenceNotSatisfied,
    DenominatorMismatch,
    DivisibilityViolation,
    HypothesisUnmet,
    InconsistentDescriptor,
    MalformedInvariant,
    NonFaithful,
    NotCoprime,
    ParamsInvalid,
    PrimeMismatch,
    SylowNotCyclic,
    ThreepointError,
)
from .finitefield import FFElement, FiniteField
from .groups import (
    FamilySpec,
    GroupProfile,
    PermutationGroup,
    enumerate_elements,
    family_profile,
    pgl2_model,
    profile,
    semidirect_model,
)
from .kummer import (
    BranchDivisor,
    exponent_sum_identity,
    is_multiplicative_type,
    mth_power_reduction_test,
    normalize,
    tail_fraction,
)
from .localfield import (
    BreakSequence,
    ConductorResult,
    LaurentRepresentative,
    Pval0Certificate,
    SemidirectAction,
    as_conductor,
    herbrand_phi,
    herbrand_psi,
    pval0_d,
    semidirect_consistency,
    upper_jumps,
    wp,
)
from .pglsearch import (
    ExampleRecord,
    SearchParams,
    is_prime_power,
    mult_order,
    search,
    validate_params,
)
from .tails import (
    TailConfiguration,
    TailInvariant,
    all_noninteger,
    check_formula,
    enumerate_configurations,
    fractional_sum,
)

__version__ = "0.1.0"

__all__ = [
    "BranchDivisor",
    "BranchingInconsistent",
    "BreakSequence",
    "CapExceeded",
    "ConductorResult",
    "CongruenceNotSatisfied",
    "DenominatorMismatch",
    "DivisibilityViolation",
    "ExampleRecord",
    "ExtensionDescriptor",
    "FFElement",
    "FamilySpec",
    "FieldProfile",
    "FiniteField",
    "GroupProfile",
    "HypothesisUnmet",
    "INCONCLUSIVE",
    "InconsistentDescriptor",
    "LaurentRepresentative",
    "MalformedInvariant",
    "NonFaithful",
    "NotCoprime",
    "POTENTIALLY_GOOD",
    "ParamsInvalid",
    "PermutationGroup",
    "PrimeMismatch",
    "Pval0Certificate",
    "SearchParams",
    "SemidirectAction",
    "SylowNotCyclic",
    "TailConfiguration",
    "TailInvariant",
    "ThreepointError",
    "Verdict",
    "all_noninteger",
    "as_conductor",
    "branching_gate",
    "check_formula",
    "class_count_equivalence",
    "classify",
    "decide",
    "enumerate_configurations",
    "enumerate_elements",
    "exponent_sum_identity",
    "family_profile",
    "fractional_sum",
    "herbrand_phi",
    "herbrand_psi",
    "is_multiplicative_type",
    "is_prime_power",
    "low_ram_forces_naive",
    "mth_power_reduction_test",
    "mu_lift_equivalence",
    "mult_order",
    "normalize",
    "pgl2_model",
    "profile",
    "pval0_d",
    "pval0_divisibility",
    "search",
    "semidirect_consistency",
    "semidirect_model",
    "tail_fraction",
    "upper_jumps",
    "validate_params",
    "wp",
    "__version__",
]
