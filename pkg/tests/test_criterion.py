import random

import pytest

from threepoint.criterion import (
    INCONCLUSIVE,
    POTENTIALLY_GOOD,
    FieldProfile,
    Verdict,
    branching_gate,
    class_count_equivalence,
    decide,
)
from threepoint.errors import BranchingInconsistent, PrimeMismatch, SylowNotCyclic
from threepoint.groups import FamilySpec, GroupProfile, family_profile


def make_profile(p, p_valuation, m, count, center=1, order=None):
    if order is None:
        order = p**p_valuation * (m if m else 1) * center
    return GroupProfile(
        order=order,
        p=p,
        p_valuation=p_valuation,
        sylow_cyclic=True,
        m_invariant=m,
        order_p_class_count=count,
        center_exponent=center,
    )


def test_decide_pgl2_19():
    gp = family_profile(FamilySpec.pgl(2, 19, 5))
    v = decide(gp, FieldProfile(p=5, absolute_ramification_index=1))
    assert v.status == POTENTIALLY_GOOD
    assert v.tame_degree_divides == 1
    assert v.good_reduction_outright
    assert any("< 4" in r for r in v.reasons)


def test_decide_boundary_is_inconclusive():
    # e * m = 2 is not < 2 = p - 1
    gp = make_profile(p=3, p_valuation=1, m=2, count=1)
    v = decide(gp, FieldProfile(p=3, absolute_ramification_index=1))
    assert v.status == INCONCLUSIVE
    assert v.tame_degree_divides is None
    assert not v.good_reduction_outright
    assert "hypothesis fails" in v.reasons[0]


def test_decide_semidirect_7_with_e2():
    gp = family_profile(FamilySpec.semidirect(7, 1, 2))
    v = decide(gp, FieldProfile(p=7, absolute_ramification_index=2))
    assert v.status == POTENTIALLY_GOOD  # 2 * 2 < 6
    assert v.tame_degree_divides == gp.center_exponent == 1


def test_decide_nontrivial_center_not_outright():
    # cyclic Z/5: m = 1, center exponent 5
    gp = make_profile(p=5, p_valuation=1, m=1, count=4, center=5, order=5)
    v = decide(gp, FieldProfile(p=5, absolute_ramification_index=3))
    assert v.status == POTENTIALLY_GOOD  # 3 * 1 < 4
    assert v.tame_degree_divides == 5
    assert not v.good_reduction_outright


def test_decide_prime_mismatch():
    gp = make_profile(p=5, p_valuation=1, m=2, count=2)
    with pytest.raises(PrimeMismatch):
        decide(gp, FieldProfile(p=7, absolute_ramification_index=1))


def test_decide_sylow_not_cyclic():
    gp = GroupProfile(
        order=4, p=2, p_valuation=2, sylow_cyclic=False,
        m_invariant=None, order_p_class_count=3, center_exponent=2,
    )
    with pytest.raises(SylowNotCyclic):
        decide(gp, FieldProfile(p=2, absolute_ramification_index=1))


def test_decide_monotone_in_e():
    gp = make_profile(p=11, p_valuation=1, m=2, count=5)
    statuses = [
        decide(gp, FieldProfile(p=11, absolute_ramification_index=e)).status
        for e in range(1, 12)
    ]
    # once inconclusive, stays inconclusive
    first_bad = statuses.index(INCONCLUSIVE)
    assert all(s == POTENTIALLY_GOOD for s in statuses[:first_bad])
    assert all(s == INCONCLUSIVE for s in statuses[first_bad:])
    assert first_bad == 5 - 1  # e = 5 gives 10 >= 10


def test_decide_branching_indices_recorded():
    gp = family_profile(FamilySpec.pgl(2, 19, 5))
    fp = FieldProfile(p=5, absolute_ramification_index=1)
    v = decide(gp, fp, branching_indices=[2, 4, 18])
    assert v.status == POTENTIALLY_GOOD
    assert any("2, 4, 18" in r or "[2, 4, 18]" in r for r in v.reasons)


def test_decide_branching_contradiction():
    gp = family_profile(FamilySpec.pgl(2, 19, 5))
    fp = FieldProfile(p=5, absolute_ramification_index=1)
    with pytest.raises(BranchingInconsistent):
        decide(gp, fp, branching_indices=[2, 5, 3])


def test_branching_gate():
    assert branching_gate([2, 4, 18], 5) is True
    assert branching_gate([5, 2, 3], 5) is False
    assert branching_gate([1], 7) is True
    with pytest.raises(ValueError):
        branching_gate([], 5)


def test_class_count_equivalence():
    gp = make_profile(p=3, p_valuation=1, m=2, count=1, order=6)
    assert class_count_equivalence(gp)
    gp = family_profile(FamilySpec.pgl(2, 19, 5))
    assert class_count_equivalence(gp)
    bad = make_profile(p=5, p_valuation=1, m=2, count=3, order=10)
    assert not class_count_equivalence(bad)


def test_verdict_invariants_enforced():
    with pytest.raises(ValueError):
        Verdict(status=POTENTIALLY_GOOD, tame_degree_divides=None,
                good_reduction_outright=False, reasons=())
    with pytest.raises(ValueError):
        Verdict(status=INCONCLUSIVE, tame_degree_divides=2,
                good_reduction_outright=False, reasons=())
    with pytest.raises(ValueError):
        Verdict(status=POTENTIALLY_GOOD, tame_degree_divides=3,
                good_reduction_outright=True, reasons=())


def test_decide_depends_only_on_profile_fields():
    rng = random.Random(17)
    for _ in range(50):
        p = rng.choice([5, 7, 11, 13])
        divisors_of_p_minus_1 = [m for m in range(1, p) if (p - 1) % m == 0]
        m = rng.choice(divisors_of_p_minus_1)
        e = rng.randrange(1, 6)
        gp1 = make_profile(p=p, p_valuation=1, m=m, count=(p - 1) // m)
        gp2 = make_profile(p=p, p_valuation=1, m=m, count=(p - 1) // m)
        fp = FieldProfile(p=p, absolute_ramification_index=e)
        v1, v2 = decide(gp1, fp), decide(gp2, fp)
        assert v1 == v2
        assert (v1.status == POTENTIALLY_GOOD) == (e * m < p - 1)
