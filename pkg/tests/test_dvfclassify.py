import itertools

import pytest

from threepoint.dvfclassify import (
    FIERCELY_RAMIFIED_OTHER,
    INDETERMINATE,
    MU_TYPE,
    NAIVELY_RAMIFIED,
    UNRAMIFIED,
    ExtensionDescriptor,
    classify,
    low_ram_forces_naive,
    mu_lift_equivalence,
    pval0_divisibility,
)
from threepoint.errors import HypothesisUnmet, InconsistentDescriptor, NonFaithful
from threepoint.localfield import SemidirectAction


def desc(p=5, n=1, e_K=1, v_a=0, pth=False, zeta=True, index=1, sep=None):
    return ExtensionDescriptor(
        p=p, n=n, e_K=e_K, v_a=v_a,
        residue_is_pth_power=pth, contains_zeta=zeta,
        uniformizer_index=index, residue_extension_separable=sep,
    )


def test_mu_type():
    assert classify(desc()) == MU_TYPE
    assert classify(desc(p=3, n=2)) == MU_TYPE


def test_naively_ramified():
    assert classify(desc(pth=True, zeta=False, v_a=3, index=5)) == NAIVELY_RAMIFIED
    assert classify(desc(p=3, n=2, pth=True, zeta=True, v_a=1, index=9)) == NAIVELY_RAMIFIED


def test_unramified_and_fierce():
    assert classify(desc(pth=True, sep=True)) == UNRAMIFIED
    assert classify(desc(pth=True, sep=False)) == FIERCELY_RAMIFIED_OTHER
    assert classify(desc(pth=True, sep=None)) == INDETERMINATE


def test_mu_pattern_contradictions():
    with pytest.raises(InconsistentDescriptor):
        classify(desc(index=5))  # mu pattern is weakly unramified
    with pytest.raises(InconsistentDescriptor):
        classify(desc(sep=True))  # mu-type residue extension is inseparable


def test_classify_never_mu_with_index():
    # exhaustive truth table over small descriptor combinations
    for pth, zeta, v_a, index, sep in itertools.product(
        (False, True), (False, True), (0, 1, 5), (1, 5), (None, False, True)
    ):
        try:
            got = classify(desc(pth=pth, zeta=zeta, v_a=v_a, index=index, sep=sep))
        except InconsistentDescriptor:
            continue
        if got == MU_TYPE:
            assert index == 1


def test_classify_mu_depends_only_on_pth_power_flag():
    # with zeta present and v_a = 0 at index 1, the outcome is MuType
    # exactly when the residue is not a p-th power
    for pth in (False, True):
        got = classify(desc(pth=pth, zeta=True, v_a=0, index=1, sep=None))
        assert (got == MU_TYPE) == (not pth)


def test_descriptor_validation():
    with pytest.raises(ValueError):
        desc(index=3)  # index must divide p^n
    with pytest.raises(ValueError):
        desc(p=6)
    # v_a is an arbitrary integer valuation; negative values are legal
    assert desc(v_a=-3, pth=True, sep=True).v_a == -3


def test_low_ram_forces_naive():
    assert low_ram_forces_naive(
        desc(pth=True, zeta=False, v_a=1, index=5)) is True  # e = 1 < 4
    assert low_ram_forces_naive(
        desc(p=3, e_K=2, pth=True, zeta=False, v_a=1, index=3)) is False  # 2 >= 2
    assert low_ram_forces_naive(
        desc(p=7, e_K=5, pth=True, zeta=False, v_a=0, index=7)) is True  # 5 < 6


def test_low_ram_p2_never_fires():
    for e_K in (1, 2, 3):
        assert low_ram_forces_naive(
            desc(p=2, e_K=e_K, pth=True, zeta=True, v_a=0, index=2)
        ) is False


def test_low_ram_requires_n1():
    with pytest.raises(ValueError):
        low_ram_forces_naive(desc(n=2, pth=True, zeta=False, v_a=1, index=5))


def test_low_ram_contradiction():
    # bound holds but the descriptor says mu-type at index 1
    with pytest.raises(InconsistentDescriptor):
        low_ram_forces_naive(desc())


def test_mu_lift_equivalence():
    base = desc()
    full = desc(n=3)
    assert mu_lift_equivalence(base, full, base_unramified=True) is True
    other = desc(n=3, pth=True, zeta=False, v_a=2, index=25)
    assert mu_lift_equivalence(base, other, base_unramified=True) is False
    non_mu_base = desc(pth=True, zeta=False, v_a=1, index=5)
    assert mu_lift_equivalence(non_mu_base, other, base_unramified=True) is True


def test_mu_lift_hypotheses():
    with pytest.raises(HypothesisUnmet):
        mu_lift_equivalence(desc(), desc(n=3), base_unramified=False)
    with pytest.raises(HypothesisUnmet):
        mu_lift_equivalence(desc(), desc(n=3, pth=True, sep=None), base_unramified=True)
    with pytest.raises(ValueError):
        mu_lift_equivalence(desc(n=2), desc(n=3), base_unramified=True)
    with pytest.raises(ValueError):
        mu_lift_equivalence(desc(p=5), desc(p=7, n=2), base_unramified=True)


def test_pval0_divisibility():
    action = SemidirectAction(p=5, m=4, nu=2)
    assert pval0_divisibility(action, 10) is True
    assert pval0_divisibility(action, 0) is True
    assert pval0_divisibility(action, 3) is False
    with pytest.raises(NonFaithful):
        pval0_divisibility(SemidirectAction(p=5, m=1, nu=1), 5)
