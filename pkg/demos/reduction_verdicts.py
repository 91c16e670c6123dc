"""
Good-reduction verdicts from group and field data
=================================================

The decision procedure takes a group profile (Galois group of a
three-point cover) and a field profile (residue characteristic p and
absolute ramification index e(K)) and applies the criterion

    e(K) * m_G < p - 1  =>  potentially good reduction,

with the tame extension degree dividing the exponent of the center.
Failing the inequality never certifies bad reduction; the verdict is
then Inconclusive.
"""

from threepoint import (
    FamilySpec,
    FieldProfile,
    PermutationGroup,
    decide,
    family_profile,
    profile,
)

# PGL_2(19) with p = 5: m_G = 2, so any e(K) = 1 field works
gp = family_profile(FamilySpec.pgl(2, 19, 5))
fp = FieldProfile(p=5, absolute_ramification_index=1)
verdict = decide(gp, fp)
print(f"{gp.label}, e(K) = 1:")
print(f"  status: {verdict.status}")
print(f"  tame degree divides: {verdict.tame_degree_divides}")
print(f"  outright: {verdict.good_reduction_outright}")
for reason in verdict.reasons:
    print(f"  - {reason}")
print()

# push e(K) past the boundary: 2 * 2 >= 4 and the criterion says nothing
verdict = decide(gp, FieldProfile(p=5, absolute_ramification_index=2))
print(f"{gp.label}, e(K) = 2:")
print(f"  status: {verdict.status}")
for reason in verdict.reasons:
    print(f"  - {reason}")
print()

# a nontrivial center changes "outright" into a bounded tame extension:
# Z/9 at p = 3 has m_G = 1 and center exponent 9
gp = profile(PermutationGroup.from_cycles(9, "(0 1 2 3 4 5 6 7 8)", label="Z9"), 3)
verdict = decide(gp, FieldProfile(p=3, absolute_ramification_index=1))
print(f"{gp.label}, e(K) = 1:")
print(f"  status: {verdict.status}")
print(f"  tame degree divides: {verdict.tame_degree_divides}")
print(f"  outright: {verdict.good_reduction_outright}")
for reason in verdict.reasons:
    print(f"  - {reason}")
print()

# branching indices prime to p are recorded alongside the verdict
gp = family_profile(FamilySpec.semidirect(5, 2, 4))
verdict = decide(gp, FieldProfile(p=5, absolute_ramification_index=1),
                 branching_indices=[2, 4, 4])
print(f"{gp.label}, e(K) = 1, branching indices recorded:")
print(f"  status: {verdict.status}")
for reason in verdict.reasons:
    print(f"  - {reason}")
