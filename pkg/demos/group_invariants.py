"""
Group profiles and the class-count identity
===========================================

Profile a handful of finite groups at a prime p: the p-valuation of the
order, whether the p-Sylow subgroup is cyclic, the invariant
m_G = |N_G(P)| / |Z_G(P)|, and the number of conjugacy classes of
order-p elements. When the Sylow is cyclic these satisfy

    (number of order-p classes) * m_G = p - 1.
"""

from threepoint import PermutationGroup, pgl2_model, profile, semidirect_model

zoo = [
    (PermutationGroup.from_cycles(3, "(0 1), (0 1 2)", label="S3"), 3),
    (PermutationGroup.from_cycles(5, "(0 1 2 3 4), (1 4)(2 3)", label="D5"), 5),
    (PermutationGroup.from_cycles(9, "(0 1 2 3 4 5 6 7 8)", label="Z9"), 3),
    (semidirect_model(5, 1, 4), 5),
    (semidirect_model(7, 1, 3), 7),
    (pgl2_model(4), 5),
    (pgl2_model(19), 5),
]

for group, p in zoo:
    prof = profile(group, p)
    print(f"{prof.label or 'group'} at p = {p}:")
    print(f"  order {prof.order}, v_p = {prof.p_valuation}, "
          f"Sylow cyclic: {prof.sylow_cyclic}")
    print(f"  m_G = {prof.m_invariant}, order-p classes = "
          f"{prof.order_p_class_count}, center exponent = {prof.center_exponent}")
    if prof.sylow_cyclic and prof.p_valuation >= 1:
        lhs = prof.order_p_class_count * prof.m_invariant
        print(f"  identity: {prof.order_p_class_count} * {prof.m_invariant} "
              f"= {lhs} = p - 1: {lhs == p - 1}")
    print()

# the Klein four group shows the non-cyclic case: m_G is undefined there
klein = PermutationGroup.from_cycles(4, "(0 1)(2 3), (0 2)(1 3)", label="V4")
prof = profile(klein, 2)
print(f"{prof.label}: Sylow cyclic: {prof.sylow_cyclic}, m_G = {prof.m_invariant}")
