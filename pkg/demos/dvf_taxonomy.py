"""
Classifying Z/p^n extensions of discrete valuation fields
=========================================================

A Kummer extension K(a^(1/p^n))/K of a mixed-characteristic discrete
valuation field falls into one of a few ramification classes read off
from a small descriptor: the valuation v(a), whether the residue of
the adjusted unit is a p-th power, and the index of the uniformizer
needed to re-scale a.
"""

from fractions import Fraction

from threepoint import (
    ExtensionDescriptor,
    SemidirectAction,
    classify,
    low_ram_forces_naive,
    mu_lift_equivalence,
    pval0_d,
    pval0_divisibility,
    semidirect_consistency,
)

# a unit whose residue is not a p-th power generates the fierce,
# weakly unramified mu-type extension
d = ExtensionDescriptor(p=5, n=1, e_K=1, v_a=0, residue_is_pth_power=False,
                        contains_zeta=True, uniformizer_index=1)
print("unit, residue not a p-th power:", classify(d))

# residue a p-th power and trivial uniformizer index: nothing ramifies
d = ExtensionDescriptor(p=5, n=1, e_K=1, v_a=0, residue_is_pth_power=True,
                        contains_zeta=True, uniformizer_index=1,
                        residue_extension_separable=True)
print("residue a p-th power, separable residue step:", classify(d))

# a genuine uniformizer power forces classical (naive) ramification
d = ExtensionDescriptor(p=5, n=1, e_K=1, v_a=0, residue_is_pth_power=True,
                        contains_zeta=True, uniformizer_index=5)
print("uniformizer index 5:", classify(d))

# without the separability flag the taxonomy cannot split the last
# two fierce classes
d = ExtensionDescriptor(p=5, n=1, e_K=1, v_a=0, residue_is_pth_power=True,
                        contains_zeta=True, uniformizer_index=1)
print("separability unknown:", classify(d))
print()

# low absolute ramification with n = 1 rules out everything but the
# naive class: e(K) < p - 1 kills both fierce possibilities
for p, e in ((5, 1), (3, 2), (7, 5)):
    d = ExtensionDescriptor(p=p, n=1, e_K=e, v_a=1, residue_is_pth_power=True,
                            contains_zeta=True, uniformizer_index=p)
    print(f"p = {p}, e(K) = {e}: low ramification forces naive:",
          low_ram_forces_naive(d))
print()

# the mu-type condition is insensitive to unramified base change
base = ExtensionDescriptor(p=5, n=1, e_K=1, v_a=0, residue_is_pth_power=False,
                           contains_zeta=True, uniformizer_index=1)
full = ExtensionDescriptor(p=5, n=1, e_K=1, v_a=0, residue_is_pth_power=False,
                           contains_zeta=True, uniformizer_index=1)
print("mu-type upstairs iff downstairs:",
      mu_lift_equivalence(base, full, base_unramified=True))
print()

# a faithful semidirect action Z/p x| Z/m with character value nu
# solves nu * d = 1 mod p; a noncommutative action (nu != 1) forces
# the valuation v(a) of the Kummer generator to be divisible by p
action = SemidirectAction(p=5, m=4, nu=2)
cert = pval0_d(action)
print(f"nu = {action.nu} mod {action.p}: d = {cert.d} solves nu*d = 1, "
      f"forces p | v(a): {cert.forces_p_divisible_valuation}")
print("v(a) = 10 admissible:", pval0_divisibility(action, 10))
print("v(a) = 7 admissible:", pval0_divisibility(action, 7))
print()

# tail invariants match the Kummer exponents through the same bridge:
# sigma_b = 5/4 with local prime-to-p order 4 agrees with a_i = 5 mod 4
print("sigma = 5/4, m_b = 4, a = 5:",
      semidirect_consistency(Fraction(5, 4), 4, 4, 5))
