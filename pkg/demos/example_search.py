"""
Searching for certified PGL_m(q) examples
=========================================

PGL_m(q) has a cyclic p-Sylow subgroup with m_G = m whenever the
multiplicative order of q mod p^n is exactly m. Scanning prime powers
q and checking the congruence yields an infinite family of groups
whose three-point covers the criterion certifies: with m = 2 and
p = 5 every hit satisfies e(K) * m_G = 2 < 4 outright.
"""

from threepoint import SearchParams, mult_order, search

params = SearchParams(m=2, n=1, p=5, q_max=100)
records = search(params)

print(f"prime powers q <= {params.q_max} with ord(q mod 5) = 2:")
for r in records:
    print(f"  q = {r.q} = {r.ell}^{r.d}: |PGL_2({r.q})| = {r.group_order}, "
          f"Sylow order 5^{r.sylow_order_exponent}, "
          f"verdict {r.verdict.status}"
          + (" (outright)" if r.verdict.good_reduction_outright else ""))
print()

# the multiplicative order computation behind the congruence check
for q in (4, 9, 19, 11):
    print(f"ord({q} mod 5) = {mult_order(q, 5, 1)}")
print()

# deeper Sylow subgroups come from n > 1: ord(q mod 25) = 2 forces
# 25 | q^2 - 1
records = search(SearchParams(m=2, n=2, p=5, q_max=100))
print("with n = 2 only q = 49 survives up to 100:",
      [(r.q, r.sylow_order_exponent) for r in records])
print()

# the ramification data attached to each certified cover
r = search(SearchParams(m=2, n=1, p=5, q_max=20))[-1]
print(f"q = {r.q}: {r.ramification_note}")
