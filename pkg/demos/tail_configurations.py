"""
Vanishing cycles and admissible tail invariants
===============================================

For a three-point cover (r = 3 branch points) the effective
ramification invariants sigma_b of the etale tails satisfy

    r - 2 = sum over new tails (sigma_b - 1) + sum over primitive tails sigma_b

with each sigma_b a positive element of (1/m_G) Z and every new tail
obeying sigma_b >= 1 + 1/m_G. Enumerating all solutions shows how the
group invariant m_G constrains the shape of the stable reduction.
"""

from threepoint import check_formula, enumerate_configurations, fractional_sum

for m_g in (2, 3, 4, 5):
    configs = enumerate_configurations(r=3, m_g=m_g, n_prim=3, max_new=2)
    print(f"m_G = {m_g}: {len(configs)} admissible configuration(s)")
    for c in configs:
        prim = ", ".join(str(t.sigma) for t in c.primitives())
        new = ", ".join(str(t.sigma) for t in c.new_tails())
        line = f"  primitive: [{prim}]"
        if new:
            line += f"  new: [{new}]"
        print(line)
        # every admissible configuration satisfies the formula exactly
        # and has total fractional mass 1
        assert check_formula(c)
        assert fractional_sum(c) == 1
    print()

# m_G = 2 forbids every configuration with three primitive tails:
# each sigma would need to be a half-integer below 1, and three
# halves already overshoot r - 2 = 1
print("m_G = 2 with n_prim = 3:",
      enumerate_configurations(r=3, m_g=2, n_prim=3, max_new=2))

# larger r admits more room; four branch points with m_G = 3
configs = enumerate_configurations(r=4, m_g=3, n_prim=3, max_new=1)
print(f"r = 4, m_G = 3: {len(configs)} configuration(s)")
