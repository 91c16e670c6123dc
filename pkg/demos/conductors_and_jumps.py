"""
Artin-Schreier conductors and Herbrand transition functions
===========================================================

The degree-p extension y^p - y = f of a local field of characteristic
p has conductor equal to the pole order of f once f is reduced modulo
the image of the operator wp(h) = h^p - h. Dropping a term c t^(-pj)
costs a term c^(1/p) t^(-j), so the reduction terminates at a pole
order prime to p (or at no pole at all).
"""

from fractions import Fraction

from threepoint import (
    BreakSequence,
    FiniteField,
    LaurentRepresentative,
    as_conductor,
    herbrand_phi,
    herbrand_psi,
    upper_jumps,
    wp,
)

F3 = FiniteField(3, 1)


def laurent(field, terms):
    return LaurentRepresentative(
        field, {e: field.element(c) for e, c in terms.items()})


# t^(-9) reduces twice (9 -> 3 -> 1) and merges into the t^(-2) term
f = laurent(F3, {-9: 1, -2: 1})
out = as_conductor(f)
print("f = t^-9 + t^-2 over F_3")
print("  conductor:", out.conductor)
print("  reduced:", {e: str(c) for e, c in out.reduced.terms.items()})
print("  residual class:", out.residual)
print()

# the conductor is invariant under adding any wp(h)
h = laurent(F3, {-1: 2, 0: 1})
print("conductor of f:", as_conductor(f).conductor,
      " of f + wp(h):", as_conductor(f + wp(h)).conductor)
print()

# a pure p-th power pole reduces all the way to conductor 1
out = as_conductor(laurent(FiniteField(2, 1), {-4: 1}))
print("t^-4 over F_2 reduces to conductor", out.conductor)
print()

# Herbrand phi/psi translate between lower and upper numbering of the
# ramification filtration; breaks 1 < 3 with group orders 4 > 2 map to
# upper jumps phi(1) = 1 and phi(3) = 2
seq = BreakSequence(lower_breaks=(1, 3), group_orders=(4, 2))
print("lower breaks (1, 3), orders (4, 2):")
print("  upper jumps:", upper_jumps(seq))
u = Fraction(5, 2)
v = herbrand_phi(seq, u)
print(f"  phi({u}) = {v}, psi({v}) = {herbrand_psi(seq, v)}")
