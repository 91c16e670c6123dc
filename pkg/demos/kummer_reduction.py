"""
Kummer subcovers and the m-th power test
========================================

A tame cyclic subcover z^m = prod (x - x_i)^(a_i) is studied through
its branch divisor. Normalizing the exponents mod m, the cover is of
multiplicative type when the normalized exponents sum to exactly m,
and the right-hand side is an m-th power (so the cover splits) exactly
when every residue class of branch points has exponent sum divisible
by m.
"""

from threepoint import (
    BranchDivisor,
    FiniteField,
    is_multiplicative_type,
    mth_power_reduction_test,
    normalize,
    tail_fraction,
)

field = FiniteField(7, 1)


def divisor(m, pairs):
    return BranchDivisor(m, field,
                         tuple((field.element(x), a) for x, a in pairs))


# three distinct branch points with exponents 1, 1, 1 and m = 3:
# exponent sum is exactly m, so this is multiplicative type
d = divisor(3, [(0, 1), (1, 1), (2, 1)])
print("divisor x(x-1)(x-2), m = 3")
print("  multiplicative type:", is_multiplicative_type(d))
report = mth_power_reduction_test(d)
print("  m-th power:", report["is_mth_power"])
print("  class sums mod m:", {str(k): v for k, v in report["class_sums"].items()})
print()

# doubling a point merges residue classes; (x-3)^2 (x-3)^2 has class
# sum 4 = 0 mod 2, so it is a square
d = divisor(2, [(3, 1), (3, 1), (3, 2)])
print("divisor (x-3)^4, m = 2")
print("  m-th power:", mth_power_reduction_test(d)["is_mth_power"])
print()

# exponents are read mod m: 8 and 5 fold to 2 and 5 mod 6, and points
# whose exponent vanishes mod m drop out entirely
raw = divisor(6, [(0, 8), (1, 5), (2, 5), (3, 6)])
folded = normalize(raw)
print("raw exponents [8, 5, 5, 6] normalize mod 6 to",
      [a for _, a in folded.points])
print()

# tail fractions <a_i/m> bridge the divisor to the vanishing-cycles
# bookkeeping: a normalized divisor of multiplicative type has
# fractional parts summing to exactly 1
d = divisor(4, [(1, 1), (2, 1), (4, 2)])
fracs = [tail_fraction(a, 4) for _, a in ((1, 1), (2, 1), (4, 2))]
print("m = 4 exponents (1, 1, 2): tail fractions", fracs)
print("  sum:", sum(fracs), " multiplicative type:", is_multiplicative_type(d))
