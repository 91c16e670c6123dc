"""Equal-characteristic ramification arithmetic.

Three tools live here.

Artin-Schreier conductors: for y^p - y = f over k((t)) with k = F_{p^d},
the conductor at t = 0 is the pole order of f after wp-reduction,
where wp(h) = h^p - h. A leading term c*t^{-pj} is killed by
subtracting wp(c^{1/p} t^{-j}), which replaces it with c^{1/p} t^{-j}
(p-th roots are exact: Frobenius is bijective on a finite field). The
loop stops when the pole order is prime to p or the pole is gone;
terms in nonnegative degrees never influence the conductor (they are
wp-images locally), and a pole-free remainder means the extension is
unramified, or split when the constant term has zero absolute trace.

Herbrand transition functions: phi is piecewise linear with slope 1 up
to the first lower break and slope |H_{u_i + 1}|/|H_0| after the i-th
break; psi is its inverse. Both are evaluated exactly on Fractions.

The semidirect congruence: in a group Z/p x| Z/m_b with conjugation
character nu, the invariant sigma_b of a tail and the Kummer exponent
a_i of its branch point satisfy sigma_b * m = a_i mod m; and the
inverse d of nu mod p (with nu != 1) certifies that any equivariant
Kummer generator has valuation divisible by p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import ntheory
from .errors import DenominatorMismatch, NonFaithful
from .finitefield import FFElement, FiniteField

__all__ = [
    "LaurentRepresentative",
    "ConductorResult",
    "BreakSequence",
    "SemidirectAction",
    "Pval0Certificate",
    "wp",
    "as_conductor",
    "herbrand_phi",
    "herbrand_psi",
    "upper_jumps",
    "semidirect_consistency",
    "pval0_d",
]


@dataclass(frozen=True, eq=False)
class LaurentRepresentative:
    """Finitely many terms of f in y^p - y = f(t): a map from integer
    exponents to nonzero coefficients in F_{p^d}. Zero coefficients
    are dropped on construction; integer coefficient values embed via
    the prime field."""

    field: FiniteField
    terms: dict[int, FFElement]

    def __post_init__(self):
        clean: dict[int, FFElement] = {}
        for e, c in self.terms.items():
            c = self.field.element(c) if isinstance(c, int) else c
            if not isinstance(c, FFElement) or c.field != self.field:
                raise ValueError("coefficients must lie in the stated field")
            if c:
                clean[int(e)] = c
        object.__setattr__(self, "terms", clean)

    @property
    def p(self) -> int:
        return self.field.p

    def pole_order(self) -> int:
        negs = [-e for e in self.terms if e < 0]
        return max(negs) if negs else 0

    def constant_term(self) -> FFElement:
        return self.terms.get(0, self.field.zero())

    def __add__(self, other: "LaurentRepresentative") -> "LaurentRepresentative":
        if not isinstance(other, LaurentRepresentative):
            return NotImplemented
        if other.field != self.field:
            raise ValueError("mixed coefficient fields")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            acc = terms.get(e, self.field.zero()) + c
            if acc:
                terms[e] = acc
            else:
                terms.pop(e, None)
        return LaurentRepresentative(self.field, terms)

    def __neg__(self) -> "LaurentRepresentative":
        return LaurentRepresentative(
            self.field, {e: -c for e, c in self.terms.items()}
        )

    def __sub__(self, other: "LaurentRepresentative") -> "LaurentRepresentative":
        return self + (-other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentRepresentative)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms):
            bits.append(f"({self.terms[e]})*t^{e}")
        return " + ".join(bits)


def wp(h: LaurentRepresentative) -> LaurentRepresentative:
    """The additive map wp(h) = h^p - h. In characteristic p the power
    distributes over terms: (c t^e)^p = c^p t^{pe}."""
    p = h.p
    powered = LaurentRepresentative(
        h.field, {p * e: c**p for e, c in h.terms.items()}
    )
    return powered - h


@dataclass(frozen=True)
class ConductorResult:
    conductor: int
    reduced: LaurentRepresentative
    residual: str  # "ramified", "unramified" or "split"


def as_conductor(f: LaurentRepresentative) -> ConductorResult:
    """wp-reduce f and read off the conductor.

    Repeatedly replaces the leading term c*t^{-n} with n = p*j by
    c^{1/p}*t^{-j} (coefficients may cancel) until the pole order is
    prime to p or zero. The conductor is the final pole order; a
    pole-free remainder is split when its constant term has zero
    absolute trace, unramified otherwise.
    """
    terms = dict(f.terms)
    zero = f.field.zero()
    while True:
        negs = [-e for e in terms if e < 0]
        n = max(negs) if negs else 0
        if n == 0 or n % f.p != 0:
            break
        j = n // f.p
        c = terms.pop(-n)
        root = c.pth_root()
        acc = terms.get(-j, zero) + root
        if acc:
            terms[-j] = acc
        else:
            terms.pop(-j, None)
    reduced = LaurentRepresentative(f.field, terms)
    conductor = reduced.pole_order()
    if conductor > 0:
        residual = "ramified"
    elif reduced.constant_term().trace() == 0:
        residual = "split"
    else:
        residual = "unramified"
    return ConductorResult(conductor=conductor, reduced=reduced, residual=residual)


# ---------------------------------------------------------------------------
# Herbrand transition functions


@dataclass(frozen=True)
class BreakSequence:
    """Lower-numbering ramification data: strictly increasing positive
    breaks u_1 < ... < u_n and the orders of the ramification
    subgroups on the segments ending at each break (so group_orders[0]
    is |H_0| = |H_u| for 0 < u <= u_1). After the last break the
    filtration is trivial.

    Orders must form a divisibility chain (each subgroup sits inside
    the previous one); no congruence conditions between the breaks are
    imposed.
    """

    lower_breaks: tuple[int, ...]
    group_orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lower_breaks", tuple(self.lower_breaks))
        object.__setattr__(self, "group_orders", tuple(self.group_orders))
        if not self.lower_breaks:
            raise ValueError("at least one break is required")
        if len(self.lower_breaks) != len(self.group_orders):
            raise ValueError("one group order per break segment")
        if any(u < 1 for u in self.lower_breaks):
            raise ValueError("breaks are positive")
        if any(
            a >= b for a, b in zip(self.lower_breaks, self.lower_breaks[1:])
        ):
            raise ValueError("breaks must be strictly increasing")
        if any(o < 2 for o in self.group_orders):
            raise ValueError("segment group orders are at least 2")
        for prev, nxt in zip(self.group_orders, self.group_orders[1:]):
            if prev % nxt != 0:
                raise ValueError(
                    "group orders must descend along a divisibility chain"
                )


def _phi_nodes(b: BreakSequence) -> list[tuple[Fraction, Fraction]]:
    """Breakpoints (u_i, phi(u_i)) of the piecewise-linear phi."""
    nodes = []
    h0 = b.group_orders[0]
    u_prev = Fraction(0)
    phi_prev = Fraction(0)
    for i, u in enumerate(b.lower_breaks):
        slope = Fraction(b.group_orders[i], h0)
        phi_u = phi_prev + (Fraction(u) - u_prev) * slope
        nodes.append((Fraction(u), phi_u))
        u_prev, phi_prev = Fraction(u), phi_u
    return nodes


def herbrand_phi(b: BreakSequence, u: Fraction) -> Fraction:
    """phi(u): lower to upper numbering, exact."""
    u = Fraction(u)
    if u < 0:
        raise ValueError("phi is evaluated at u >= 0")
    h0 = b.group_orders[0]
    nodes = _phi_nodes(b)
    u_prev, phi_prev = Fraction(0), Fraction(0)
    for i, (u_i, phi_i) in enumerate(nodes):
        if u <= u_i:
            slope = Fraction(b.group_orders[i], h0)
            return phi_prev + (u - u_prev) * slope
        u_prev, phi_prev = u_i, phi_i
    # beyond the last break the filtration is trivial
    return phi_prev + (u - u_prev) * Fraction(1, h0)


def herbrand_psi(b: BreakSequence, v: Fraction) -> Fraction:
    """psi(v): the inverse of phi, exact. psi(phi(u)) = u."""
    v = Fraction(v)
    if v < 0:
        raise ValueError("psi is evaluated at v >= 0")
    h0 = b.group_orders[0]
    nodes = _phi_nodes(b)
    u_prev, phi_prev = Fraction(0), Fraction(0)
    for i, (u_i, phi_i) in enumerate(nodes):
        if v <= phi_i:
            slope = Fraction(b.group_orders[i], h0)
            return u_prev + (v - phi_prev) / slope
        u_prev, phi_prev = u_i, phi_i
    return u_prev + (v - phi_prev) * h0


def upper_jumps(b: BreakSequence) -> list[Fraction]:
    """Images of the lower breaks under phi, increasing."""
    return [phi for _, phi in _phi_nodes(b)]


# ---------------------------------------------------------------------------
# the semidirect-product congruences


@dataclass(frozen=True)
class SemidirectAction:
    """Conjugation data of Z/p x| Z/m: the character value nu with
    c*sigma*c^{-1} = sigma^nu. Injectivity of i -> nu^i on Z/m is
    equivalent to nu having exact order m mod p."""

    p: int
    m: int
    nu: int

    def __post_init__(self):
        if not ntheory.is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.m < 1 or (self.p - 1) % self.m != 0:
            raise ValueError("m must divide p - 1")
        if self.nu % self.p == 0:
            raise ValueError("nu must be a unit mod p")
        order = ntheory.order_mod(
            self.nu, self.p, ntheory.factorize(self.p - 1)
        )
        if order != self.m:
            raise ValueError(
                f"nu = {self.nu} has order {order} mod {self.p}, "
                f"so the character on Z/{self.m} is not injective"
            )


def semidirect_consistency(
    sigma_b: Fraction, m_b: int, m: int, a_i: int
) -> bool:
    """Whether sigma_b * m = a_i (mod m), i.e. the fractional part of
    the invariant matches the Kummer exponent a_i/m. Requires that
    sigma_b * m_b is an integer and m_b divides m."""
    sigma_b = Fraction(sigma_b)
    if m_b < 1 or m < 1:
        raise ValueError("m_b and m are positive integers")
    if (sigma_b * m_b).denominator != 1:
        raise DenominatorMismatch(
            f"sigma_b = {sigma_b} is not a multiple of 1/{m_b}"
        )
    if m % m_b != 0:
        raise DenominatorMismatch(f"m_b = {m_b} does not divide m = {m}")
    scaled = sigma_b * m
    if scaled.denominator != 1:
        raise DenominatorMismatch(
            f"sigma_b * m = {scaled} is not an integer"
        )
    return (int(scaled) - a_i) % m == 0


@dataclass(frozen=True)
class Pval0Certificate:
    """The inverse d of nu mod p together with the consequence it
    certifies: d != 1, so an equivariant Kummer generator a (with
    c(a) = a^d * z^p) must have p | v_M(a)."""

    d: int
    p: int
    nu: int
    forces_p_divisible_valuation: bool


def pval0_d(action: SemidirectAction) -> Pval0Certificate:
    """Solve nu*d = 1 (mod p) for the non-commutative case.

    NonFaithful when nu = 1 mod p: the group is then commutative and
    the valuation argument does not apply.
    """
    nu = action.nu % action.p
    if nu == 1:
        raise NonFaithful("nu = 1 mod p: the action is trivial")
    d = pow(nu, -1, action.p)
    # nu != 1 forces d != 1, which is what drives the divisibility
    assert d != 1
    return Pval0Certificate(
        d=d, p=action.p, nu=nu, forces_p_divisible_valuation=True
    )
