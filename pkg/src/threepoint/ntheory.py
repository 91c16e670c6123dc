"""Exact elementary number theory.

Deterministic primality (Miller-Rabin with a fixed base set that is
exact below 3.3 * 10^24), prime-power decomposition, p-adic valuations,
factorization by trial division, and primitive roots modulo p^s. All
arithmetic is arbitrary-precision integer arithmetic.
"""

from __future__ import annotations

import math

__all__ = [
    "is_prime",
    "valuation",
    "factorize",
    "divisors",
    "is_prime_power",
    "primitive_root_mod_prime_power",
    "order_mod",
]

# Verified deterministic for n < 3_317_044_064_679_887_385_961_981
# (Sorenson-Webster); far beyond anything enumerated here.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def valuation(n: int, p: int) -> int:
    """Largest v with p^v dividing n. Requires n != 0 and p >= 2."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    if p < 2:
        raise ValueError("valuation base must be >= 2")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def factorize(n: int) -> dict[int, int]:
    """Prime factorization {prime: exponent} by trial division."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n, sorted."""
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def is_prime_power(q: int) -> tuple[int, int] | None:
    """Return (ell, d) with q = ell^d and ell prime, or None."""
    if q < 2:
        return None
    if is_prime(q):
        return (q, 1)
    # q composite: its smallest prime factor is at most sqrt(q).
    ell = None
    f = 2
    while f * f <= q:
        if q % f == 0:
            ell = f
            break
        f += 1 if f == 2 else 2
    if ell is None:
        return None
    d = valuation(q, ell)
    return (ell, d) if ell**d == q else None


def order_mod(a: int, modulus: int, modulus_totient_factors: dict[int, int]) -> int:
    """Multiplicative order of a modulo modulus.

    The caller supplies the factorization of a multiple of the order
    (e.g. of the totient); the order is found by stripping prime
    factors. Requires gcd(a, modulus) = 1.
    """
    if math.gcd(a, modulus) != 1:
        raise ValueError("order_mod requires gcd(a, modulus) = 1")
    o = 1
    for p, e in modulus_totient_factors.items():
        o *= p**e
    if pow(a, o, modulus) != 1:
        raise ValueError("supplied factorization does not bound the order")
    for p in modulus_totient_factors:
        while o % p == 0 and pow(a, o // p, modulus) == 1:
            o //= p
    return o


def primitive_root_mod_prime_power(p: int, s: int) -> int:
    """Smallest generator of (Z/p^s)^* for an odd prime p."""
    if p == 2:
        raise ValueError("no primitive root machinery for p = 2")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if s < 1:
        raise ValueError("exponent must be >= 1")
    phi_factors = factorize(p - 1)
    if s > 1:
        phi_factors[p] = s - 1
    modulus = p**s
    phi = (p - 1) * p ** (s - 1)
    for g in range(2, modulus):
        if g % p == 0:
            continue
        if all(pow(g, phi // ell, modulus) != 1 for ell in phi_factors):
            return g
    raise RuntimeError("unreachable: (Z/p^s)^* is cyclic for odd p")
