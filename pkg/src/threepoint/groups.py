"""Finite group invariants feeding the reduction criterion.

A group arrives either as explicit generating permutations (invariants
are then computed by exhaustive closure) or as one of two structured
families with known profiles: the metacyclic groups Z/p^s x| Z/m
acting faithfully, and the projective linear groups PGL_m(q) whose
p-Sylow subgroup is cyclic whenever q has multiplicative order exactly
m modulo p.

The quantities produced per group and prime p:

  * v_p(|G|) and whether a p-Sylow subgroup is cyclic (equivalently,
    whether some element has order p^{v_p(|G|)});
  * m_G = |N_G(P)| / |Z_G(P)| for a cyclic p-Sylow P;
  * the number of conjugacy classes of elements of exact order p
    (equal to (p-1)/m_G when the Sylow is cyclic);
  * the exponent of the center, which bounds the tame extension degree
    in the criterion's conclusion.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from . import ntheory
from .errors import CapExceeded, CongruenceNotSatisfied
from .finitefield import FiniteField

__all__ = [
    "PermutationGroup",
    "GroupProfile",
    "FamilySpec",
    "enumerate_elements",
    "profile",
    "family_profile",
    "semidirect_model",
    "pgl2_model",
    "enumeration_cap",
    "DEFAULT_ENUMERATION_CAP",
]

DEFAULT_ENUMERATION_CAP = 10**6

Perm = tuple[int, ...]


def enumeration_cap() -> int:
    """Effective element cap: the THREEPOINT_ENUM_CAP environment
    variable when set, else the default 10^6."""
    raw = os.environ.get("THREEPOINT_ENUM_CAP")
    if raw is None:
        return DEFAULT_ENUMERATION_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError("THREEPOINT_ENUM_CAP must be positive")
    return cap


def compose(a: Perm, b: Perm) -> Perm:
    """a after b: (a * b)(i) = a(b(i))."""
    return tuple(a[x] for x in b)


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def perm_order(a: Perm) -> int:
    n = len(a)
    seen = [False] * n
    order = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = a[j]
            length += 1
        order = math.lcm(order, length)
    return order


@dataclass(frozen=True)
class PermutationGroup:
    """A finite group given by generating permutations of {0..degree-1}."""

    degree: int
    generators: tuple[Perm, ...]
    label: str | None = None

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be >= 1")
        object.__setattr__(
            self, "generators", tuple(tuple(g) for g in self.generators)
        )
        for g in self.generators:
            if sorted(g) != list(range(self.degree)):
                raise ValueError(f"{g} is not a permutation of 0..{self.degree - 1}")

    @classmethod
    def from_cycles(
        cls, degree: int, cycles: str, label: str | None = None
    ) -> "PermutationGroup":
        """Parse generators in cycle notation, e.g. '(0 1)(2 3), (0 1 2)'.
        Commas separate generators; whitespace separates cycle entries."""
        gens = []
        for chunk in cycles.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            images = list(range(degree))
            if chunk not in ("()", "id"):
                if not chunk.startswith("(") or not chunk.endswith(")"):
                    raise ValueError(f"bad cycle notation: {chunk!r}")
                for cyc in chunk[1:-1].split(")("):
                    pts = [int(t) for t in cyc.split()]
                    if len(set(pts)) != len(pts):
                        raise ValueError(f"repeated point in cycle {cyc!r}")
                    for i, pt in enumerate(pts):
                        if not 0 <= pt < degree:
                            raise ValueError(f"point {pt} outside 0..{degree - 1}")
                        images[pt] = pts[(i + 1) % len(pts)]
            gens.append(tuple(images))
        return cls(degree, tuple(gens), label)

    def identity(self) -> Perm:
        return tuple(range(self.degree))


@dataclass(frozen=True)
class GroupProfile:
    """Derived invariants of a finite group at a prime p.

    m_invariant is None exactly when the p-Sylow subgroup is not
    cyclic (the normalizer-to-centralizer index of a Sylow is then not
    the quantity the criterion consumes).
    """

    order: int
    p: int
    p_valuation: int
    sylow_cyclic: bool
    m_invariant: int | None
    order_p_class_count: int
    center_exponent: int
    label: str | None = None

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        if not ntheory.is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.p_valuation != ntheory.valuation(self.order, self.p):
            raise ValueError("p_valuation does not match order")
        if self.order % self.center_exponent != 0:
            raise ValueError("center exponent must divide the group order")
        if self.sylow_cyclic and self.m_invariant is None:
            raise ValueError("cyclic Sylow requires m_invariant")
        if (
            self.m_invariant is not None
            and self.p_valuation >= 1
            and (self.p - 1) % self.m_invariant != 0
        ):
            raise ValueError("m_invariant must divide p - 1")


@dataclass(frozen=True)
class FamilySpec:
    """Tagged parameters for the two structured families."""

    variant: str
    p: int
    m: int
    s: int | None = None
    q: int | None = None

    def __post_init__(self):
        if self.variant == "semidirect":
            if not ntheory.is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
            if self.s is None or self.s < 1:
                raise ValueError("semidirect family needs s >= 1")
            if self.m < 2:
                raise ValueError("semidirect family needs m >= 2")
            if (self.p - 1) % self.m != 0:
                raise ValueError(
                    "no faithful action: m must divide p - 1"
                )
        elif self.variant == "pgl":
            if self.m < 2:
                raise ValueError("pgl family needs m >= 2")
            if not ntheory.is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
            if self.q is None or ntheory.is_prime_power(self.q) is None:
                raise ValueError(f"{self.q} is not a prime power")
            if math.gcd(self.q, self.p) != 1:
                raise ValueError("q must be coprime to p")
        else:
            raise ValueError(f"unknown family variant {self.variant!r}")

    @classmethod
    def semidirect(cls, p: int, s: int, m: int) -> "FamilySpec":
        return cls("semidirect", p=p, m=m, s=s)

    @classmethod
    def pgl(cls, m: int, q: int, p: int) -> "FamilySpec":
        return cls("pgl", p=p, m=m, q=q)


# ---------------------------------------------------------------------------

def enumerate_elements(g: PermutationGroup, cap: int | None = None) -> list[Perm]:
    """All elements, by breadth-first closure over the generators.

    Deterministic order (identity first, then discovery order). Raises
    CapExceeded as soon as the closure outgrows the cap; never
    truncates silently.
    """
    if cap is None:
        cap = enumeration_cap()
    identity = g.identity()
    seen = {identity}
    out = [identity]
    frontier = [identity]
    while frontier:
        nxt = []
        for elem in frontier:
            for gen in g.generators:
                prod = compose(elem, gen)
                if prod not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(
                            f"group closure exceeds cap of {cap} elements"
                        )
                    seen.add(prod)
                    out.append(prod)
                    nxt.append(prod)
        frontier = nxt
    return out


def _order_p_class_count(elements: list[Perm], generators: tuple[Perm, ...], p: int) -> int:
    """Conjugacy classes of elements of exact order p: orbits of the
    conjugation action, closed by conjugating with generators only."""
    gen_pairs = [(h, inverse(h)) for h in generators]
    targets = [x for x in elements if perm_order(x) == p]
    target_set = set(targets)
    seen: set[Perm] = set()
    classes = 0
    for x in targets:
        if x in seen:
            continue
        classes += 1
        orbit = [x]
        seen.add(x)
        while orbit:
            y = orbit.pop()
            for h, hinv in gen_pairs:
                z = compose(compose(h, y), hinv)
                if z not in seen:
                    if z not in target_set:
                        raise RuntimeError("conjugation left the order-p stratum")
                    seen.add(z)
                    orbit.append(z)
    return classes


def profile(g: PermutationGroup, p: int, cap: int | None = None) -> GroupProfile:
    """Full invariant profile of an explicit permutation group at p."""
    if not ntheory.is_prime(p):
        raise ValueError(f"{p} is not prime")
    elements = enumerate_elements(g, cap)
    order = len(elements)
    v = ntheory.valuation(order, p)
    orders = [perm_order(x) for x in elements]
    full = p**v
    witness = None
    for x, o in zip(elements, orders):
        if o == full:
            witness = x
            break
    sylow_cyclic = witness is not None
    if v == 0:
        m_inv: int | None = 1
    elif sylow_cyclic:
        powers = set()
        x = g.identity()
        for _ in range(full):
            powers.add(x)
            x = compose(x, witness)
        n_count = 0
        z_count = 0
        for h in elements:
            hw = compose(h, witness)
            if hw == compose(witness, h):
                z_count += 1
                n_count += 1
            elif compose(hw, inverse(h)) in powers:
                n_count += 1
        if n_count % z_count != 0:
            raise RuntimeError("normalizer order not divisible by centralizer order")
        m_inv = n_count // z_count
    else:
        m_inv = None
    class_count = _order_p_class_count(elements, g.generators, p) if v >= 1 else 0
    center = [
        z
        for z in elements
        if all(compose(z, gen) == compose(gen, z) for gen in g.generators)
    ]
    center_exponent = 1
    for z in center:
        center_exponent = math.lcm(center_exponent, perm_order(z))
    return GroupProfile(
        order=order,
        p=p,
        p_valuation=v,
        sylow_cyclic=sylow_cyclic,
        m_invariant=m_inv,
        order_p_class_count=class_count,
        center_exponent=center_exponent,
        label=g.label,
    )


# ---------------------------------------------------------------------------
# structured families

def semidirect_model(p: int, s: int, m: int) -> PermutationGroup:
    """Z/p^s x| Z/m as affine maps x -> nu^b * x + a on Z/p^s, with nu
    of exact multiplicative order m. The action is faithful because nu
    remains of order m modulo p."""
    fam = FamilySpec.semidirect(p, s, m)  # validates
    modulus = p**fam.s
    w = ntheory.primitive_root_mod_prime_power(p, s)
    phi = (p - 1) * p ** (s - 1)
    nu = pow(w, phi // m, modulus)
    translation = tuple((x + 1) % modulus for x in range(modulus))
    multiplier = tuple(nu * x % modulus for x in range(modulus))
    return PermutationGroup(
        modulus,
        (translation, multiplier),
        label=f"Z/{p}^{s} x| Z/{m}",
    )


def pgl2_model(q: int) -> PermutationGroup:
    """PGL_2(q) on the q + 1 points of the projective line, generated
    by x -> x + 1, x -> g*x (g a unit group generator) and x -> 1/x."""
    pp = ntheory.is_prime_power(q)
    if pp is None:
        raise ValueError(f"{q} is not a prime power")
    ell, d = pp
    fieldq = FiniteField(ell, d)
    points = list(fieldq.elements())
    index = {x: i for i, x in enumerate(points)}
    inf = q  # index of the point at infinity
    gen = fieldq.multiplicative_generator()

    translate = [0] * (q + 1)
    scale = [0] * (q + 1)
    invert = [0] * (q + 1)
    for x, i in index.items():
        translate[i] = index[x + 1]
        scale[i] = index[gen * x]
        invert[i] = index[x.inverse()] if x else inf
    translate[inf] = inf
    scale[inf] = inf
    invert[inf] = index[fieldq.zero()]
    return PermutationGroup(
        q + 1,
        (tuple(translate), tuple(scale), tuple(invert)),
        label=f"PGL(2,{q})",
    )


def family_profile(f: FamilySpec, cap: int | None = None) -> GroupProfile:
    """Closed-form (pgl) or concrete-model (semidirect) profile.

    For pgl the cyclic-Sylow description requires the multiplicative
    order of q mod p to be exactly m; CongruenceNotSatisfied otherwise.
    """
    if f.variant == "semidirect":
        model = semidirect_model(f.p, f.s, f.m)
        prof = profile(model, f.p, cap)
        if prof.order != f.p**f.s * f.m or prof.m_invariant != f.m:
            raise RuntimeError("model profile contradicts the closed form")
        return prof
    # pgl
    m, q, p = f.m, f.q, f.p
    order_factors = ntheory.factorize(p - 1)
    if ntheory.order_mod(q, p, order_factors) != m:
        raise CongruenceNotSatisfied(
            f"order of {q} mod {p} is not {m}; the closed-form Sylow "
            f"description does not apply"
        )
    order = 1
    qm = q**m
    for i in range(m):
        order *= qm - q**i
    order //= q - 1
    return GroupProfile(
        order=order,
        p=p,
        p_valuation=ntheory.valuation(qm - 1, p),
        sylow_cyclic=True,
        m_invariant=m,
        order_p_class_count=(p - 1) // m,
        center_exponent=1,
        label=f"PGL({m},{q})",
    )
