"""Dense exact arithmetic in small finite fields F_{p^d}.

Elements are coefficient vectors over F_p reduced modulo a monic
irreducible polynomial chosen deterministically (the lexicographically
least one), so two fields built from the same (p, d) are
interchangeable. Beyond ring arithmetic the elements support the
operations the ramification machinery needs: Frobenius, exact p-th
roots (Frobenius inverse) and absolute traces down to F_p.

Everything is pure Python integers; there is no floating point and no
randomness anywhere.
"""

from __future__ import annotations

from itertools import product as _cartesian

from . import ntheory

__all__ = ["FiniteField", "FFElement"]


# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p (coefficient lists, index = degree)

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _padd(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _ptrim(out)


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _ptrim(out)


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _ptrim(out)


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    # m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        shift = len(a) - 1 - dm
        if lead:
            for i, c in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * c) % p
        a.pop()
    return _ptrim(a)


def _ppowmod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, m, p)
    while e > 0:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _pmonic(a: list[int], p: int) -> list[int]:
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _pmod(a, _pmonic(b, p), p)
        if b:
            b = _pmonic(b, p)
    return _pmonic(a, p)


def _is_irreducible(f: list[int], p: int) -> bool:
    d = len(f) - 1
    x = [0, 1]
    if _ppowmod(x, p**d, f, p) != _pmod(x, f, p):
        return False
    for r in ntheory.factorize(d):
        h = _ppowmod(x, p ** (d // r), f, p)
        if len(_pgcd(_psub(h, x, p), f, p)) - 1 > 0:
            return False
    return True


# ---------------------------------------------------------------------------

class FiniteField:
    """The field F_{p^d} with a deterministic modulus.

    Fields compare equal iff (p, degree) agree, and their elements
    interoperate in that case.
    """

    def __init__(self, p: int, degree: int = 1):
        if not ntheory.is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if degree < 1:
            raise ValueError("degree must be >= 1")
        self.p = p
        self.degree = degree
        self.order = p**degree
        self.modulus = self._find_modulus(p, degree)
        self._traces: tuple[int, ...] | None = None
        self._generator: FFElement | None = None

    @staticmethod
    def _find_modulus(p: int, d: int) -> tuple[int, ...]:
        if d == 1:
            return (0, 1)
        for tail in _cartesian(range(p), repeat=d):
            f = list(tail) + [1]
            if _is_irreducible(f, p):
                return tuple(f)
        raise RuntimeError("unreachable: irreducibles of every degree exist")

    # -- construction ------------------------------------------------------

    def element(self, value) -> "FFElement":
        """Build an element from an integer (constant) or a coefficient
        sequence of length <= degree."""
        if isinstance(value, FFElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            coeffs = [value % self.p] + [0] * (self.degree - 1)
        else:
            coeffs = [int(c) % self.p for c in value]
            if len(coeffs) > self.degree:
                raise ValueError("coefficient vector longer than field degree")
            coeffs += [0] * (self.degree - len(coeffs))
        return FFElement(self, tuple(coeffs))

    def zero(self) -> "FFElement":
        return self.element(0)

    def one(self) -> "FFElement":
        return self.element(1)

    def elements(self):
        """All field elements, lexicographic in coefficient order."""
        for coeffs in _cartesian(range(self.p), repeat=self.degree):
            yield FFElement(self, coeffs)

    def multiplicative_generator(self) -> "FFElement":
        """The lexicographically least generator of the unit group."""
        if self._generator is None:
            factors = ntheory.factorize(self.order - 1) if self.order > 2 else {}
            for x in self.elements():
                if not x:
                    continue
                if all(x ** ((self.order - 1) // ell) != self.one() for ell in factors):
                    self._generator = x
                    break
        return self._generator

    # -- structure ---------------------------------------------------------

    def basis_traces(self) -> tuple[int, ...]:
        """Absolute traces of the power basis 1, x, ..., x^{d-1}."""
        if self._traces is None:
            traces = []
            for j in range(self.degree):
                b = self.element([0] * j + [1])
                t = b
                f = b
                for _ in range(self.degree - 1):
                    f = f.frobenius()
                    t = t + f
                if any(t.coeffs[1:]):
                    raise RuntimeError("trace landed outside the prime field")
                traces.append(t.coeffs[0])
            self._traces = tuple(traces)
        return self._traces

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.degree == other.degree
        )

    def __hash__(self) -> int:
        return hash((self.p, self.degree))

    def __repr__(self) -> str:
        return f"FiniteField({self.p}, {self.degree})"


class FFElement:
    """An element of a FiniteField; immutable and hashable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other) -> "FFElement":
        if isinstance(other, FFElement):
            if other.field != self.field:
                raise ValueError("mixed-field arithmetic")
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self.field.p
        return FFElement(
            self.field,
            tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)),
        )

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FFElement(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        f = self.field
        raw = _pmul(list(self.coeffs), list(o.coeffs), f.p)
        red = _pmod(raw, list(f.modulus), f.p)
        red += [0] * (f.degree - len(red))
        return FFElement(f, tuple(red))

    __rmul__ = __mul__

    def inverse(self) -> "FFElement":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int) -> "FFElement":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self) -> "FFElement":
        return self**self.field.p

    def pth_root(self) -> "FFElement":
        """The unique p-th root (Frobenius is bijective)."""
        return self ** (self.field.p ** (self.field.degree - 1))

    def trace(self) -> int:
        """Absolute trace down to F_p, as an integer in [0, p)."""
        traces = self.field.basis_traces()
        return sum(c * t for c, t in zip(self.coeffs, traces)) % self.field.p

    def multiplicative_order(self) -> int:
        if not self:
            raise ValueError("order of zero is undefined")
        n = self.field.order - 1
        if n == 1:
            return 1
        o = n
        for ell in ntheory.factorize(n):
            while o % ell == 0 and self ** (o // ell) == self.field.one():
                o //= ell
        return o

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.field.element(other)
        return (
            isinstance(other, FFElement)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.degree, self.coeffs))

    def __str__(self) -> str:
        if self.field.degree == 1:
            return str(self.coeffs[0])
        return ".".join(str(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"FFElement(F_{self.field.p}^{self.field.degree}, {self.coeffs})"
