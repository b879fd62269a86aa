"""Arithmetic in F_p and in F_p[w]/(w^2 - w - 1).

The extension is only a field when 5 is a non-square mod p, i.e. when
p = +-3 (mod 10); :class:`ExtFieldElement` refuses other primes.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from sympy import factorint, isprime

from .errors import (
    DegeneratePrimeError,
    InvalidInputError,
    InvariantViolation,
    NonResidueError,
    WrongCaseError,
)


def _check_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not isprime(p):
        raise InvalidInputError(f"{p} is not an odd prime")


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) by Euler's criterion."""
    _check_odd_prime(p)
    t = pow(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def sqrt_mod(a: int, p: int) -> int:
    """Smaller square root of ``a`` modulo the odd prime ``p`` (Tonelli-Shanks)."""
    a %= p
    if legendre(a, p) == -1:
        raise NonResidueError(f"{a} is not a square mod {p}")
    if a == 0:
        return 0
    if p % 4 == 3:
        x = pow(a, (p + 1) // 4, p)
        return min(x, p - x)

    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, x = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, x = t * c % p, x * b % p
    return min(x, p - x)


@dataclass(frozen=True)
class FieldElement:
    value: int
    p: int

    def __post_init__(self):
        if not 0 <= self.value < self.p:
            object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise InvalidInputError("mixing elements of different fields")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement((self.value + v) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement((self.value - v) % self.p, self.p)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return FieldElement(-self.value % self.p, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.value * v % self.p, self.p)

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.p}")
        return FieldElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self * FieldElement(v, self.p).inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return FieldElement(pow(self.value, n, self.p), self.p)

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.p})"


@dataclass(frozen=True)
class ExtFieldElement:
    """a + b*w with w^2 = w + 1, over F_p for p = +-3 (mod 10)."""

    a: int
    b: int
    p: int

    def __post_init__(self):
        if self.p % 10 not in (3, 7):
            raise WrongCaseError(f"x^2 - x - 1 splits mod {self.p}; no quadratic extension here")
        if not (0 <= self.a < self.p and 0 <= self.b < self.p):
            object.__setattr__(self, "a", self.a % self.p)
            object.__setattr__(self, "b", self.b % self.p)

    @classmethod
    def omega(cls, p: int) -> ExtFieldElement:
        return cls(0, 1, p)

    def _coerce(self, other) -> tuple[int, int]:
        if isinstance(other, ExtFieldElement):
            if other.p != self.p:
                raise InvalidInputError("mixing elements of different fields")
            return other.a, other.b
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise InvalidInputError("mixing elements of different fields")
            return other.value, 0
        if isinstance(other, int):
            return other % self.p, 0
        return NotImplemented

    def __add__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return c
        return ExtFieldElement((self.a + c[0]) % self.p, (self.b + c[1]) % self.p, self.p)

    __radd__ = __add__

    def __neg__(self):
        return ExtFieldElement(-self.a % self.p, -self.b % self.p, self.p)

    def __sub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return c
        return ExtFieldElement((self.a - c[0]) % self.p, (self.b - c[1]) % self.p, self.p)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return c
        x, y = c
        p = self.p
        bd = self.b * y
        return ExtFieldElement((self.a * x + bd) % p, (self.a * y + self.b * x + bd) % p, p)

    __rmul__ = __mul__

    def conjugate(self) -> ExtFieldElement:
        # w -> 1 - w
        return ExtFieldElement((self.a + self.b) % self.p, -self.b % self.p, self.p)

    frobenius = conjugate

    def norm(self) -> int:
        return (self.a * self.a + self.a * self.b - self.b * self.b) % self.p

    def inverse(self) -> ExtFieldElement:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("0 has no inverse in F_p^2")
        return self.conjugate() * pow(n, -1, self.p)

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return c
        return self * ExtFieldElement(c[0], c[1], self.p).inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = ExtFieldElement(1, 0, self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_one(self) -> bool:
        return self.a == 1 and self.b == 0

    def in_base_field(self) -> bool:
        return self.b == 0

    def __repr__(self) -> str:
        return f"{self.a} + {self.b}w (mod {self.p})"


Element = Union[FieldElement, ExtFieldElement]


@dataclass(frozen=True)
class RootPair:
    r: Element
    s: Element

    @property
    def p(self) -> int:
        return self.r.p

    @property
    def ratio(self) -> Element:
        return self.r / self.s


def golden_roots(p: int) -> RootPair:
    """Both roots of x^2 - x - 1 over F_p, or over F_p[w] when it is irreducible.

    In the split case the roots are returned in increasing order of their
    residues.
    """
    if p in (2, 5):
        raise DegeneratePrimeError(f"p={p}: x^2 - x - 1 has a repeated root or p is too small")
    _check_odd_prime(p)
    if legendre(5, p) == 1:
        half = pow(2, -1, p)
        t = sqrt_mod(5, p)
        r, s = sorted(((1 + t) * half % p, (1 - t) * half % p))
        return RootPair(FieldElement(r, p), FieldElement(s, p))
    w = ExtFieldElement.omega(p)
    return RootPair(w, 1 - w)


def _group_order(x: Element) -> int:
    return x.p - 1 if isinstance(x, FieldElement) else x.p * x.p - 1


def mult_order(x: Element) -> int:
    """Multiplicative order, by stripping prime factors from the group order."""
    if x.is_zero():
        raise InvalidInputError("0 has no multiplicative order")
    order = _group_order(x)
    for q, k in factorint(order).items():
        for _ in range(k):
            if (x ** (order // q)).is_one():
                order //= q
            else:
                break
    return order


def binet(n: int, roots: RootPair) -> FieldElement:
    """F_n mod p as (r^n - s^n) / (r - s)."""
    r, s = roots.r, roots.s
    value = (r**n - s**n) / (r - s)
    if isinstance(value, ExtFieldElement):
        if not value.in_base_field():
            raise InvariantViolation(f"Binet quotient {value!r} left the base field")
        return FieldElement(value.a, value.p)
    return value
