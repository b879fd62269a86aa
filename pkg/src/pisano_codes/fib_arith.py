"""Fibonacci numbers modulo m and the invariants pi(p), alpha(p), beta(p)."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from sympy import divisors, isprime

from .errors import (
    DegeneratePrimeError,
    InvalidInputError,
    InvariantViolation,
    OutOfRangeError,
)
from .finite_field import legendre

MAX_PRIME = 2**31


class Case(str, enum.Enum):
    SPLIT = "Split"
    IRREDUCIBLE = "Irreducible"


@dataclass(frozen=True)
class PisanoProfile:
    p: int
    N: int
    e: int
    K: int
    case: Case

    @property
    def split(self) -> bool:
        return self.case is Case.SPLIT

    def check(self) -> None:
        problems = []
        if self.e * self.K != self.N:
            problems.append("e*K != N")
        if self.K not in (1, 2, 4):
            problems.append(f"K={self.K} not in {{1,2,4}}")
        if self.case is Case.IRREDUCIBLE:
            if (2 * (self.p + 1)) % self.N:
                problems.append("N does not divide 2(p+1)")
            if self.N % 4:
                problems.append("4 does not divide N")
            if (self.N // 2) % self.e:
                problems.append("e does not divide N/2")
        elif (self.p - 1) % self.N:
            problems.append("N does not divide p-1")
        if problems:
            raise InvariantViolation(f"profile of p={self.p}: " + "; ".join(problems))


def check_prime(p: int) -> None:
    """Validate a prime that can carry the code construction."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise InvalidInputError(f"expected an integer, got {p!r}")
    if p >= MAX_PRIME:
        raise OutOfRangeError(f"p={p} exceeds the supported range p < 2**31")
    if not isprime(p):
        raise InvalidInputError(f"{p} is not prime")
    if p in (2, 5):
        raise DegeneratePrimeError(f"p={p} is degenerate (discriminant 5 vanishes or field too small)")


def case_of(p: int) -> Case:
    return Case.SPLIT if p % 10 in (1, 9) else Case.IRREDUCIBLE


def fib_pair_mod(n: int, m: int) -> tuple[int, int]:
    """Return ``(F_n mod m, F_{n+1} mod m)`` by fast doubling."""
    if m < 2:
        raise InvalidInputError(f"modulus must be >= 2, got {m}")
    if n < 0:
        raise InvalidInputError(f"index must be nonnegative, got {n}")
    a, b = 0, 1  # F_k, F_{k+1} for k = prefix of n's bits
    for bit in bin(n)[2:]:
        c = a * ((2 * b - a) % m) % m  # F_2k
        d = (a * a + b * b) % m  # F_2k+1
        if bit == "1":
            a, b = d, (c + d) % m
        else:
            a, b = c, d
    return a, b


def naive_period(a: int, b: int, m: int) -> int:
    """Least period of the sequence G_0=a, G_1=b, G_{n+2}=G_{n+1}+G_n mod m.

    The step (x, y) -> (y, x+y) is invertible mod m, so the sequence is
    purely periodic and the search terminates.
    """
    start = (a % m, b % m)
    x, y = start
    n = 0
    while True:
        x, y = y, (x + y) % m
        n += 1
        if (x, y) == start:
            return n


def generalized_period(a: int, b: int, m: int) -> int:
    if m < 2:
        raise InvalidInputError(f"modulus must be >= 2, got {m}")
    return naive_period(a, b, m)


def _rank_and_order(p: int) -> tuple[int, int]:
    bound = p - legendre(5, p)
    for d in divisors(bound):
        f, g = fib_pair_mod(d, p)
        if f == 0:
            break
    else:  # pragma: no cover - F_{p - (5|p)} is always divisible by p
        raise AssertionError(f"no zero of F_n mod {p} below {bound}")
    # F_{e+n} = F_{e+1} F_n, so beta is the order of F_{e+1} in F_p^*.
    order, x = 1, g
    while x != 1:
        x = x * g % p
        order += 1
    return d, order


def pisano_period(m: int) -> int:
    if m < 1:
        raise InvalidInputError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return 1
    if m not in (2, 5) and m < MAX_PRIME and isprime(m):
        e, k = _rank_and_order(m)
        return e * k
    return naive_period(0, 1, m)


def rank(p: int) -> int:
    """alpha(p): least n > 0 with p | F_n."""
    check_prime(p)
    return _rank_and_order(p)[0]


def order(p: int) -> int:
    """beta(p) = pi(p) / alpha(p); always 1, 2 or 4."""
    check_prime(p)
    return _rank_and_order(p)[1]


def pisano_profile(p: int) -> PisanoProfile:
    check_prime(p)
    e, k = _rank_and_order(p)
    profile = PisanoProfile(p=p, N=e * k, e=e, K=k, case=case_of(p))
    profile.check()
    return profile
