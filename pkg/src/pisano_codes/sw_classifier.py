"""Does an irreducible Pisano code fall outside the Schmidt-White scheme?

The scheme lists subfield codes, semiprimitive codes and eleven sporadic
codes.  The sporadic codes all have dimension > 2, so for the dimension-2
codes built here only the first two tests matter.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError, InvariantViolation, WrongCaseError
from .fib_arith import Case, case_of, check_prime, pisano_period


@dataclass(frozen=True)
class CounterexampleVerdict:
    p: int
    N: int
    u: int
    semiprimitive: bool
    subfield: bool
    exceptional_excluded: bool
    n_equals_2p_plus_2: bool
    is_counterexample: bool


def compute_u(p: int, N: int) -> int:
    """u = (p^2 - 1) / N."""
    u, rem = divmod(p * p - 1, N)
    if rem:
        raise InvariantViolation(f"N={N} does not divide p^2 - 1 = {p * p - 1}")
    return u


def is_semiprimitive(p: int, u: int) -> bool:
    """True iff -1 is a power of p modulo u.

    u = 1 is the primitive case and is not counted as semiprimitive; for
    u = 2 the condition holds trivially (-1 = 1 = p^0).
    """
    if u < 1:
        raise InvalidInputError(f"u must be positive, got {u}")
    if u == 1:
        return False
    target = u - 1
    x = 1
    seen = set()
    while x not in seen:
        if x == target:
            return True
        seen.add(x)
        x = x * p % u
    return False


def is_subfield_code(p: int, N: int) -> bool:
    """The only proper subfield of F_{p^2} is F_p, whose primitive roots have order p - 1."""
    if case_of(p) is not Case.IRREDUCIBLE:
        raise WrongCaseError(f"p={p} is in the split case; subfield test needs an irreducible check polynomial")
    return N == p - 1


def counterexample_verdict(p: int) -> CounterexampleVerdict:
    check_prime(p)
    if case_of(p) is not Case.IRREDUCIBLE:
        raise WrongCaseError(f"p={p} = +-1 mod 10: C_p is reducible")
    N = pisano_period(p)
    u = compute_u(p, N)
    semi = is_semiprimitive(p, u)
    sub = is_subfield_code(p, N)
    n2 = N == 2 * (p + 1)
    if n2 and u != (p - 1) // 2:
        raise InvariantViolation(f"p={p}: N = 2(p+1) but u = {u} != (p-1)/2")
    return CounterexampleVerdict(
        p=p,
        N=N,
        u=u,
        semiprimitive=semi,
        subfield=sub,
        exceptional_excluded=True,
        n_equals_2p_plus_2=n2,
        is_counterexample=not semi and not sub,
    )
