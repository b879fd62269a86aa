"""Exception hierarchy.

Input errors (bad moduli, wrong congruence class, guards) map to CLI exit
code 1.  :class:`InvariantViolation` means a computed object contradicts a
theorem the library checks; the CLI maps it to exit code 2.
"""


class PisanoError(Exception):
    pass


class InvalidInputError(PisanoError, ValueError):
    pass


class DegeneratePrimeError(InvalidInputError):
    """p in {2, 5}: the discriminant 5 vanishes or the field is too small."""


class OutOfRangeError(InvalidInputError):
    pass


class NonResidueError(InvalidInputError):
    pass


class WrongCaseError(InvalidInputError):
    """Operation called for a prime in the other congruence class."""


class NotProjectiveError(InvalidInputError):
    pass


class TooLargeError(InvalidInputError):
    pass


class InvariantViolation(PisanoError):
    pass


class NotStronglyRegularError(InvariantViolation):
    pass
