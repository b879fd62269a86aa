"""The length-pi(p), dimension-2 cyclic code C_p and its weight structure."""
from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import InvariantViolation, TooLargeError
from .fib_arith import PisanoProfile
from .finite_field import FieldElement, golden_roots

ENUMERATION_LIMIT = 10**7  # max p^2 for brute-force weight enumeration

#: check polynomial x^2 + x - 1, coefficients in increasing degree
CHECK_POLY = (-1, 1, 1)


class Verdict(str, enum.Enum):
    ONE_WEIGHT = "OneWeight"
    TWO_WEIGHT = "TwoWeight"


@dataclass(frozen=True, eq=False)
class GeneratorMatrix:
    """Two rows of length N over F_p, stored as a (2, N) int64 array."""

    rows: np.ndarray
    profile: PisanoProfile

    @property
    def p(self) -> int:
        return self.profile.p

    @property
    def N(self) -> int:
        return self.rows.shape[1]

    def row(self, i: int) -> list[FieldElement]:
        return [FieldElement(int(v), self.p) for v in self.rows[i]]

    def columns(self) -> np.ndarray:
        return self.rows.T

    def encode(self, l1: int, l2: int) -> np.ndarray:
        return (l1 * self.rows[0] + l2 * self.rows[1]) % self.p

    def __eq__(self, other):
        if not isinstance(other, GeneratorMatrix):
            return NotImplemented
        return self.profile == other.profile and np.array_equal(self.rows, other.rows)


@dataclass(frozen=True)
class Codeword:
    coeffs: tuple[FieldElement, FieldElement]
    symbols: tuple[FieldElement, ...]

    @property
    def weight(self) -> int:
        return sum(1 for s in self.symbols if not s.is_zero())


def codeword(matrix: GeneratorMatrix, l1: int, l2: int) -> Codeword:
    p = matrix.p
    symbols = tuple(FieldElement(int(v), p) for v in matrix.encode(l1, l2))
    return Codeword((FieldElement(l1, p), FieldElement(l2, p)), symbols)


class WeightDistribution(dict):
    """Mapping weight -> number of codewords of that weight."""

    @property
    def total(self) -> int:
        return sum(self.values())

    @property
    def nonzero_weights(self) -> list[int]:
        return sorted(w for w, f in self.items() if w and f)

    def as_sorted(self) -> dict[int, int]:
        return {w: self[w] for w in sorted(self)}


@dataclass
class CodeAnalysis:
    profile: PisanoProfile
    matrix: GeneratorMatrix
    brute_weights: Optional[WeightDistribution]
    closed_weights: WeightDistribution
    verdict: Verdict
    dual_distance: int
    mds: bool
    notes: list[str] = field(default_factory=list)

    @property
    def dual_uniformly_packed(self) -> bool:
        # dual of a two-weight code with dual distance 3
        return self.dual_distance == 3 and self.verdict is Verdict.TWO_WEIGHT


def _fib_row(p: int, n: int) -> np.ndarray:
    f = np.empty(n, dtype=np.int64)
    a, b = 0, 1
    for i in range(n):
        f[i] = a
        a, b = b, (a + b) % p
    return f


def _power_row(x: int, p: int, n: int) -> np.ndarray:
    out = np.empty(n, dtype=np.int64)
    v = 1
    for i in range(n):
        v = v * x % p
        out[i] = v
    return out


def build_generator_matrix(profile: PisanoProfile) -> GeneratorMatrix:
    """Rows (f_0..f_{N-1}) and its right shift when irreducible, (r^1..r^N), (s^1..s^N) when split."""
    p, N = profile.p, profile.N
    if profile.split:
        roots = golden_roots(p)
        rows = np.vstack([_power_row(roots.r.value, p, N), _power_row(roots.s.value, p, N)])
    else:
        f = _fib_row(p, N)
        rows = np.vstack([f, np.roll(f, 1)])
    matrix = GeneratorMatrix(rows=rows, profile=profile)
    if profile.split:
        minor = int(rows[0, 0] * rows[1, 1] - rows[0, 1] * rows[1, 0]) % p
    else:
        # Lemma 1.3 minor f_1^2 - f_0 f_2 = 1 sits in columns 1, 2
        minor = int(rows[0, 1] * rows[1, 2] - rows[0, 2] * rows[1, 1]) % p
    if minor == 0:
        raise InvariantViolation(f"generator matrix for p={p} has a vanishing leading minor")
    return matrix


def _stripe_histogram(matrix: GeneratorMatrix, l1_values: range) -> np.ndarray:
    p, N = matrix.p, matrix.N
    r0, r1 = matrix.rows
    l2 = np.arange(p, dtype=np.int64)[:, None]
    hist = np.zeros(N + 1, dtype=np.int64)
    for l1 in l1_values:
        words = (l1 * r0[None, :] + l2 * r1[None, :]) % p
        weights = np.count_nonzero(words, axis=1)
        hist += np.bincount(weights, minlength=N + 1)
    return hist


def enumerate_weights(matrix: GeneratorMatrix, workers: int = 1) -> WeightDistribution:
    """Exact weight histogram over all p^2 codewords."""
    p = matrix.p
    if p * p > ENUMERATION_LIMIT:
        raise TooLargeError(
            f"p^2 = {p * p} exceeds the enumeration guard {ENUMERATION_LIMIT}; use closed_form_weights"
        )
    if workers <= 1:
        hist = _stripe_histogram(matrix, range(p))
    else:
        stripes = [range(i, p, workers) for i in range(workers)]
        with ThreadPoolExecutor(workers) as pool:
            hist = sum(pool.map(lambda s: _stripe_histogram(matrix, s), stripes))
    dist = WeightDistribution({int(w): int(c) for w, c in enumerate(hist) if c})
    if dist.get(0) != 1 or dist.total != p * p:
        raise InvariantViolation(f"weight histogram for p={p} is inconsistent: {dist}")
    return dist


def closed_form_weights(profile: PisanoProfile) -> WeightDistribution:
    """Weights N-K and N with frequencies (p-1)N/K and (p-1)(K(p+1)-N)/K."""
    p, N, K = profile.p, profile.N, profile.K
    low, rem_low = divmod((p - 1) * N, K)
    high, rem_high = divmod((p - 1) * (K * (p + 1) - N), K)
    if rem_low or rem_high or low <= 0 or high < 0:
        raise InvariantViolation(f"closed-form frequencies for p={p} are not nonnegative integers")
    dist = WeightDistribution({0: 1, N - K: low})
    if high:
        dist[N] = high
    return dist


def dual_distance(matrix: GeneratorMatrix) -> int:
    """2 if two columns are proportional, else 3."""
    p = matrix.p
    a, b = matrix.rows
    if np.any((a == 0) & (b == 0)):
        raise InvariantViolation(f"zero column in generator matrix for p={p}")
    for i in range(matrix.N - 1):
        det = (a[i] * b[i + 1 :] - b[i] * a[i + 1 :]) % p
        if not det.all():
            return 2
    return 3


def is_mds(profile: PisanoProfile, dual_dist: int) -> bool:
    mds = dual_dist == 3
    if profile.split and mds != (profile.K == 1):
        raise InvariantViolation(f"p={profile.p}: dual distance {dual_dist} disagrees with K={profile.K}")
    if not profile.split and mds:
        raise InvariantViolation(f"p={profile.p}: irreducible-case code claims to be MDS")
    return mds


def classify(profile: PisanoProfile) -> Verdict:
    return Verdict.ONE_WEIGHT if profile.N == profile.K * (profile.p + 1) else Verdict.TWO_WEIGHT


# --- polynomial helpers over F_p, coefficient lists in increasing degree ---


def _trim(poly: list[int]) -> list[int]:
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def poly_divmod(num: list[int], den: list[int], p: int) -> tuple[list[int], list[int]]:
    num = _trim([c % p for c in num])
    den = _trim([c % p for c in den])
    if den == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(den[-1], -1, p)
    quot = [0] * max(len(num) - len(den) + 1, 1)
    rem = num[:]
    for shift in range(len(num) - len(den), -1, -1):
        c = rem[shift + len(den) - 1] * inv_lead % p
        quot[shift] = c
        if c:
            for j, d in enumerate(den):
                rem[shift + j] = (rem[shift + j] - c * d) % p
    return _trim(quot), _trim(rem[: len(den) - 1] or [0])


def poly_mulmod_cyclic(f: list[int], g: list[int], n: int, p: int) -> list[int]:
    """f * g mod (x^n - 1, p)."""
    out = [0] * n
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[(i + j) % n] = (out[(i + j) % n] + a * b) % p
    return out


@dataclass
class CyclicityReport:
    check_divides: bool
    shifts_in_code: bool
    generator_divides_codewords: bool
    check_annihilates: bool
    sampled: int

    @property
    def ok(self) -> bool:
        return (
            self.check_divides
            and self.shifts_in_code
            and self.generator_divides_codewords
            and self.check_annihilates
        )


def _coordinates(matrix: GeneratorMatrix, word: np.ndarray) -> Optional[tuple[int, int]]:
    """Solve word = l1*row0 + l2*row1 if possible."""
    p = matrix.p
    a, b = matrix.rows
    for i in range(matrix.N):
        for j in range(i + 1, matrix.N):
            det = int(a[i] * b[j] - a[j] * b[i]) % p
            if det:
                inv = pow(det, -1, p)
                l1 = (int(word[i]) * int(b[j]) - int(word[j]) * int(b[i])) * inv % p
                l2 = (int(a[i]) * int(word[j]) - int(a[j]) * int(word[i])) * inv % p
                if np.array_equal(matrix.encode(l1, l2), word % p):
                    return l1, l2
                return None
    raise InvariantViolation("generator matrix has rank < 2")


def verify_cyclic(profile: PisanoProfile, matrix: GeneratorMatrix, samples: int = 100, seed: int = 0) -> CyclicityReport:
    """Check that C_p is the cyclic code with check polynomial x^2 + x - 1.

    Verifies that h(x) = x^2 + x - 1 divides x^N - 1, that cyclic shifts
    of sampled codewords stay in the code, and that every sampled codeword
    c(x) is a multiple of g(x) = (x^N - 1)/h(x), equivalently c(x)h(x) = 0
    mod x^N - 1.
    """
    p, N = profile.p, profile.N
    x_n_minus_1 = [-1] + [0] * (N - 1) + [1]
    g, rem = poly_divmod(x_n_minus_1, list(CHECK_POLY), p)
    check_divides = rem == [0]

    rng = np.random.default_rng(seed)
    if p * p <= samples:
        pairs = [(l1, l2) for l1 in range(p) for l2 in range(p)]
    else:
        pairs = [tuple(int(v) for v in rng.integers(0, p, size=2)) for _ in range(samples)]
    shifts_ok = gen_ok = ann_ok = True
    for l1, l2 in pairs:
        word = matrix.encode(l1, l2)
        if _coordinates(matrix, np.roll(word, 1)) is None:
            shifts_ok = False
        coeffs = [int(c) for c in word]
        if poly_divmod(coeffs, g, p)[1] != [0]:
            gen_ok = False
        if any(poly_mulmod_cyclic(coeffs, list(CHECK_POLY), N, p)):
            ann_ok = False
    report = CyclicityReport(check_divides, shifts_ok, gen_ok, ann_ok, len(pairs))
    if not report.ok:
        raise InvariantViolation(f"cyclicity check failed for p={p}: {report}")
    return report


def analyze_code(profile: PisanoProfile, brute_force: Optional[bool] = None, workers: int = 1) -> CodeAnalysis:
    """Build C_p and cross-check brute-force against closed-form weights.

    ``brute_force=None`` enumerates whenever p^2 is within the guard.
    """
    matrix = build_generator_matrix(profile)
    closed = closed_form_weights(profile)
    notes = []
    if brute_force is None:
        brute_force = profile.p**2 <= ENUMERATION_LIMIT
    brute = None
    if brute_force:
        brute = enumerate_weights(matrix, workers=workers)
        if brute != closed:
            raise InvariantViolation(
                f"p={profile.p}: enumerated weights {brute.as_sorted()} != closed form {closed.as_sorted()}"
            )
    else:
        notes.append("brute-force enumeration skipped; closed form only")
    verdict = classify(profile)
    if (verdict is Verdict.ONE_WEIGHT) != (profile.N not in closed):
        raise InvariantViolation(f"p={profile.p}: verdict {verdict.value} disagrees with closed form")
    dd = dual_distance(matrix)
    if (dd == 3) != (profile.e == profile.N):
        raise InvariantViolation(f"p={profile.p}: dual distance {dd} but e={profile.e}, N={profile.N}")
    return CodeAnalysis(
        profile=profile,
        matrix=matrix,
        brute_weights=brute,
        closed_weights=closed,
        verdict=verdict,
        dual_distance=dd,
        mds=is_mds(profile, dd),
        notes=notes,
    )
