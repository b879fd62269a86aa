"""Coset graph of the dual of a projective C_p, realized on syndromes.

Vertices are the p^2 elements (a, b) of F_p^2, encoded as ``a + p*b``.
Two syndromes are adjacent when they differ by a nonzero multiple of a
generator-matrix column, which makes the graph a Cayley graph on the
additive group of F_p^2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .code_builder import GeneratorMatrix, build_generator_matrix
from .errors import InvariantViolation, NotProjectiveError, NotStronglyRegularError, TooLargeError
from .fib_arith import PisanoProfile

MAX_GRAPH_PRIME = 61


@dataclass(frozen=True, eq=False)
class SyndromeGraph:
    p: int
    connection_set: frozenset[int]
    adjacency: np.ndarray  # (p^2, p^2) bool

    @property
    def v(self) -> int:
        return self.p * self.p

    def degree(self) -> int:
        return len(self.connection_set)

    def edges(self):
        us, vs = np.nonzero(np.triu(self.adjacency, 1))
        return zip(us.tolist(), vs.tolist())


@dataclass(frozen=True)
class SRGCertificate:
    v: int
    k: int
    lam: int
    mu: int
    eigenvalues: tuple[int, int]
    verified: bool

    def feasible(self) -> bool:
        return (self.v - self.k - 1) * self.mu == self.k * (self.k - self.lam - 1)


def _encode(a, b, p):
    return a % p + p * (b % p)


def _difference_table(p: int) -> np.ndarray:
    """D[x, y] = code of y - x."""
    idx = np.arange(p * p)
    a, b = idx % p, idx // p
    return _encode(a[None, :] - a[:, None], b[None, :] - b[:, None], p)


def build_syndrome_graph(profile: PisanoProfile, matrix: GeneratorMatrix | None = None) -> SyndromeGraph:
    p = profile.p
    if profile.K != 1:
        raise NotProjectiveError(f"p={p}: K={profile.K}, C_p is not projective (two columns are proportional)")
    if p > MAX_GRAPH_PRIME:
        raise TooLargeError(f"p={p} exceeds the coset-graph guard p <= {MAX_GRAPH_PRIME}")
    if matrix is None:
        matrix = build_generator_matrix(profile)
    cols = matrix.columns()
    scalars = np.arange(1, p)
    codes = _encode(scalars[:, None] * cols[None, :, 0], scalars[:, None] * cols[None, :, 1], p)
    conn = frozenset(int(c) for c in codes.ravel())
    expected = profile.N * (p - 1)
    if len(conn) != expected or 0 in conn:
        raise InvariantViolation(f"p={p}: connection set has {len(conn)} elements, expected {expected}")
    neg = {_encode(-(c % p), -(c // p), p) for c in conn}
    if neg != conn:
        raise InvariantViolation(f"p={p}: connection set is not closed under negation")
    indicator = np.zeros(p * p, dtype=bool)
    indicator[list(conn)] = True
    adjacency = indicator[_difference_table(p)]
    return SyndromeGraph(p=p, connection_set=conn, adjacency=adjacency)


def _srg_eigenvalues(k: int, lam: int, mu: int) -> tuple[int, int]:
    # roots of x^2 - (lam - mu) x - (k - mu)
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    root = math.isqrt(disc)
    if root * root != disc or (lam - mu + root) % 2:
        raise NotStronglyRegularError(f"restricted eigenvalues of ({k}, {lam}, {mu}) are not integers")
    return (lam - mu + root) // 2, (lam - mu - root) // 2


def common_neighbours(graph: SyndromeGraph) -> np.ndarray:
    """Exact integer A^2 via the Cayley structure: (A^2)[x, y] = #{(s, t) in S^2 : s + t = y - x}."""
    p = graph.p
    indicator = np.zeros(graph.v, dtype=np.int64)
    indicator[list(graph.connection_set)] = 1
    idx = np.arange(graph.v)
    a, b = idx % p, idx // p
    conv = np.zeros(graph.v, dtype=np.int64)
    for s in graph.connection_set:
        # conv[d] += indicator[d - s]
        conv += indicator[_encode(a - s % p, b - s // p, p)]
    return conv[_difference_table(p)]


def verify_srg(graph: SyndromeGraph) -> SRGCertificate:
    A = graph.adjacency
    v = graph.v
    degrees = A.sum(axis=1)
    k = int(degrees[0])
    if not np.all(degrees == k):
        raise NotStronglyRegularError("graph is not regular")
    if np.any(np.diag(A)) or not np.array_equal(A, A.T):
        raise NotStronglyRegularError("adjacency is not that of a simple graph")
    A2 = common_neighbours(graph)
    off = ~np.eye(v, dtype=bool)
    lam_values = np.unique(A2[A])
    mu_values = np.unique(A2[off & ~A])
    if len(lam_values) != 1 or len(mu_values) != 1:
        raise NotStronglyRegularError(
            f"common-neighbour counts not constant: adjacent {lam_values.tolist()}, non-adjacent {mu_values.tolist()}"
        )
    lam, mu = int(lam_values[0]), int(mu_values[0])
    Ai = A.astype(np.int64)
    rhs = lam * Ai + mu * (1 - np.eye(v, dtype=np.int64) - Ai) + k * np.eye(v, dtype=np.int64)
    if not np.array_equal(A2, rhs):
        raise NotStronglyRegularError("A^2 != lam A + mu (J - I - A) + k I")
    cert = SRGCertificate(v=v, k=k, lam=lam, mu=mu, eigenvalues=_srg_eigenvalues(k, lam, mu), verified=True)
    if not cert.feasible():
        raise NotStronglyRegularError(f"parameters {cert} violate (v-k-1) mu = k (k-lam-1)")
    return cert


def restricted_eigenvalue(profile: PisanoProfile, weight: int) -> int:
    """Eigenvalue attached to a codeword weight: N(p-1) - p*w."""
    return profile.N * (profile.p - 1) - profile.p * weight


def eigenvalues_from_weights(profile: PisanoProfile) -> tuple[int, int]:
    """(p - N, -N) for projective C_p, from the weights N - K and N."""
    if profile.K != 1:
        raise NotProjectiveError(f"p={profile.p}: K={profile.K}, C_p is not projective")
    return (
        restricted_eigenvalue(profile, profile.N - profile.K),
        restricted_eigenvalue(profile, profile.N),
    )


def cross_check_spectrum(profile: PisanoProfile, cert: SRGCertificate) -> None:
    expected = set(eigenvalues_from_weights(profile))
    if set(cert.eigenvalues) != expected or expected != {-profile.N, profile.p - profile.N}:
        raise InvariantViolation(
            f"p={profile.p}: graph spectrum {cert.eigenvalues} != weight spectrum {sorted(expected)}"
        )
    if cert.v != profile.p**2 or cert.k != profile.N * (profile.p - 1):
        raise InvariantViolation(f"p={profile.p}: certificate (v, k) = ({cert.v}, {cert.k}) is off")


def export_edges(graph: SyndromeGraph, path: str | Path) -> int:
    """Write ``u v`` lines (u < v); returns the number of edges."""
    count = 0
    with open(path, "w", encoding="utf-8") as fh:
        for u, w in graph.edges():
            fh.write(f"{u} {w}\n")
            count += 1
    return count
