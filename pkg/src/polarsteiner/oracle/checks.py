"""Scheme axioms and primitive idempotents, checked on enumerated instances.

Matrix identities are checked exactly.  Integer products are compared in
float64 when an a-priori bound keeps every entry below 2^53; otherwise
they are compared modulo enough primes that the Chinese remainder theorem
forces exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List

import numpy as np

from ..schemes import EigTable
from .polar import PolarSpaceInstance, TooLarge

EXACT_FLOAT = 2**53


class AxiomViolation(AssertionError):
    pass


class IdempotentMismatch(AssertionError):
    pass


def _primes_below(limit: int, count: int) -> List[int]:
    out = []
    c = limit
    while len(out) < count and c > 2:
        c -= 1
        if all(c % f for f in range(2, int(c**0.5) + 1)):
            out.append(c)
    return out


def _maxabs(A: np.ndarray) -> int:
    return int(np.abs(A).max()) if A.size else 0


def product_equals(A: np.ndarray, B: np.ndarray, C: np.ndarray) -> bool:
    """Exact test of A @ B == C for integer matrices."""
    N = A.shape[1]
    bound = N * _maxabs(A) * _maxabs(B) + _maxabs(C)
    if bound < EXACT_FLOAT:
        return bool(np.array_equal(A.astype(np.float64) @ B.astype(np.float64), C.astype(np.float64)))
    limit = int((EXACT_FLOAT // max(N, 1)) ** 0.5)
    modulus, primes = 1, []
    for p in _primes_below(limit, 64):
        primes.append(p)
        modulus *= p
        if modulus > 2 * bound:
            break
    for p in primes:
        lhs = np.mod(A, p).astype(np.float64) @ np.mod(B, p).astype(np.float64)
        if not np.array_equal(np.mod(lhs, p).astype(np.int64), np.mod(C, p)):
            return False
    return True


def rank_mod(M: np.ndarray, p: int = 32749) -> int:
    """Rank over GF(p); a lower bound for the rational rank."""
    A = np.mod(M, p).astype(np.int64)
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        piv = np.nonzero(A[r:, c])[0]
        if not len(piv):
            continue
        k = r + piv[0]
        A[[r, k]] = A[[k, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        col = A[:, c].copy()
        col[r] = 0
        nz = np.nonzero(col)[0]
        if len(nz):
            A[nz] = (A[nz] - np.outer(col[nz], A[r])) % p
        r += 1
        if r == rows:
            break
    return r


@dataclass(frozen=True)
class AxiomReport:
    intersection_numbers: tuple  # p[i][j][k]
    checked_triples: int


def adjacency(instance: PolarSpaceInstance) -> List[np.ndarray]:
    R = instance.relations()
    return [(R == i).astype(np.int64) for i in range(instance.spec.n + 1)]


def verify_axioms(instance: PolarSpaceInstance, cap: int = 2000) -> AxiomReport:
    if instance.size > cap:
        raise TooLarge(f"{instance.size} generators exceeds axiom cap {cap}")
    R = instance.relations()
    n = instance.spec.n
    if not np.array_equal(R, R.T):
        raise AxiomViolation("relations are not symmetric")
    if not np.array_equal(R == 0, np.eye(len(R), dtype=bool)):
        raise AxiomViolation("relation 0 is not the diagonal")
    if R.min() < 0 or R.max() > n:
        raise AxiomViolation("relations do not partition X x X")
    D = [a.astype(np.float64) for a in adjacency(instance)]
    masks = [R == k for k in range(n + 1)]
    p = [[[0] * (n + 1) for _ in range(n + 1)] for _ in range(n + 1)]
    for i in range(n + 1):
        for j in range(n + 1):
            prod = D[i] @ D[j]
            for k in range(n + 1):
                vals = np.unique(prod[masks[k]])
                if len(vals) > 1:
                    raise AxiomViolation(f"p_{i}{j}^{k} takes values {vals.tolist()}")
                p[i][j][k] = int(vals[0]) if len(vals) else 0
    return AxiomReport(tuple(tuple(tuple(r) for r in m) for m in p), (n + 1) ** 3)


def intersection_numbers_from_table(table: EigTable):
    """p_ij^k = (1/(|X| v_k)) sum_l mu_l P_i(l) P_j(l) P_k(l)."""
    m = table.classes + 1
    P, mu = table.P, table.mu
    return tuple(
        tuple(
            tuple(
                sum(mu[l] * P[i][l] * P[j][l] * P[k][l] for l in range(m)) / (table.x_size * table.v[k])
                for k in range(m)
            )
            for j in range(m)
        )
        for i in range(m)
    )


@dataclass(frozen=True)
class IdempotentReport:
    ranks: tuple  # trace ranks of E_k, exact for idempotents
    modular_ranks: tuple  # independent elimination ranks (empty if skipped)


def _scaled(rows, scale):
    return [[int(x * scale) for x in row] for row in rows]


def verify_idempotents(instance: PolarSpaceInstance, table: EigTable, cap: int = 2000, elimination_cap: int = 300) -> IdempotentReport:
    """E_k = (1/|X|) sum_i Q_k(i) D_i: orthogonal idempotents of rank mu_k
    that reproduce every D_i as sum_k P_i(k) E_k."""
    N = instance.size
    if N > cap:
        raise TooLarge(f"{N} generators exceeds idempotent cap {cap}")
    if table.x_size != N:
        raise IdempotentMismatch(f"table has |X| = {table.x_size}, instance has {N}")
    m = table.classes + 1
    D = adjacency(instance)
    L = lcm(*(Fraction(x).denominator for row in table.Q for x in row))
    scale = L * N  # E_k = M_k / scale
    Q = _scaled(table.Q, L)
    M = []
    for k in range(m):
        acc = np.zeros((N, N), dtype=np.int64)
        for i in range(m):
            if Q[k][i]:
                acc += Q[k][i] * D[i]
        M.append(acc)

    if not np.array_equal(sum(M), scale * np.eye(N, dtype=np.int64)):
        raise IdempotentMismatch("sum of E_k is not the identity")
    zero = np.zeros((N, N), dtype=np.int64)
    for k in range(m):
        for l in range(k, m):
            target = scale * M[k] if k == l else zero
            if not product_equals(M[k], M[l], target):
                raise IdempotentMismatch(f"E_{k} E_{l} has the wrong value")

    ranks = tuple(Fraction(int(np.trace(M[k])), scale) for k in range(m))
    if ranks != tuple(table.mu):
        raise IdempotentMismatch(f"ranks {ranks} differ from multiplicities {table.mu}")
    modular = ()
    if N <= elimination_cap:
        modular = tuple(rank_mod(M[k]) for k in range(m))
        if modular != tuple(int(r) for r in ranks):
            raise IdempotentMismatch(f"elimination ranks {modular} differ from {ranks}")

    L2 = lcm(*(Fraction(x).denominator for row in table.P for x in row))
    P = _scaled(table.P, L2)
    for i in range(m):
        acc = np.zeros((N, N), dtype=np.int64)
        for k in range(m):
            acc += P[i][k] * M[k]
        if not np.array_equal(acc, L2 * scale * D[i]):
            raise IdempotentMismatch(f"D_{i} is not sum_k P_{i}(k) E_k")
    return IdempotentReport(ranks, modular)
