"""The graph map A -> {(x, xA)} from Hermitian, symmetric or alternating
n x n matrices into generators of a polar space of rank n.

The check compares n - dim(v(A) cap v(B)), obtained by counting common
vectors, against rank(A - B) from row reduction, and confirms that each v(A)
is totally isotropic for the matching form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import List, Optional

from .fields import FieldTable, field, rank

HERMITIAN = "Hermitian"
SYMMETRIC = "Symmetric"
ALTERNATING = "Alternating"
KINDS = (HERMITIAN, SYMMETRIC, ALTERNATING)


class BadParameters(ValueError):
    pass


def matrices(kind: str, n: int, F: FieldTable) -> List[tuple]:
    """All n x n matrices of the class, as tuples of rows."""
    upper = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if kind == HERMITIAN:
        diag_values = F.subfield()
    elif kind == SYMMETRIC:
        diag_values = list(range(F.q))
    else:
        diag_values = [0]
    out = []
    for diag in product(diag_values, repeat=n):
        for off in product(range(F.q), repeat=len(upper)):
            A = [[0] * n for _ in range(n)]
            for i in range(n):
                A[i][i] = diag[i]
            for (i, j), a in zip(upper, off):
                A[i][j] = a
                if kind == HERMITIAN:
                    A[j][i] = F.conj[a]
                elif kind == SYMMETRIC:
                    A[j][i] = a
                else:
                    A[j][i] = F.neg[a]
            out.append(tuple(tuple(r) for r in A))
    return out


def _times(x, A, F):
    n = len(A)
    return tuple(F.dot(x, [A[i][j] for i in range(n)]) for j in range(n))


def graph_space(A, F: FieldTable) -> frozenset:
    """All vectors (x, xA)."""
    return frozenset(x + _times(x, A, F) for x in product(range(F.q), repeat=len(A)))


def _pair(kind, u, w, F, n):
    x, y = u[:n], u[n:]
    x2, y2 = w[:n], w[n:]
    if kind == SYMMETRIC:
        # alternating form x.y' - y.x'
        return F.sub[F.dot(x, y2)][F.dot(y, x2)]
    if kind == HERMITIAN:
        # x.conj(y') - y.conj(x')
        cy2 = [F.conj[a] for a in y2]
        cx2 = [F.conj[a] for a in x2]
        return F.sub[F.dot(x, cy2)][F.dot(y, cx2)]
    raise BadParameters(kind)


def is_totally_isotropic(kind: str, A, F: FieldTable) -> bool:
    n = len(A)
    basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    basis = [e + _times(e, A, F) for e in basis]
    if kind == ALTERNATING:
        # hyperbolic quadratic form Q(x, y) = x.y on every vector
        return all(F.dot(v[:n], v[n:]) == 0 for v in graph_space(A, F))
    return all(_pair(kind, u, w, F, n) == 0 for u in basis for w in basis)


@dataclass(frozen=True)
class RankMapReport:
    kind: str
    n: int
    q: int
    matrices: int
    pairs: int
    exhaustive: bool
    failures: tuple  # (A, B, n - dim, rank) for each mismatch
    non_isotropic: tuple

    @property
    def ok(self) -> bool:
        return not self.failures and not self.non_isotropic


def rank_map_check(kind: str, n: int, q: int, trials: Optional[int] = None, seed: int = 0) -> RankMapReport:
    """Exhaustive over all pairs when ``trials`` is None, else ``trials`` random pairs."""
    if kind not in KINDS:
        raise BadParameters(f"kind must be one of {KINDS}")
    if not 1 <= n <= 4 or q > 4:
        raise BadParameters("rank map check needs n <= 4 and q <= 4")
    F = field(q)
    if kind == HERMITIAN and F.conj is None:
        raise BadParameters("Hermitian matrices need a square field order")
    mats = matrices(kind, n, F)
    spaces = [graph_space(A, F) for A in mats]
    non_iso = tuple(A for A in mats if not is_totally_isotropic(kind, A, F))
    dims = {q**k: k for k in range(n + 1)}
    if trials is None:
        pairs = [(a, b) for a in range(len(mats)) for b in range(len(mats))]
    else:
        rng = random.Random(seed)
        pairs = [(rng.randrange(len(mats)), rng.randrange(len(mats))) for _ in range(trials)]
    failures = []
    ranks = {}
    for a, b in pairs:
        common = len(spaces[a] & spaces[b])
        gap = n - dims[common]
        diff = tuple(F.vsub(r, s) for r, s in zip(mats[a], mats[b]))
        if diff not in ranks:
            ranks[diff] = rank(diff, F)
        r = ranks[diff]
        if gap != r:
            failures.append((mats[a], mats[b], gap, r))
    return RankMapReport(kind, n, q, len(mats), len(pairs), trials is None, tuple(failures), non_iso)
