"""Polar-space association schemes and their exact eigenvalue tables.

Powers p^x with half-integral x (the Hermitian families, where p = q^2 and
e = +-1/2) are always evaluated as integral powers of q, so everything stays
in ``Fraction``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import List, Optional, Sequence, Tuple

from .qarith import qbinomial, qhypergeometric, qpochhammer

MAX_RANK = 16


class WrongFamily(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass


class InvariantViolation(AssertionError):
    """An internal cross-check of an eigenvalue table failed."""


class PolarKind(enum.Enum):
    HERMITIAN_ODD = "2A-odd"  # 2A_{2n-1}, U(2n, q^2)
    HERMITIAN_EVEN = "2A-even"  # 2A_{2n}, U(2n+1, q^2)
    SYMPLECTIC = "C"
    HYPERBOLIC = "D"
    PARABOLIC = "B"
    ELLIPTIC = "2D"  # 2D_{n+1}, O^-(2n+2, q)
    HALF_HYPERBOLIC = "half-D"
    FUSED_BC = "fused-BC"

    @property
    def is_base(self) -> bool:
        return self not in (PolarKind.HALF_HYPERBOLIC, PolarKind.FUSED_BC)

    @property
    def is_hermitian(self) -> bool:
        return self in (PolarKind.HERMITIAN_ODD, PolarKind.HERMITIAN_EVEN)


BASE_KINDS = tuple(k for k in PolarKind if k.is_base)

# 2e for the six classical families
TWO_E = {
    PolarKind.HERMITIAN_ODD: -1,
    PolarKind.HERMITIAN_EVEN: 1,
    PolarKind.SYMPLECTIC: 0,
    PolarKind.HYPERBOLIC: -2,
    PolarKind.PARABOLIC: 0,
    PolarKind.ELLIPTIC: 2,
}

# vector-space dimension as a function of the rank n
AMBIENT_DIM = {
    PolarKind.HERMITIAN_ODD: lambda n: 2 * n,
    PolarKind.HERMITIAN_EVEN: lambda n: 2 * n + 1,
    PolarKind.SYMPLECTIC: lambda n: 2 * n,
    PolarKind.HYPERBOLIC: lambda n: 2 * n,
    PolarKind.PARABOLIC: lambda n: 2 * n + 1,
    PolarKind.ELLIPTIC: lambda n: 2 * n + 2,
}


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
        p += 1
    return True


@dataclass(frozen=True)
class SchemeSpec:
    """A scheme from the polar-space family.

    For ``HALF_HYPERBOLIC`` the field ``n`` is the rank m of the parent D_m;
    for ``FUSED_BC`` it is the rank of the parent B_n / C_n.  ``classes`` is
    the number of nontrivial relations in every case.
    """

    kind: PolarKind
    n: int
    q: int

    def __post_init__(self):
        if not isinstance(self.kind, PolarKind):
            object.__setattr__(self, "kind", PolarKind(self.kind))
        if not is_prime_power(self.q):
            raise ValueError(f"q={self.q} is not a prime power")
        if self.n < 1:
            raise ValueError(f"rank must be positive, got {self.n}")
        if self.kind is PolarKind.HALF_HYPERBOLIC and self.n < 2:
            raise ValueError("half of D_m needs m >= 2")

    @property
    def s(self) -> int:
        """Exponent of q in p (p = q^s)."""
        return 2 if self.kind.is_hermitian else 1

    @property
    def p(self) -> int:
        return self.q**self.s

    @property
    def two_e(self) -> int:
        if self.kind.is_base:
            return TWO_E[self.kind]
        raise WrongFamily(f"{self.kind.value} has no parameter e")

    @property
    def e(self) -> Fraction:
        return Fraction(self.two_e, 2)

    @property
    def classes(self) -> int:
        if self.kind is PolarKind.HALF_HYPERBOLIC:
            return self.n // 2
        if self.kind is PolarKind.FUSED_BC:
            return (self.n + 1) // 2
        return self.n

    @property
    def hahn_b(self) -> Fraction:
        return self.hahn_params[0]

    @property
    def hahn_c(self) -> Fraction:
        return self.hahn_params[1]

    @property
    def hahn_params(self) -> Tuple[Fraction, Fraction]:
        q = self.q
        if self.kind is PolarKind.HERMITIAN_ODD:
            return Fraction(-q), Fraction(-1)
        if self.kind is PolarKind.HALF_HYPERBOLIC:
            if self.n % 2 == 0:
                return Fraction(q * q), Fraction(1, q)
            return Fraction(q * q), Fraction(q)
        raise WrongFamily(f"{self.kind.value} has no q-Hahn parameters")

    def ppow(self, twice_exponent: int) -> Fraction:
        """p**(twice_exponent / 2), evaluated in base q."""
        if self.s == 2:
            return Fraction(self.q) ** twice_exponent
        if twice_exponent % 2:
            raise ValueError("half-integral power of p in a non-Hermitian family")
        return Fraction(self.q) ** (twice_exponent // 2)

    def parent(self) -> "SchemeSpec":
        """Base-family scheme a derived scheme is built from."""
        if self.kind is PolarKind.HALF_HYPERBOLIC:
            return SchemeSpec(PolarKind.HYPERBOLIC, self.n, self.q)
        if self.kind is PolarKind.FUSED_BC:
            return SchemeSpec(PolarKind.PARABOLIC, self.n, self.q)
        return self

    def label(self) -> str:
        n = self.n
        return {
            PolarKind.HERMITIAN_ODD: f"2A_{2 * n - 1}",
            PolarKind.HERMITIAN_EVEN: f"2A_{2 * n}",
            PolarKind.SYMPLECTIC: f"C_{n}",
            PolarKind.HYPERBOLIC: f"D_{n}",
            PolarKind.PARABOLIC: f"B_{n}",
            PolarKind.ELLIPTIC: f"2D_{n + 1}",
            PolarKind.HALF_HYPERBOLIC: f"(1/2)D_{n}",
            PolarKind.FUSED_BC: f"fused(B_{n}/C_{n})",
        }[self.kind] + f"(q={self.q})"


def _check_index(spec: SchemeSpec, *indices: int) -> None:
    for i in indices:
        if not 0 <= i <= spec.classes:
            raise IndexOutOfRange(f"index {i} outside 0..{spec.classes} for {spec.label()}")


def _base_size(spec: SchemeSpec) -> Fraction:
    result = Fraction(1)
    for i in range(1, spec.n + 1):
        result *= 1 + spec.ppow(2 * i + spec.two_e)
    return result


def scheme_size(spec: SchemeSpec) -> Fraction:
    """|X|, the number of generators (or points of a derived scheme)."""
    if spec.kind.is_base:
        return _base_size(spec)
    if spec.kind is PolarKind.HALF_HYPERBOLIC:
        return _base_size(spec.parent()) / 2
    return _base_size(spec.parent())


def _base_valency(spec: SchemeSpec, i: int) -> Fraction:
    return spec.ppow(i * (i + 1) + i * spec.two_e) * qbinomial(spec.n, i, spec.p)


def valency(spec: SchemeSpec, i: int) -> Fraction:
    _check_index(spec, i)
    if spec.kind.is_base:
        return _base_valency(spec, i)
    if spec.kind is PolarKind.HALF_HYPERBOLIC:
        return Fraction(spec.q) ** comb(2 * i, 2) * qbinomial(spec.n, 2 * i, spec.q)
    parent = spec.parent()
    return sum((_base_valency(parent, j) for j in (2 * i - 1, 2 * i) if 0 <= j <= parent.n), Fraction(0))


def _base_p_number(spec: SchemeSpec, i: int, k: int) -> Fraction:
    n, p, two_e = spec.n, spec.p, spec.two_e
    total = Fraction(0)
    for ell in range(i + 1):
        total += (
            (-1) ** ell
            * qbinomial(n - i, k - ell, p)
            * qbinomial(i, ell, p)
            * spec.ppow(2 * ell * (ell - i - 1) - ell * two_e)
        )
    return _base_valency(spec, i) / qbinomial(n, k, p) * total


def p_number(spec: SchemeSpec, i: int, k: int) -> Fraction:
    """P_i(k) in the standard ordering (q-Krawtchouk sum)."""
    _check_index(spec, i, k)
    if spec.kind.is_base:
        return _base_p_number(spec, i, k)
    return eig_table(spec).P[i][k]


def p_number_phi(spec: SchemeSpec, i: int, k: int) -> Fraction:
    """P_i(k) through the terminating 3phi2 representation."""
    if not spec.kind.is_base:
        raise WrongFamily("3phi2 form is defined for the six classical families")
    _check_index(spec, i, k)
    n = spec.n
    p = Fraction(spec.p)
    phi = qhypergeometric(
        [p ** (-k), p ** (-i), -spec.ppow(2 * (k - n - 1) - spec.two_e)],
        [0, p ** (-n)],
        p,
        p,
    )
    return _base_valency(spec, i) * phi


def hahn_valency(spec: SchemeSpec, i: int) -> Fraction:
    if spec.kind is PolarKind.HERMITIAN_ODD:
        return Fraction(spec.q) ** (i * i) * qbinomial(spec.n, i, spec.q**2)
    if spec.kind is PolarKind.HALF_HYPERBOLIC:
        return Fraction(spec.q) ** comb(2 * i, 2) * qbinomial(spec.n, 2 * i, spec.q)
    raise WrongFamily(f"{spec.kind.value} has no q-Hahn form")


def hahn_phi(spec: SchemeSpec, i: int, k: int) -> Fraction:
    """The q-Hahn 3phi2 shared by the P'- and Q'-numbers."""
    b, c = spec.hahn_params
    n = spec.classes
    q = Fraction(spec.q)
    return qhypergeometric(
        [b ** (-i), b ** (-k), b ** (k - 2 * n) / (q * c)],
        [b ** (-n), b ** (-n) / c],
        b,
        b,
    )


def hahn_p_number(spec: SchemeSpec, i: int, k: int) -> Fraction:
    """P'_i(k) in the q-Hahn ordering (2A_{2n-1} and half of D_m only)."""
    if spec.kind not in (PolarKind.HERMITIAN_ODD, PolarKind.HALF_HYPERBOLIC):
        raise WrongFamily(f"{spec.kind.value} has no q-Hahn form")
    _check_index(spec, i, k)
    return hahn_valency(spec, i) * hahn_phi(spec, i, k)


def hermitian_alternate_order(n: int) -> List[int]:
    """Standard eigenspace index for each position of E_0, E_n, E_1, E_{n-1}, ..."""
    return [k // 2 if k % 2 == 0 else n - (k - 1) // 2 for k in range(n + 1)]


def multiplicities_from_p(P: Sequence[Sequence[Fraction]], v: Sequence[Fraction], size: Fraction) -> List[Fraction]:
    m = len(v)
    return [size / sum(P[i][k] ** 2 / v[i] for i in range(m)) for k in range(m)]


def multiplicities(spec: SchemeSpec) -> List[Fraction]:
    return list(eig_table(spec).mu)


@dataclass(frozen=True)
class EigTable:
    spec: SchemeSpec
    ordering: str  # "standard", "hermitian-alternate", "half-D"
    x_size: Fraction
    v: Tuple[Fraction, ...]
    mu: Tuple[Fraction, ...]
    P: Tuple[Tuple[Fraction, ...], ...]  # P[i][k]
    Q: Tuple[Tuple[Fraction, ...], ...]  # Q[k][i]

    @property
    def classes(self) -> int:
        return len(self.v) - 1

    def check(self) -> List[str]:
        """List of violated table invariants (empty when the table is sound)."""
        problems = []
        m = self.classes + 1
        P, Q, v, mu = self.P, self.Q, self.v, self.mu
        if any(P[0][k] != 1 for k in range(m)):
            problems.append("P_0(k) != 1")
        if any(Q[0][i] != 1 for i in range(m)):
            problems.append("Q_0(i) != 1")
        if any(P[i][0] != v[i] for i in range(m)):
            problems.append("P_i(0) != v_i")
        if any(Q[k][0] != mu[k] for k in range(m)):
            problems.append("Q_k(0) != mu_k")
        if sum(v) != self.x_size:
            problems.append("sum of valencies != |X|")
        if sum(mu) != self.x_size:
            problems.append("sum of multiplicities != |X|")
        for i in range(m):
            for k in range(m):
                if mu[k] * P[i][k] != v[i] * Q[k][i]:
                    problems.append(f"duality fails at i={i}, k={k}")
        for i in range(m):
            for j in range(m):
                s = sum(P[i][k] * Q[k][j] for k in range(m))
                if s != (self.x_size if i == j else 0):
                    problems.append(f"orthogonality fails at i={i}, j={j}")
        for x in list(v) + list(mu):
            if x <= 0 or x.denominator != 1:
                problems.append(f"valency/multiplicity {x} is not a positive integer")
        return problems

    def permuted(self, order: Sequence[int], ordering: str) -> "EigTable":
        """Reorder eigenspaces: new column j is old column order[j]."""
        P = tuple(tuple(row[k] for k in order) for row in self.P)
        Q = tuple(self.Q[k] for k in order)
        mu = tuple(self.mu[k] for k in order)
        return EigTable(self.spec, ordering, self.x_size, self.v, mu, P, Q)


def _assemble(spec, ordering, size, v, P) -> EigTable:
    mu = multiplicities_from_p(P, v, size)
    m = len(v)
    Q = tuple(tuple(mu[k] * P[i][k] / v[i] for i in range(m)) for k in range(m))
    return EigTable(spec, ordering, size, tuple(v), tuple(mu), tuple(tuple(r) for r in P), Q)


def _fused_columns(parent: EigTable) -> Tuple[List[List[Fraction]], List[int]]:
    """Fuse R_{2j-1} and R_{2j}; return the fused P rows and the merged column order."""
    n = parent.classes
    rows = [list(parent.P[0])]
    for j in range(1, (n + 1) // 2 + 1):
        rows.append([sum(parent.P[i][k] for i in (2 * j - 1, 2 * j) if i <= n) for k in range(n + 1)])
    seen = {}
    order = []
    for k in range(n + 1):
        col = tuple(r[k] for r in rows)
        if col not in seen:
            seen[col] = k
            order.append(k)
    return rows, order


@lru_cache(maxsize=None)
def eig_table(spec: SchemeSpec, ordering: Optional[str] = None, max_rank: int = MAX_RANK) -> EigTable:
    """Exact P/Q table; every invariant is checked before returning.

    ``ordering`` may be ``"hermitian-alternate"`` for 2A_{2n-1}; derived
    schemes only have their own (``"half-D"``) ordering.
    """
    if spec.n > max_rank:
        raise ValueError(f"rank {spec.n} exceeds the configured maximum {max_rank}")
    m = spec.classes + 1
    size = scheme_size(spec)

    if spec.kind.is_base:
        v = [_base_valency(spec, i) for i in range(m)]
        P = [[_base_p_number(spec, i, k) for k in range(m)] for i in range(m)]
        table = _assemble(spec, "standard", size, v, P)
        if ordering == "hermitian-alternate":
            if spec.kind is not PolarKind.HERMITIAN_ODD:
                raise WrongFamily("the alternate Q-polynomial ordering exists only for 2A_{2n-1}")
            table = table.permuted(hermitian_alternate_order(spec.n), "hermitian-alternate")
            _cross_check_hahn(table)
        elif ordering not in (None, "standard"):
            raise ValueError(f"unknown ordering {ordering!r}")
    elif spec.kind is PolarKind.HALF_HYPERBOLIC:
        parent = eig_table(spec.parent(), max_rank=max_rank)
        v = [parent.v[2 * i] for i in range(m)]
        P = [[parent.P[2 * i][k] for k in range(m)] for i in range(m)]
        table = _assemble(spec, "half-D", size / 1, v, P)
        _cross_check_hahn(table)
    else:
        parent = eig_table(spec.parent(), max_rank=max_rank)
        rows, order = _fused_columns(parent)
        if len(order) != m:
            raise InvariantViolation("fused B/C relations do not form a scheme with the expected classes")
        v = [rows[i][0] for i in range(m)]
        P = [[rows[i][k] for k in order] for i in range(m)]
        table = _assemble(spec, "half-D", size, v, P)

    problems = table.check()
    if problems:
        raise InvariantViolation(f"{spec.label()}: " + "; ".join(problems[:5]))
    return table


def _cross_check_hahn(table: EigTable) -> None:
    spec = table.spec
    m = table.classes + 1
    for i in range(m):
        if table.v[i] != hahn_valency(spec, i):
            raise InvariantViolation(f"q-Hahn valency mismatch at i={i}")
        for k in range(m):
            if table.P[i][k] != hahn_p_number(spec, i, k):
                raise InvariantViolation(f"q-Hahn P-number mismatch at i={i}, k={k}")


def hahn_multiplicities(spec: SchemeSpec) -> List[Fraction]:
    """mu'_k in the q-Hahn ordering, taken from the base scheme's mu."""
    if spec.kind is PolarKind.HERMITIAN_ODD:
        mu = eig_table(spec).mu
        n = spec.n
        return [mu[k // 2] if k % 2 == 0 else mu[n - (k - 1) // 2] for k in range(n + 1)]
    if spec.kind is PolarKind.HALF_HYPERBOLIC:
        return list(eig_table(spec).mu)
    raise WrongFamily(f"{spec.kind.value} has no q-Hahn form")


def hahn_q_number(spec: SchemeSpec, k: int, i: int) -> Fraction:
    """Q'_k(i) = mu'_k times the q-Hahn 3phi2."""
    _check_index(spec, i, k)
    return hahn_multiplicities(spec)[k] * hahn_phi(spec, i, k)


def hahn_table(spec: SchemeSpec) -> EigTable:
    if spec.kind is PolarKind.HERMITIAN_ODD:
        return eig_table(spec, "hermitian-alternate")
    if spec.kind is PolarKind.HALF_HYPERBOLIC:
        return eig_table(spec)
    raise WrongFamily(f"{spec.kind.value} has no q-Hahn form")


def polar_q_identity_sides(spec: SchemeSpec, i: int, j: int) -> Tuple[Fraction, Fraction]:
    """Weighted Q-number sum against |X| [n-i, j]_p (classical families)."""
    table = eig_table(spec)
    n, p, two_e = spec.n, spec.p, spec.two_e
    lhs = Fraction(0)
    for k in range(n + 1):
        prod = Fraction(1)
        for ell in range(1, n - j + 1):
            prod *= 1 + spec.ppow(2 * (ell - k) + two_e)
        lhs += Fraction(p) ** (k * (n - j)) * qbinomial(n - k, n - j, p) * prod * table.Q[k][i]
    return lhs, table.x_size * qbinomial(n - i, j, p)


def hahn_q_identity_sides(spec: SchemeSpec, i: int, j: int) -> Tuple[Fraction, Fraction]:
    """Weighted Q'-number sum against |X| [n-i, j]_b (q-Hahn families)."""
    b, c = spec.hahn_params
    q = Fraction(spec.q)
    n = spec.classes
    size = scheme_size(spec)
    lhs = Fraction(0)
    for k in range(n + 1):
        weight = (
            b ** (k * (n - j))
            * qbinomial(n - k, n - j, b)
            * qpochhammer(q * c * b ** (n - k), b, n - j)
            / qpochhammer(q, b, n - j)
        )
        lhs += weight * hahn_q_number(spec, k, i)
    return lhs, size * qbinomial(n - i, j, b)
