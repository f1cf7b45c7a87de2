"""Inner and dual distributions of generator sets, and the distribution a
t-Steiner system would be forced to have."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Tuple

from .qarith import qbinomial
from .schemes import EigTable, SchemeSpec, eig_table


class EmptySubset(ValueError):
    pass


class LengthMismatch(ValueError):
    pass


class BadParameters(ValueError):
    pass


INNER = "inner"
DUAL = "dual"


@dataclass(frozen=True)
class Distribution:
    entries: Tuple[Fraction, ...]
    flavor: str

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    @property
    def total(self) -> Fraction:
        return sum(self.entries, Fraction(0))

    def negative_entries(self):
        return [(k, a) for k, a in enumerate(self.entries) if a < 0]


def inner_distribution(subset: Iterable[int], relations: Sequence[Sequence[int]], classes: int = None) -> Distribution:
    """A_i = |(Y x Y) cap R_i| / |Y| from a precomputed relation table."""
    members = sorted(set(subset))
    if not members:
        raise EmptySubset("inner distribution of an empty set")
    if classes is None:
        classes = max(max(row) for row in relations)
    counts = [0] * (classes + 1)
    for x in members:
        row = relations[x]
        for y in members:
            counts[row[y]] += 1
    size = len(members)
    return Distribution(tuple(Fraction(c, size) for c in counts), INNER)


def dual_distribution(inner: Distribution, table: EigTable) -> Distribution:
    """A'_k = sum_i Q_k(i) A_i."""
    if inner.flavor != INNER:
        raise ValueError("dual_distribution expects an inner distribution")
    m = table.classes + 1
    if len(inner) != m:
        raise LengthMismatch(f"distribution has {len(inner)} entries, table has {m} classes")
    return Distribution(tuple(sum(table.Q[k][i] * inner[i] for i in range(m)) for k in range(m)), DUAL)


def inverse_dual(dual: Distribution, table: EigTable) -> Distribution:
    """Recover the inner distribution: A_i = (1/|X|) sum_k P_i(k) A'_k."""
    m = table.classes + 1
    if len(dual) != m:
        raise LengthMismatch("length mismatch")
    return Distribution(
        tuple(sum(table.P[i][k] * dual[k] for k in range(m)) / table.x_size for i in range(m)), INNER
    )


def is_d_code(inner: Distribution, d: int) -> bool:
    if not 1 <= d <= len(inner):
        raise BadParameters(f"d={d} outside 1..{len(inner)}")
    return all(inner[i] == 0 for i in range(1, d))


def _check_steiner(spec: SchemeSpec, t: int) -> None:
    if not spec.kind.is_base:
        raise BadParameters("Steiner distributions are defined for the six classical families")
    if not 1 <= t <= spec.n:
        raise BadParameters(f"t={t} outside 1..{spec.n}")


def steiner_product(spec: SchemeSpec, start: int, stop: int) -> Fraction:
    """prod_{l=start}^{stop-1} (1 + p^{n-l+e})."""
    result = Fraction(1)
    for ell in range(start, stop):
        result *= 1 + spec.ppow(2 * (spec.n - ell) + spec.two_e)
    return result


def steiner_inner_distribution(spec: SchemeSpec, t: int) -> Distribution:
    _check_steiner(spec, t)
    n, p = spec.n, spec.p
    A = [Fraction(0)] * (n + 1)
    A[0] = Fraction(1)
    for i in range(t):
        total = Fraction(0)
        for j in range(i, t):
            total += (
                (-1) ** (j - i)
                * Fraction(p) ** comb(j - i, 2)
                * qbinomial(j, i, p)
                * qbinomial(n, j, p)
                * (steiner_product(spec, j, t) - 1)
            )
        A[n - i] = total
    return Distribution(tuple(A), INNER)


def steiner_dual_distribution(spec: SchemeSpec, t: int) -> Distribution:
    dual = dual_distribution(steiner_inner_distribution(spec, t), eig_table(spec))
    bad = [k for k in range(1, t + 1) if dual[k] != 0]
    if bad:
        raise AssertionError(f"{spec.label()}, t={t}: dual entries {bad} should vanish")
    return dual


def dual_inner_identity_sides(spec: SchemeSpec, inner: Distribution, j: int):
    """Both sides of the dual/inner weighted-sum identity at index j."""
    table = eig_table(spec)
    dual = dual_distribution(inner, table)
    n, p, two_e = spec.n, spec.p, spec.two_e
    lhs = Fraction(0)
    for k in range(j + 1):
        prod = Fraction(1)
        for ell in range(1, n - j + 1):
            prod *= 1 + spec.ppow(2 * (ell - k) + two_e)
        lhs += dual[k] * Fraction(p) ** (k * (n - j)) * qbinomial(n - k, n - j, p) * prod
    rhs = table.x_size * sum((inner[i] * qbinomial(n - i, j, p) for i in range(n + 1)), Fraction(0))
    return lhs, rhs
