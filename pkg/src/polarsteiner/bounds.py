"""Closed-form upper bounds on d-codes of generators."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .qarith import qpochhammer
from .schemes import PolarKind, SchemeSpec, scheme_size


class BadParameters(ValueError):
    pass


class Formula(enum.Enum):
    THM_ODD_D = "theorem-odd-d"
    THM_EVEN_D = "theorem-even-d"
    COR_A = "a"
    COR_B = "b"
    COR_C = "c"
    COR_D = "d"
    COR_E = "e"
    COR_F = "f"


@dataclass(frozen=True)
class BoundResult:
    value: Fraction
    formula_used: Formula
    spec: SchemeSpec
    d: int

    @property
    def floor(self) -> int:
        return floor(self.value)


def epsilon(n: int, d: int, q: int) -> Fraction:
    if d % 2:
        return Fraction(1)
    mq = Fraction(-q)
    num = (mq ** (n - d + 2) - 1) + q * (mq ** (n + d - 2) - 1) / (q * mq ** (d - 2) - 1) * (mq ** (n - d + 1) - 1)
    den = (mq ** (n - d + 2) - 1) + q * (mq ** (n + d - 2) - 1) / (mq ** (n + d - 1) - 1) * (mq ** (n - d + 1) - 1)
    return num / den


def _alpha(n: int, d: int, q: int) -> Fraction:
    mq = Fraction(-q)
    result = Fraction(1)
    for i in range(1, n + 1):
        result *= 1 + Fraction(q) ** (2 * i - 1)
    for i in range(1, d):
        result *= (1 + mq**i) / (1 - mq ** (n + i))
    return result * epsilon(n, d, q)


def _beta(m: int, d: int, q: int) -> Fraction:
    q = Fraction(q)
    shift = 2 if m % 2 == 0 else 1
    result = Fraction(1)
    for i in range(1, m):
        result *= 1 + q**i
    for i in range(1, d):
        result *= (1 - q ** (2 * i - 1)) / (1 - q ** (m + 2 * i - shift))
    return result


def alpha(n: int, d: int, q: int) -> Fraction:
    """Bound for d-codes in 2A_{2n-1}."""
    if not 1 <= d <= n:
        raise BadParameters(f"alpha needs 1 <= d <= n, got n={n}, d={d}")
    return _alpha(n, d, q)


def beta(m: int, d: int, q: int) -> Fraction:
    """Bound for d-codes in the bipartite half of D_m."""
    if not 1 <= d <= m // 2:
        raise BadParameters(f"beta needs 1 <= d <= floor(m/2), got m={m}, d={d}")
    return _beta(m, d, q)


def theorem_bound(spec: SchemeSpec, d: int) -> Fraction:
    """Hahn-scheme bound |X| (q;b)_{d-1} / (q c b^n; b)_{d-1}, with the even-d
    correction for 2A_{2n-1}."""
    if spec.kind not in (PolarKind.HERMITIAN_ODD, PolarKind.HALF_HYPERBOLIC):
        raise BadParameters("theorem bound applies to 2A_{2n-1} and half of D_m")
    n = spec.classes
    if not 1 <= d <= n:
        raise BadParameters(f"d={d} outside 1..{n}")
    b, c = spec.hahn_params
    q = Fraction(spec.q)
    base = scheme_size(spec) * qpochhammer(q, b, d - 1) / qpochhammer(q * c * b**n, b, d - 1)
    if spec.kind is PolarKind.HERMITIAN_ODD and d % 2 == 0:
        return base * _even_d_correction(n, d, q, b)
    return base


def _even_d_correction(n, d, q, b) -> Fraction:
    num = (b ** (n - d + 2) - 1) + q * (b ** (n + d - 2) - 1) / (q * b ** (d - 2) - 1) * (b ** (n - d + 1) - 1)
    den = (b ** (n - d + 2) - 1) + q * (b ** (n + d - 2) - 1) / (b ** (n + d - 1) - 1) * (b ** (n - d + 1) - 1)
    return num / den


def theorem_bound_even_d(spec: SchemeSpec, d: int) -> Fraction:
    if spec.kind is not PolarKind.HERMITIAN_ODD or d % 2:
        raise BadParameters("even-d theorem bound is for 2A_{2n-1} with even d")
    return theorem_bound(spec, d)


def corollary_case(spec: SchemeSpec, d: int) -> Formula:
    kind = spec.kind
    if kind is PolarKind.HERMITIAN_ODD:
        return Formula.COR_A
    if kind is PolarKind.HERMITIAN_EVEN:
        return Formula.COR_B
    if kind in (PolarKind.PARABOLIC, PolarKind.SYMPLECTIC):
        return Formula.COR_C
    if kind is PolarKind.HYPERBOLIC:
        return Formula.COR_D if d % 2 else Formula.COR_E
    if kind is PolarKind.ELLIPTIC:
        return Formula.COR_F
    raise BadParameters(f"no corollary bound for {kind.value}")


def corollary_value(case: Formula, n: int, d: int, q: int) -> Fraction:
    delta = (d + 1) // 2
    if case is Formula.COR_A:
        return alpha(n, d, q)
    if case is Formula.COR_B:
        return alpha(n + 1, d, q)
    if case is Formula.COR_C:
        return beta(n + 1, delta, q)
    if case is Formula.COR_D:
        if d % 2 == 0:
            raise BadParameters("case (d) is for odd d")
        # d = n odd puts delta one past floor(n/2); the product still bounds
        return 2 * _beta(n, delta, q)
    if case is Formula.COR_E:
        if d % 2:
            raise BadParameters("case (e) is for even d")
        return beta(n, delta, q)
    if case is Formula.COR_F:
        return beta(n + 2, delta, q)
    raise BadParameters(f"{case} is not a corollary case")


def code_bound(spec: SchemeSpec, d: int) -> BoundResult:
    """Upper bound on the size of a d-code in a classical polar space."""
    if not spec.kind.is_base:
        raise BadParameters("code_bound takes one of the six classical families")
    if not 1 <= d <= spec.n:
        raise BadParameters(f"d={d} outside 1..{spec.n}")
    case = corollary_case(spec, d)
    return BoundResult(corollary_value(case, spec.n, d, spec.q), case, spec, d)


def ambient_spec(spec: SchemeSpec) -> SchemeSpec:
    """Scheme whose size the d=1 bound reproduces (2A_{2n} and 2D_{n+1} embed upward)."""
    if spec.kind is PolarKind.HERMITIAN_EVEN:
        return SchemeSpec(PolarKind.HERMITIAN_ODD, spec.n + 1, spec.q)
    if spec.kind is PolarKind.ELLIPTIC:
        return SchemeSpec(PolarKind.PARABOLIC, spec.n + 1, spec.q)
    return spec


def product_inequalities(n: int, q: int):
    """The three partial products that stay below 5/2, 7/5 and 2."""
    q = Fraction(q)
    a = b = c = Fraction(1)
    for i in range(1, n + 1):
        a *= 1 + q ** (-i)
        b *= 1 + q ** (-2 * i)
        c *= 1 + q ** (-2 * i + 1)
    return a, b, c


def alpha_cap(n: int, d: int, q: int) -> Fraction:
    exponent = n * (n - d + 1) if d % 2 else n * (n - d + 2)
    return Fraction(14, 5) * Fraction(q) ** exponent


def beta_cap(m: int, d: int, q: int) -> Fraction:
    if m % 2 == 0:
        return Fraction(5, 2) * Fraction(q) ** ((m - 1) * (m - 2 * d + 2) // 2)
    # n(n-2d+1) is even for odd n
    return Fraction(5, 2) * Fraction(q) ** (m * (m - 2 * d + 1) // 2)


def simplified_bounds_check(n: int, d: int, q: int) -> bool:
    """Strict exponential caps on alpha(n,d), beta(n,d) and the three products.

    beta(n, d) is evaluated from its product formula for every 1 <= d <= n,
    not only d <= n/2.
    """
    if not 1 <= d <= n:
        raise BadParameters(f"need 1 <= d <= n, got n={n}, d={d}")
    a, b, c = product_inequalities(n, q)
    if not (a < Fraction(5, 2) and b < Fraction(7, 5) and c < 2):
        return False
    return _alpha(n, d, q) < alpha_cap(n, d, q) and _beta(n, d, q) < beta_cap(n, d, q)
