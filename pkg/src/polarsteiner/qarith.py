"""Exact q-series toolkit over the rationals.

Every function here takes and returns ``fractions.Fraction`` (ints are
accepted anywhere a rational is expected).  Nothing is ever rounded.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence, Union

Number = Union[int, Fraction]

# Largest index probed when deciding whether a numerator parameter terminates
# a q-hypergeometric series.
MAX_TERMINATION_PROBE = 256


class NonTerminating(ValueError):
    """No numerator parameter of a q-hypergeometric series is q^{-i}."""


def _base(q: Number) -> Fraction:
    q = Fraction(q)
    if q in (0, 1, -1):
        raise ValueError(f"invalid q-base {q}")
    return q


def qbinomial(n: int, k: int, q: Number) -> Fraction:
    """Gaussian binomial coefficient [n, k]_q.

    Zero when k < 0 or when 0 <= n < k.
    """
    q = _base(q)
    if k < 0 or (n >= 0 and k > n):
        return Fraction(0)
    result = Fraction(1)
    for j in range(1, k + 1):
        result *= (q ** (n - j + 1) - 1) / (q**j - 1)
    return result


def qpochhammer(a: Number, q: Number, n: int) -> Fraction:
    """(a; q)_n = prod_{i<n} (1 - a q^i)."""
    if n < 0:
        raise ValueError("q-Pochhammer length must be nonnegative")
    a = Fraction(a)
    q = Fraction(q)
    result = Fraction(1)
    term = a
    for _ in range(n):
        result *= 1 - term
        term *= q
    return result


def termination_index(a: Number, q: Number, max_probe: int = MAX_TERMINATION_PROBE):
    """Return i with a*q^i == 1, or None if no such i <= max_probe exists."""
    a = Fraction(a)
    q = _base(q)
    x = a
    for i in range(max_probe + 1):
        if x == 1:
            return i
        x *= q
    return None


def qhypergeometric(
    numerator_params: Sequence[Number],
    denominator_params: Sequence[Number],
    q: Number,
    z: Number,
    max_probe: int = MAX_TERMINATION_PROBE,
) -> Fraction:
    """Terminating basic hypergeometric series r_phi_s evaluated exactly."""
    q = _base(q)
    z = Fraction(z)
    nums = [Fraction(a) for a in numerator_params]
    dens = [Fraction(b) for b in denominator_params]
    stops = [termination_index(a, q, max_probe) for a in nums]
    stops = [i for i in stops if i is not None]
    if not stops:
        raise NonTerminating(f"series with numerator parameters {nums} does not terminate")
    last = min(stops)

    shift = 1 + len(dens) - len(nums)
    total = Fraction(0)
    term = Fraction(1)  # ratio of Pochhammer products, times z^l / (q;q)_l
    for ell in range(last + 1):
        correction = Fraction(-1) ** (shift * ell) * q ** (shift * comb(ell, 2))
        total += term * correction
        if ell == last:
            break
        qe = q**ell
        factor = z / (1 - q ** (ell + 1))
        for a in nums:
            factor *= 1 - a * qe
        for b in dens:
            d = 1 - b * qe
            if d == 0:
                raise ZeroDivisionError(f"denominator parameter {b} vanishes at index {ell + 1}")
            factor /= d
        term *= factor
    return total


def qbinomial_theorem_check(k: int, z: Number, q: Number) -> bool:
    """Compare sum_i q^C(i,2) [k,i]_q z^i against prod_{i<k} (1 + z q^i)."""
    q = _base(q)
    z = Fraction(z)
    lhs = sum((q ** comb(i, 2) * qbinomial(k, i, q) * z**i for i in range(k + 1)), Fraction(0))
    rhs = Fraction(1)
    for i in range(k):
        rhs *= 1 + z * q**i
    return lhs == rhs


def inversion_check(i: int, k: int, q: Number) -> bool:
    """Gaussian-binomial inversion: the alternating sum equals delta_{ik}."""
    q = _base(q)
    total = sum(
        (
            (-1) ** (j - i) * q ** comb(j - i, 2) * qbinomial(j, i, q) * qbinomial(k, j, q)
            for j in range(i, k + 1)
        ),
        Fraction(0),
    )
    return total == (1 if i == k else 0)


# Two-sided Pochhammer identities.  Each returns (lhs, rhs); callers compare.

def qbin_poch_sides(n: int, k: int, q: Number):
    q = _base(q)
    lhs = qbinomial(n, k, q)
    rhs = qpochhammer(q ** (-n), q, k) / qpochhammer(q, q, k) * (-1) ** k * q ** (k * n - comb(k, 2))
    return lhs, rhs


def squared_base_sides(a: Number, q: Number, k: int):
    lhs = qpochhammer(Fraction(a) ** 2, Fraction(q) ** 2, k)
    rhs = qpochhammer(a, q, k) * qpochhammer(-Fraction(a), q, k)
    return lhs, rhs


def even_index_sides(a: Number, q: Number, k: int):
    q = Fraction(q)
    lhs = qpochhammer(a, q, 2 * k)
    rhs = qpochhammer(a, q**2, k) * qpochhammer(Fraction(a) * q, q**2, k)
    return lhs, rhs


def index_sum_sides(a: Number, q: Number, n: int, k: int):
    q = Fraction(q)
    lhs = qpochhammer(a, q, n + k)
    rhs = qpochhammer(a, q, n) * qpochhammer(Fraction(a) * q**n, q, k)
    return lhs, rhs


def index_diff_sides(a: Number, q: Number, n: int, k: int):
    """(a;q)_{n-k} against its reflected form; needs a != 0 and k <= n."""
    a = Fraction(a)
    q = Fraction(q)
    if a == 0 or not 0 <= k <= n:
        raise ValueError("index-difference identity needs a != 0 and 0 <= k <= n")
    lhs = qpochhammer(a, q, n - k)
    denom = qpochhammer(q ** (1 - n) / a, q, k)
    if denom == 0:
        raise ZeroDivisionError("reflected Pochhammer vanishes")
    rhs = qpochhammer(a, q, n) / denom * (-a) ** (-k) * q ** (comb(k, 2) - n * k + k)
    return lhs, rhs


def chu_vandermonde_sides(k: int, x: Number, y: Number, q: Number):
    """2phi1(q^-k, x; y; q, y q^k / x) against (y/x; q)_k / (y; q)_k."""
    q = _base(q)
    x = Fraction(x)
    y = Fraction(y)
    lhs = qhypergeometric([q ** (-k), x], [y], q, y * q**k / x)
    rhs = qpochhammer(y / x, q, k) / qpochhammer(y, q, k)
    return lhs, rhs


def pfaff_saalschutz_sides(i: int, x: Number, y: Number, z: Number, q: Number):
    """Balanced 3phi2(q^-i, x, y; z, x y q^{1-i}/z; q, q) against its product."""
    q = _base(q)
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    lhs = qhypergeometric([q ** (-i), x, y], [z, x * y * q ** (1 - i) / z], q, q)
    rhs = (
        qpochhammer(z / x, q, i)
        * qpochhammer(z / y, q, i)
        / (qpochhammer(z, q, i) * qpochhammer(z / (x * y), q, i))
    )
    return lhs, rhs
