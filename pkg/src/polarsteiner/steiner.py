"""Existence verdicts for t-Steiner systems of generators.

``full_verdict`` splits the parameter space into the cases C1..C9:

* C1 rests on cited literature facts plus rank reduction (data, not proof);
* C2..C6 compare the code bound B against the forced size S (R = B/S < 1);
* C7..C9 exhibit a negative entry in the forced dual distribution.

Everything that remains is reported as open (or known to exist).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from .bounds import code_bound
from .distributions import steiner_dual_distribution, steiner_product
from .qarith import qbinomial
from .schemes import PolarKind, SchemeSpec, eig_table

K = PolarKind


class BadParameters(ValueError):
    pass


class OutOfTheoremRange(ValueError):
    pass


class RatioNotLessThanOne(AssertionError):
    pass


class WitnessNotNegative(AssertionError):
    pass


class Outcome(enum.Enum):
    NONEXISTENT_BY_RATIO = "NonexistentByRatio"
    NONEXISTENT_BY_DUAL_NEGATIVITY = "NonexistentByDualNegativity"
    NONEXISTENT_KNOWN_LITERATURE = "NonexistentKnownLiterature"
    EXISTS_KNOWN = "ExistsKnown"
    OPEN = "Open"

    @property
    def is_nonexistent(self) -> bool:
        return self.value.startswith("Nonexistent")


class CaseTag(enum.Enum):
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    C5 = "C5"
    C6 = "C6"
    C7 = "C7"
    C8 = "C8"
    C9 = "C9"
    IN_SCOPE_REMAINING = "InScopeRemaining"


@dataclass(frozen=True)
class RatioCertificate:
    B: Fraction
    S: Fraction
    R: Fraction


@dataclass(frozen=True)
class DualCertificate:
    k: int
    value: Fraction  # A'_k
    normalized: Fraction  # A'_k / mu_k
    all_negative: Tuple[Tuple[int, Fraction], ...] = ()


@dataclass(frozen=True)
class LiteratureRef:
    tag: str
    fact: str


@dataclass(frozen=True)
class HalfHyperbolicConstruction:
    description: str = "either bipartite half of the generators of D_n"


@dataclass(frozen=True)
class Verdict:
    spec: SchemeSpec
    t: int
    outcome: Outcome
    certificate: object = None
    case: Optional[CaseTag] = None
    notes: Tuple[str, ...] = field(default=())


def steiner_size(spec: SchemeSpec, t: int) -> Fraction:
    """prod_{i<t} (1 + p^{n-i+e}); cross-checked against the t-space count."""
    if not spec.kind.is_base:
        raise BadParameters("Steiner systems are defined for the six classical families")
    if not 0 <= t <= spec.n:
        raise BadParameters(f"t={t} outside 0..{spec.n}")
    size = steiner_product(spec, 0, t)
    if isotropic_space_count(spec, t) / qbinomial(spec.n, t, spec.p) != size:
        raise AssertionError("t-space count and Steiner size disagree")
    return size


def isotropic_space_count(spec: SchemeSpec, t: int) -> Fraction:
    """Number of totally isotropic t-spaces."""
    return qbinomial(spec.n, t, spec.p) * steiner_product(spec, 0, t)


def steiner_size_lower_bound(spec: SchemeSpec, t: int) -> Fraction:
    """p^{(n-d+1)(n+d+2e)/2} with d = n-t+1."""
    d = spec.n - t + 1
    return spec.ppow((spec.n - d + 1) * (2 * spec.n + 2 * d + 2 * spec.two_e) // 2)


def in_surviving_list(spec: SchemeSpec, t: int) -> bool:
    """Whether (spec, t) is among the parameters the classification leaves open."""
    n, kind = spec.n, spec.kind
    if not 1 < t < n:
        return False
    twisted = kind in (K.HERMITIAN_EVEN, K.ELLIPTIC)
    if t == 2 and twisted and n % 2 == 1:
        return True
    if t == n - 1 and ((twisted and spec.q >= 3) or kind is K.HYPERBOLIC):
        return True
    return False


def classify(spec: SchemeSpec, t: int) -> CaseTag:
    n, q, kind = spec.n, spec.q, spec.kind
    if not spec.kind.is_base:
        raise BadParameters("classification needs a classical family")
    if not 1 < t < n:
        raise OutOfTheoremRange(f"t={t} is outside 1 < t < n={n}")

    if t == n - 1:
        if kind in (K.HERMITIAN_ODD, K.PARABOLIC, K.SYMPLECTIC):
            return CaseTag.C1
        if kind in (K.HERMITIAN_EVEN, K.ELLIPTIC) and q == 2:
            return CaseTag.C1
        return CaseTag.IN_SCOPE_REMAINING

    # from here on 1 < t < n - 1
    if kind is K.HYPERBOLIC:
        return CaseTag.C2
    if kind is K.HERMITIAN_ODD:
        return CaseTag.C5
    if kind in (K.PARABOLIC, K.SYMPLECTIC):
        if t > 2 or n % 2 == 0:
            return CaseTag.C3
        return CaseTag.C7
    if kind is K.HERMITIAN_EVEN:
        if (n, t) == (6, 3):
            return CaseTag.C9
        if t > 2 or n % 2 == 0:
            return CaseTag.C6
        return CaseTag.IN_SCOPE_REMAINING
    # elliptic
    if (n, t) in ((7, 4), (8, 5)):
        return CaseTag.C9
    if t == 2:
        return CaseTag.C7 if n % 2 == 0 else CaseTag.IN_SCOPE_REMAINING
    if t == 3 and n % 2 == 0:
        return CaseTag.C8
    return CaseTag.C4


def ratio_certificate(spec: SchemeSpec, t: int) -> Verdict:
    tag = classify(spec, t)
    if tag not in (CaseTag.C2, CaseTag.C3, CaseTag.C4, CaseTag.C5, CaseTag.C6):
        raise BadParameters(f"{spec.label()}, t={t} is case {tag.value}, not a ratio case")
    B = code_bound(spec, spec.n - t + 1).value
    S = steiner_size(spec, t)
    R = B / S
    if not R < 1:
        raise RatioNotLessThanOne(f"{spec.label()}, t={t}: R = {R}")
    return Verdict(spec, t, Outcome.NONEXISTENT_BY_RATIO, RatioCertificate(B, S, R), tag)


def witness_index(spec: SchemeSpec, t: int, tag: CaseTag) -> int:
    n = spec.n
    if tag is CaseTag.C7:
        return n if spec.kind is K.ELLIPTIC else n - 1
    if tag is CaseTag.C8:
        return n - 1
    if tag is CaseTag.C9:
        return {(K.ELLIPTIC, 7): 6, (K.ELLIPTIC, 8): 7, (K.HERMITIAN_EVEN, 6): 5}[(spec.kind, n)]
    raise BadParameters(f"no dual witness for case {tag.value}")


def dual_certificate(spec: SchemeSpec, t: int) -> Verdict:
    tag = classify(spec, t)
    if tag not in (CaseTag.C7, CaseTag.C8, CaseTag.C9):
        raise BadParameters(f"{spec.label()}, t={t} is case {tag.value}, not a dual-negativity case")
    k = witness_index(spec, t, tag)
    dual = steiner_dual_distribution(spec, t)
    mu = eig_table(spec).mu
    if not dual[k] < 0:
        raise WitnessNotNegative(f"{spec.label()}, t={t}: A'_{k} = {dual[k]}")
    cert = DualCertificate(k, dual[k], dual[k] / mu[k], tuple(dual.negative_entries()))
    return Verdict(spec, t, Outcome.NONEXISTENT_BY_DUAL_NEGATIVITY, cert, tag)


# Cited facts used as inputs (not re-derived here).  Keys are
# (family, rank, t); values map a q-predicate description to the fact.
SPREAD_FACTS = {
    (K.PARABOLIC, 2): ("odd", "no spreads in B_2 = Q(4,q) for odd q"),
    (K.HERMITIAN_ODD, 2): (2, "no spreads in 2A_3 = H(3,q^2) for q = 2"),
    (K.HERMITIAN_EVEN, 2): (2, "no spreads in 2A_4 = H(4,q^2) for q = 2"),
    (K.HERMITIAN_ODD, 3): ("all", "no spreads in 2A_5 = H(5,q^2)"),
}
STEINER2_RANK3_FACTS = {
    K.ELLIPTIC: (2, "no 2-Steiner systems in 2D_4 = Q^-(7,q) for q = 2"),
    K.SYMPLECTIC: ("all", "no 2-Steiner systems in C_3 = W(5,q)"),
    K.PARABOLIC: ("even", "B_3 is isomorphic to C_3 for even q"),
}
SPREAD_EXISTS = {
    K.SYMPLECTIC: "symplectic spreads of W(2n-1,q) exist for all n, q",
}


def _q_matches(rule, q: int) -> bool:
    if rule == "all":
        return True
    if rule == "odd":
        return q % 2 == 1
    if rule == "even":
        return q % 2 == 0
    return q == rule


def spread_verdict(spec: SchemeSpec) -> Verdict:
    """t = 1: table lookup of spread existence."""
    kind, n, q = spec.kind, spec.n, spec.q
    fact = SPREAD_FACTS.get((kind, n))
    if fact and _q_matches(fact[0], q):
        return Verdict(spec, 1, Outcome.NONEXISTENT_KNOWN_LITERATURE, LiteratureRef("spread", fact[1]))
    if kind in SPREAD_EXISTS:
        return Verdict(spec, 1, Outcome.EXISTS_KNOWN, LiteratureRef("spread", SPREAD_EXISTS[kind]))
    if kind is K.PARABOLIC and q % 2 == 0:
        return Verdict(spec, 1, Outcome.EXISTS_KNOWN, LiteratureRef("spread", "B_n is isomorphic to C_n for even q"))
    return Verdict(spec, 1, Outcome.OPEN, LiteratureRef("spread", "status not tabulated"))


def literature_reduction(spec: SchemeSpec, t: int) -> LiteratureRef:
    """Case C1: rank reduction from an (n-1)-Steiner system down to a cited base case."""
    kind, q = spec.kind, spec.q
    chain = f"rank reduction {spec.label()}, t={t}"
    if kind is K.HERMITIAN_ODD:
        return LiteratureRef("C1", chain + " -> 2A_5: " + SPREAD_FACTS[(K.HERMITIAN_ODD, 3)][1])
    if kind is K.HERMITIAN_EVEN:
        return LiteratureRef("C1", chain + " -> 2A_4: " + SPREAD_FACTS[(K.HERMITIAN_EVEN, 2)][1])
    if kind is K.ELLIPTIC:
        return LiteratureRef("C1", chain + " -> 2D_4: " + STEINER2_RANK3_FACTS[K.ELLIPTIC][1])
    if kind is K.SYMPLECTIC:
        return LiteratureRef("C1", chain + " -> C_3: " + STEINER2_RANK3_FACTS[K.SYMPLECTIC][1])
    if kind is K.PARABOLIC:
        if q % 2 == 0:
            return LiteratureRef("C1", chain + " -> B_3 ~ C_3: " + STEINER2_RANK3_FACTS[K.SYMPLECTIC][1])
        return LiteratureRef("C1", chain + " -> B_2: " + SPREAD_FACTS[(K.PARABOLIC, 2)][1])
    raise BadParameters(f"no literature reduction for {spec.label()}")


def full_verdict(spec: SchemeSpec, t: int) -> Verdict:
    if not spec.kind.is_base:
        raise BadParameters("Steiner systems are defined for the six classical families")
    n = spec.n
    if not 1 <= t <= n:
        raise BadParameters(f"t={t} outside 1..{n}")
    if t == n:
        return Verdict(spec, t, Outcome.EXISTS_KNOWN, None, notes=("all generators form the unique n-Steiner system",))
    if spec.kind is K.HYPERBOLIC and t == n - 1:
        return Verdict(spec, t, Outcome.EXISTS_KNOWN, HalfHyperbolicConstruction())
    if t == 1:
        return spread_verdict(spec)
    tag = classify(spec, t)
    if tag is CaseTag.C1:
        return Verdict(spec, t, Outcome.NONEXISTENT_KNOWN_LITERATURE, literature_reduction(spec, t), tag)
    if tag in (CaseTag.C7, CaseTag.C8, CaseTag.C9):
        return dual_certificate(spec, t)
    if tag is CaseTag.IN_SCOPE_REMAINING:
        return Verdict(spec, t, Outcome.OPEN, None, tag)
    return ratio_certificate(spec, t)


def replay_ratio(cert: RatioCertificate, spec: SchemeSpec, t: int) -> bool:
    """Recompute B and S from scratch and compare with a stored certificate."""
    B = code_bound(spec, spec.n - t + 1).value
    S = steiner_product(spec, 0, t)
    return (B, S, B / S) == (cert.B, cert.S, cert.R)
