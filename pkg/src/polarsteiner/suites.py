"""Verification suites shared by the command line and the acceptance tests.

Each suite returns a list of failure messages; an empty list means pass.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional

from . import schemes
from .bounds import simplified_bounds_check
from .distributions import steiner_inner_distribution
from .lp import check_lp_result, lp_bound
from .schemes import BASE_KINDS, PolarKind, SchemeSpec, p_number_phi, scheme_size
from .steiner import CaseTag, classify, full_verdict, in_surviving_list, isotropic_space_count

EIGEN_GRID_N = range(1, 9)
EIGEN_GRID_Q = (2, 3, 4, 5)
STEINER_GRID_Q = (2, 3, 4, 5, 7, 8, 9)


def load_table(spec: SchemeSpec):
    """Indirection so a harness can substitute a table."""
    return schemes.eig_table(spec)


def eigen_suite(ns: Iterable[int] = EIGEN_GRID_N, qs: Iterable[int] = EIGEN_GRID_Q) -> List[str]:
    """Duality, orthogonality and sum-form = 3phi2-form on every table."""
    failures = []
    for kind in BASE_KINDS:
        for n in ns:
            for q in qs:
                spec = SchemeSpec(kind, n, q)
                table = load_table(spec)
                failures += [f"{spec.label()}: {p}" for p in table.check()]
                for i in range(n + 1):
                    for k in range(n + 1):
                        if table.P[i][k] != p_number_phi(spec, i, k):
                            failures.append(f"{spec.label()}: P_{i}({k}) differs from the 3phi2 form")
    return failures


def identities_suite(max_n: int = 6, qs=(2, 3), hermitian_max_n: int = 5, half_max_m: int = 8) -> List[str]:
    failures = []
    for kind in BASE_KINDS:
        for n in range(1, max_n + 1):
            for q in qs:
                spec = SchemeSpec(kind, n, q)
                for i in range(n + 1):
                    for j in range(n + 1):
                        lhs, rhs = schemes.polar_q_identity_sides(spec, i, j)
                        if lhs != rhs:
                            failures.append(f"{spec.label()} (i={i}, j={j}): {lhs} != {rhs}")
    hahn = [SchemeSpec(PolarKind.HERMITIAN_ODD, n, q) for n in range(1, hermitian_max_n + 1) for q in qs]
    hahn += [SchemeSpec(PolarKind.HALF_HYPERBOLIC, m, q) for m in range(2, half_max_m + 1) for q in qs]
    for spec in hahn:
        c = spec.classes
        for i in range(c + 1):
            for j in range(c + 1):
                lhs, rhs = schemes.hahn_q_identity_sides(spec, i, j)
                if lhs != rhs:
                    failures.append(f"{spec.label()} Hahn form (i={i}, j={j}): {lhs} != {rhs}")
    return failures


def bounds_suite(max_n: int = 30, qs=(2, 3, 4, 5, 7, 8, 9, 16)) -> List[str]:
    return [
        f"caps fail at n={n}, d={d}, q={q}"
        for q in qs
        for n in range(1, max_n + 1)
        for d in range(1, n + 1)
        if not simplified_bounds_check(n, d, q)
    ]


def steiner_suite(max_n: int = 12, qs=STEINER_GRID_Q) -> List[str]:
    """Every (family, 1 < t < n) off the surviving list is shown nonexistent."""
    failures = []
    for kind in BASE_KINDS:
        for n in range(3, max_n + 1):
            for q in qs:
                spec = SchemeSpec(kind, n, q)
                for t in range(2, n):
                    verdict = full_verdict(spec, t)
                    surviving = in_surviving_list(spec, t)
                    if not surviving and not verdict.outcome.is_nonexistent:
                        failures.append(f"{spec.label()}, t={t}: {verdict.outcome.value}")
                    if surviving and classify(spec, t) is not CaseTag.C1 and verdict.outcome.is_nonexistent:
                        failures.append(f"{spec.label()}, t={t} should stay open")
    return failures


def lp_suite(ns: Iterable[int] = EIGEN_GRID_N, qs: Iterable[int] = EIGEN_GRID_Q) -> List[str]:
    """d = 1 gives |X|, certificates re-verify, and the bound is nonincreasing in d."""
    failures = []
    for kind in BASE_KINDS:
        for n in ns:
            for q in qs:
                spec = SchemeSpec(kind, n, q)
                table = schemes.eig_table(spec)
                previous: Optional[Fraction] = None
                for d in range(1, n + 2):
                    res = lp_bound(spec, d)
                    if not res.certificate_ok or check_lp_result(table, res):
                        failures.append(f"{spec.label()}, d={d}: certificate does not verify")
                    if d == 1 and res.optimum != scheme_size(spec):
                        failures.append(f"{spec.label()}: d=1 optimum {res.optimum} != |X|")
                    if previous is not None and res.optimum > previous:
                        failures.append(f"{spec.label()}: optimum increases at d={d}")
                    previous = res.optimum
    spec = SchemeSpec(PolarKind.HYPERBOLIC, 4, 2)
    if lp_bound(spec, 2).optimum != 135:
        failures.append("D_4(q=2), d=2 optimum is not 135")
    return failures


ORACLE_INSTANCES = [
    (kind, n, q)
    for n, qs in ((1, (2, 3)), (2, (2, 3)), (3, (2,)), (4, (2,)))
    for q in qs
    for kind in BASE_KINDS
]


def oracle_suite(max_size: int = 500, seed: int = 0, instances=None) -> List[str]:
    """Enumerated instances against every closed-form count."""
    from . import oracle
    from .oracle.checks import intersection_numbers_from_table

    failures = []
    for kind, n, q in instances or ORACLE_INSTANCES:
        spec = SchemeSpec(kind, n, q)
        if scheme_size(spec) > max_size:
            continue
        inst = oracle.enumerate_instance(spec)
        failures += [f"{spec.label()}: {m}" for m in instance_failures(inst, load_table(spec))]
        report = oracle.verify_axioms(inst)
        if report.intersection_numbers != intersection_numbers_from_table(schemes.eig_table(spec)):
            failures.append(f"{spec.label()}: intersection numbers differ from the table")
        try:
            oracle.verify_idempotents(inst, load_table(spec))
        except oracle.IdempotentMismatch as exc:
            failures.append(f"{spec.label()}: {exc}")
        if spec.kind is PolarKind.HYPERBOLIC and n >= 2:
            failures += [f"{spec.label()}: {m}" for m in halves_failures(inst)]
    for kind, n, q in (("Hermitian", 2, 4), ("Symmetric", 2, 3), ("Alternating", 4, 2)):
        if not oracle.rank_map_check(kind, n, q, trials=200, seed=seed).ok:
            failures.append(f"rank map {kind} {n}x{n} over F_{q}")
    return failures


def instance_failures(inst, table) -> List[str]:
    spec = inst.spec
    out = []
    if inst.size != scheme_size(spec) or table.x_size != inst.size:
        out.append(f"{inst.size} generators, closed form {scheme_size(spec)}")
    if inst.valencies() != [[int(v)] for v in table.v]:
        out.append(f"valencies {inst.valencies()} != {list(table.v)}")
    for t in range(spec.n + 1):
        if inst.space_counts[t] != isotropic_space_count(spec, t):
            out.append(f"{inst.space_counts[t]} isotropic {t}-spaces, closed form {isotropic_space_count(spec, t)}")
    through = spec.ppow(2 + spec.two_e) + 1
    if set(inst.cover_counts) != {through}:
        out.append(f"(n-1)-spaces lie in {dict(inst.cover_counts)} generators, expected {through}")
    return out


def halves_failures(inst) -> List[str]:
    from .oracle import bipartite_half
    from .oracle.search import code_distribution

    halves = bipartite_half(inst)
    out = []
    n = inst.spec.n
    expected = steiner_inner_distribution(inst.spec, n - 1)
    if not all(halves.steiner):
        out.append("a half is not an (n-1)-Steiner system")
    if not halves.closed:
        out.append("halves are not closed under the parity relation")
    for h in (halves.first, halves.second):
        if len(h) != inst.size // 2:
            out.append(f"half of size {len(h)}")
        if code_distribution(inst, h).entries != expected.entries:
            out.append("half inner distribution differs from the Steiner formula")
    return out


SUITES: Dict[str, Callable[..., List[str]]] = {
    "identities": identities_suite,
    "eigen": eigen_suite,
    "bounds": bounds_suite,
    "steiner": steiner_suite,
    "lp": lp_suite,
    "oracle": oracle_suite,
}
