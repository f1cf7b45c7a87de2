from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polarsteiner.oracle import bipartite_half, enumerate_instance, find_code
from polarsteiner.schemes import BASE_KINDS, SchemeSpec, scheme_size
from polarsteiner.steiner import (
    BadParameters,
    CaseTag,
    HalfHyperbolicConstruction,
    Outcome,
    OutOfTheoremRange,
    classify,
    dual_certificate,
    full_verdict,
    in_surviving_list,
    isotropic_space_count,
    ratio_certificate,
    replay_ratio,
    steiner_size,
    steiner_size_lower_bound,
)

QS = [2, 3, 4, 5, 7, 8, 9]


def test_spread_of_the_symplectic_plane():
    s = SchemeSpec("C", 2, 2)
    assert steiner_size(s, 1) == 5
    assert len(find_code(enumerate_instance(s), 2)) == 5


def test_half_of_hyperbolic_generators():
    for n in (3, 4):
        s = SchemeSpec("D", n, 2)
        assert steiner_size(s, n - 1) == scheme_size(s) / 2
        assert len(bipartite_half(enumerate_instance(s)).first) == scheme_size(s) // 2


def test_empty_product():
    assert steiner_size(SchemeSpec("B", 4, 3), 0) == 1
    assert isotropic_space_count(SchemeSpec("B", 4, 3), 0) == 1


def test_full_system_is_every_generator():
    s = SchemeSpec("2A-odd", 3, 2)
    assert steiner_size(s, 3) == scheme_size(s)


def test_classification_examples():
    assert classify(SchemeSpec("D", 5, 2), 3) is CaseTag.C2
    assert classify(SchemeSpec("2D", 7, 2), 4) is CaseTag.C9
    assert classify(SchemeSpec("B", 5, 2), 2) is CaseTag.C7


def test_classification_range():
    with pytest.raises(OutOfTheoremRange):
        classify(SchemeSpec("C", 4, 2), 1)
    with pytest.raises(OutOfTheoremRange):
        classify(SchemeSpec("C", 4, 2), 4)
    with pytest.raises(BadParameters):
        classify(SchemeSpec("half-D", 4, 2), 2)


@pytest.mark.parametrize("q", QS)
def test_hyperbolic_ratio(q):
    v = full_verdict(SchemeSpec("D", 4, q), 2)
    assert v.outcome is Outcome.NONEXISTENT_BY_RATIO
    assert v.certificate.R == Fraction(2, 1 + q * q)


@pytest.mark.parametrize("q", QS)
def test_corner_ratios(q):
    def R(kind, n, d):
        return ratio_certificate(SchemeSpec(kind, n, q), n - d + 1).certificate.R

    a = Fraction(1 + q**3, 1 + q**4)
    for kind in ("B", "C"):
        assert R(kind, 6, 4) == R(kind, 7, 4) == a
        assert R(kind, 6, 3) == R(kind, 7, 3) == Fraction(1, 1 + q**4)
    b = Fraction((1 + q**3) * (1 - q**8), 1 - q**12)
    c = Fraction((1 - q**8) * (1 + q**5), 1 - q**14)
    assert R("2D", 5, 3) == R("2D", 6, 3) == a
    assert R("2D", 9, 4) == R("2D", 10, 4) == b
    assert R("2D", 9, 6) == R("2D", 10, 6) == c


def test_ratio_examples_at_two():
    assert ratio_certificate(SchemeSpec("D", 4, 2), 2).certificate.R == Fraction(2, 5)
    assert ratio_certificate(SchemeSpec("B", 6, 2), 3).certificate.R == Fraction(9, 17)
    assert ratio_certificate(SchemeSpec("2D", 5, 2), 3).certificate.R == Fraction(9, 17)


@pytest.mark.parametrize("q", QS)
def test_dual_witnesses_match_factored_values(q):
    Q = Fraction(q)
    v = dual_certificate(SchemeSpec("2D", 7, q), 4).certificate
    assert v.k == 6
    assert v.normalized == -2 * Q**-5 * (q + 1) ** 2 * (q * q + 1) * (q**3 + q + 1)
    v = dual_certificate(SchemeSpec("2D", 8, q), 5).certificate
    assert v.k == 7
    assert v.normalized == -2 * Q**-5 * (q + 1) ** 4 * (q * q - q + 1) * (q * q + 1) ** 2
    v = dual_certificate(SchemeSpec("2A-even", 6, q), 3).certificate
    assert v.k == 5
    assert v.normalized == -(Q**-7) * (q + 1) ** 3 * (q * q - q + 1) * (q**4 - q**3 + q * q + 1)


def test_odd_parabolic_two_systems():
    v = full_verdict(SchemeSpec("B", 5, 2), 2)
    assert v.case is CaseTag.C7
    assert v.certificate.k == 4 and v.certificate.value < 0
    assert (4, v.certificate.value) in v.certificate.all_negative


def test_verdict_examples():
    v = full_verdict(SchemeSpec("D", 6, 3), 5)
    assert v.outcome is Outcome.EXISTS_KNOWN
    assert isinstance(v.certificate, HalfHyperbolicConstruction)
    for q in QS:
        assert full_verdict(SchemeSpec("C", 3, q), 2).outcome is Outcome.NONEXISTENT_KNOWN_LITERATURE
    assert full_verdict(SchemeSpec("2A-even", 5, 2), 2).outcome is Outcome.OPEN
    assert full_verdict(SchemeSpec("C", 4, 2), 4).outcome is Outcome.EXISTS_KNOWN


def test_spread_table():
    assert full_verdict(SchemeSpec("B", 2, 3), 1).outcome is Outcome.NONEXISTENT_KNOWN_LITERATURE
    assert full_verdict(SchemeSpec("B", 2, 4), 1).outcome is Outcome.EXISTS_KNOWN
    assert full_verdict(SchemeSpec("C", 5, 7), 1).outcome is Outcome.EXISTS_KNOWN
    assert full_verdict(SchemeSpec("2A-odd", 3, 5), 1).outcome is Outcome.NONEXISTENT_KNOWN_LITERATURE
    assert full_verdict(SchemeSpec("2D", 3, 3), 1).outcome is Outcome.OPEN


def test_hermitian_spread_absence_agrees_with_search():
    s = SchemeSpec("2A-odd", 2, 2)
    assert full_verdict(s, 1).outcome is Outcome.NONEXISTENT_KNOWN_LITERATURE
    # a spread would need q^3 + 1 = 9 generators
    assert steiner_size(s, 1) == 9
    assert len(find_code(enumerate_instance(s), 2)) == 6


def test_surviving_overlap_settled_by_rank_reduction():
    # t = 2 = n - 1 at q = 2 sits in both lists; the cited base case decides it
    for kind in ("2A-even", "2D"):
        s = SchemeSpec(kind, 3, 2)
        assert in_surviving_list(s, 2)
        assert full_verdict(s, 2).outcome is Outcome.NONEXISTENT_KNOWN_LITERATURE
        assert full_verdict(SchemeSpec(kind, 3, 3), 2).outcome is Outcome.OPEN


def test_t_outside_rank():
    with pytest.raises(BadParameters):
        full_verdict(SchemeSpec("C", 3, 2), 4)
    with pytest.raises(BadParameters):
        steiner_size(SchemeSpec("C", 3, 2), -1)


@settings(max_examples=80, deadline=None)
@given(kind=st.sampled_from(BASE_KINDS), n=st.integers(3, 12), data=st.data(), q=st.sampled_from(QS))
def test_every_nonsurviving_case_is_refuted(kind, n, data, q):
    t = data.draw(st.integers(2, n - 1))
    s = SchemeSpec(kind, n, q)
    v = full_verdict(s, t)
    if in_surviving_list(s, t) and v.case is not CaseTag.C1:
        assert not v.outcome.is_nonexistent
        return
    assert v.outcome.is_nonexistent
    if v.outcome is Outcome.NONEXISTENT_BY_RATIO:
        assert v.certificate.R < 1
        assert replay_ratio(v.certificate, s, t)
    elif v.outcome is Outcome.NONEXISTENT_BY_DUAL_NEGATIVITY:
        assert v.certificate.value < 0


@settings(max_examples=60, deadline=None)
@given(kind=st.sampled_from(BASE_KINDS), n=st.integers(1, 12), data=st.data(), q=st.sampled_from(QS))
def test_size_exceeds_lower_bound(kind, n, data, q):
    t = data.draw(st.integers(1, n))
    s = SchemeSpec(kind, n, q)
    assert steiner_size(s, t) >= steiner_size_lower_bound(s, t)
