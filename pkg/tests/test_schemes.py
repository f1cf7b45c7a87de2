import dataclasses
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polarsteiner.schemes import (
    BASE_KINDS,
    EigTable,
    IndexOutOfRange,
    PolarKind,
    SchemeSpec,
    WrongFamily,
    eig_table,
    hahn_p_number,
    hahn_table,
    hermitian_alternate_order,
    multiplicities,
    p_number,
    p_number_phi,
    scheme_size,
    valency,
)

K = PolarKind


def spec(kind, n, q):
    return SchemeSpec(kind, n, q)


def test_small_scheme_sizes():
    assert scheme_size(spec("C", 2, 2)) == 15
    assert scheme_size(spec("D", 2, 2)) == 6
    assert scheme_size(spec("2A-odd", 2, 2)) == 27
    assert scheme_size(spec("half-D", 4, 2)) == 135


def test_valencies():
    assert valency(spec("C", 2, 2), 0) == 1
    assert valency(spec("C", 2, 2), 1) == 6
    # generators of 2A_3(q=2) meeting trivially
    assert valency(spec("2A-odd", 2, 2), 2) == 16


def test_symplectic_plane_multiplicities():
    # ordered by eigenspace index; as a multiset this is {1, 5, 9}
    assert multiplicities(spec("C", 2, 2)) == [1, 9, 5]


@pytest.mark.parametrize("kind", BASE_KINDS)
@pytest.mark.parametrize("q", [2, 3, 4])
def test_rank_one_is_a_complete_graph(kind, q):
    s = spec(kind, 1, q)
    t = eig_table(s)
    assert t.P[1][1] == -1
    assert t.P[1][0] == scheme_size(s) - 1


def test_sum_form_matches_phi_form_example():
    s = spec("D", 4, 2)
    assert p_number(s, 2, 3) == p_number_phi(s, 2, 3)


def test_first_row_and_column():
    t = eig_table(spec("2D", 3, 3))
    assert all(x == 1 for x in t.P[0])
    assert list(t.v) == [row[0] for row in t.P]


def test_index_out_of_range():
    with pytest.raises(IndexOutOfRange):
        p_number(spec("C", 2, 2), 3, 0)


def test_bad_parameters():
    with pytest.raises(ValueError):
        SchemeSpec("C", 2, 6)
    with pytest.raises(ValueError):
        SchemeSpec("C", 0, 2)
    with pytest.raises(ValueError):
        SchemeSpec("Z", 2, 2)


def test_fused_table_equals_half_hyperbolic():
    for n in (1, 2, 3, 4):
        for q in (2, 3):
            fused = eig_table(spec("fused-BC", n, q))
            half = eig_table(spec("half-D", n + 1, q))
            assert (fused.P, fused.Q, fused.v, fused.mu) == (half.P, half.Q, half.v, half.mu)


def test_alternate_ordering_is_a_permutation():
    s = spec("2A-odd", 4, 2)
    std = eig_table(s)
    alt = eig_table(s, "hermitian-alternate")
    order = hermitian_alternate_order(4)
    assert order == [0, 4, 1, 3, 2]
    assert alt.P == tuple(tuple(row[k] for k in order) for row in std.P)
    assert alt.mu == tuple(std.mu[k] for k in order)
    assert hahn_table(s) is alt


def test_alternate_ordering_only_for_odd_hermitian():
    with pytest.raises(WrongFamily):
        eig_table(spec("C", 3, 2), "hermitian-alternate")


def test_hahn_form_for_half_hyperbolic():
    for m in range(2, 8):
        s = spec("half-D", m, 2)
        t = eig_table(s)
        for i in range(s.classes + 1):
            for k in range(s.classes + 1):
                assert t.P[i][k] == hahn_p_number(s, i, k)


def test_half_hyperbolic_multiplicity_halves_in_the_middle():
    # the middle eigenspace of D_m (m even) splits between the halves
    for m in (4, 6):
        half = eig_table(spec("half-D", m, 2)).mu
        full = eig_table(spec("D", m, 2)).mu
        assert list(half[: m // 2]) == list(full[: m // 2])
        assert half[m // 2] == full[m // 2] / 2


def test_corrupted_table_is_detected():
    t = eig_table(spec("C", 2, 2))
    P = [list(r) for r in t.P]
    P[1][1] += 1
    bad = dataclasses.replace(t, P=tuple(tuple(r) for r in P))
    assert any("duality" in p for p in bad.check())


@settings(max_examples=40, deadline=None)
@given(
    kind=st.sampled_from(list(K)),
    n=st.integers(1, 7),
    q=st.sampled_from([2, 3, 4, 5, 7, 8, 9]),
)
def test_every_table_is_sound(kind, n, q):
    if kind is K.HALF_HYPERBOLIC and n < 2:
        return
    t = eig_table(spec(kind, n, q))
    assert isinstance(t, EigTable)
    assert t.check() == []
    assert t.x_size == scheme_size(spec(kind, n, q))


@settings(max_examples=30, deadline=None)
@given(kind=st.sampled_from(BASE_KINDS), n=st.integers(1, 6), q=st.sampled_from([2, 3, 5]))
def test_valency_formula_matches_table(kind, n, q):
    s = spec(kind, n, q)
    t = eig_table(s)
    assert [valency(s, i) for i in range(n + 1)] == list(t.v)
    assert sum(t.v) == scheme_size(s)
    assert all(Fraction(x).denominator == 1 for x in t.mu)
