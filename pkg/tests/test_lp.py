from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polarsteiner.bounds import code_bound
from polarsteiner.lp import (
    OPTIMAL,
    UNBOUNDED,
    BadParameters,
    check_lp_result,
    delsarte_problem,
    lp_bound,
    lp_vs_closed_form,
    simplex_max,
    verify_certificate,
)
from polarsteiner.oracle import enumerate_instance, find_code
from polarsteiner.schemes import BASE_KINDS, PolarKind, SchemeSpec, eig_table, scheme_size
from polarsteiner.steiner import steiner_size

ALL_KINDS = list(PolarKind)


def test_whole_space_is_optimal_at_d1():
    for kind in BASE_KINDS:
        for n in (1, 3, 5):
            s = SchemeSpec(kind, n, 3)
            res = lp_bound(s, 1)
            assert res.optimum == scheme_size(s)
            assert res.primal == eig_table(s).v


def test_half_hyperbolic_optimum():
    res = lp_bound(SchemeSpec("D", 4, 2), 2)
    assert res.optimum == 135
    assert res.primal == (1, 0, 70, 0, 64)
    assert res.certificate_ok


def test_symplectic_spread_optimum():
    s = SchemeSpec("C", 2, 2)
    assert lp_bound(s, 2).optimum == 5 == steiner_size(s, 1)


def test_d_past_rank_leaves_one_generator():
    assert lp_bound(SchemeSpec("C", 3, 2), 4).optimum == 1


def test_d_out_of_range():
    with pytest.raises(BadParameters):
        lp_bound(SchemeSpec("C", 3, 2), 0)
    with pytest.raises(BadParameters):
        lp_bound(SchemeSpec("C", 3, 2), 5)


def test_tiny_problems():
    sol = simplex_max([[1, 1], [1, -1]], [4, 2], [1, 2])
    assert (sol.status, sol.value, sol.x) == (OPTIMAL, 8, (0, 4))
    assert verify_certificate([[1, 1], [1, -1]], [4, 2], [1, 2], sol) == []
    assert simplex_max([[-1]], [1], [1]).status == UNBOUNDED


def test_degenerate_problem_terminates():
    # a classic cycling example for the largest-coefficient rule
    A = [
        [Fraction(1, 4), -8, -1, 9],
        [Fraction(1, 2), -12, Fraction(-1, 2), 3],
        [0, 0, 1, 0],
    ]
    b = [0, 0, 1]
    c = [Fraction(3, 4), -20, Fraction(1, 2), -6]
    sol = simplex_max(A, b, c)
    assert sol.status == OPTIMAL and sol.value == Fraction(5, 4)
    assert verify_certificate(A, b, c, sol) == []


def test_repeat_runs_pivot_identically():
    table = eig_table(SchemeSpec("2A-odd", 5, 2))
    A, b, c = delsarte_problem(table, 3)
    assert simplex_max(A, b, c) == simplex_max(A, b, c)


def test_comparison_examples():
    cmp = lp_vs_closed_form(SchemeSpec("2A-odd", 3, 2), 3)
    assert (cmp.lp, cmp.closed_form, cmp.smaller, cmp.violation) == (9, 9, "equal", False)
    cmp = lp_vs_closed_form(SchemeSpec("D", 4, 2), 4)
    assert (cmp.lp, cmp.closed_form, cmp.violation) == (9, 9, False)
    cmp = lp_vs_closed_form(SchemeSpec("B", 2, 3), 2)
    assert (cmp.lp, cmp.closed_form, cmp.smaller) == (10, 40, "lp")


@pytest.mark.parametrize(
    "kind,n,q,d,size",
    [
        ("C", 2, 2, 2, 5),
        ("C", 2, 3, 2, 10),
        ("B", 2, 3, 2, 7),
        ("D", 2, 3, 2, 4),
        ("2A-odd", 2, 2, 2, 6),
        ("2D", 2, 2, 2, 9),
    ],
)
def test_maximum_codes_sit_below_both_bounds(kind, n, q, d, size):
    s = SchemeSpec(kind, n, q)
    code = find_code(enumerate_instance(s), d)
    assert len(code) == size
    assert size <= lp_bound(s, d).optimum
    assert size <= code_bound(s, d).value


@settings(max_examples=40, deadline=None)
@given(kind=st.sampled_from(ALL_KINDS), n=st.integers(1, 7), q=st.sampled_from([2, 3, 4, 5]))
def test_optima_certify_and_decrease(kind, n, q):
    if kind is PolarKind.HALF_HYPERBOLIC and n < 2:
        return
    table = eig_table(SchemeSpec(kind, n, q))
    prev = None
    for d in range(1, table.classes + 2):
        res = lp_bound(SchemeSpec(kind, n, q), d)
        assert res.status == OPTIMAL and res.certificate_ok
        assert check_lp_result(table, res) == []
        assert res.optimum >= 1
        if prev is not None:
            assert res.optimum <= prev
        prev = res.optimum


@settings(max_examples=40, deadline=None)
@given(kind=st.sampled_from(BASE_KINDS), n=st.integers(1, 8), data=st.data(), q=st.sampled_from([2, 3, 4, 5]))
def test_no_violation_for_bounds_within_the_scheme(kind, n, data, q):
    d = data.draw(st.integers(1, n))
    assert not lp_vs_closed_form(SchemeSpec(kind, n, q), d).violation
