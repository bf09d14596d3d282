import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from carlitz_hw import (
    NEG_INF,
    digit_profile,
    gekeler_degree_bound,
    make_field,
    rho_sequence,
    target_degree,
)
from carlitz_hw.digits import base_q_digits, ell, rho, rho_exponents
from carlitz_hw.errors import OutOfRangeError


def test_digit_profile_examples(f3):
    p5 = digit_profile(5, f3, 3)
    assert (p5.digits, p5.ell, p5.zero_class) == ((2, 1, 0), 3, False)
    p8 = digit_profile(8, f3, 3)
    assert (p8.digits, p8.ell, p8.zero_class) == ((2, 2, 0), 4, True)


@pytest.mark.parametrize("p,e,d", [(3, 1, 3), (2, 2, 2), (5, 1, 2), (2, 1, 4)])
def test_top_exponent_digit_sum(p, e, d):
    ctx = make_field(p, e)
    q = ctx.q
    prof = digit_profile(q**d - 2, ctx, d)
    assert prof.ell == d * (q - 1) - 1


def test_digit_profile_range_errors(f3):
    with pytest.raises(OutOfRangeError):
        digit_profile(0, f3, 3)
    with pytest.raises(OutOfRangeError):
        digit_profile(26, f3, 3)  # q^d - 1 is excluded


def test_target_degree_examples(f3):
    assert target_degree(5, f3, 3) == 1
    assert target_degree(8, f3, 3) == 1
    assert target_degree(2, f3, 3) == 0


def test_rho_sequence_examples(f3):
    assert rho_sequence(5, f3) == (3, NEG_INF)
    assert rho_sequence(8, f3) == (6, 0, NEG_INF)
    assert rho_sequence(1, f3) == (NEG_INF,)


def test_rho_base_two_strips_lowest_bit(f2):
    # q = 2: one step removes the lowest set bit
    assert rho_sequence(6, f2) == (4, 0, NEG_INF)
    assert rho(12, 2) == 8


def test_rho_of_zero(f3):
    assert rho(0, 3) == NEG_INF
    assert rho(NEG_INF, 3) == NEG_INF


def test_gekeler_degree_bound_examples(f3):
    assert gekeler_degree_bound(0, 5, f3) == 0
    assert gekeler_degree_bound(1, 5, f3) == 3
    assert gekeler_degree_bound(2, 5, f3) == NEG_INF
    assert gekeler_degree_bound(2, 8, f3) == 6


@given(n=st.integers(0, 10**6), q=st.sampled_from([2, 3, 4, 5, 9]))
@settings(max_examples=300, deadline=None)
def test_rho_digit_route_matches_integer_definition(n, q):
    exps = rho_exponents(n, q)
    assert sum(q**e for e in exps) == n
    assert list(exps) == sorted(exps)
    if len(exps) < q - 1:
        assert rho(n, q) == NEG_INF
    else:
        assert rho(n, q) == n - sum(q**e for e in exps[: q - 1])


@pytest.mark.parametrize("p,e,d", [(2, 1, 3), (3, 1, 3), (2, 2, 2), (5, 1, 2)])
def test_digit_symmetry(p, e, d):
    ctx = make_field(p, e)
    q = ctx.q
    for n in range(1, q**d - 1):
        assert ell(n, q) + ell(q**d - 1 - n, q) == (q - 1) * d


@given(n=st.integers(1, 10**9), q=st.sampled_from([2, 3, 4, 5]))
@settings(max_examples=300, deadline=None)
def test_zero_class_congruence(n, q):
    # the digit sum is congruent to n mod q-1
    assert (ell(n, q) - n) % (q - 1) == 0


def test_base_q_digits_width_guard():
    assert base_q_digits(8, 3, width=3) == (2, 2, 0)
    with pytest.raises(OutOfRangeError):
        base_q_digits(27, 3, width=3)
