"""Closed-form counts against the DP oracle, plus the X/Y coefficient algebra."""

from fractions import Fraction

import pytest

from sytkit import (IntegralityError, SpecError, StripSpec, alpha_beta,
                    alpha_descents, beta_descents, count_3strip, count_4strip,
                    count_5strip, count_descent_class, count_strip,
                    count_syt_dp, scaled_a, strip_shape, x_coeff, y_coeff)
from sytkit.formulas import strip_spec_3, strip_spec_4, strip_spec_5


def abar(n):
    return scaled_a("abar", n)


def test_x_coeff_base_cases():
    for N in range(8):
        assert x_coeff(N, 0, 0) == abar(N + 1)
        assert x_coeff(N, 1, 0) == abar(N + 1) - abar(N + 2)
    assert x_coeff(-1, 0, 0) == abar(0) == 1
    with pytest.raises(ValueError):
        x_coeff(-2, 0, 0)


def test_x_coeff_symmetry():
    for N in range(0, 11, 2):
        for p in range(11):
            for q in range(p, 11):
                assert x_coeff(N, p, q) == x_coeff(N, q, p)
                assert y_coeff(N, p, q) == y_coeff(N, q, p)


def test_y_coeff_cases():
    for N in range(8):
        assert y_coeff(N, 0, 0) == abar(N + 1) / 2**N
        assert y_coeff(N, 1, 1) == scaled_a("ahat", N + 1)
    assert y_coeff(1, 0, 0) == Fraction(1, 4)


def test_worked_matrix_entries():
    """The displayed 2x2 matrix for the full 4-strip band, as rational identities."""
    for n in range(2, 7):
        N = 2 * n - 3
        assert x_coeff(N, 0, 0) == abar(2 * n - 2)
        assert x_coeff(N, 0, 2) == abar(2 * n - 2) / 2 - abar(2 * n)
        assert x_coeff(N, 2, 2) == (abar(2 * n - 2) / 4 - abar(2 * n)
                                    + abar(2 * n + 2))


def test_count_strip_examples():
    assert count_strip(StripSpec(4, 2)) == 5
    assert count_strip(StripSpec(4, 1, (1, 0), (1, 0))) == 1
    assert count_strip(StripSpec(3, 2, (1,), (1,))) == 14
    with pytest.raises(SpecError):
        count_strip(StripSpec(6, 1))  # N = 2 - 6 + 1 = -3


def test_count_strip_m2_equals_alpha():
    for n in range(1, 5):
        for p in range(3):
            for q in range(3):
                a, _ = alpha_beta(n, p, q)
                assert count_strip(StripSpec(2, n, (p,), (q,))) == a


@pytest.mark.parametrize("variant,n", [(v, n) for v in "abc" for n in range(1, 8)])
def test_3strip_closed_forms(variant, n):
    spec = strip_spec_3(variant, n)
    closed = count_3strip(variant, n)
    assert closed == count_strip(spec) == count_syt_dp(strip_shape(spec))


@pytest.mark.parametrize("variant,n", [(v, n) for v in "FG" for n in range(1, 6)])
def test_4strip_closed_forms(variant, n):
    spec = strip_spec_4(variant, n)
    closed = count_4strip(variant, n)
    assert closed == count_strip(spec) == count_syt_dp(strip_shape(spec))


def test_4strip_pinned_values():
    assert count_4strip("F", 1) == 1
    assert count_4strip("G", 1) == 1
    assert count_4strip("F", 2) == 5


@pytest.mark.parametrize("n", range(2, 6))
def test_5strip_closed_form(n):
    spec = strip_spec_5(n)
    closed = count_5strip(n)
    assert closed == count_strip(spec) == count_syt_dp(strip_shape(spec))
    if n == 2:
        assert closed == 2


def test_formula_preconditions():
    with pytest.raises(ValueError):
        count_3strip("a", 0)
    with pytest.raises(ValueError):
        count_3strip("z", 2)
    with pytest.raises(ValueError):
        count_4strip("H", 1)
    with pytest.raises(ValueError):
        count_5strip(1)


def test_alpha_beta_pinned():
    assert alpha_beta(1, 0, 0) == (1, 2)
    a, _ = alpha_beta(1, 1, 0)
    assert a == 1  # descent set {1,2} in S_3: the reversal only


def test_alpha_beta_descent_sets():
    assert alpha_descents(1, 0, 0) == frozenset({1})
    assert alpha_descents(1, 1, 0) == frozenset({1, 2})
    assert alpha_descents(2, 1, 2) == frozenset({1, 2, 4, 5, 6})
    assert beta_descents(2, 1, 3) == frozenset({1, 2, 4})


def test_alpha_beta_against_bruteforce():
    for n in range(1, 4):
        for p in range(3):
            for q in range(3):
                size_a = 2 * n + p + q
                if size_a > 8:
                    continue
                a, b = alpha_beta(n, p, q)
                assert a == count_descent_class(size_a, alpha_descents(n, p, q))
                assert b == count_descent_class(size_a + 1, beta_descents(n, p, q))


def test_integrality_guard_fires_on_bad_value():
    from sytkit.formulas import _as_count
    with pytest.raises(IntegralityError):
        _as_count(Fraction(1, 2), "test")
    with pytest.raises(IntegralityError):
        _as_count(Fraction(-3), "test")
