"""Quadrature checks of the eigensystems, spectral series, and appendix integrals."""

import math

import numpy as np
import pytest

from sytkit import (CostGuard, EigenMode, QuadratureGrid,
                    apply_transfer_numeric, eigenfunction_values,
                    i_integral_check, principal_product_check,
                    spectral_series_check, strip_modes, verify_eigensystem,
                    x_series_check)
from sytkit.spectral import simplex_quadrature


def residual(m, indices, grid=None, n_points=20, seed=7):
    mode = EigenMode.for_strip(m, indices)
    rng = np.random.default_rng(seed)
    pts = np.sort(rng.random((n_points, m // 2)), axis=1)
    f = lambda xs: eigenfunction_values(mode, xs)
    applied = apply_transfer_numeric(m, f, grid)(pts)
    return float(np.max(np.abs(applied - mode.eigenvalue * f(pts))))


def test_m2_principal_mode():
    assert residual(2, (1,)) <= 1e-10


def test_m3_first_mode():
    assert residual(3, (1,)) <= 1e-10


def test_m4_modes():
    for indices in ((2, 1), (3, 1), (3, 2)):
        assert residual(4, indices) <= 1e-8


def test_m5_modes():
    for indices in ((2, 1), (3, 1)):
        assert residual(5, indices) <= 1e-8


def test_eigenvalue_closed_forms():
    # even strip: 2^k (-1)^{C(k,2)+sum(j+1)} / (pi^k prod(2j-1))
    md = EigenMode.for_strip(2, (1,))
    assert md.eigenvalue == pytest.approx(2 / math.pi)
    md = EigenMode.for_strip(2, (2,))
    assert md.eigenvalue == pytest.approx(-2 / (3 * math.pi))
    md = EigenMode.for_strip(4, (2, 1))
    assert md.eigenvalue == pytest.approx(4 / (3 * math.pi**2))
    md = EigenMode.for_strip(3, (2,))
    assert md.eigenvalue == pytest.approx(1 / (4 * math.pi**2))
    md = EigenMode.for_strip(5, (2, 1))
    assert md.eigenvalue == pytest.approx(1 / (4 * math.pi**4))


def test_mode_enumeration_order():
    modes = strip_modes(4, 3)
    assert [m.indices for m in modes] == [(2, 1), (3, 1), (4, 1)]
    modes = strip_modes(3, 4)
    assert [m.indices for m in modes] == [(1,), (2,), (3,), (4,)]


def test_verify_eigensystem_reports():
    rep = verify_eigensystem(3, max_modes=4, tol=1e-10)
    assert rep.ok and rep.gram_deviation <= 1e-10
    rep = verify_eigensystem(4, max_modes=3, tol=1e-8)
    assert rep.ok
    rep = verify_eigensystem(5, max_modes=2, tol=1e-8)
    assert rep.ok


def test_verify_eigensystem_deterministic():
    a = verify_eigensystem(4, max_modes=2)
    b = verify_eigensystem(4, max_modes=2)
    assert [(m.indices, m.residual) for m in a.modes] == \
        [(m.indices, m.residual) for m in b.modes]
    assert a.gram_deviation == b.gram_deviation


def test_cost_guard():
    with pytest.raises(CostGuard):
        apply_transfer_numeric(9, lambda p: p[:, 0])
    with pytest.raises(CostGuard):
        principal_product_check(5)


def test_simplex_quadrature_volume():
    for k in (1, 2, 3):
        _, w = simplex_quadrature(k, 16)
        assert w.sum() == pytest.approx(1 / math.factorial(k))


def test_series_updown():
    c = spectral_series_check("updown_eq9", 4, 10**4)
    assert c.exact_coeff == 5 and c.rel_err <= 1e-9
    for n in range(2, 9):
        assert spectral_series_check("updown_eq9", n, 10**4).rel_err <= 1e-6


def test_series_updown_monotone_tail():
    # even n: the alternating-series error shrinks monotonically past K=10
    errs = [spectral_series_check("updown_eq9", 2, K).rel_err
            for K in (10, 30, 100, 300, 1000)]
    assert all(a >= b for a, b in zip(errs, errs[1:]))


def test_series_zeta():
    c = spectral_series_check("strip3_zeta", 2, 10**5)
    assert c.rel_err <= 1e-10
    # target is pi^4/90
    assert c.target == pytest.approx(math.pi**4 / 90)


def test_series_euler():
    c = spectral_series_check("strip4_euler", 1, 10**5)
    assert c.rel_err <= 1e-8
    assert c.target == pytest.approx(math.pi**3 / 32)


def test_series_rejects_unknown():
    with pytest.raises(ValueError):
        spectral_series_check("nope", 2)


def test_i_integral_examples():
    closed, quad = i_integral_check(0, 1)
    assert closed == pytest.approx(2 / math.pi, abs=1e-14)
    assert abs(closed - quad) <= 1e-12
    closed, quad = i_integral_check(1, 1)
    assert abs(closed - quad) <= 1e-12
    assert closed == pytest.approx(2 / math.pi - 4 / math.pi**2, abs=1e-14)
    closed, quad = i_integral_check(3, 2)
    assert abs(closed - quad) <= 1e-10


def test_i_integral_sweep():
    for a in range(7):
        for j in range(1, 7):
            closed, quad = i_integral_check(a, j)
            assert abs(closed - quad) <= 1e-10


def test_x_series_checks():
    assert x_series_check(3, 0, 0, 10**4) <= 1e-8
    assert x_series_check(5, 2, 0, 10**3) <= 1e-9
    assert x_series_check(2, 1, 1, 10**5) <= 1e-6
    with pytest.raises(ValueError):
        x_series_check(1, 0, 0)


def test_principal_product_form():
    assert principal_product_check(1) <= 1e-14
    assert principal_product_check(2, 100) <= 1e-12
    assert principal_product_check(3, 100) <= 1e-10


def test_orthonormality_m3_tight():
    rep = verify_eigensystem(3, max_modes=4, tol=1e-10)
    assert rep.gram_deviation <= 1e-10
