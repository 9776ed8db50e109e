"""Floating-point verification of the explicit transfer-operator eigensystems.

The even-width operator acts on functions on the ordered simplex Omega_k by
nested integrals with reflected bounds; the odd-width operator is the
composition of the two staircase integrations and reduces to an explicit
piecewise-polynomial kernel. Eigenfunctions are cosine (even) or sine
(odd) determinants; all checks here compare quadrature against the closed
forms and against exact counts from the rest of the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial, pi

import numpy as np

from .errors import CostGuard
from .numbers import bernoulli_numbers, zigzag_numbers
from .formulas import x_coeff

DEFAULT_SEED = 20240801


@dataclass(frozen=True)
class QuadratureGrid:
    """Gauss-Legendre order per dimension for all quadratures in this module."""

    order: int = 64

    def nodes(self) -> tuple[np.ndarray, np.ndarray]:
        return _leggauss(self.order)


def _leggauss(g: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(g)
    return x, w


def _map_nodes(x, w, a, b):
    """Map [-1,1] nodes to (a, b); a, b may be arrays (broadcast on the left)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    mid = (a + b) / 2.0
    half = (b - a) / 2.0
    pts = mid[..., None] + half[..., None] * x
    wts = half[..., None] * w
    return pts, wts


@dataclass(frozen=True)
class EigenMode:
    """One closed-form eigenpair of a strip transfer operator."""

    indices: tuple[int, ...]  # j_1 > j_2 > ... > j_k >= 1
    parity: str               # "even-strip" or "odd-strip"
    eigenvalue: float
    normalization: float

    @staticmethod
    def for_strip(m: int, indices) -> "EigenMode":
        indices = tuple(sorted((int(j) for j in indices), reverse=True))
        k = len(indices)
        if any(j < 1 for j in indices) or len(set(indices)) != k:
            raise ValueError("indices must be distinct positive integers")
        if m % 2 == 0:
            if k != m // 2:
                raise ValueError(f"even strip m={m} needs k={m // 2} indices")
            sign = (-1) ** (k * (k - 1) // 2 + sum(j + 1 for j in indices))
            denom = pi**k
            for j in indices:
                denom *= 2 * j - 1
            lam = 2**k * sign / denom
            parity = "even-strip"
        else:
            if k != m // 2:
                raise ValueError(f"odd strip m={m} needs k={m // 2} indices")
            denom = pi ** (2 * k)
            for j in indices:
                denom *= j * j
            lam = 1.0 / denom
            parity = "odd-strip"
        return EigenMode(indices, parity, lam, 2 ** (k / 2))


def eigenfunction_values(mode: EigenMode, pts: np.ndarray) -> np.ndarray:
    """Evaluate the determinant eigenfunction at points (N, k)."""
    pts = np.atleast_2d(np.asarray(pts, dtype=float))
    k = len(mode.indices)
    mats = np.empty(pts.shape[:1] + (k, k))
    for p, j in enumerate(mode.indices):
        if mode.parity == "even-strip":
            mats[:, p, :] = np.cos(pi * (2 * j - 1) * pts / 2)
        else:
            mats[:, p, :] = np.sin(pi * j * pts)
    return mode.normalization * np.linalg.det(mats)


def _check_cost(m: int):
    if m // 2 > 3:
        raise CostGuard(f"transfer application limited to strips of width <= 7, got {m}")


def _apply_even(f, x: np.ndarray, g: int) -> float:
    """(S_2k f)(x): integral of f over the box prod_j (b_{j-1}, b_j), b_j = 1 - x_{k+1-j}."""
    nodes, wts = _leggauss(g)
    k = len(x)
    bounds = np.concatenate(([0.0], 1.0 - x[::-1]))
    axes_p, axes_w = [], []
    for j in range(k):
        p, w = _map_nodes(nodes, wts, bounds[j], bounds[j + 1])
        axes_p.append(p)
        axes_w.append(w)
    mesh = np.meshgrid(*axes_p, indexing="ij")
    pts = np.stack([m.reshape(-1) for m in mesh], axis=1)
    vals = f(pts).reshape([g] * k)
    wmesh = np.meshgrid(*axes_w, indexing="ij")
    wtot = np.ones_like(vals)
    for w in wmesh:
        wtot = wtot * w
    return float((vals * wtot).sum())


def _apply_odd_k1(f, x: float, g: int) -> float:
    """(BA f)(x) = integral of min(x,t)(1-max(x,t)) f(t) dt, split at the kink."""
    nodes, wts = _leggauss(g)
    total = 0.0
    if x > 0:
        p, w = _map_nodes(nodes, wts, 0.0, x)
        total += float((w * p * (1 - x) * f(p[:, None]).reshape(-1)).sum())
    if x < 1:
        p, w = _map_nodes(nodes, wts, x, 1.0)
        total += float((w * x * (1 - p) * f(p[:, None]).reshape(-1)).sum())
    return total


def _split_axis(nodes, wts, pieces):
    """Quadrature points/weights for a union of disjoint intervals."""
    ps, ws = [], []
    for a, b in pieces:
        if b > a:
            p, w = _map_nodes(nodes, wts, a, b)
            ps.append(p)
            ws.append(w)
    if not ps:
        return np.empty(0), np.empty(0)
    return np.concatenate(ps), np.concatenate(ws)


def _apply_odd_k2(f, x: np.ndarray, g: int) -> float:
    """(AB f)(x1, x2) for the 5-strip via one middle variable kept explicit.

    (AB f)(x) = int_{x1}^{x2} dy [int_0^y min(x1,t1) dt1] [int_y^1 (1-max(x2,t2)) dt2] f,
    with each t-axis split at its kink so every patch is smooth.
    """
    x1, x2 = float(x[0]), float(x[1])
    nodes, wts = _leggauss(g)
    ypts, ywts = _map_nodes(nodes, wts, x1, x2)
    total = 0.0
    for y, wy in zip(ypts, ywts):
        t1, w1 = _split_axis(nodes, wts, [(0.0, min(x1, y)), (min(x1, y), y)])
        t2, w2 = _split_axis(nodes, wts, [(y, max(x2, y)), (max(x2, y), 1.0)])
        if len(t1) == 0 or len(t2) == 0:
            continue
        w1 = w1 * np.minimum(x1, t1)
        w2 = w2 * (1 - np.maximum(x2, t2))
        tt1, tt2 = np.meshgrid(t1, t2, indexing="ij")
        pts = np.stack([tt1.reshape(-1), tt2.reshape(-1)], axis=1)
        vals = f(pts).reshape(len(t1), len(t2))
        total += wy * float(w1 @ vals @ w2)
    return total


def _apply_odd_k3(f, x: np.ndarray, g: int) -> float:
    """(AB f)(x1, x2, x3) for the 7-strip; two middle variables kept explicit."""
    x1, x2, x3 = (float(v) for v in x)
    nodes, wts = _leggauss(g)
    y2p, y2w = _map_nodes(nodes, wts, x1, x2)
    y3p, y3w = _map_nodes(nodes, wts, x2, x3)
    total = 0.0
    for y2, wy2 in zip(y2p, y2w):
        t1, w1 = _split_axis(nodes, wts, [(0.0, min(x1, y2)), (min(x1, y2), y2)])
        w1 = w1 * np.minimum(x1, t1)
        for y3, wy3 in zip(y3p, y3w):
            t2, w2 = _map_nodes(nodes, wts, y2, y3)
            t3, w3 = _split_axis(nodes, wts, [(y3, max(x3, y3)), (max(x3, y3), 1.0)])
            w3 = w3 * (1 - np.maximum(x3, t3))
            if len(t1) == 0 or len(t3) == 0:
                continue
            m1, m2, m3 = np.meshgrid(t1, t2, w3 * 0 + t3, indexing="ij")
            pts = np.stack([m1.reshape(-1), m2.reshape(-1), m3.reshape(-1)], axis=1)
            vals = f(pts).reshape(len(t1), len(t2), len(t3))
            total += wy2 * wy3 * float(np.einsum("i,j,k,ijk->", w1, w2, w3, vals))
    return total


def apply_transfer_numeric(m: int, f, grid: QuadratureGrid | None = None):
    """Numerical transfer operator of the m-strip; returns pts (N,k) -> values."""
    _check_cost(m)
    grid = grid or QuadratureGrid()
    g = grid.order
    k = m // 2

    def applied(pts: np.ndarray) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(pts, dtype=float))
        out = np.empty(len(pts))
        for i, x in enumerate(pts):
            if m % 2 == 0:
                out[i] = _apply_even(f, x, g)
            elif k == 1:
                out[i] = _apply_odd_k1(f, float(x[0]), g)
            elif k == 2:
                out[i] = _apply_odd_k2(f, x, g)
            else:
                out[i] = _apply_odd_k3(f, x, g)
        return out

    return applied


def simplex_quadrature(k: int, g: int) -> tuple[np.ndarray, np.ndarray]:
    """Tensor quadrature over the ordered simplex 0 <= x_1 <= ... <= x_k <= 1."""
    nodes, wts = _leggauss(g)
    coords = np.zeros((1, 0))
    weights = np.ones(1)
    upper = np.ones(1)
    for _ in range(k):
        pts, ws = _map_nodes(nodes, wts, np.zeros_like(upper), upper)
        coords = np.concatenate(
            [np.repeat(coords, g, axis=0), pts.reshape(-1, 1)], axis=1)
        weights = (weights[:, None] * ws).reshape(-1)
        upper = pts.reshape(-1)
    return coords[:, ::-1], weights


def strip_modes(m: int, count: int, max_index: int = 9) -> list[EigenMode]:
    """The `count` modes of largest |eigenvalue| with indices <= max_index."""
    k = m // 2
    modes = [EigenMode.for_strip(m, idx)
             for idx in combinations(range(1, max_index + 1), k)]
    modes.sort(key=lambda md: (-abs(md.eigenvalue), md.indices))
    return modes[:count]


@dataclass(frozen=True)
class ModeCheck:
    indices: tuple[int, ...]
    eigenvalue: float
    residual: float
    ok: bool


@dataclass(frozen=True)
class EigenReport:
    m: int
    grid_order: int
    tol: float
    modes: tuple[ModeCheck, ...] = field(default_factory=tuple)
    gram_deviation: float = float("nan")

    @property
    def ok(self) -> bool:
        return all(mc.ok for mc in self.modes) and self.gram_deviation <= self.tol


def verify_eigensystem(m: int, max_modes: int = 4,
                       grid: QuadratureGrid | None = None,
                       tol: float = 1e-8,
                       n_points: int = 24,
                       seed: int = DEFAULT_SEED) -> EigenReport:
    """Residuals ||S phi - lambda phi|| at sample points plus Gram deviations.

    Deterministic given the grid order and seed. The Gram matrix of the
    checked modes is integrated over the ordered simplex and compared
    entrywise against the identity.
    """
    _check_cost(m)
    grid = grid or QuadratureGrid(64 if m // 2 <= 2 else 24)
    k = m // 2
    rng = np.random.default_rng(seed)
    pts = np.sort(rng.random((n_points, k)), axis=1)
    modes = strip_modes(m, max_modes)
    checks = []
    for mode in modes:
        f = lambda xs, md=mode: eigenfunction_values(md, xs)
        applied = apply_transfer_numeric(m, f, grid)(pts)
        resid = float(np.max(np.abs(applied - mode.eigenvalue * f(pts))))
        checks.append(ModeCheck(mode.indices, mode.eigenvalue, resid, resid <= tol))
    qpts, qwts = simplex_quadrature(k, min(grid.order, 48))
    vals = np.stack([eigenfunction_values(md, qpts) for md in modes])
    gram = (vals * qwts) @ vals.T
    gram_dev = float(np.max(np.abs(gram - np.eye(len(modes)))))
    return EigenReport(m, grid.order, tol, tuple(checks), gram_dev)


@dataclass(frozen=True)
class SeriesCheck:
    """Truncated spectral series against an exact target.

    The target is exact_coeff * pi^pi_power; `approx` is the truncated sum
    rearranged to the same normalization.
    """

    kind: str
    n: int
    terms: int
    approx: float
    exact_coeff: Fraction
    pi_power: int
    rel_err: float

    @property
    def target(self) -> float:
        return float(self.exact_coeff) * pi**self.pi_power


def _pair_averaged_partial(terms: np.ndarray) -> float:
    """Partial sum with the last two partial sums averaged (alternating tails)."""
    s = float(terms.sum())
    return s - float(terms[-1]) / 2.0


def spectral_series_check(kind: str, n: int, terms: int = 10**5) -> SeriesCheck:
    """Evaluate one of the three classical spectral series in floating point.

    * updown_eq9:  A_n from the reflected-interval operator's spectrum,
    * strip3_zeta: sum k^-2n against the even-zeta Bernoulli closed form,
    * strip4_euler: the alternating odd-power sum against the Euler form.
    """
    if n < 1 or terms < 2:
        raise ValueError("need n >= 1 and terms >= 2")
    k = np.arange(1, terms + 1, dtype=float)
    if kind == "updown_eq9":
        a_n = zigzag_numbers(n)[n]
        tv = (2 * k - 1) ** (-(n + 1))
        if n % 2 == 0:
            tv = tv * (-1) ** (k - 1)
            series = _pair_averaged_partial(tv)
        else:
            series = float(tv.sum())
        approx = 2 ** (n + 2) * factorial(n) / pi ** (n + 1) * series
        exact = Fraction(a_n)
        rel = abs(approx - a_n) / a_n
        return SeriesCheck(kind, n, terms, approx, exact, 0, rel)
    if kind == "strip3_zeta":
        b2n = bernoulli_numbers(2 * n)[2 * n]
        coeff = Fraction((-1) ** (n - 1) * 2 ** (2 * n - 1), factorial(2 * n)) * b2n
        approx = float((k ** (-2.0 * n)).sum())
        target = float(coeff) * pi ** (2 * n)
        rel = abs(approx - target) / abs(target)
        return SeriesCheck(kind, n, terms, approx, coeff, 2 * n, rel)
    if kind == "strip4_euler":
        e2n = zigzag_numbers(2 * n)[2 * n] * (-1) ** n  # E_{2n}
        coeff = Fraction((-1) ** n * e2n, 2 ** (2 * n + 2) * factorial(2 * n))
        tv = (-1) ** (k - 1) * (2 * k - 1) ** (-(2.0 * n + 1))
        approx = _pair_averaged_partial(tv)
        target = float(coeff) * pi ** (2 * n + 1)
        rel = abs(approx - target) / abs(target)
        return SeriesCheck(kind, n, terms, approx, coeff, 2 * n + 1, rel)
    raise ValueError(f"unknown series kind {kind!r}")


def i_integral_closed(a: int, j: int) -> float:
    """Closed form of I(a, j) = (1/a!) int_0^1 x^a cos(pi(2j-1)x/2) dx."""
    if a < 0 or j < 1:
        raise ValueError("need a >= 0 and j >= 1")
    theta = pi * (2 * j - 1) / 2
    total = (-1) ** (j + 1) * sum(
        (-1) ** p / factorial(a - 2 * p) * theta ** (-(2 * p + 1))
        for p in range(a // 2 + 1))
    if a % 2 == 1:
        total += (-1) ** ((a + 1) // 2) * theta ** (-(a + 1))
    return total


def i_integral_check(a: int, j: int, grid: QuadratureGrid | None = None
                     ) -> tuple[float, float]:
    """(closed form, quadrature) for I(a, j); the two must agree to roundoff."""
    if a > 12 or j > 12:
        raise CostGuard("i_integral_check is calibrated for a, j <= 12")
    grid = grid or QuadratureGrid(96)
    nodes, wts = _leggauss(grid.order)
    p, w = _map_nodes(nodes, wts, 0.0, 1.0)
    theta = pi * (2 * j - 1) / 2
    quad = float((w * p**a * np.cos(theta * p)).sum()) / factorial(a)
    return i_integral_closed(a, j), quad


def x_series_check(N: int, p: int, q: int, terms: int = 10**5) -> float:
    """Relative error of the spectral series for X_N(p, q) against the exact value.

    The series is 2 sum_j (2(-1)^{j+1}/(pi(2j-1)))^N I(p,j) I(q,j); absolute
    convergence needs N >= 2.
    """
    if N < 2:
        raise ValueError("series check needs N >= 2")
    if terms < 10:
        raise ValueError("need at least 10 terms")
    j = np.arange(1, terms + 1, dtype=float)
    theta = pi * (2 * j - 1) / 2
    sign = (-1.0) ** (j + 1)

    def i_vals(a: int) -> np.ndarray:
        tot = sign * sum((-1) ** r / factorial(a - 2 * r) * theta ** (-(2 * r + 1))
                         for r in range(a // 2 + 1))
        if a % 2 == 1:
            tot = tot + (-1) ** ((a + 1) // 2) * theta ** (-(a + 1))
        return tot

    base = (2 * sign / (pi * (2 * j - 1))) ** N
    approx = 2 * float((base * i_vals(p) * i_vals(q)).sum())
    exact = float(x_coeff(N, p, q))
    return abs(approx - exact) / abs(exact)


def principal_product_check(k: int, sample_points: int = 100,
                            seed: int = DEFAULT_SEED) -> float:
    """Max deviation between the determinant and product forms of the principal mode.

    The product form carries the Chebyshev leading-coefficient constant
    2^{k(k-1)}: expanding cos((2i-1)t) as a degree-(2i-1) polynomial in
    cos t contributes 4^{i-1} per row of the determinant.
    """
    if k > 4:
        raise CostGuard("principal mode comparison limited to k <= 4")
    m = 2 * k
    mode = EigenMode.for_strip(m, tuple(range(k, 0, -1)))
    rng = np.random.default_rng(seed)
    pts = np.sort(rng.random((sample_points, k)), axis=1)
    # determinant rows ordered by increasing frequency (2i-1), matching i=1..k
    mats = np.empty((len(pts), k, k))
    for i in range(k):
        mats[:, i, :] = np.cos(pi * (2 * i + 1) * pts / 2)
    det_form = 2 ** (k / 2) * np.linalg.det(mats)
    c = np.cos(pi * pts / 2)
    prod_form = np.full(len(pts), 2 ** (k / 2) * 2 ** (k * (k - 1)))
    for i in range(k):
        prod_form = prod_form * c[:, i]
    for i in range(k):
        for j in range(i + 1, k):
            prod_form = prod_form * (c[:, j] ** 2 - c[:, i] ** 2)
    return float(np.max(np.abs(det_form - prod_form)))
