"""Exact special sequences (zig-zag, Euler, tangent, Bernoulli) and rational power series.

Everything here is integer or Fraction arithmetic; no floating point. The
zig-zag numbers A_n count up-down permutations (A_0 = A_1 = 1, A_2 = 1,
A_3 = 2, A_4 = 5, ...) and tie the other sequences together:

    A_{2n} = (-1)^n E_{2n},    A_{2n-1} = T_n,
    T_n    = (-1)^{n-1} 4^n (4^n - 1) B_{2n} / (2n).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

SEQ_KINDS = ("zigzag", "euler", "tangent", "bernoulli", "abar", "atilde", "ahat")

# Grow-only memo tables; extension is serialized, reads are safe because
# existing entries are never mutated.
_lock = threading.Lock()
_zigzag: list[int] = [1]
_seidel_row: list[int] = [1]  # last boustrophedon row, ends with _zigzag[-1]
_bernoulli: list[Fraction] = [Fraction(1)]


def zigzag_numbers(n_max: int) -> list[int]:
    """Zig-zag numbers A_0..A_n_max via the Seidel boustrophedon triangle.

    Each row of the triangle is filled by running sums in alternating
    direction; only integer additions are used.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    with _lock:
        global _seidel_row
        while len(_zigzag) <= n_max:
            prev = _seidel_row
            row = [0] * (len(prev) + 1)
            acc = 0
            for i in range(1, len(row)):
                acc += prev[len(prev) - i]
                row[i] = acc
            _seidel_row = row
            _zigzag.append(row[-1])
        return _zigzag[: n_max + 1]


def bernoulli_numbers(n_max: int) -> list[Fraction]:
    """Bernoulli numbers B_0..B_n_max (B_1 = -1/2) as exact Fractions.

    Uses the recurrence sum_{j<=n} C(n+1, j) B_j = 0 obtained by
    multiplying the defining series x/(e^x - 1) by (e^x - 1)/x.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    with _lock:
        while len(_bernoulli) <= n_max:
            n = len(_bernoulli)
            s = sum(comb(n + 1, j) * _bernoulli[j] for j in range(n))
            _bernoulli.append(Fraction(-s, n + 1))
        return _bernoulli[: n_max + 1]


def euler_tangent_numbers(n_max: int) -> tuple[list[int], list[int]]:
    """Euler numbers [E_0, E_2, ..., E_{2 n_max}] and tangent numbers [T_1..T_n_max].

    Derived from the zig-zag table (E_{2n} = (-1)^n A_{2n}, T_n = A_{2n-1});
    the tangent/Bernoulli relation is asserted exactly as a cross-check.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    a = zigzag_numbers(2 * n_max)
    euler = [(-1) ** n * a[2 * n] for n in range(n_max + 1)]
    tangent = [a[2 * n - 1] for n in range(1, n_max + 1)]
    bern = bernoulli_numbers(2 * n_max)
    for n in range(1, n_max + 1):
        expect = Fraction((-1) ** (n - 1) * 4**n * (4**n - 1), 2 * n) * bern[2 * n]
        if expect != tangent[n - 1]:
            raise AssertionError(f"tangent/Bernoulli relation failed at n={n}")
    return euler, tangent


def scaled_a(kind: str, n: int) -> Fraction:
    """Scaled zig-zag values: abar = A_n/n!, and the two volume rescalings

    atilde_n = abar_n / (2^{n+1} - 1),
    ahat_n   = (2^n - 1) abar_n / (2^n (2^{n+1} - 1)).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    abar = Fraction(zigzag_numbers(n)[n], factorial(n))
    if kind == "abar":
        return abar
    if kind == "atilde":
        return abar / (2 ** (n + 1) - 1)
    if kind == "ahat":
        return Fraction(2**n - 1, 2**n * (2 ** (n + 1) - 1)) * abar
    raise ValueError(f"unknown scaled kind {kind!r}")


@dataclass(frozen=True)
class SeqTable:
    """A named prefix of one of the exact sequences."""

    kind: str
    values: tuple


def seq_table(kind: str, n_max: int) -> SeqTable:
    """Table of sequence values; `tangent` is indexed from 1, the rest from 0."""
    if kind not in SEQ_KINDS:
        raise ValueError(f"unknown sequence kind {kind!r}")
    if kind == "zigzag":
        vals = zigzag_numbers(n_max)
    elif kind == "euler":
        vals = euler_tangent_numbers(max(n_max, 1))[0][: n_max + 1]
    elif kind == "tangent":
        vals = euler_tangent_numbers(max(n_max, 1))[1][:n_max]
    elif kind == "bernoulli":
        vals = bernoulli_numbers(n_max)
    else:
        vals = [scaled_a(kind, n) for n in range(n_max + 1)]
    return SeqTable(kind, tuple(vals))


@dataclass(frozen=True)
class RatSeries:
    """Truncated power series with exact rational coefficients.

    coefficients[j] is the coefficient of x^j; all ring operations are
    truncated at the stated order and remain exact.
    """

    coefficients: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, j: int) -> Fraction:
        return self.coefficients[j]

    @staticmethod
    def from_list(coeffs, order: int | None = None) -> "RatSeries":
        c = [Fraction(x) for x in coeffs]
        if order is not None:
            c = (c + [Fraction(0)] * (order + 1))[: order + 1]
        return RatSeries(tuple(c))

    def truncate(self, order: int) -> "RatSeries":
        return RatSeries.from_list(self.coefficients, order)

    def __add__(self, other: "RatSeries") -> "RatSeries":
        n = min(self.order, other.order)
        return RatSeries(tuple(self[j] + other[j] for j in range(n + 1)))

    def __sub__(self, other: "RatSeries") -> "RatSeries":
        n = min(self.order, other.order)
        return RatSeries(tuple(self[j] - other[j] for j in range(n + 1)))

    def __mul__(self, other: "RatSeries") -> "RatSeries":
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coefficients[: n + 1]):
            if a:
                for j in range(n + 1 - i):
                    b = other.coefficients[j]
                    if b:
                        out[i + j] += a * b
        return RatSeries(tuple(out))

    def inverse(self) -> "RatSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        if self[0] == 0:
            raise ZeroDivisionError("series has zero constant term")
        n = self.order
        inv = [Fraction(0)] * (n + 1)
        inv[0] = 1 / self[0]
        for j in range(1, n + 1):
            s = sum(self[i] * inv[j - i] for i in range(1, j + 1))
            inv[j] = -s / self[0]
        return RatSeries(tuple(inv))

    def __truediv__(self, other: "RatSeries") -> "RatSeries":
        return self * other.inverse()


SERIES_NAMES = ("tan_plus_sec", "tan", "sec", "bernoulli_egf", "strip3_gf")


def series_coefficients(name: str, order: int) -> RatSeries:
    """Exact Taylor coefficients of the named series, up to x^order.

    Trigonometric series are assembled from the zig-zag and Bernoulli
    tables; nothing transcendental is evaluated. `strip3_gf` is the even
    series whose x^{2n} coefficient is the (3n)!-normalized count of the
    fully-capped 3-strip family, built from the two x*cot expansions
    x*cot(x/2) - x*cot(x) = sum_k (2(-1)^k - (-4)^k) B_{2k} x^{2k}/(2k)!.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if name in ("tan_plus_sec", "tan", "sec"):
        a = zigzag_numbers(order)
        coeffs = []
        for j in range(order + 1):
            keep = name == "tan_plus_sec" or (name == "tan") == (j % 2 == 1)
            coeffs.append(Fraction(a[j], factorial(j)) if keep else Fraction(0))
        return RatSeries(tuple(coeffs))
    if name == "bernoulli_egf":
        b = bernoulli_numbers(order)
        return RatSeries(tuple(b[j] / factorial(j) for j in range(order + 1)))
    if name == "strip3_gf":
        b = bernoulli_numbers(order)
        coeffs = [Fraction(0)] * (order + 1)
        for k in range(0, order // 2 + 1):
            coeffs[2 * k] = (2 * (-1) ** k - (-4) ** k) * b[2 * k] / factorial(2 * k)
        return RatSeries(tuple(coeffs))
    raise ValueError(f"unknown series name {name!r}")
