"""Closed-form strip counts: X/Y coefficient tables, the general determinant
formula, the specialized 3/4/5-strip formulas, and the descent-class counts
alpha_n/beta_n.

All evaluation is exact rational; every final count is asserted to be a
nonnegative integer (a free end-to-end checksum of the whole pipeline).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import IntegralityError, SpecError
from .numbers import euler_tangent_numbers, scaled_a
from .shapes import StripSpec, strip_shape


@lru_cache(maxsize=None)
def _abar(n: int) -> Fraction:
    return scaled_a("abar", n)


@lru_cache(maxsize=None)
def _atilde(n: int) -> Fraction:
    return scaled_a("atilde", n)


@lru_cache(maxsize=None)
def _ahat(n: int) -> Fraction:
    return scaled_a("ahat", n)


@lru_cache(maxsize=None)
def x_coeff(N: int, p: int, q: int) -> Fraction:
    """X_N(p, q): the four-part alternating sum over scaled zig-zag values.

    Symmetric in (p, q); the two single sums switch on by odd parity of p
    and q respectively, the closing term needs both odd. Defined down to
    N = -1 (every index touched is N+1 >= 0), which the determinant
    formula needs for the shortest even strips.
    """
    if N < -1 or p < 0 or q < 0:
        raise ValueError("need N >= -1 and p, q >= 0")
    tot = Fraction(0)
    for i in range(p // 2 + 1):
        for j in range(q // 2 + 1):
            tot += (Fraction((-1) ** (i + j)) * _abar(N + 2 * i + 2 * j + 1)
                    / (factorial(p - 2 * i) * factorial(q - 2 * j)))
    if p % 2 == 1:
        s = sum(Fraction((-1) ** j) * _abar(N + p + 2 * j + 1) / factorial(q - 2 * j)
                for j in range(q // 2 + 1))
        tot += (-1) ** ((p + 1) // 2) * s
    if q % 2 == 1:
        s = sum(Fraction((-1) ** i) * _abar(N + q + 2 * i + 1) / factorial(p - 2 * i)
                for i in range(p // 2 + 1))
        tot += (-1) ** ((q + 1) // 2) * s
    if p % 2 == 1 and q % 2 == 1:
        tot += (-1) ** ((p + q) // 2 + 1) * _abar(N + p + q + 1)
    return tot


@lru_cache(maxsize=None)
def y_coeff(N: int, p: int, q: int) -> Fraction:
    """Y_N(p, q): the odd-strip analogue of X_N; parity gates are on p, q even."""
    if N < -1 or p < 0 or q < 0:
        raise ValueError("need N >= -1 and p, q >= 0")
    tot = Fraction(0)
    for i in range(p // 2 + 1):
        for j in range(q // 2 + 1):
            tot += (Fraction((-1) ** (i + j)) * _ahat(N + 2 * i + 2 * j + 1)
                    / (factorial(p - 2 * i) * factorial(q - 2 * j)))
    if p % 2 == 0:
        s = sum(Fraction((-1) ** j) * _atilde(N + p + 2 * j + 1) / factorial(q - 2 * j)
                for j in range(q // 2 + 1))
        tot += (-1) ** (p // 2) * s
    if q % 2 == 0:
        s = sum(Fraction((-1) ** i) * _atilde(N + q + 2 * i + 1) / factorial(p - 2 * i)
                for i in range(p // 2 + 1))
        tot += (-1) ** (q // 2) * s
    if p % 2 == 0 and q % 2 == 0:
        tot += (-1) ** ((p + q) // 2) * _ahat(N + p + q + 1)
    return tot


def _det(mat) -> Fraction:
    """Cofactor-expansion determinant; the matrices here are at most 4x4."""
    n = len(mat)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return mat[0][0]
    total = Fraction(0)
    for j in range(n):
        if mat[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        total += (-1) ** j * mat[0][j] * _det(minor)
    return total


def _as_count(value: Fraction, context: str) -> int:
    if value.denominator != 1 or value < 0:
        raise IntegralityError(f"{context} evaluated to {value}, not a count")
    return int(value)


def count_strip(spec: StripSpec) -> int:
    """SYT count of an m-strip diagram via the k x k determinant in X_N or Y_N.

    N = 2n - m + 1 must be nonnegative; the cell count comes from the
    constructed shape, never from the formula inputs.
    """
    k = spec.k
    N = 2 * spec.n - spec.m + 1
    if N < -1:
        raise SpecError(f"need 2n - m + 1 >= -1, got {N}")
    shape = strip_shape(spec)
    fn = x_coeff if spec.m % 2 == 0 else y_coeff
    L, M = spec.ell(), spec.emm()
    mat = [[fn(N, L[i], M[j]) for j in range(k)] for i in range(k)]
    val = (-1) ** (k * (k - 1) // 2) * factorial(shape.n_cells) * _det(mat)
    return _as_count(val, f"count_strip({spec})")


THREE_STRIP_SPECS = {"a": ((0,), (0,)), "b": ((1,), (0,)), "c": ((1,), (1,))}
FOUR_STRIP_SPECS = {"F": ((0, 0), (0, 0)), "G": ((1, 0), (1, 0))}
FIVE_STRIP_SPEC = ((0, 0), (0, 0))


def strip_spec_3(variant: str, n: int) -> StripSpec:
    head, tail = THREE_STRIP_SPECS[variant]
    return StripSpec(3, n, head, tail)


def strip_spec_4(variant: str, n: int) -> StripSpec:
    head, tail = FOUR_STRIP_SPECS[variant]
    return StripSpec(4, n, head, tail)


def strip_spec_5(n: int) -> StripSpec:
    return StripSpec(5, n, *FIVE_STRIP_SPEC)


def count_3strip(variant: str, n: int) -> int:
    """Closed forms for the three 3-strip families (tangent-number formulas)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if variant not in THREE_STRIP_SPECS:
        raise ValueError(f"unknown 3-strip variant {variant!r}")
    t_n = euler_tangent_numbers(n)[1][n - 1]
    if variant == "a":
        val = Fraction(factorial(3 * n - 2) * t_n,
                       factorial(2 * n - 1) * 2 ** (2 * n - 2))
    elif variant == "b":
        val = Fraction(factorial(3 * n - 1) * t_n,
                       factorial(2 * n - 1) * 2 ** (2 * n - 1))
    else:
        val = Fraction(factorial(3 * n) * (2 ** (2 * n - 1) - 1) * t_n,
                       factorial(2 * n - 1) * 2 ** (2 * n - 1) * (2 ** (2 * n) - 1))
    return _as_count(val, f"count_3strip({variant}, {n})")


def count_4strip(variant: str, n: int) -> int:
    """Closed forms for the two 4-strip families (Euler/tangent products)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if variant not in FOUR_STRIP_SPECS:
        raise ValueError(f"unknown 4-strip variant {variant!r}")
    euler, tangent = euler_tangent_numbers(n + 1)
    if variant == "F":
        t_n = tangent[n - 1]
        val = factorial(4 * n - 2) * (
            Fraction(t_n * t_n, factorial(2 * n - 1) ** 2)
            + Fraction(euler[n - 1] * euler[n],
                       factorial(2 * n - 2) * factorial(2 * n)))
    else:
        val = factorial(4 * n) * (
            Fraction(euler[n] ** 2, factorial(2 * n) ** 2)
            - Fraction(euler[n - 1] * euler[n + 1],
                       factorial(2 * n - 2) * factorial(2 * n + 2)))
    return _as_count(val, f"count_4strip({variant}, {n})")


def count_5strip(n: int) -> int:
    """Closed form for the fully-trimmed 5-strip family (needs n >= 2)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    t = euler_tangent_numbers(max(n - 1, 1))[1][n - 2]
    val = Fraction(factorial(5 * n - 6) * t * t,
                   factorial(2 * n - 3) ** 2 * 2 ** (4 * n - 6)
                   * (2 ** (2 * n - 2) - 1))
    return _as_count(val, f"count_5strip({n})")


def alpha_descents(n: int, p: int, q: int) -> frozenset:
    """Descent set counted by alpha_n: {1..p}, then p+1, p+3, ..., p+2n-1,
    then the final run p+2n .. p+2n+q-1, inside S_{2n+p+q}."""
    des = set(range(1, p + 1))
    des.update(p + 2 * i - 1 for i in range(1, n + 1))
    des.update(range(p + 2 * n, p + 2 * n + q))
    return frozenset(des)


def beta_descents(n: int, p: int, q: int) -> frozenset:
    """Descent set counted by beta_n, inside S_{2n+1+p+q}."""
    des = set(range(1, p + 1))
    des.update(p + 2 * i - 1 for i in range(1, n + 1))
    return frozenset(des)


def alpha_beta(n: int, p: int, q: int) -> tuple[int, int]:
    """(alpha_n, beta_n) = ((2n+p+q)! X_{2n-1}(p,q), (2n+1+p+q)! X_{2n}(p,q))."""
    if n < 1 or p < 0 or q < 0:
        raise ValueError("need n >= 1 and p, q >= 0")
    alpha = factorial(2 * n + p + q) * x_coeff(2 * n - 1, p, q)
    beta = factorial(2 * n + 1 + p + q) * x_coeff(2 * n, p, q)
    return (_as_count(alpha, f"alpha({n},{p},{q})"),
            _as_count(beta, f"beta({n},{p},{q})"))
