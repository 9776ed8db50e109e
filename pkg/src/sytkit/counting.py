"""Ground-truth SYT counting: down-set DP, backtracking, and the Aitken determinant.

The DP walks the lattice of down-sets (order ideals) of the cell poset.
For a skew shape a down-set is a tuple of per-column fill depths t_c with
0 <= t_c <= height_c and t_c <= t_{c-1} + d_c, where d_c is the offset
between the tops of adjacent columns; the number of standard tableaux is
the number of maximal chains of that lattice.

Two interchangeable engines compute the chain count:

* a dict-based engine over Python big ints (reference, used for small
  lattices), and
* a vectorized engine that runs the same level-by-level recurrence
  modulo several 57-bit primes in int64 numpy arrays and reconstructs
  the exact integer by CRT (the prime product is checked to exceed
  n_cells!, a trivial upper bound for the count).
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from math import factorial, perm

import numpy as np

from .errors import BudgetExceeded, IntegralityError, LimitExceeded
from .shapes import SkewShape, Tableau, ribbon_from_descents

DEFAULT_STATE_BUDGET = 10**7
_DICT_ENGINE_MAX_STATES = 20_000

# primes just below 2**57: reduceat partial sums of <=32 residues stay in int64
_CRT_PRIMES = (
    144115188075855859, 144115188075855847, 144115188075855823,
    144115188075855811, 144115188075855803, 144115188075855761,
    144115188075855677, 144115188075855599, 144115188075855509,
    144115188075855449, 144115188075855439, 144115188075855421,
)


def state_budget() -> int:
    return int(os.environ.get("SYT_BUDGET_STATES", DEFAULT_STATE_BUDGET))


def _columns(shape: SkewShape):
    """Per-column (height, d) with d = top_{c-1} - top_c, None if no left neighbor."""
    spans = shape.column_intervals()
    cols = []
    prev_col = prev_top = None
    for c, top, bot in spans:
        d = prev_top - top if prev_col == c - 1 else None
        cols.append((bot - top + 1, d))
        prev_col, prev_top = c, top
    return cols


def downset_count(shape: SkewShape) -> int:
    """Exact number of down-sets of the cell poset (the DP state count)."""
    cols = _columns(shape)
    if not cols:
        return 1
    h0, _ = cols[0]
    dist = [1] * (h0 + 1)
    for h, d in cols[1:]:
        if d is None:
            total = sum(dist)
            dist = [total] * (h + 1)
        else:
            suffix = list(dist)
            for i in range(len(suffix) - 2, -1, -1):
                suffix[i] += suffix[i + 1]
            dist = [suffix[max(0, t - d)] if t - d < len(suffix) else 0
                    for t in range(h + 1)]
    return sum(dist)


def _dp_dict(cols, n_cells: int) -> int:
    nc = len(cols)
    heights = [h for h, _ in cols]
    dl = [d for _, d in cols]
    level = {(0,) * nc: 1}
    for _ in range(n_cells):
        nxt: dict = {}
        get = nxt.get
        for state, cnt in level.items():
            for j in range(nc):
                t = state[j]
                if t == heights[j]:
                    continue
                d = dl[j]
                if d is not None and t + 1 > state[j - 1] + d:
                    continue
                ns = state[:j] + (t + 1,) + state[j + 1:]
                nxt[ns] = get(ns, 0) + cnt
        level = nxt
    (only,) = level.values()
    return only


def _crt(residues, primes) -> int:
    x, mod = 0, 1
    for r, p in zip(residues, primes):
        t = ((r - x) * pow(mod, -1, p)) % p
        x += mod * t
        mod *= p
    return x


def _count_upper_bound(cols, n_cells: int) -> int:
    """Cheap upper bound for the SYT count: values split across columns
    determine the filling, so n!/prod(h_c!) bounds the count (and by the
    transposed argument so does the row version)."""
    by_cols = 1
    for h, _ in cols:
        by_cols *= factorial(h)
    return factorial(n_cells) // by_cols


def _dp_crt(cols, n_cells: int) -> int:
    nc = len(cols)
    heights = np.array([h for h, _ in cols], dtype=np.int64)
    strides = np.ones(nc, dtype=np.int64)
    for j in range(1, nc):
        strides[j] = strides[j - 1] * (heights[j - 1] + 1)
    bound = _count_upper_bound(cols, n_cells)
    nprimes, prod = 1, _CRT_PRIMES[0]
    while prod <= bound:
        prod *= _CRT_PRIMES[nprimes]
        nprimes += 1
    primes = _CRT_PRIMES[:nprimes]
    pr = np.array(primes, dtype=np.int64)[None, :]

    no_left = 1 << 30  # sentinel offset: adjacency test always passes
    hrow = heights[None, :].astype(np.int32)
    drow = np.array([no_left if d is None else d for _, d in cols],
                    dtype=np.int32)[None, :]

    keys = np.zeros(1, dtype=np.int64)
    digits = np.zeros((1, nc), dtype=np.int32)
    counts = np.ones((1, nprimes), dtype=np.int64)
    arange_cache = np.arange(0)
    for _ in range(n_cells):
        ok = digits < hrow
        ok[:, 1:] &= digits[:, 1:] < digits[:, :-1] + drow[:, 1:]
        src, col = np.nonzero(ok)
        cand = keys[src] + strides[col]
        order = np.argsort(cand)
        cand = cand[order]
        src = src[order]
        col = col[order]
        starts = np.flatnonzero(np.concatenate(([True], cand[1:] != cand[:-1])))
        keys = cand[starts]
        digits = digits[src[starts]]
        if len(arange_cache) != len(starts):
            arange_cache = np.arange(len(starts))
        digits[arange_cache, col[starts]] += 1
        counts = np.add.reduceat(counts[src], starts, axis=0) % pr
    assert keys.shape == (1,)
    return _crt([int(v) for v in counts[0]], primes)


def count_syt_dp(shape: SkewShape, engine: str | None = None) -> int:
    """Number of standard tableaux by dynamic programming over down-sets.

    `engine` forces "dict" or "crt"; by default small lattices use the
    dict engine and larger ones the vectorized CRT engine. Raises
    BudgetExceeded when the lattice exceeds SYT_BUDGET_STATES.
    """
    if shape.n_cells == 0:
        return 1
    cols = _columns(shape)
    states = downset_count(shape)
    budget = state_budget()
    if states > budget:
        raise BudgetExceeded(
            f"down-set lattice has {states} states (budget {budget})", states)
    if engine is None:
        prod = 1
        for h, _ in cols:
            prod *= h + 1
        crt_ok = len(cols) <= 32 and prod < 2**62
        engine = "crt" if (states > _DICT_ENGINE_MAX_STATES and crt_ok) else "dict"
    if engine == "dict":
        return _dp_dict(cols, shape.n_cells)
    if engine == "crt":
        return _dp_crt(cols, shape.n_cells)
    raise ValueError(f"unknown engine {engine!r}")


def count_syt_backtrack(shape: SkewShape, max_cells: int = 12) -> int:
    """Second oracle: explicit placement of 1..n into addable cells (no memo)."""
    n = shape.n_cells
    if n > max_cells:
        raise BudgetExceeded(f"{n} cells exceeds the backtracking guard {max_cells}")
    cols = _columns(shape)
    nc = len(cols)
    heights = [h for h, _ in cols]
    dl = [d for _, d in cols]
    t = [0] * nc

    def rec(remaining: int) -> int:
        if remaining == 0:
            return 1
        total = 0
        for j in range(nc):
            tj = t[j]
            if tj == heights[j]:
                continue
            d = dl[j]
            if d is not None and tj + 1 > t[j - 1] + d:
                continue
            t[j] = tj + 1
            total += rec(remaining - 1)
            t[j] = tj
        return total

    return rec(n)


def enumerate_syt(shape: SkewShape, limit: int = 10_000) -> list[Tableau]:
    """All standard tableaux, sorted by row-major entry sequence.

    Counts first (cheap) and raises LimitExceeded when the count is above
    `limit`, before any enumeration work is done.
    """
    total = count_syt_dp(shape)
    if total > limit:
        raise LimitExceeded(f"{total} tableaux exceed limit {limit}")
    spans = shape.column_intervals()
    cols = _columns(shape)
    nc = len(cols)
    heights = [h for h, _ in cols]
    dl = [d for _, d in cols]
    t = [0] * nc
    filling: dict = {}
    out: list[Tableau] = []

    def rec(step: int):
        if step > shape.n_cells:
            out.append(Tableau(shape, dict(filling)))
            return
        for j in range(nc):
            tj = t[j]
            if tj == heights[j]:
                continue
            d = dl[j]
            if d is not None and tj + 1 > t[j - 1] + d:
                continue
            c, top, _ = spans[j]
            cell = (top + tj, c)
            t[j] = tj + 1
            filling[cell] = step
            rec(step + 1)
            del filling[cell]
            t[j] = tj
    rec(1)
    out.sort(key=lambda tab: tab.entry_sequence())
    return out


def _bareiss_det(a: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix (Bareiss elimination)."""
    n = len(a)
    a = [row[:] for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def count_syt_aitken(shape: SkewShape) -> int:
    """Aitken's determinant: n! det(1/(lambda_i - i - mu_j + j)!).

    Rows are scaled by suitable factorials so the determinant is computed
    fraction-free over integers; 1/x! is zero for negative x. The exact
    result is asserted to be a nonnegative integer.
    """
    lam, mu = shape.lam, shape.mu
    n_parts = len(lam)
    if n_parts == 0:
        return 1
    c_shift = max(j + 1 - mu[j] for j in range(n_parts))
    big = []
    for i in range(n_parts):
        mi = lam[i] - (i + 1) + c_shift
        row = []
        for j in range(n_parts):
            e = lam[i] - (i + 1) - mu[j] + (j + 1)
            row.append(perm(mi, mi - e) if 0 <= e <= mi else 0)
        big.append(row)
    det = _bareiss_det(big)
    denom = 1
    for i in range(n_parts):
        denom *= factorial(lam[i] - (i + 1) + c_shift)
    val = Fraction(factorial(shape.n_cells) * det, denom)
    if val.denominator != 1 or val < 0:
        raise IntegralityError(f"Aitken determinant gave {val} for {shape}")
    return int(val)


@lru_cache(maxsize=64)
def _descent_distribution_small(n: int) -> dict:
    """Descent-set counts for all of S_n via plain filtering (n <= 8)."""
    from itertools import permutations

    out: dict = {}
    for sigma in permutations(range(1, n + 1)):
        key = frozenset(i + 1 for i in range(n - 1) if sigma[i] > sigma[i + 1])
        out[key] = out.get(key, 0) + 1
    return out


def count_descent_class(n: int, descents) -> int:
    """Number of permutations in S_n with descent set exactly `descents`.

    Exhaustive for n <= 10 (plain filter up to 8, memoized prefix
    enumeration for 9-10); larger n goes through the descent ribbon and
    the down-set DP.
    """
    target = frozenset(int(d) for d in descents)
    if any(d < 1 or d > n - 1 for d in target):
        raise ValueError(f"descents {sorted(target)} not within 1..{n - 1}")
    if n <= 8:
        return _descent_distribution_small(n).get(target, 0)
    if n <= 10:
        return _count_descent_prefix(n, target)
    return count_syt_dp(ribbon_from_descents(target, n))


def _count_descent_prefix(n: int, target: frozenset) -> int:
    """Exhaustive enumeration over shared prefixes (mask, last value)."""
    want_descent = tuple(i in target for i in range(1, n))

    @lru_cache(maxsize=None)
    def go(mask: int, last: int, pos: int) -> int:
        if pos == n:
            return 1
        need = want_descent[pos - 1]
        total = 0
        for v in range(1, n + 1):
            if mask >> v & 1:
                continue
            if (last > v) != need:
                continue
            total += go(mask | (1 << v), v, pos + 1)
        return total

    total = sum(go(1 << first, first, 1) for first in range(1, n + 1))
    go.cache_clear()
    return total


def count_updown_bruteforce(n: int) -> int:
    """Up-down permutations of S_n counted by exhaustive prefix enumeration."""
    if n == 0:
        return 1
    if n == 1:
        return 1
    descents = frozenset(range(2, n, 2))
    if n <= 8:
        return _descent_distribution_small(n).get(descents, 0)
    return _count_descent_prefix(n, descents)
