"""Shape construction, the strip geometry calibration cases, ribbons, and
the tableau/up-down-permutation bijection."""

import random
from itertools import product

import pytest

from sytkit import (ContainmentError, Partition, ShapeError, SkewShape,
                    SpecError, StripSpec, Tableau, count_descent_class,
                    count_syt_dp, enumerate_syt, format_shape, make_skew,
                    parse_shape_text, random_skew_shape, ribbon_from_descents,
                    strip_shape, tableau_to_updown, updown_shape,
                    zigzag_numbers)


def box_partitions(k: int, maxpart: int):
    """All weakly decreasing k-tuples with parts <= maxpart."""
    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(cap, -1, -1):
            for rest in rec(remaining - 1, first):
                yield (first,) + rest
    return list(rec(k, maxpart))


def test_partition_basics():
    p = Partition((3, 2, 2, 0, 0))
    assert p.parts == (3, 2, 2)
    assert p.padded(5) == (3, 2, 2, 0, 0)
    assert p.size == 7
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_make_skew_examples():
    s = make_skew((2, 1))
    assert s.n_cells == 3
    fig1 = make_skew((5, 5, 5, 3, 2), (2, 2, 1, 1, 0))
    assert fig1.n_cells == 14
    with pytest.raises(ContainmentError):
        make_skew((1,), (2,))


def test_make_skew_canonicalization():
    # boundary empty rows are dropped, columns translate left
    s = make_skew((3, 3, 2, 2), (3, 2, 1, 1))
    assert s == make_skew((2, 1, 1), (1, 0, 0))
    assert s.lam == (2, 1, 1) and s.mu == (1, 0, 0)


def test_strip_shape_figure2_family():
    s = strip_shape(StripSpec(2, 5))
    assert s.lam == (5, 5, 4, 3, 2, 1)
    assert s.mu == (4, 3, 2, 1, 0, 0)
    assert s.n_cells == 10


def test_strip_shape_four_strip_cases():
    full = strip_shape(StripSpec(4, 2, (1, 0), (1, 0)))
    assert full.n_cells == 8
    rect = strip_shape(StripSpec(4, 2))
    assert rect.lam == (2, 2, 2) and rect.mu == (0, 0, 0)
    chain = strip_shape(StripSpec(4, 1, (1, 0), (1, 0)))
    assert chain.lam == (1, 1, 1, 1)
    assert count_syt_dp(chain) == 1


def test_strip_shape_rejects_oversized_parts():
    with pytest.raises(SpecError):
        strip_shape(StripSpec(4, 1, (1, 1), (0, 0)))  # second head part has no column
    with pytest.raises(SpecError):
        StripSpec(3, 2, (1, 1), ())  # more parts than k=1
    with pytest.raises(SpecError):
        StripSpec(1, 2)
    with pytest.raises(SpecError):
        StripSpec(3, 0)


@pytest.mark.parametrize("m", range(2, 9))
def test_strip_cell_count_formula(m):
    """|D| = m n - 2 t_eps(k) + |head| + |tail| for every spec that constructs."""
    k = m // 2
    eps = m - 2 * k
    tri = k * (k - 1) // 2 if eps == 0 else k * (k + 1) // 2
    parts = box_partitions(k, 4)
    for n in list(range(max(1, k), 2 * k + 3)) + [12]:
        for head, tail in product(parts, parts):
            spec = StripSpec(m, n, head, tail)
            shape = strip_shape(spec)
            assert shape.n_cells == m * n - 2 * tri + sum(head) + sum(tail)
            # tops/bots weakly decrease rightward: implied by valid SkewShape
            assert shape.lam and shape.mu[-1] == 0 or min(shape.mu) == 0


def test_ribbon_from_descents_examples():
    row = ribbon_from_descents(set(), 4)
    assert row.lam == (4,) and row.mu == (0,)
    col = ribbon_from_descents({1, 2, 3}, 4)
    assert col.lam == (1, 1, 1, 1)
    assert count_syt_dp(row) == count_syt_dp(col) == 1


def test_ribbon_updown_family():
    a = zigzag_numbers(8)
    for n in (1, 2, 3, 4):
        shape = ribbon_from_descents(set(range(1, 2 * n, 2)), 2 * n)
        assert count_syt_dp(shape) == a[2 * n]


@pytest.mark.parametrize("n", range(2, 8))
def test_ribbon_matches_descent_classes(n):
    from itertools import combinations
    positions = list(range(1, n))
    for r in range(n):
        for ds in combinations(positions, r):
            shape = ribbon_from_descents(ds, n)
            assert shape.n_cells == n
            assert count_syt_dp(shape) == count_descent_class(n, ds)


def test_tableau_validation():
    shape = make_skew((2, 1))
    Tableau(shape, {(1, 1): 1, (1, 2): 2, (2, 1): 3})
    with pytest.raises(ShapeError):
        Tableau(shape, {(1, 1): 2, (1, 2): 1, (2, 1): 3})
    with pytest.raises(ShapeError):
        Tableau(shape, {(1, 1): 1, (1, 2): 2})


def test_figure2_tableau_reading():
    # the pictured staircase and its filling; reading must give the permutation
    shape = make_skew((6, 5, 4, 3, 2), (4, 3, 2, 1, 0))
    entries = {(5, 1): 5, (5, 2): 8, (4, 2): 2, (4, 3): 9, (3, 3): 4,
               (3, 4): 10, (2, 4): 3, (2, 5): 7, (1, 5): 1, (1, 6): 6}
    t = Tableau(shape, entries)
    assert tableau_to_updown(t) == (5, 8, 2, 9, 4, 10, 3, 7, 1, 6)


def test_single_cell_tableau_reading():
    t = Tableau(make_skew((1,)), {(1, 1): 1})
    assert tableau_to_updown(t) == (1,)


def test_three_cell_updown_images():
    shape = updown_shape(3)
    perms = {tableau_to_updown(t) for t in enumerate_syt(shape)}
    assert perms == {(1, 3, 2), (2, 3, 1)}


@pytest.mark.parametrize("n", range(1, 9))
def test_updown_bijection(n):
    """Reading all tableaux of the zig-zag shape hits each up-down
    permutation exactly once."""
    shape = updown_shape(n)
    images = [tableau_to_updown(t) for t in enumerate_syt(shape, limit=2000)]
    assert len(images) == len(set(images)) == zigzag_numbers(n)[n]
    for sigma in images:
        assert all((sigma[i] < sigma[i + 1]) == (i % 2 == 0)
                   for i in range(n - 1))


def test_tableau_to_updown_rejects_non_strips():
    square = make_skew((2, 2))
    t = Tableau(square, {(1, 1): 1, (1, 2): 2, (2, 1): 3, (2, 2): 4})
    with pytest.raises(ShapeError):
        tableau_to_updown(t)
    row3 = make_skew((3,))
    t = Tableau(row3, {(1, 1): 1, (1, 2): 2, (1, 3): 3})
    with pytest.raises(ShapeError):
        tableau_to_updown(t)


def test_transforms_preserve_cells():
    rng = random.Random(11)
    for _ in range(25):
        s = random_skew_shape(rng, 11)
        assert s.transpose().transpose() == s
        assert s.rotate180().rotate180() == s
        assert s.transpose().n_cells == s.n_cells == s.rotate180().n_cells


def test_strip_rotation_swaps_head_and_tail():
    a = strip_shape(StripSpec(5, 4, (2, 1), (1, 0)))
    b = strip_shape(StripSpec(5, 4, (1, 0), (2, 1)))
    assert a.rotate180() == b


def test_shape_text_roundtrip():
    spec = StripSpec(4, 3, (2, 0), (1, 1))
    assert parse_shape_text(format_shape(spec)) == spec
    shape = make_skew((4, 3, 1), (2, 1, 0))
    assert parse_shape_text(format_shape(shape)) == shape
    ribbon = parse_shape_text("ribbon:size=5;descents=2,4")
    assert ribbon == ribbon_from_descents({2, 4}, 5)
    with pytest.raises(ValueError):
        parse_shape_text("nonsense")
