"""Skew Young diagrams: canonical (lambda, mu) forms, diagonal strips, ribbons.

Coordinates are 1-based matrix style: row 1 on top, column 1 on the left,
entries of a standard tableau increase left-to-right and top-to-bottom.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from .errors import ContainmentError, ShapeError, SpecError


def _check_partition(parts) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    for p in parts:
        if p < 0:
            raise ValueError(f"negative part in {parts}")
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"parts not weakly decreasing: {parts}")
    return parts


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing nonnegative parts; trailing zeros stripped."""

    parts: tuple[int, ...]

    def __init__(self, parts=()):
        parts = _check_partition(parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def padded(self, k: int) -> tuple[int, ...]:
        """Fixed-length view with explicit zeros (for determinant indexing)."""
        if len(self.parts) > k:
            raise ValueError(f"partition {self.parts} has more than {k} parts")
        return self.parts + (0,) * (k - len(self.parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


class SkewShape:
    """A skew diagram lambda \\ mu in canonical form.

    Canonical means: no leading/trailing rows of zero width, mu padded to
    the length of lambda, and the whole shape translated so some row has
    mu[i] = 0. Equality and hashing use the canonical (lambda, mu) pair.
    """

    __slots__ = ("lam", "mu", "cells", "n_cells", "_colspan")

    def __init__(self, lam, mu):
        lam = tuple(int(x) for x in lam)
        mu = tuple(int(x) for x in mu)
        if len(mu) < len(lam):
            mu = mu + (0,) * (len(lam) - len(mu))
        if len(mu) > len(lam):
            extra = mu[len(lam):]
            if any(extra):
                raise ContainmentError(f"mu={mu} longer than lambda={lam}")
            mu = mu[: len(lam)]
        _check_partition(lam)
        _check_partition(mu)
        for i, (l, m) in enumerate(zip(lam, mu)):
            if m > l:
                raise ContainmentError(f"mu[{i}]={m} > lambda[{i}]={l}")
        # canonicalize: drop empty boundary rows, translate columns left
        lo, hi = 0, len(lam)
        while lo < hi and lam[lo] == mu[lo]:
            lo += 1
        while hi > lo and lam[hi - 1] == mu[hi - 1]:
            hi -= 1
        lam, mu = lam[lo:hi], mu[lo:hi]
        if lam:
            shift = min(mu)
            if shift:
                lam = tuple(l - shift for l in lam)
                mu = tuple(m - shift for m in mu)
        self.lam = lam
        self.mu = mu
        self.cells = tuple(
            (i + 1, j)
            for i in range(len(lam))
            for j in range(mu[i] + 1, lam[i] + 1)
        )
        self.n_cells = len(self.cells)
        self._colspan = None

    def __eq__(self, other):
        return isinstance(other, SkewShape) and self.lam == other.lam and self.mu == other.mu

    def __hash__(self):
        return hash((self.lam, self.mu))

    def __repr__(self):
        return f"SkewShape({list(self.lam)}, {list(self.mu)})"

    def cell_set(self) -> frozenset:
        return frozenset(self.cells)

    def column_intervals(self) -> list[tuple[int, int, int]]:
        """(col, top_row, bottom_row) for every nonempty column, left to right."""
        if self._colspan is None:
            spans = {}
            for r, c in self.cells:
                t, b = spans.get(c, (r, r))
                spans[c] = (min(t, r), max(b, r))
            self._colspan = [(c, t, b) for c, (t, b) in sorted(spans.items())]
        return self._colspan

    def transpose(self) -> "SkewShape":
        """Conjugate shape (rows and columns exchanged)."""
        width = self.lam[0] if self.lam else 0
        lam_t = [sum(1 for l in self.lam if l >= j) for j in range(1, width + 1)]
        mu_t = [sum(1 for m in self.mu if m >= j) for j in range(1, width + 1)]
        return SkewShape(lam_t, mu_t)

    def rotate180(self) -> "SkewShape":
        """180-degree rotation (exchanges head and tail of a strip)."""
        if not self.lam:
            return self
        w = self.lam[0]
        lam_r = [w - m for m in reversed(self.mu)]
        mu_r = [w - l for l in reversed(self.lam)]
        return SkewShape(lam_r, mu_r)


def make_skew(lam, mu=()) -> SkewShape:
    """Canonical skew shape from outer/inner partitions; raises ContainmentError."""
    lam = Partition(lam)
    mu = Partition(mu)
    return SkewShape(lam.parts, mu.parts)


@dataclass(frozen=True)
class StripSpec:
    """Parameters of an m-strip diagonal diagram.

    The body is n columns of m boxes each descending like a staircase; the
    head and tail are rotated partitions (k = floor(m/2) parts, zeros
    allowed) capping the top-right and bottom-left ends.
    """

    m: int
    n: int
    head: tuple[int, ...]
    tail: tuple[int, ...]

    def __init__(self, m: int, n: int, head=(), tail=()):
        if m < 2:
            raise SpecError("strip thickness m must be >= 2")
        if n < 1:
            raise SpecError("column count n must be >= 1")
        k = m // 2
        try:
            head = Partition(head).padded(k)
            tail = Partition(tail).padded(k)
        except ValueError as exc:
            raise SpecError(str(exc)) from exc
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "tail", tail)

    @property
    def k(self) -> int:
        return self.m // 2

    @property
    def eps(self) -> int:
        return self.m - 2 * self.k

    def ell(self) -> list[int]:
        """L_i = head_i + k - i (1-based i), the head determinant exponents."""
        k = self.k
        return [self.head[i] + k - 1 - i for i in range(k)]

    def emm(self) -> list[int]:
        """M_i = tail_i + k - i (1-based i)."""
        k = self.k
        return [self.tail[i] + k - 1 - i for i in range(k)]

    def n_cells(self) -> int:
        k, eps = self.k, self.eps
        tri = k * (k - 1) // 2 if eps == 0 else k * (k + 1) // 2
        return self.m * self.n - 2 * tri + sum(self.head) + sum(self.tail)


def strip_shape(spec: StripSpec) -> SkewShape:
    """Skew shape of the m-strip diagram described by `spec`.

    Column c of the body spans m rows, each column one row higher than the
    one to its left. The staircase corners at the two ends are trimmed and
    the head/tail partitions grow back out of the trimmed corners: head
    part i adjusts the top of column n+1-i, tail part j the bottom of
    column j. Rows are translated afterwards so the top row is 1.
    """
    m, n, k, eps = spec.m, spec.n, spec.k, spec.eps
    top = {}
    bot = {}
    for c in range(1, n - k + 1):
        top[c] = n - c + 1
    for i in range(1, k + 1):
        c = n + 1 - i
        if c >= 1:
            top[c] = k + eps - spec.head[i - 1]
        elif spec.head[i - 1]:
            raise SpecError(f"head part {i} does not fit on {n} columns")
    for c in range(k + 1, n + 1):
        bot[c] = n - c + m
    for j in range(1, k + 1):
        if j <= n:
            bot[j] = n + m - k - eps + spec.tail[j - 1]
        elif spec.tail[j - 1]:
            raise SpecError(f"tail part {j} does not fit on {n} columns")
    cols = sorted(top)
    if cols != sorted(bot) or cols != list(range(1, n + 1)):
        raise SpecError("strip construction left a column unbounded")
    for c in cols:
        if top[c] > bot[c]:
            raise SpecError(f"empty column {c} in strip construction")
    for a, b in zip(cols, cols[1:]):
        if top[b] > top[a] or bot[b] > bot[a]:
            raise SpecError("strip construction is not a skew shape")
    shift = 1 - min(top.values())
    rows = range(min(top.values()) + shift, max(bot.values()) + shift + 1)
    lam, mu = [], []
    for r in rows:
        cs = [c for c in cols if top[c] + shift <= r <= bot[c] + shift]
        if not cs:
            raise SpecError("strip construction produced an empty middle row")
        if cs != list(range(cs[0], cs[-1] + 1)):
            raise SpecError("strip construction produced a broken row")
        lam.append(cs[-1])
        mu.append(cs[0] - 1)
    shape = SkewShape(lam, mu)
    if shape.n_cells != spec.n_cells():
        raise SpecError(
            f"cell count {shape.n_cells} differs from {spec.n_cells()} "
            f"(head/tail parts do not fit the trimmed corners)"
        )
    return shape


def updown_shape(size: int) -> SkewShape:
    """The zig-zag shape whose tableaux biject with up-down permutations of `size`."""
    if size < 1:
        raise ValueError("size must be >= 1")
    if size == 1:
        return make_skew((1,))
    if size % 2 == 0:
        return strip_shape(StripSpec(2, size // 2))
    m = (size + 1) // 2
    lam = (m,) + tuple(range(m, 1, -1))
    mu = tuple(range(m - 1, 0, -1)) + (0,)
    return make_skew(lam, mu)


def ribbon_from_descents(descents, size: int) -> SkewShape:
    """Connected ribbon whose tableaux biject with permutations of a descent class.

    {1..size} is split into maximal runs at the descents; runs are stacked
    bottom-up as rows, each row overlapping the row below it in exactly one
    column, so each descent becomes a vertical adjacency.
    """
    descents = sorted(set(int(d) for d in descents))
    if any(d < 1 or d > size - 1 for d in descents):
        raise ValueError(f"descents {descents} not within 1..{size - 1}")
    bounds = [0] + descents + [size]
    runs = [b - a for a, b in zip(bounds, bounds[1:])]  # bottom row first
    rows = list(reversed(runs))  # top to bottom
    last = [0] * len(rows)
    last[0] = sum(rows)  # generous start column; canonicalization shifts left
    for i in range(1, len(rows)):
        first_above = last[i - 1] - rows[i - 1] + 1
        last[i] = first_above
    lam = last
    mu = [last[i] - rows[i] for i in range(len(rows))]
    return SkewShape(lam, mu)


@dataclass(frozen=True)
class Tableau:
    """A standard filling of a skew shape: cell -> value bijection onto 1..N."""

    shape: SkewShape
    entries: tuple  # tuple of ((row, col), value) sorted row-major

    def __init__(self, shape: SkewShape, entries):
        if isinstance(entries, dict):
            entries = tuple(sorted(entries.items()))
        else:
            entries = tuple(sorted((tuple(c), v) for c, v in entries))
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "entries", entries)
        self._validate()

    def _validate(self):
        ent = dict(self.entries)
        cells = set(self.shape.cells)
        if set(ent) != cells:
            raise ShapeError("entries do not cover the shape exactly")
        vals = sorted(ent.values())
        if vals != list(range(1, self.shape.n_cells + 1)):
            raise ShapeError("entries are not a bijection onto 1..n")
        for (r, c), v in ent.items():
            if (r, c + 1) in cells and ent[(r, c + 1)] <= v:
                raise ShapeError(f"row not increasing at {(r, c)}")
            if (r + 1, c) in cells and ent[(r + 1, c)] <= v:
                raise ShapeError(f"column not increasing at {(r, c)}")

    def value_at(self, cell) -> int:
        return dict(self.entries)[cell]

    def entry_sequence(self) -> tuple[int, ...]:
        """Values read row-major; the lexicographic key used by enumeration."""
        return tuple(v for _, v in self.entries)


def tableau_to_updown(t: Tableau) -> tuple[int, ...]:
    """Up-down permutation read from a 2-strip zig-zag tableau.

    Walks the ribbon from its bottom-left box going alternately right and
    up; if the shape forces the walk to start upward (the conjugate
    orientation) the reading is reversed, which restores the up-down
    pattern. Raises ShapeError if the shape is not a zig-zag ribbon.
    """
    shape = t.shape
    cells = set(shape.cells)
    ent = dict(t.entries)
    if not cells:
        raise ShapeError("empty shape")
    r = max(c[0] for c in cells)
    start = (r, min(c for rr, c in cells if rr == r))
    path = [start]
    first_step = None
    want = None  # alternation: next forced direction, None = free
    cur = start
    while len(path) < len(cells):
        r, c = cur
        right, up = (r, c + 1), (r - 1, c)
        options = [d for d, cell in (("right", right), ("up", up)) if cell in cells]
        if want in options:
            step = want
        elif want is None and len(options) == 1:
            step = options[0]
        else:
            raise ShapeError("not an up-down (2-strip zig-zag) shape")
        cur = right if step == "right" else up
        path.append(cur)
        if first_step is None:
            first_step = step
        want = "up" if step == "right" else "right"
    if len(set(path)) != len(cells):
        raise ShapeError("shape is not a single connected ribbon")
    seq = [ent[cell] for cell in path]
    if first_step == "up":
        seq.reverse()
    for i in range(len(seq) - 1):
        ok = seq[i] < seq[i + 1] if i % 2 == 0 else seq[i] > seq[i + 1]
        if not ok:
            raise ShapeError("reading is not an up-down permutation")
    return tuple(seq)


def random_skew_shape(rng: random.Random, max_cells: int = 11, max_rows: int = 5,
                      max_width: int = 6) -> SkewShape:
    """Seeded random canonical skew shape with 1..max_cells cells."""
    while True:
        rows = rng.randint(1, max_rows)
        lam = sorted((rng.randint(1, max_width) for _ in range(rows)), reverse=True)
        mu = []
        cap = lam[0]
        for l in lam:
            m = rng.randint(0, min(l, cap))
            mu.append(m)
            cap = m
        shape = SkewShape(lam, mu)
        if 1 <= shape.n_cells <= max_cells:
            return shape


# -- text format -------------------------------------------------------------

def format_shape(obj) -> str:
    """Serialize a shape or spec in the CLI text grammar."""
    if isinstance(obj, StripSpec):
        head = ",".join(map(str, obj.head))
        tail = ",".join(map(str, obj.tail))
        return f"strip:m={obj.m},n={obj.n},head={head};tail={tail}"
    if isinstance(obj, SkewShape):
        lam = ",".join(map(str, obj.lam))
        mu = ",".join(map(str, obj.mu))
        return f"lambda={lam};mu={mu}" if mu else f"lambda={lam};mu="
    raise TypeError(f"cannot format {type(obj).__name__}")


def _parse_ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(x) for x in text.split(",")]


def parse_shape_text(text: str):
    """Parse the CLI text grammar; returns SkewShape, StripSpec, or a ribbon SkewShape."""
    text = text.strip()
    if text.startswith("strip:"):
        body = text[len("strip:"):]
        m_ = re.fullmatch(r"m=(\d+),n=(\d+),head=([\d,]*);tail=([\d,]*)", body)
        if not m_:
            raise ValueError(f"bad strip text {text!r}")
        return StripSpec(int(m_.group(1)), int(m_.group(2)),
                         _parse_ints(m_.group(3)), _parse_ints(m_.group(4)))
    if text.startswith("ribbon:"):
        body = text[len("ribbon:"):]
        m_ = re.fullmatch(r"size=(\d+);descents=([\d,]*)", body)
        if not m_:
            raise ValueError(f"bad ribbon text {text!r}")
        return ribbon_from_descents(_parse_ints(m_.group(2)), int(m_.group(1)))
    m_ = re.fullmatch(r"lambda=([\d,]*);mu=([\d,]*)", text)
    if not m_:
        raise ValueError(f"bad shape text {text!r}")
    return make_skew(_parse_ints(m_.group(1)), _parse_ints(m_.group(2)))


def as_skew_shape(obj) -> SkewShape:
    """Coerce a SkewShape or StripSpec to its SkewShape."""
    if isinstance(obj, SkewShape):
        return obj
    if isinstance(obj, StripSpec):
        return strip_shape(obj)
    raise TypeError(f"cannot interpret {type(obj).__name__} as a shape")
