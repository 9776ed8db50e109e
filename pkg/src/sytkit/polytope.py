"""Exact order-polytope volumes via transfer operators on polynomials.

The volume engine sweeps the diagonals of a skew shape from bottom-left to
top-right. The state after a cut is an exact polynomial in the cut's cell
values; moving to the next cut integrates each old cell variable between
its two neighbors in the new cut (or the constants 0/1 when a neighbor is
missing). For skew shapes every cover relation of the cell poset connects
adjacent diagonals, so each step is a sequence of univariate integrations
with variable bounds and no piecewise functions ever arise.
"""

from __future__ import annotations

import os
from fractions import Fraction
from itertools import permutations
from math import comb, factorial

from .errors import BudgetExceeded, SandwichError
from .shapes import SkewShape

DEFAULT_TERM_BUDGET = 10**6


def term_budget() -> int:
    return int(os.environ.get("SYT_BUDGET_TERMS", DEFAULT_TERM_BUDGET))


class MultiPoly:
    """Multivariate polynomial with Fraction coefficients and named variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars=(), terms=None):
        self.vars = tuple(vars)
        self.terms = {} if terms is None else terms

    @staticmethod
    def constant(value) -> "MultiPoly":
        value = Fraction(value)
        return MultiPoly((), {(): value} if value else {})

    @staticmethod
    def variable(name: str, power: int = 1, coeff=1) -> "MultiPoly":
        coeff = Fraction(coeff)
        if power == 0 or coeff == 0:
            return MultiPoly.constant(coeff)
        return MultiPoly((name,), {(power,): coeff})

    def n_terms(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def _projected(self, newvars: tuple[str, ...]) -> dict:
        idx = [newvars.index(v) for v in self.vars]
        out = {}
        width = len(newvars)
        for expo, coeff in self.terms.items():
            e = [0] * width
            for pos, p in zip(idx, expo):
                e[pos] = p
            out[tuple(e)] = coeff
        return out

    def _align(self, other: "MultiPoly"):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        common = tuple(sorted(set(self.vars) | set(other.vars)))
        return common, self._projected(common), other._projected(common)

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other)
        vars_, a, b = self._align(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly(vars_, out)

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = Fraction(other)
            if c == 0:
                return MultiPoly(self.vars, {})
            return MultiPoly(self.vars, {e: c * v for e, v in self.terms.items()})
        vars_, a, b = self._align(other)
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, Fraction(0)) + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MultiPoly(vars_, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other)
        vars_, a, b = self._align(other)
        return a == b

    def __hash__(self):
        raise TypeError("MultiPoly is mutable-ish; not hashable")

    def _with_var(self, name: str):
        """Index of `name` in self.vars, extending the variable list if new."""
        if name in self.vars:
            return self, self.vars.index(name)
        vars_ = self.vars + (name,)
        terms = {e + (0,): c for e, c in self.terms.items()}
        return MultiPoly(vars_, terms), len(vars_) - 1

    def antiderivative(self, var: str) -> "MultiPoly":
        poly, i = self._with_var(var)
        out = {}
        for e, c in poly.terms.items():
            e2 = list(e)
            e2[i] += 1
            out[tuple(e2)] = c / e2[i]
        return MultiPoly(poly.vars, out)

    def subst_bound(self, var: str, bound) -> "MultiPoly":
        """Substitute var := bound, where bound is a Fraction/int or a variable name."""
        if var not in self.vars:
            return self
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        out: dict = {}
        if isinstance(bound, str):
            tmp = MultiPoly(rest + (bound,) if bound not in rest else rest, {})
            vars_ = tmp.vars
            j = vars_.index(bound)
            for e, c in self.terms.items():
                base = e[:i] + e[i + 1:]
                eb = [0] * len(vars_)
                for pos, v in enumerate(rest):
                    eb[vars_.index(v)] = base[pos]
                eb[j] += e[i]
                key = tuple(eb)
                s = out.get(key, Fraction(0)) + c
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
            return MultiPoly(vars_, out)
        b = Fraction(bound)
        for e, c in self.terms.items():
            scale = b ** e[i] if e[i] else Fraction(1)
            if scale == 0:
                continue
            key = e[:i] + e[i + 1:]
            s = out.get(key, Fraction(0)) + c * scale
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return MultiPoly(rest, out)

    def integrate(self, var: str, lower, upper) -> "MultiPoly":
        """Definite integral over var; bounds are constants or variable names."""
        anti = self.antiderivative(var)
        return anti.subst_bound(var, upper) - anti.subst_bound(var, lower)

    def subst_affine(self, var: str, const, coeff, newvar: str) -> "MultiPoly":
        """Substitute var := const + coeff * newvar (binomial expansion)."""
        if var not in self.vars:
            return self
        const, coeff = Fraction(const), Fraction(coeff)
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        vars_ = rest if newvar in rest else rest + (newvar,)
        j = vars_.index(newvar)
        out: dict = {}
        for e, c in self.terms.items():
            base = [0] * len(vars_)
            for pos, v in enumerate(rest):
                base[vars_.index(v)] = (e[:i] + e[i + 1:])[pos]
            n = e[i]
            for t in range(n + 1):
                scale = c * comb(n, t) * coeff**t * const ** (n - t)
                if not scale:
                    continue
                eb = list(base)
                eb[j] += t
                key = tuple(eb)
                s = out.get(key, Fraction(0)) + scale
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return MultiPoly(vars_, out)

    def eval_at(self, assignment: dict) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for name, p in zip(self.vars, e):
                if p:
                    v *= Fraction(assignment[name]) ** p
            total += v
        return total

    def as_fraction(self) -> Fraction:
        if any(any(e) for e in self.terms):
            raise ValueError("polynomial is not constant")
        return self.terms.get((), Fraction(0))

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        bits = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(f"{v}^{p}" for v, p in zip(self.vars, e) if p)
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return "MultiPoly(" + " + ".join(bits) + ")"


def poly_integrate(f: MultiPoly, var: str, lower, upper) -> MultiPoly:
    """Definite integral of f over var between bounds (0, 1, or variable names)."""
    return f.integrate(var, lower, upper)


def _diagonals(shape: SkewShape) -> list[list[tuple[int, int]]]:
    by_v: dict = {}
    for r, c in shape.cells:
        by_v.setdefault(c - r, []).append((r, c))
    out = []
    for v in sorted(by_v):
        out.append(sorted(by_v[v]))
    return out


def order_polytope_volume(shape: SkewShape) -> Fraction:
    """Exact volume of the order polytope of a skew shape.

    Equals count_syt_dp(shape) / n_cells! — the two sides are computed by
    entirely different machinery and are cross-checked in the test suite.
    """
    if shape.n_cells == 0:
        return Fraction(1)
    cuts = _diagonals(shape)
    cells = shape.cell_set()
    budget = term_budget()

    # sandwich check: consecutive cells of a cut must be separated by a cell
    # of the previous cut (automatic for skew shapes; cheap to assert)
    for cut in cuts:
        for (r1, c1), (r2, c2) in zip(cut, cut[1:]):
            if r2 == r1 + 1 and c2 == c1 + 1 and (r2, c1) not in cells:
                raise SandwichError(f"cells {(r1, c1)} and {(r2, c2)} not separated")

    def varname(cell):
        return f"v{cell[0]}_{cell[1]}"

    state = MultiPoly.constant(1)
    prev_cut: list = []
    for cut in cuts + [[]]:
        new_cells = set(cut)
        for cell in prev_cut:
            r, c = cell
            above = (r - 1, c)
            right = (r, c + 1)
            lower = varname(above) if above in new_cells else 0
            upper = varname(right) if right in new_cells else 1
            state = state.integrate(varname(cell), lower, upper)
            if state.n_terms() > budget:
                raise BudgetExceeded(
                    f"{state.n_terms()} polynomial terms exceed budget {budget}",
                    state.n_terms())
        prev_cut = cut
    return state.as_fraction()


def schur_section_volume(lam) -> MultiPoly:
    """Section-volume polynomial det(x_i^{L_j}) / prod(L_j!) with L_j = lam_j + k - j.

    Trailing zero parts are significant (they fix k). Antisymmetric under
    exchange of any two variables; on the ordered chamber x_1 <= ... <= x_k
    its sign is (-1)^C(k,2).
    """
    lam = tuple(int(x) for x in lam)
    k = len(lam)
    if k < 1:
        raise ValueError("need at least one part")
    ell = [lam[j] + k - 1 - j for j in range(k)]
    denom = 1
    for e in ell:
        denom *= factorial(e)
    vars_ = tuple(f"x{i + 1}" for i in range(k))
    terms: dict = {}
    for perm in permutations(range(k)):
        sign = 1
        seen = list(perm)
        # parity via inversion count (k <= 5 here, cost irrelevant)
        inv = sum(1 for a in range(k) for b in range(a + 1, k) if seen[a] > seen[b])
        sign = -1 if inv % 2 else 1
        e = tuple(ell[perm[i]] for i in range(k))
        c = terms.get(e, Fraction(0)) + Fraction(sign, denom)
        if c:
            terms[e] = c
        else:
            terms.pop(e, None)
    return MultiPoly(vars_, terms)


def schur_recursion_check(lam, k: int) -> bool:
    """Verify the transfer recursion for section volumes against the determinant form.

    Volumes are compared in the chamber orientation (sign (-1)^C(k,2) times
    the determinant form). The lam_k > 0 step peels one box off every part
    and integrates over the box domain 0 <= y_i <= x_i, which equals the
    interleaved domain because the integrand is antisymmetric; the
    lam_k = 0 step drops to k-1 parts with bounds (x_1, x_j).
    """
    lam = tuple(int(x) for x in lam)
    if len(lam) > k:
        raise ValueError("more parts than k")
    lam = lam + (0,) * (k - len(lam))
    if sum(lam) + k > 12:
        raise ValueError("check is limited to |lam| + k <= 12")

    def orient(kk: int) -> int:
        return -1 if (kk * (kk - 1) // 2) % 2 else 1

    target = schur_section_volume(lam) * orient(k)
    if k == 1 and lam[0] == 0:
        return target == MultiPoly.constant(1)
    if lam[-1] > 0:
        inner = schur_section_volume(tuple(l - 1 for l in lam)) * orient(k)
        # rename x_i -> y_i, then integrate y_i over (0, x_i)
        for i in range(k):
            inner = inner.subst_affine(f"x{i + 1}", 0, 1, f"y{i + 1}")
        for i in range(k):
            inner = inner.antiderivative(f"y{i + 1}")
            inner = (inner.subst_bound(f"y{i + 1}", f"x{i + 1}")
                     - inner.subst_bound(f"y{i + 1}", 0))
        return inner == target
    if k == 1:
        return target == MultiPoly.constant(1)
    inner = schur_section_volume(lam[: k - 1]) * orient(k - 1)
    # inner lives in x1..x_{k-1}; rename to y2..yk, integrate y_j over (x1, x_j)
    for i in range(k - 1):
        inner = inner.subst_affine(f"x{i + 1}", 0, 1, f"y{i + 2}")
    for j in range(2, k + 1):
        inner = inner.antiderivative(f"y{j}")
        inner = (inner.subst_bound(f"y{j}", f"x{j}")
                 - inner.subst_bound(f"y{j}", "x1"))
    return inner == target


def elkies_apply(f: MultiPoly) -> MultiPoly:
    """The interval transfer operator (Tf)(x) = integral of f over (0, 1-x)."""
    if len(f.vars) > 1:
        raise ValueError("operator acts on univariate polynomials")
    var = f.vars[0] if f.vars else "x"
    anti = f.antiderivative(var)
    upper = anti.subst_affine(var, 1, -1, "_t")  # var := 1 - t
    lower = anti.subst_bound(var, 0)
    out = upper - lower
    return out.subst_affine("_t", 0, 1, var) if "_t" in out.vars else out


def elkies_inner(N: int, p: int, q: int) -> Fraction:
    """<T^N(x^p/p!), x^q/q!> on [0,1]; equals x_coeff(N, p, q) exactly."""
    if N < 0 or p < 0 or q < 0:
        raise ValueError("N, p, q must be >= 0")
    f = MultiPoly.variable("x", p, Fraction(1, factorial(p)))
    for _ in range(N):
        f = elkies_apply(f)
    g = f * MultiPoly.variable("x", q, Fraction(1, factorial(q)))
    anti = g.antiderivative("x")
    return (anti.subst_bound("x", 1) - anti.subst_bound("x", 0)).as_fraction()
