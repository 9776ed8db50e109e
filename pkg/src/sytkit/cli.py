"""Command-line surface: sequence dumps, counting with cross-validation,
volumes, series, spectral reports, and verification sweeps.

Exit codes: 0 success (all agreement checks true), 1 usage or domain error,
2 any disagreement between exact methods (the CI tripwire).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import counting, formulas, numbers, polytope, spectral
from .errors import SytError
from .shapes import (SkewShape, StripSpec, as_skew_shape, format_shape,
                     make_skew, parse_shape_text, random_skew_shape,
                     ribbon_from_descents, strip_shape, updown_shape)


def _fmt_float(x: float) -> str:
    return format(x, ".17g")


def _fmt_exact(v) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}" if v.denominator != 1 else str(v.numerator)
    return str(v)


@dataclass
class Report:
    """Per-instance record of counts by method with an agreement verdict."""

    instance: str
    methods: dict = field(default_factory=dict)   # name -> exact value (int/Fraction)
    floats: dict = field(default_factory=dict)    # name -> float (never in `agree`)
    elapsed_ms: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        vals = list(self.methods.values())
        return all(v == vals[0] for v in vals) if vals else True

    def add(self, name: str, fn):
        t0 = time.perf_counter()
        value = fn()
        self.elapsed_ms[name] = (time.perf_counter() - t0) * 1000.0
        self.methods[name] = value

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "instance": self.instance,
            "methods": {k: _fmt_exact(v) for k, v in sorted(self.methods.items())},
            "agree": self.agree,
        }
        if self.floats:
            out["floats"] = {k: _fmt_float(v) for k, v in sorted(self.floats.items())}
        if timings:
            out["elapsed_ms"] = {k: _fmt_float(v) for k, v in sorted(self.elapsed_ms.items())}
        return out

    def print_table(self, timings: bool = False):
        print(f"instance: {self.instance}")
        for k in sorted(self.methods):
            line = f"  {k:<10} {_fmt_exact(self.methods[k])}"
            if timings:
                line += f"   ({self.elapsed_ms[k]:.1f} ms)"
            print(line)
        for k in sorted(self.floats):
            print(f"  {k:<10} {_fmt_float(self.floats[k])}")
        print(f"  agree: {str(self.agree).lower()}")


def _emit(report: Report, args) -> int:
    if args.format == "json":
        print(json.dumps(report.to_json(getattr(args, "timings", False)),
                         sort_keys=True))
    else:
        report.print_table(getattr(args, "timings", False))
    return 0 if report.agree else 2


def _count_methods(report: Report, shape: SkewShape, spec: StripSpec | None,
                   methods) -> None:
    for name in methods:
        if name == "dp":
            report.add("dp", lambda: counting.count_syt_dp(shape))
        elif name == "backtrack":
            report.add("backtrack", lambda: counting.count_syt_backtrack(shape))
        elif name == "aitken":
            report.add("aitken", lambda: counting.count_syt_aitken(shape))
        elif name == "thm4":
            if spec is None:
                raise SytError("thm4 applies only to strip specs")
            report.add("thm4", lambda: formulas.count_strip(spec))


def _auto_method(shape: SkewShape, spec: StripSpec | None) -> list[str]:
    if spec is not None and 2 * spec.n - spec.m + 1 >= -1:
        return ["thm4"]
    return ["aitken"]


def _all_methods(shape: SkewShape, spec: StripSpec | None) -> list[str]:
    out = ["dp", "aitken"]
    if shape.n_cells <= 12:
        out.append("backtrack")
    if spec is not None and 2 * spec.n - spec.m + 1 >= -1:
        out.append("thm4")
    return out


def cmd_seq(args) -> int:
    table = numbers.seq_table(args.name, args.max)
    vals = [_fmt_exact(v) if isinstance(v, Fraction) else v for v in table.values]
    if args.format == "json":
        print(json.dumps(vals))
    elif args.format == "csv":
        start = 1 if args.name == "tangent" else 0
        print("n," + args.name)
        for i, v in enumerate(table.values):
            print(f"{i + start},{v}")
    else:
        start = 1 if args.name == "tangent" else 0
        for i, v in enumerate(table.values):
            print(f"{args.name}[{i + start}] = {v}")
    return 0


def _resolve_shape(args) -> tuple[SkewShape, StripSpec | None, str]:
    if getattr(args, "shape", None):
        obj = parse_shape_text(args.shape)
        if isinstance(obj, StripSpec):
            return strip_shape(obj), obj, format_shape(obj)
        return obj, None, format_shape(obj)
    lam = [int(x) for x in args.lam.split(",") if x]
    mu = [int(x) for x in args.mu.split(",") if x] if args.mu else []
    shape = make_skew(lam, mu)
    return shape, None, format_shape(shape)


def cmd_count(args) -> int:
    shape, spec, text = _resolve_shape(args)
    report = Report(text)
    if args.method == "all":
        methods = _all_methods(shape, spec)
    elif args.method == "auto":
        methods = _auto_method(shape, spec)
    else:
        methods = [args.method]
    _count_methods(report, shape, spec, methods)
    return _emit(report, args)


def cmd_strip(args) -> int:
    head = [int(x) for x in args.head.split(",") if x] if args.head else []
    tail = [int(x) for x in args.tail.split(",") if x] if args.tail else []
    spec = StripSpec(args.m, args.n, head, tail)
    shape = strip_shape(spec)
    report = Report(format_shape(spec))
    methods = _all_methods(shape, spec) if args.all_methods else _auto_method(shape, spec)
    _count_methods(report, shape, spec, methods)
    return _emit(report, args)


def cmd_ribbon(args) -> int:
    descents = [int(x) for x in args.descents.split(",") if x] if args.descents else []
    shape = ribbon_from_descents(descents, args.size)
    report = Report(f"ribbon:size={args.size};descents=" + ",".join(map(str, descents)))
    if args.all_methods:
        methods = _all_methods(shape, None)
    else:
        methods = _auto_method(shape, None)
    _count_methods(report, shape, None, methods)
    if args.all_methods and args.size <= 10:
        report.add("descent_bf",
                   lambda: counting.count_descent_class(args.size, descents))
    return _emit(report, args)


def cmd_volume(args) -> int:
    obj = parse_shape_text(args.shape)
    shape = as_skew_shape(obj)
    vol = polytope.order_polytope_volume(shape)
    print(_fmt_exact(vol))
    return 0


def cmd_series(args) -> int:
    ser = numbers.series_coefficients(args.name, args.order)
    vals = [_fmt_exact(c) for c in ser.coefficients]
    if args.format == "json":
        print(json.dumps(vals))
    else:
        for j, v in enumerate(vals):
            print(f"[x^{j}] = {v}")
    return 0


def cmd_spectral(args) -> int:
    grid = spectral.QuadratureGrid(args.grid)
    report = spectral.verify_eigensystem(args.m, max_modes=args.modes,
                                         grid=grid, tol=args.tol)
    rows = []
    for mc in report.modes:
        rows.append({
            "indices": list(mc.indices),
            "eigenvalue": _fmt_float(mc.eigenvalue),
            "residual": _fmt_float(mc.residual),
            "ok": mc.ok,
        })
    payload = {
        "m": report.m,
        "grid": report.grid_order,
        "tol": _fmt_float(report.tol),
        "modes": rows,
        "gram_deviation": _fmt_float(report.gram_deviation),
        "ok": report.ok,
    }
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"m={report.m} grid={report.grid_order} tol={_fmt_float(report.tol)}")
        for r in rows:
            print(f"  mode {tuple(r['indices'])}: lambda={r['eigenvalue']} "
                  f"residual={r['residual']} ok={str(r['ok']).lower()}")
        print(f"  gram_deviation={payload['gram_deviation']} ok={str(report.ok).lower()}")
    return 0 if report.ok else 2


# ---- verification suites ----------------------------------------------------

def _suite_numbers(max_cells: int):
    a = numbers.zigzag_numbers(50 * 2)
    for n in range(0, 10):
        yield (f"zigzag[{n}] vs brute force", a[n] == counting.count_updown_bruteforce(n), str(a[n]))
    euler, tangent = numbers.euler_tangent_numbers(50)
    ok2 = all(a[2 * n] == (-1) ** n * euler[n] for n in range(51)) and \
        all(a[2 * n - 1] == tangent[n - 1] for n in range(1, 51))
    yield ("zigzag/Euler/tangent identities n<=50", ok2, "")
    ser = numbers.series_coefficients("tan_plus_sec", 20)
    from math import factorial
    ok3 = all(ser[j] * factorial(j) == a[j] for j in range(21))
    yield ("tan+sec egf matches zig-zag", ok3, "")
    gf = numbers.series_coefficients("strip3_gf", 12)
    ok4 = all(gf[2 * n] * factorial(3 * n) == formulas.count_3strip("c", n)
              for n in range(1, 7))
    yield ("3-strip generating function n<=6", ok4, "")


def _suite_strips(max_cells: int):
    for variant in "abc":
        for n in range(1, 7):
            spec = formulas.strip_spec_3(variant, n)
            shape = strip_shape(spec)
            if shape.n_cells > max_cells:
                continue
            closed = formulas.count_3strip(variant, n)
            ok = closed == counting.count_syt_dp(shape) == formulas.count_strip(spec)
            yield (f"3-strip {variant} n={n}", ok, str(closed))
    for variant in "FG":
        for n in range(1, 6):
            spec = formulas.strip_spec_4(variant, n)
            shape = strip_shape(spec)
            if shape.n_cells > max_cells:
                continue
            closed = formulas.count_4strip(variant, n)
            ok = (closed == counting.count_syt_dp(shape)
                  == formulas.count_strip(spec))
            yield (f"4-strip {variant} n={n}", ok, str(closed))
    for n in range(2, 6):
        spec = formulas.strip_spec_5(n)
        shape = strip_shape(spec)
        if shape.n_cells > max_cells:
            continue
        closed = formulas.count_5strip(n)
        ok = closed == counting.count_syt_dp(shape) == formulas.count_strip(spec)
        yield (f"5-strip n={n}", ok, str(closed))
    rng = random.Random(20240802)
    bad = 0
    for _ in range(60):
        shape = random_skew_shape(rng, min(11, max_cells))
        a = counting.count_syt_dp(shape)
        if a != counting.count_syt_backtrack(shape) or a != counting.count_syt_aitken(shape):
            bad += 1
    yield ("three-way oracle agreement on 60 random shapes", bad == 0, f"{bad} failures")


def _suite_thm5(max_cells: int):
    for n in range(1, 4):
        for p in range(3):
            for q in range(3):
                if 2 * n + p + q > 8:
                    continue
                alpha, beta = formulas.alpha_beta(n, p, q)
                ok_a = alpha == counting.count_descent_class(
                    2 * n + p + q, formulas.alpha_descents(n, p, q))
                ok_b = True
                if 2 * n + 1 + p + q <= 9:
                    ok_b = beta == counting.count_descent_class(
                        2 * n + 1 + p + q, formulas.beta_descents(n, p, q))
                yield (f"alpha/beta n={n} p={p} q={q}", ok_a and ok_b, f"{alpha},{beta}")


def _suite_schur(max_cells: int):
    lams = [(0,), (1,), (2,), (0, 0), (1, 0), (1, 1), (2, 1), (2, 2),
            (1, 1, 1), (2, 1, 0)]
    for lam in lams:
        k = len(lam)
        ok = polytope.schur_recursion_check(lam, k)
        yield (f"schur recursion lam={lam} k={k}", ok, "")


def _suite_elkies(max_cells: int):
    bad = []
    for n_ in range(0, 7):
        for p in range(4):
            for q in range(4):
                if polytope.elkies_inner(n_, p, q) != formulas.x_coeff(n_, p, q):
                    bad.append((n_, p, q))
    yield ("elkies_inner == x_coeff for N<=6, p,q<=3", not bad, str(bad))
    from math import factorial
    ok = True
    for n in range(1, 9):
        shape = updown_shape(n)
        if shape.n_cells > max_cells:
            continue
        vol = polytope.order_polytope_volume(shape)
        ok = ok and vol * factorial(n) == counting.count_syt_dp(shape)
    yield ("up-down polytope volumes n<=8", ok, "")


def _suite_spectral(max_cells: int):
    for m in (3, 4, 5):
        rep = spectral.verify_eigensystem(m, max_modes=3)
        yield (f"eigensystem m={m}", rep.ok,
               f"gram={rep.gram_deviation:.2e}")
    for n in (2, 3, 4):
        chk = spectral.spectral_series_check("updown_eq9", n, 10**4)
        yield (f"spectral series A_{n}", chk.rel_err <= 1e-6, f"rel={chk.rel_err:.2e}")
    closed, quad = spectral.i_integral_check(3, 2)
    yield ("I(3,2) closed vs quadrature", abs(closed - quad) <= 1e-10,
           f"{closed:.6g}/{quad:.6g}")
    dev = spectral.principal_product_check(2)
    yield ("principal mode product form k=2", dev <= 1e-12, f"dev={dev:.2e}")


_SUITES = {
    "numbers": _suite_numbers,
    "strips": _suite_strips,
    "thm5": _suite_thm5,
    "schur": _suite_schur,
    "elkies": _suite_elkies,
    "spectral": _suite_spectral,
}


def cmd_verify(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    results = []
    for name in names:
        for check, ok, detail in _SUITES[name](args.max_cells):
            results.append({"suite": name, "check": check, "ok": bool(ok),
                            "detail": detail})
    failures = [r for r in results if not r["ok"]]
    for r in sorted(results, key=lambda r: (r["suite"], r["check"])):
        mark = "ok  " if r["ok"] else "FAIL"
        detail = f"  [{r['detail']}]" if r["detail"] else ""
        print(f"{mark} {r['suite']}: {r['check']}{detail}")
    print(f"{len(results) - len(failures)}/{len(results)} checks passed")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(results, fh, indent=2, sort_keys=True)
    return 2 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="syt",
        description="Exact enumeration of standard Young tableaux of skew and strip shapes.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="dump one of the exact sequences")
    p.add_argument("--name", required=True, choices=numbers.SEQ_KINDS)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--format", default="table", choices=("json", "csv", "table"))
    p.set_defaults(fn=cmd_seq)

    p = sub.add_parser("count", help="count SYT of a skew shape")
    p.add_argument("--lambda", dest="lam", default="")
    p.add_argument("--mu", dest="mu", default="")
    p.add_argument("--shape", default=None, help="shape text form")
    p.add_argument("--method", default="auto",
                   choices=("dp", "backtrack", "aitken", "auto", "all"))
    p.add_argument("--format", default="table", choices=("json", "table"))
    p.add_argument("--timings", action="store_true")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("strip", help="count SYT of an m-strip diagram")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--head", default="")
    p.add_argument("--tail", default="")
    p.add_argument("--all-methods", action="store_true")
    p.add_argument("--format", default="table", choices=("json", "table"))
    p.add_argument("--timings", action="store_true")
    p.set_defaults(fn=cmd_strip)

    p = sub.add_parser("ribbon", help="count SYT of a descent-set ribbon")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--descents", default="")
    p.add_argument("--all-methods", action="store_true")
    p.add_argument("--format", default="table", choices=("json", "table"))
    p.add_argument("--timings", action="store_true")
    p.set_defaults(fn=cmd_ribbon)

    p = sub.add_parser("volume", help="exact order-polytope volume of a shape")
    p.add_argument("--shape", required=True)
    p.set_defaults(fn=cmd_volume)

    p = sub.add_parser("series", help="exact series coefficients")
    p.add_argument("--name", required=True, choices=numbers.SERIES_NAMES)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", default="table", choices=("json", "table"))
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("spectral", help="verify transfer-operator eigensystems")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--modes", type=int, default=4)
    p.add_argument("--grid", type=int, default=64)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--format", default="table", choices=("json", "table"))
    p.set_defaults(fn=cmd_spectral)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all", choices=tuple(_SUITES) + ("all",))
    p.add_argument("--max-cells", type=int, default=40)
    p.add_argument("--json", default=None, help="write the results to a JSON file")
    p.set_defaults(fn=cmd_verify)
    return ap


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's default 2
        self.print_usage(sys.stderr)
        raise SystemExit(1)


def run(argv) -> int:
    parser = build_parser()
    parser.__class__ = _Parser
    for action in parser._subparsers._group_actions:
        for sp in action.choices.values():
            sp.__class__ = _Parser
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except SytError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
