"""Command-line interface: single moments, accuracy sweeps, timing benchmarks.

Subcommands: ``moment1``, ``moment2``, ``accuracy-sweep``, ``bench``,
``rules-dump``.  CSV output is UTF-8 with LF line endings and a header row;
floats are written with 17 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import statistics
import sys
import time
from dataclasses import dataclass, fields

from .config import DispatchConfig, load_config
from .dispatch import evaluate_i1
from .errors import DomainError
from .oracle import oracle_i1, oracle_i2
from .quadrature import make_gauss_laguerre, make_gauss_legendre
from .query import MomentQuery
from .recursive import i1_method3
from .reference import i1_method1, i1_method2
from .trig import i2

SWEEP_COLUMNS = ["family", "n", "m", "kappa", "b", "method", "value_re", "value_im",
                 "abs_err_vs_oracle"]
BENCH_COLUMNS = ["n", "m", "kappa", "method", "reached_tolerance", "terms_or_points",
                 "median_time_ns"]
I1_METHODS = ("hybrid", "m1", "m2", "m3", "oracle")
I2_METHODS = ("hybrid", "m3", "oracle")
BENCH_TOL = 1e-14
M2_BENCH_CAP = 60


def fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    return format(float(x), ".17g")


@dataclass
class SweepSpec:
    family: str
    n_list: list[int]
    m_list: list[int]
    kappa_list: list[float]
    b_range: tuple[float, float, float]
    methods: list[str]
    output_path: str

    def __post_init__(self):
        start, stop, step = self.b_range
        if not step > 0 or start > stop:
            raise DomainError("b range needs step > 0 and start <= stop")
        allowed = I1_METHODS if self.family == "i1" else I2_METHODS
        bad = [x for x in self.methods if x not in allowed]
        if bad:
            raise DomainError(f"methods {bad} not available for {self.family}")

    def b_values(self) -> list[float]:
        start, stop, step = self.b_range
        count = int(math.floor((stop - start) / step + 1e-9)) + 1
        return [round(start + i * step, 12) for i in range(count)]


# ---------------------------------------------------------------- evaluation

def _eval(family: str, method: str, n: int, m: int, kappa: float, b: float,
          cfg: DispatchConfig) -> tuple[complex, str]:
    q = MomentQuery(n, m, kappa, b)
    if family == "i1":
        if method == "oracle":
            return complex(oracle_i1(q).value_re), "oracle"
        res = evaluate_i1(q, method, cfg)
        return complex(res.value), f"{res.route}/{res.method}"
    if method == "oracle":
        o = oracle_i2(n, m, kappa, b)
        return complex(o.value_re, o.value_im), "oracle"
    res = i2(n, m, kappa, b)
    return res.value, f"i2/{res.branch}"


def _oracle(family, n, m, kappa, b) -> complex:
    if family == "i1":
        return complex(oracle_i1(MomentQuery(n, m, kappa, b)).value_re)
    o = oracle_i2(n, m, kappa, b)
    return complex(o.value_re, o.value_im)


def run_accuracy_sweep(spec: SweepSpec, cfg: DispatchConfig) -> tuple[list[list[str]], bool]:
    """Rows for the accuracy CSV (sorted) and whether every evaluation succeeded."""
    rows = []
    ok = True
    for n in sorted(spec.n_list):
        for m in sorted(spec.m_list):
            for kappa in sorted(spec.kappa_list):
                for b in spec.b_values():
                    ref = _oracle(spec.family, n, m, kappa, b)
                    for method in sorted(spec.methods):
                        try:
                            val, _ = _eval(spec.family, method, n, m, kappa, b, cfg)
                            err = abs(val - ref)
                        except DomainError:
                            ok = False
                            val, err = complex(math.nan, math.nan), math.nan
                        rows.append([spec.family, fmt(n), fmt(m), fmt(float(kappa)), fmt(b),
                                     method, fmt(val.real), fmt(val.imag), fmt(err)])
    return rows, ok


def _median_ns(fn, repeats: int) -> int:
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter_ns()
        fn()
        samples.append(time.perf_counter_ns() - t0)
    return int(statistics.median(samples))


@dataclass
class BenchCell:
    n: int
    m: int
    kappa: float
    method: str
    reached: bool
    terms_or_points: int
    median_time_ns: float


def bench_cell(n: int, m: int, kappa: float, b: float, method: str, repeats: int,
               cfg: DispatchConfig, ref: float | None = None) -> BenchCell:
    """Time one method at the smallest truncation reaching ``1e-14`` accuracy."""
    q = MomentQuery(n, m, kappa, b)
    if ref is None:
        ref = oracle_i1(q).value_re
    tol = BENCH_TOL * max(1.0, abs(ref))

    def ok(v):
        return abs(v - ref) <= tol

    if method in ("m1", "m2"):
        fn = i1_method1 if method == "m1" else i1_method2
        cap = cfg.m1_cap if method == "m1" else M2_BENCH_CAP
        if method == "m2" and not q.kb > 0:
            return BenchCell(n, m, kappa, method, False, 0, math.inf)
        for terms in range(1, cap + 1):
            if ok(fn(q, terms).value):
                t = _median_ns(lambda: fn(q, terms), repeats)
                return BenchCell(n, m, kappa, method, True, terms, t)
        return BenchCell(n, m, kappa, method, False, cap, math.inf)
    if method == "m3":
        res = i1_method3(q, cfg)
        points = 0
        if res.base_calls:
            points = cfg.trapz_points if abs(q.kb) < cfg.kb_base_crossover else cfg.ggl_points
        if not ok(res.value):
            return BenchCell(n, m, kappa, method, False, points, math.inf)
        return BenchCell(n, m, kappa, method, True, points,
                         _median_ns(lambda: i1_method3(q, cfg), repeats))
    if method == "hybrid":
        res = evaluate_i1(q, "hybrid", cfg)
        if not ok(res.value):
            return BenchCell(n, m, kappa, method, False, res.terms_used, math.inf)
        return BenchCell(n, m, kappa, method, True, res.terms_used,
                         _median_ns(lambda: evaluate_i1(q, "hybrid", cfg), repeats))
    raise DomainError(f"cannot benchmark method {method!r}")


def run_bench(spec: SweepSpec, cfg: DispatchConfig, repeats: int, b: float) -> list[BenchCell]:
    cells = []
    for n in sorted(spec.n_list):
        for m in sorted(spec.m_list):
            for kappa in sorted(spec.kappa_list):
                ref = oracle_i1(MomentQuery(n, m, kappa, b)).value_re
                for method in sorted(spec.methods):
                    cells.append(bench_cell(n, m, kappa, b, method, repeats, cfg, ref))
    return cells


def _bench_rows(cells: list[BenchCell]) -> list[list[str]]:
    rows = []
    for c in cells:
        t = "inf" if math.isinf(c.median_time_ns) else str(int(c.median_time_ns))
        rows.append([fmt(c.n), fmt(c.m), fmt(float(c.kappa)), c.method, fmt(c.reached),
                     fmt(c.terms_or_points), t])
    return rows


def write_csv(path: str, header: list[str], rows: list[list[str]]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    if path == "-":
        sys.stdout.write(buf.getvalue())
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(buf.getvalue())


# ---------------------------------------------------------------- argparse

def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _float_list(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x.strip()]


def _str_list(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def _add_config_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="key=value config file (default: $OSCMOMENT_CONFIG)")
    for f in fields(DispatchConfig):
        p.add_argument("--" + f.name.replace("_", "-"), dest=f.name,
                       type=float if f.name.startswith("kb_") else int, default=None)


def _config(args) -> DispatchConfig:
    overrides = {f.name: getattr(args, f.name) for f in fields(DispatchConfig)}
    return load_config(args.config, **overrides)


def _add_query_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--kappa", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--check", action="store_true", help="also print the oracle difference")


def _add_grid_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=("i1", "i2"), default="i1")
    p.add_argument("--n", dest="n_list", type=_int_list, required=True,
                   help="comma-separated powers n")
    p.add_argument("--m", dest="m_list", type=_int_list, required=True,
                   help="comma-separated orders m")
    p.add_argument("--kappa", dest="kappa_list", type=_float_list, required=True)
    p.add_argument("--methods", type=_str_list, default=["hybrid"])
    p.add_argument("--output", "-o", default="-", help="CSV path, '-' for stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oscmoment",
                                     description="Moments of oscillatory Bessel functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moment1", help="int_0^b t^n J_m(kappa t) dt")
    _add_query_flags(p)
    p.add_argument("--method", choices=I1_METHODS, default="hybrid")
    _add_config_flags(p)

    p = sub.add_parser("moment2", help="int_0^b t^n exp(i kappa t) J_m(kappa t) dt")
    _add_query_flags(p)
    p.add_argument("--method", choices=I2_METHODS, default="hybrid")

    p = sub.add_parser("accuracy-sweep", help="errors against the oracle over a grid")
    _add_grid_flags(p)
    p.add_argument("--b-range", nargs=3, type=float, metavar=("START", "STOP", "STEP"),
                   default=(0.1, 1.0, 0.01))
    _add_config_flags(p)

    p = sub.add_parser("bench", help="median timings at the accuracy-reaching truncation")
    _add_grid_flags(p)
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--repeats", type=int, default=100)
    _add_config_flags(p)

    p = sub.add_parser("rules-dump", help="print quadrature nodes and weights")
    p.add_argument("--kind", choices=("laguerre", "legendre"), default="laguerre")
    p.add_argument("--alpha", type=float, default=-0.5)
    p.add_argument("--n-points", type=int, default=10)
    return parser


def _cmd_moment1(args) -> int:
    cfg = _config(args)
    val, tag = _eval("i1", args.method, args.n, args.m, args.kappa, args.b, cfg)
    line = f"value={fmt(val.real)} method={tag}"
    if args.check:
        ref = _oracle("i1", args.n, args.m, args.kappa, args.b)
        line += f" oracle_delta={fmt(abs(val - ref))}"
    print(line)
    return 0


def _cmd_moment2(args) -> int:
    val, tag = _eval("i2", args.method, args.n, args.m, args.kappa, args.b, DispatchConfig())
    line = f"re={fmt(val.real)} im={fmt(val.imag)} method={tag}"
    if args.check:
        ref = _oracle("i2", args.n, args.m, args.kappa, args.b)
        line += f" oracle_delta={fmt(abs(val - ref))}"
    print(line)
    return 0


def _cmd_sweep(args) -> int:
    spec = SweepSpec(args.family, args.n_list, args.m_list, args.kappa_list,
                     tuple(args.b_range), args.methods, args.output)
    rows, ok = run_accuracy_sweep(spec, _config(args))
    write_csv(spec.output_path, SWEEP_COLUMNS, rows)
    return 0 if ok else 1


def _cmd_bench(args) -> int:
    if args.family != "i1":
        raise DomainError("bench supports family i1 only")
    if args.repeats < 1:
        raise DomainError("repeats must be >= 1")
    spec = SweepSpec("i1", args.n_list, args.m_list, args.kappa_list,
                     (args.b, args.b, 1.0), args.methods, args.output)
    cells = run_bench(spec, _config(args), args.repeats, args.b)
    write_csv(spec.output_path, BENCH_COLUMNS, _bench_rows(cells))
    return 0


def _cmd_rules(args) -> int:
    if args.kind == "laguerre":
        rule = make_gauss_laguerre(args.alpha, args.n_points)
    else:
        rule = make_gauss_legendre(args.n_points)
    rows = [[str(j), fmt(t), fmt(w)] for j, (t, w) in enumerate(zip(rule.nodes, rule.weights))]
    write_csv("-", ["j", "node", "weight"], rows)
    return 0


_COMMANDS = {
    "moment1": _cmd_moment1,
    "moment2": _cmd_moment2,
    "accuracy-sweep": _cmd_sweep,
    "bench": _cmd_bench,
    "rules-dump": _cmd_rules,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DomainError as exc:
        parser.print_usage(sys.stderr)
        print(f"oscmoment: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"oscmoment: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
