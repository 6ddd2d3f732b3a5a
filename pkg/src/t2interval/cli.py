"""Command-line front end.

Exit codes: 0 success, 1 evaluation or parse error, 2 fuzz mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import calc, core, expr, kernels, oracle, space
from .core import Type2Interval, format_number, format_quad
from .errors import ExprEvalError, ExprTypeError, Type2Error

FORMATS = ("json", "csv", "text")
TABLE_HEADER = ("x", "lower_lo", "lower_hi", "upper_lo", "upper_hi")
CHECK_OPS = ("add", "sub", "mul", "div")


@dataclass(frozen=True)
class CliConfig:
    fmt: str = "text"
    seed: int = 0
    tol_limit: float = calc.TOL_LIMIT
    tol_tail: float = space.TAIL_TOL
    ladder_max: float = calc.DEFAULT_LADDER[0]
    ladder_min: float = calc.DEFAULT_LADDER[-1]

    def __post_init__(self):
        if self.fmt not in FORMATS:
            raise ValueError(f"unknown format {self.fmt!r}")
        if not (self.tol_limit > 0 and self.tol_tail > 0):
            raise ValueError("tolerances must be positive")
        if not 0 < self.ladder_min < self.ladder_max:
            raise ValueError("ladder bounds must satisfy 0 < min < max")

    @property
    def ladder(self) -> tuple:
        hs = []
        h = self.ladder_max
        while h >= self.ladder_min * (1 - 1e-12):
            hs.append(h)
            h /= 10
        return tuple(hs)


# -- rendering ----------------------------------------------------------------

def _emit(out, cfg, payload, text, csv_rows=None):
    if cfg.fmt == "json":
        out.write(json.dumps(payload) + "\n")
    elif cfg.fmt == "csv" and csv_rows is not None:
        w = csv.writer(out, lineterminator="\n")
        w.writerows(csv_rows)
    else:
        out.write(text + "\n")


def _value_payload(v):
    if isinstance(v, Type2Interval):
        return core.to_json(v)
    return {"value": v}


def _value_rows(v):
    if isinstance(v, Type2Interval):
        return [list(TABLE_HEADER[1:]), [format_number(t) for t in v.quad]]
    return [["value"], [format_number(v)]]


def _value_text(v):
    return format_quad(v.quad) if isinstance(v, Type2Interval) else format_number(v)


def _quad_text(q):
    return "(" + ", ".join(format_number(v) for v in q) + ")"


# -- expression helpers -------------------------------------------------------

def _type2(source, env=None) -> Type2Interval:
    node = expr.parse(source)
    if "x" in expr.free_vars(node) and not env:
        raise ExprEvalError("expression uses x; supply --at")
    v = expr.evaluate(node, env)
    if not isinstance(v, Type2Interval):
        v = core.make(v, v, v, v)
    return v


def _env(args):
    return {"x": args.at} if args.at is not None else {}


def function_from_expr(node, x0: float, radius: float = 1e-2):
    """Build the Type-2 function an expression in x defines near x0.

    Returns a Type2Function (top-level literal or general expression) or a
    ScaledFunction (``C * f`` with constant C and real f).
    """
    domain = calc.Domain(x0 - radius, x0 + radius)
    if isinstance(node, expr.Literal):
        comps = tuple((lambda p: (lambda x: expr.evaluate(p, {"x": x})))(p) for p in node.parts)
        derivs = tuple(expr.derivative(p) for p in node.parts)
        return calc.Type2Function(comps, domain, derivs)
    if isinstance(node, expr.BinOp) and node.op == "*":
        for c, f in ((node.left, node.right), (node.right, node.left)):
            if not expr.is_real(c) and not expr.free_vars(c) and expr.is_real(f):
                C = expr.evaluate(c)
                g = (lambda f: (lambda x: expr.evaluate(f, {"x": x})))(f)
                return calc.ScaledFunction(C, g, expr.derivative(f), domain)
    if expr.is_real(node):
        g = lambda x: expr.evaluate(node, {"x": x})
        comps = (g, g, g, g)
        d = expr.derivative(node)
        return calc.Type2Function(comps, domain, (d, d, d, d))

    def fn(x):
        return expr.evaluate(node, {"x": x})

    return calc.Type2Function.from_callable(fn, domain)


# -- subcommands --------------------------------------------------------------

def cmd_eval(args, cfg, out):
    node = expr.parse(args.expr)
    env = _env(args)
    if "x" in expr.free_vars(node) and "x" not in env:
        raise ExprEvalError("expression uses x; supply --at")
    v = expr.evaluate(node, env)
    _emit(out, cfg, _value_payload(v), _value_text(v), _value_rows(v))
    return 0


def cmd_derive(args, cfg, out):
    if args.at is None:
        raise ExprEvalError("derive needs the point: supply --at")
    x0 = float(args.at)
    node = expr.parse(args.expr)
    F = function_from_expr(node, x0, cfg.ladder_max)
    analytic = calc.gh_derivative_analytic(F, x0)
    numeric = calc.gh_derivative_numeric(F, x0, cfg.ladder, cfg.tol_limit)
    delta = space.quad_distance(analytic.quad.quad, numeric.quad.quad) if numeric.quad is not None else math.inf
    payload = {
        "quad": list(analytic.quad.quad),
        "proper": analytic.quad.proper,
        "form": analytic.form.value,
        "numeric": numeric.to_json(),
        "delta": delta if math.isfinite(delta) else None,
    }
    text = (
        f"{_quad_text(analytic.quad.quad)} "
        f"{'proper' if analytic.quad.proper else 'improper'} "
        f"form={analytic.form.value} "
        f"numeric={'-' if numeric.quad is None else _quad_text(numeric.quad.quad)} "
        f"status={numeric.status.value} delta={delta:.3g}"
    )
    rows = [
        ["q1", "q2", "q3", "q4", "proper", "form", "delta"],
        [*(format_number(v) for v in analytic.quad.quad), str(analytic.quad.proper).lower(), analytic.form.value, repr(delta)],
    ]
    _emit(out, cfg, payload, text, rows)
    return 0


def cmd_dist(args, cfg, out):
    env = _env(args)
    d = space.distance(_type2(args.a, env), _type2(args.b, env))
    _emit(out, cfg, {"distance": d}, format_number(d), [["distance"], [format_number(d)]])
    return 0


def cmd_norm(args, cfg, out):
    v = space.norm(_type2(args.a, _env(args)))
    _emit(out, cfg, {"norm": v}, format_number(v), [["norm"], [format_number(v)]])
    return 0


def cmd_ghdiff(args, cfg, out):
    env = _env(args)
    g = calc.gh_diff(_type2(args.a, env), _type2(args.b, env))
    cases = ",".join(f"({c})" for c in g.cases) or "none"
    text = f"{_quad_text(g.quad.quad)} {'proper' if g.proper else 'improper'} case={cases}"
    rows = [["q1", "q2", "q3", "q4", "proper", "cases"], [*(format_number(v) for v in g.quad.quad), str(g.proper).lower(), " ".join(g.cases)]]
    _emit(out, cfg, g.to_json(), text, rows)
    return 0


def table_rows(source: str, lo: float, hi: float, steps: int):
    """Yield (x, Type2Interval) on lo + k*(hi-lo)/steps, k = 0..steps."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if not lo < hi:
        raise ValueError("table needs lo < hi")
    node = expr.parse(source)
    for k in range(steps + 1):
        x = lo + k * (hi - lo) / steps
        try:
            v = expr.evaluate(node, {"x": x})
        except Type2Error as exc:
            exc.table_x = x
            raise
        if not isinstance(v, Type2Interval):
            v = core.make(v, v, v, v)
        yield x, v


def cmd_table(args, cfg, out):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_HEADER)
    for x, v in table_rows(args.expr, args.lo, args.hi, args.steps):
        w.writerow([format_number(x), *(format_number(t) for t in v.quad)])
    if args.out and args.out != "-":
        with open(args.out, "w", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        out.write(buf.getvalue())
    return 0


def read_table(path_or_text):
    """Parse table CSV back into (x, quad) float tuples."""
    text = path_or_text
    if "\n" not in path_or_text:
        with open(path_or_text, newline="") as fh:
            text = fh.read()
    r = csv.reader(io.StringIO(text))
    header = next(r)
    if tuple(header) != TABLE_HEADER:
        raise ValueError(f"unexpected table header {header!r}")
    return [(float(row[0]), tuple(float(v) for v in row[1:])) for row in r if row]


def cmd_converge(args, cfg, out):
    node = expr.parse(args.expr)
    if "x" in expr.free_vars(node):
        raise ExprTypeError("sequence expressions use n, not x")

    def term(n):
        v = expr.evaluate(node, {"n": float(n)})
        return v if isinstance(v, Type2Interval) else core.make(v, v, v, v)

    seq = space.Type2Sequence(term)
    if args.limit is not None:
        verdict = space.check_convergence(seq, _type2(args.limit), args.eps, args.n0, args.n_max)
    else:
        verdict = space.check_cauchy(seq, args.eps, args.n0, args.n_max, seed=cfg.seed)
    d = verdict.achieved_distance
    text = f"{verdict.status.value} n={verdict.witness_index} distance={d:.6g}"
    rows = [["status", "witness_index", "achieved_distance"], [verdict.status.value, verdict.witness_index, repr(d)]]
    _emit(out, cfg, verdict.to_json(), text, rows)
    return 0


# -- fuzzing ------------------------------------------------------------------

def _random_quads(rng, count, positive=False):
    """Half continuous draws in [-10, 10], half small integers (ties and zeros)."""
    half = count // 2
    cont = np.sort(rng.uniform(-10.0, 10.0, (count - half, 4)), axis=1)
    ints = np.sort(rng.integers(-3, 4, (half, 4)).astype(np.float64), axis=1)
    Q = np.concatenate([cont, ints])
    if positive:
        Q = np.abs(Q) + np.where(np.abs(Q) < 0.25, 0.25, 0.0)
        Q = np.sort(Q, axis=1)
        flip = rng.random(count) < 0.5
        Q[flip] = -Q[flip][:, ::-1]
    return Q[rng.permutation(count)]


def default_impl():
    return {"add": core.add, "sub": core.sub, "mul": core.mul, "div": core.div}


def run_check(op: str, n: int, seed: int, impl=None, samples: int = 16) -> dict:
    """Fuzz core arithmetic against the corner oracle and membership sampling.

    ``impl`` maps op names to replacement implementations (used for mutation
    tests). Deterministic for fixed (op, n, seed).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    ops = CHECK_OPS if op == "all" else (oracle.BinaryOp.parse(op).value,)
    impl = {**default_impl(), **(impl or {})}
    results = {}
    ok = True
    for idx, name in enumerate(CHECK_OPS):
        if name not in ops:
            continue
        rng = np.random.default_rng([seed, idx])
        A = _random_quads(rng, n)
        B = _random_quads(rng, n, positive=(name == "div"))
        expected = oracle.corner_results(name, A, B)
        got = np.full((n, 4), np.nan)
        first = None
        errors = 0
        for i in range(n):
            try:
                got[i] = impl[name](Type2Interval(*A[i]), Type2Interval(*B[i])).quad
            except (Type2Error, ArithmeticError) as exc:
                errors += 1
                if first is None:
                    first = {"index": i, "a": list(A[i]), "b": list(B[i]), "error": str(exc)}
        bad = np.flatnonzero(np.any(got != expected, axis=1))
        if first is None and bad.size:
            i = int(bad[0])
            first = {"index": i, "a": list(A[i]), "b": list(B[i]), "got": list(got[i]), "oracle": list(expected[i])}

        # membership: sampled family members must land inside the claimed result
        k = samples
        rep = np.repeat(np.arange(n), k)
        u = rng.random((n * k, 4))
        al = np.minimum(A[rep, 1], A[rep, 0] + u[:, 0] * (A[rep, 1] - A[rep, 0]))
        au = np.minimum(A[rep, 3], A[rep, 2] + u[:, 1] * (A[rep, 3] - A[rep, 2]))
        bl = np.minimum(B[rep, 1], B[rep, 0] + u[:, 2] * (B[rep, 1] - B[rep, 0]))
        bu = np.minimum(B[rep, 3], B[rep, 2] + u[:, 3] * (B[rep, 3] - B[rep, 2]))
        lo, hi = kernels.type1_batch(oracle.BinaryOp.parse(name).code, al, au, bl, bu)
        C = got[rep]
        viol = int(np.count_nonzero(~((lo >= C[:, 0]) & (lo <= C[:, 1]) & (hi >= C[:, 2]) & (hi <= C[:, 3]))))

        mismatches = int(bad.size)
        passed = mismatches == 0 and viol == 0
        ok &= passed
        results[name] = {
            "pairs": n,
            "mismatches": mismatches,
            "errors": errors,
            "violations": viol,
            "samples": n * k,
            "pass": passed,
            "first_mismatch": first,
        }
    return {"op": op, "n": n, "seed": seed, "backend": kernels.BACKEND, "pass": ok, "results": results}


def cmd_check(args, cfg, out):
    report = run_check(args.op, args.n, cfg.seed)
    lines = [
        f"{name}: {'pass' if r['pass'] else 'FAIL'} mismatches={r['mismatches']} violations={r['violations']} pairs={r['pairs']}"
        for name, r in report["results"].items()
    ]
    lines.append(f"seed={cfg.seed} backend={report['backend']} {'pass' if report['pass'] else 'FAIL'}")
    rows = [["op", "pairs", "mismatches", "violations", "pass"]] + [
        [name, r["pairs"], r["mismatches"], r["violations"], str(r["pass"]).lower()]
        for name, r in report["results"].items()
    ]
    _emit(out, cfg, report, "\n".join(lines), rows)
    return 0 if report["pass"] else 2


# -- argument parsing ---------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    """Usage errors exit 1; exit code 2 is reserved for fuzz mismatches."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _globals(p, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=FORMATS, default=d("text"), help="output format")
    p.add_argument("--seed", type=int, default=d(0), help="PRNG seed")
    p.add_argument("--tol-limit", type=float, default=d(calc.TOL_LIMIT), help="limit/derivative tolerance")
    p.add_argument("--at", type=float, default=d(None), help="value of x")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="t2interval", description="Type-2 interval calculator")
    _globals(p, False)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, fn, help):
        s = sub.add_parser(name, help=help)
        _globals(s, True)
        s.set_defaults(func=fn)
        return s

    s = cmd("eval", cmd_eval, "evaluate an expression")
    s.add_argument("expr")
    s = cmd("derive", cmd_derive, "gH-derivative of an expression in x at --at")
    s.add_argument("expr")
    s = cmd("dist", cmd_dist, "distance between two Type-2 values")
    s.add_argument("a")
    s.add_argument("b")
    s = cmd("norm", cmd_norm, "norm of a Type-2 value")
    s.add_argument("a")
    s = cmd("ghdiff", cmd_ghdiff, "gH difference a - b")
    s.add_argument("a")
    s.add_argument("b")
    s = cmd("table", cmd_table, "tabulate an expression in x as CSV")
    s.add_argument("expr")
    s.add_argument("--lo", type=float, required=True)
    s.add_argument("--hi", type=float, required=True)
    s.add_argument("--steps", type=int, required=True)
    s.add_argument("--out", "-o", default="-", help="output path (default stdout)")
    s = cmd("check", cmd_check, "fuzz arithmetic against the corner oracle")
    s.add_argument("op", choices=CHECK_OPS + ("all",))
    s.add_argument("-n", type=int, default=1000, help="random pairs per operation")
    s = cmd("converge", cmd_converge, "check a sequence in n for convergence or the Cauchy property")
    s.add_argument("expr")
    s.add_argument("--limit", default=None, help="target limit expression; omit for a Cauchy check")
    s.add_argument("--eps", type=float, required=True)
    s.add_argument("--n0", type=int, default=1)
    s.add_argument("--n-max", type=int, default=1000)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = CliConfig(fmt=args.format, seed=args.seed, tol_limit=args.tol_limit)
        return args.func(args, cfg, out)
    except (Type2Error, ArithmeticError, ValueError, OSError) as exc:
        where = getattr(exc, "table_x", None)
        extra = f" (at x={format_number(where)})" if where is not None else ""
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}{extra}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
