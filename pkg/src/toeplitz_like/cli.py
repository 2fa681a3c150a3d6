"""Command line front end.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 numerical failure,
4 demo mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from importlib import resources

import numpy as np

from .errors import DomainError, NumericalError
from .factor import factorize
from .fredholm import analyze, apply_inverse, apply_right_inverse, kernel_basis
from .matrixrep import growth_check, symbol_coefficients, truncated_matrix
from .serialize import (
    complex_to_json,
    dumps,
    factorization_to_json,
    report_to_json,
    symbol_from_json,
    symbol_to_json,
)
from .symbol import allclose, apply_toeplitz, as_rational
from .tolerances import Tolerances, from_environment

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_NUMERICAL, EXIT_MISMATCH = 0, 1, 2, 3, 4

COMMANDS = ("analyze", "factor", "kernel", "matrix", "apply", "invert", "demo")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="toeplitz-like", description="Analyze Toeplitz-like operators with rational symbols.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--symbol", help="symbol as inline JSON or a path to a JSON file")
    p.add_argument("--input", help="argument g (apply) or right-hand side h (invert), inline JSON or file")
    p.add_argument("--right", action="store_true", help="invert: return a right inverse when T is only surjective")
    p.add_argument("--tol-circle", type=float)
    p.add_argument("--tol-cluster", type=float)
    p.add_argument("--tol-root", type=float)
    p.add_argument("--tol-res", type=float)
    p.add_argument("--size", type=int, default=8, help="matrix truncation size N")
    p.add_argument("--window", type=int, help="coefficient window K (default: max(N, 64) with --check-growth, else N)")
    p.add_argument("--format", choices=("json", "text", "csv"), default="json")
    p.add_argument("--check-growth", action="store_true")
    return p


def _load_json(source: str, what: str):
    text = source
    if not source.lstrip().startswith(("{", "[")) and os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what}: not valid JSON and not a readable file ({exc.msg})") from None


def _tolerances(args) -> Tolerances:
    try:
        base = from_environment()
        return base.with_(circle=args.tol_circle, cluster=args.tol_cluster, root=args.tol_root, res=args.tol_res)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _symbol(args, tol):
    if not args.symbol:
        raise UsageError(f"{args.command} needs --symbol")
    try:
        return symbol_from_json(_load_json(args.symbol, "--symbol"), tol)
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"--symbol: {exc}") from None


def _input(args, tol):
    if not args.input:
        raise UsageError(f"{args.command} needs --input")
    try:
        return symbol_from_json(_load_json(args.input, "--input"), tol)
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"--input: {exc}") from None


def _fmt_complex(c: complex) -> str:
    c = complex(c)
    if c.imag == 0:
        return repr(c.real + 0.0)
    return f"{c.real!r}{c.imag:+}j"


def _text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for key in sorted(obj):
        val = obj[key]
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_text(val, indent + 1))
        else:
            lines.append(f"{pad}{key}: {json.dumps(val)}")
    return "\n".join(lines)


def _emit(obj, fmt: str, out) -> None:
    if fmt == "text":
        out.write(_text(obj) + "\n")
    else:
        out.write(dumps(obj))


def _cmd_matrix(args, omega, tol, out):
    N = args.size
    if N < 1:
        raise UsageError("--size must be positive")
    K = args.window or (max(N, 64) if args.check_growth else N)
    if K < N:
        raise UsageError("--window must be at least --size")
    coeffs = symbol_coefficients(omega, K, tol)
    E = truncated_matrix(omega, N, tol, coeffs=coeffs).entries
    growth = None
    if args.check_growth:
        g = growth_check(coeffs)
        growth = {"bound_constant": g.bound_constant, "exponent_ok": g.exponent_ok, "l2_tail": g.l2_tail, "M": coeffs.M}
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for row in E:
            w.writerow([_fmt_complex(v) for v in row])
        if growth:
            w.writerow([])
            w.writerow(sorted(growth))
            w.writerow([growth[k] for k in sorted(growth)])
        out.write(buf.getvalue())
        return
    if args.format == "text":
        for row in E:
            out.write(" ".join(_fmt_complex(v) for v in row) + "\n")
        if growth:
            out.write(_text({"growth": growth}) + "\n")
        return
    doc = {"size": N, "window": K, "entries": [[complex_to_json(v) for v in row] for row in E]}
    if growth:
        doc["growth"] = growth
    out.write(dumps(doc))


def _demo_files():
    root = resources.files("toeplitz_like") / "demo"
    return sorted((f for f in root.iterdir() if f.name.endswith(".json")), key=lambda f: f.name)


def run_golden(doc: dict, tol: Tolerances) -> list[str]:
    """Check one golden document; returns the list of mismatches."""
    problems = []
    omega = symbol_from_json(doc["symbol"], tol)
    expect = doc["expect"]
    atol = expect.get("atol", 1e-9)
    if "analyze" in expect:
        got = report_to_json(analyze(omega, tol))
        for key, want in expect["analyze"].items():
            if got[key] != want:
                problems.append(f"analyze.{key}: expected {want!r}, got {got[key]!r}")
    if "kernel" in expect:
        basis = kernel_basis(omega, tol)
        want = [symbol_from_json(k, tol) for k in expect["kernel"]]
        if len(basis) != len(want) or not all(allclose(a, b, atol) for a, b in zip(basis, want)):
            problems.append(f"kernel: expected {len(want)} elements matching the golden basis")
    if "matrix" in expect:
        want = np.array(expect["matrix"]["entries"], dtype=complex)
        got = truncated_matrix(omega, want.shape[0], tol).entries
        if np.max(np.abs(got - want)) > atol:
            problems.append("matrix: entries differ from golden grid")
    for case in expect.get("inverse", []):
        h = symbol_from_json(case["input"], tol)
        g = apply_inverse(omega, h, tol)
        if not allclose(g, symbol_from_json(case["output"], tol), atol):
            problems.append(f"inverse: mismatch for input {case['input']!r}")
    return problems


def _cmd_demo(tol, out) -> int:
    failures = 0
    for f in _demo_files():
        doc = json.loads(f.read_text(encoding="utf-8"))
        problems = run_golden(doc, tol)
        status = "PASS" if not problems else "FAIL"
        out.write(f"{status} {doc['name']}: {doc.get('description', '')}\n")
        for p in problems:
            out.write(f"    {p}\n")
        failures += bool(problems)
    return EXIT_OK if not failures else EXIT_MISMATCH


def dispatch(args, out) -> int:
    tol = _tolerances(args)
    if args.command == "demo":
        return _cmd_demo(tol, out)
    omega = _symbol(args, tol)
    if omega.is_zero:
        raise UsageError("the zero symbol is excluded")
    if args.command == "analyze":
        _emit(report_to_json(analyze(omega, tol)), args.format, out)
    elif args.command == "factor":
        doc = factorization_to_json(factorize(omega, tol))
        doc["symbol"] = symbol_to_json(omega)
        _emit(doc, args.format, out)
    elif args.command == "kernel":
        basis = kernel_basis(omega, tol)
        _emit({"dim_kernel": len(basis), "basis": [symbol_to_json(b) for b in basis]}, args.format, out)
    elif args.command == "matrix":
        _cmd_matrix(args, omega, tol, out)
    elif args.command == "apply":
        res = apply_toeplitz(omega, _input(args, tol), tol)
        _emit({"result": symbol_to_json(res.result)}, args.format, out)
    elif args.command == "invert":
        h = _input(args, tol)
        g = apply_right_inverse(omega, h, tol) if args.right else apply_inverse(omega, h, tol)
        _emit({"result": symbol_to_json(as_rational(g))}, args.format, out)
    return EXIT_OK


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return dispatch(args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except DomainError as exc:
        err.write(f"domain error ({type(exc).__name__}): {exc}\n")
        return EXIT_DOMAIN
    except NumericalError as exc:
        err.write(f"numerical failure ({type(exc).__name__}): {exc}\n")
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
