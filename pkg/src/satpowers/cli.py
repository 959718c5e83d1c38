"""Command-line interface.

Every command prints JSON (or CSV where offered) on stdout. Failures exit with
status 2 and print ``{"error": {"type": ..., "message": ...}}`` on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from satpowers import asymptotics, k3, lengths
from satpowers.asymptotics import NotStabilizedError, decimal_str
from satpowers.io import ParseError, parse_ideal, parse_variables, render_ideal, rows_to_csv, rows_to_json
from satpowers.numeric import fraction_str


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        _emit_error("UsageError", message)
        raise SystemExit(2)


def _emit_error(kind: str, message: str, **extra) -> None:
    err = {"type": kind, "message": message}
    err.update(extra)
    print(json.dumps({"error": err}), file=sys.stderr)


def _ideal_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--vars", required=True, help="comma-separated variable names, e.g. x,y,z")
    p.add_argument("--ideal", required=True, help='generators, e.g. "x^2, x*y"; "-" reads stdin')
    p.add_argument("--strategy", choices=("pivot", "enumerate"), default="pivot")


def _k3_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a", type=int, default=4)
    p.add_argument("--b", type=int, default=3)
    p.add_argument("--c", type=int, default=2)
    p.add_argument("--e", type=int, default=8)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="satpowers", description="Lengths of H^0_m(R/I^n) and their asymptotics.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("length", help="table of lambda, sigma, tau for n = 1..nmax")
    _ideal_args(p)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--e", type=int, default=None, help="summation slope (default: empirical bound)")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("limit", help="extrapolate lim lambda(n)/n^d")
    _ideal_args(p)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--degree", type=int, default=None, help="power of n to divide by (default: number of variables)")
    p.add_argument("--order", type=int, default=1, help="number of Richardson elimination steps")

    p = sub.add_parser("mult", help="multiplicity of an m-primary ideal")
    _ideal_args(p)
    p.add_argument("--nmax", type=int, required=True)

    p = sub.add_parser("diag", help="dimensions of (I^(b n))_(a n) for n = 0..nmax")
    _ideal_args(p)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)

    p = sub.add_parser("k3", help="the K3-surface example")
    k3sub = p.add_subparsers(dest="k3_command", required=True, parser_class=_Parser)
    q = k3sub.add_parser("sigma", help="sigma(n) table")
    _k3_args(q)
    q.add_argument("--nmax", type=int, default=64)
    q.add_argument("--mode", choices=("recursion", "decomposition"), default="recursion")
    q.add_argument("--format", choices=("json", "csv"), default="json")
    q = k3sub.add_parser("limit", help="exact closed form of lim sigma(n)/n^4")
    _k3_args(q)
    q.add_argument("--digits", type=int, default=30)
    q = k3sub.add_parser("check", help="compare the recursion with the decomposition")
    _k3_args(q)
    q.add_argument("--nmax", type=int, default=64)
    return parser


def _read_ideal(args: argparse.Namespace):
    names = parse_variables(args.vars)
    text = sys.stdin.read() if args.ideal == "-" else args.ideal
    return names, parse_ideal(text, names)


def _params(args: argparse.Namespace) -> k3.K3Params:
    return k3.K3Params(args.a, args.b, args.c, args.e)


def _cmd_length(args: argparse.Namespace) -> str:
    names, ideal = _read_ideal(args)
    rows = [r.to_row() for r in lengths.length_table(ideal, args.nmax, args.e, args.strategy)]
    if args.format == "csv":
        return rows_to_csv(rows)
    return rows_to_json(rows, ideal=render_ideal(ideal, names), variables=list(names))


def _cmd_limit(args: argparse.Namespace) -> str:
    names, ideal = _read_ideal(args)
    degree = args.degree if args.degree is not None else ideal.d
    seq = [r.lam for r in lengths.length_table(ideal, args.nmax, None, args.strategy)]
    est = asymptotics.richardson_limit(seq, degree, order=args.order)
    out = {"ideal": render_ideal(ideal, names)}
    out.update(est.to_json())
    return json.dumps(out, indent=2)


def _cmd_mult(args: argparse.Namespace) -> str:
    names, ideal = _read_ideal(args)
    e = asymptotics.multiplicity_mprimary(ideal, args.nmax, args.strategy)
    return json.dumps({"ideal": render_ideal(ideal, names), "multiplicity": fraction_str(e)}, indent=2)


def _cmd_diag(args: argparse.Namespace) -> str:
    names, ideal = _read_ideal(args)
    rows = [
        {"n": n, "dim": asymptotics.diagonal_hilbert(ideal, args.a, args.b, n, args.strategy)}
        for n in range(args.nmax + 1)
    ]
    return rows_to_json(rows, ideal=render_ideal(ideal, names), a=args.a, b=args.b)


def _sigma_rows(sigmas: Sequence[int]) -> list[dict]:
    rows = []
    ratios = {}
    for n, s in enumerate(sigmas, start=1):
        ratios[n] = Fraction(s, n**4)
        ext = 2 * ratios[n] - ratios[n // 2] if n % 2 == 0 else None
        rows.append(
            {
                "n": n,
                "sigma": s,
                "ratio_num": ratios[n].numerator,
                "ratio_den": ratios[n].denominator,
                "extrapolant_decimal": None if ext is None else decimal_str(ext, 30),
            }
        )
    return rows


def _cmd_k3(args: argparse.Namespace) -> str | tuple[str, int]:
    params = _params(args)
    if args.k3_command == "limit":
        limit = k3.closed_form_limit(params)
        out = limit.to_json()
        out.update(
            {
                "decimal": str(limit.to_decimal(args.digits)),
                "irrational": not limit.is_rational(),
                "params": {"a": params.a, "b": params.b, "c": params.c, "e": params.e},
            }
        )
        return json.dumps(out, indent=2)
    if args.k3_command == "sigma":
        if args.nmax < 1:
            raise CliError(f"nmax must be positive, got {args.nmax}")
        rows = _sigma_rows(k3.sigma_modes(params, args.nmax, args.mode))
        if args.format == "csv":
            return rows_to_csv(rows)
        return rows_to_json(rows, mode=args.mode)
    if args.nmax < 1:
        raise CliError(f"nmax must be positive, got {args.nmax}")
    rec = k3.sigma_modes(params, args.nmax, "recursion")
    dec = k3.sigma_modes(params, args.nmax, "decomposition")
    mismatches = [n for n, (x, y) in enumerate(zip(rec, dec), start=1) if x != y]
    report = json.dumps({"nmax": args.nmax, "equal": not mismatches, "mismatches": mismatches}, indent=2)
    return report, (1 if mismatches else 0)


_COMMANDS = {"length": _cmd_length, "limit": _cmd_limit, "mult": _cmd_mult, "diag": _cmd_diag, "k3": _cmd_k3}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = _COMMANDS[args.command](args)
    except ParseError as exc:
        _emit_error("ParseError", str(exc), position=exc.position)
        return 2
    except NotStabilizedError as exc:
        _emit_error("NotStabilizedError", str(exc))
        return 2
    except (ValueError, CliError) as exc:
        _emit_error(type(exc).__name__, str(exc))
        return 2
    text, status = result if isinstance(result, tuple) else (result, 0)
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
