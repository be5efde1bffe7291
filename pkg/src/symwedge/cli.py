"""Command-line front end.

Exit status: 0 on success, 1 when an input violates a precondition (for
example a non-symmetric polynomial), 2 when an argument does not parse.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from .divdiff import divdiff_at_nodes, divdiff_determinant
from .errors import ExponentOverflow, ParseError, SymWedgeError
from .exterior import decompose_rank1, wedge_of
from .fundamental import bialternant_to_sigma, express_in_elementary, norm_resultant, verify_bialternant
from .ring import X, Poly, format_poly, is_s, is_xi, parse, per_var_degree, s_index
from .sym import SigmaExpr, max_x_index, to_conventional_e


class InputError(Exception):
    """Argument that does not parse; carries the message printed on stderr."""


class ValidationError(Exception):
    pass


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def json_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _read(text: str, stdin: TextIO | None) -> str:
    if text == "-":
        return (stdin or sys.stdin).read()
    return text


def _parse_arg(label: str, text: str) -> Poly:
    try:
        return parse(text)
    except ParseError as exc:
        raise InputError(f"{label}: {exc.reason} at byte offset {exc.offset}") from None
    except ExponentOverflow as exc:
        raise InputError(f"{label}: {exc}") from None


def _parse_rational(label: str, text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"{label}: {text!r} is not a rational number") from None


def _require_univariate(label: str, p: Poly) -> None:
    others = p.variables() - {X}
    if others:
        raise ValidationError(f"{label} must be a polynomial in x only")


def _arity(p: Poly, r: int | None) -> int:
    bad = [v for v in p.variables() if not is_xi(v)]
    if bad:
        raise ValidationError("input must use only the variables x1..xr")
    inferred = max_x_index(p)
    if r is None:
        return max(inferred, 1)
    if r < 1:
        raise ValidationError(f"arity must be >= 1, got {r}")
    if inferred > r:
        raise ValidationError(f"input uses x{inferred} but -r is {r}")
    return r


def _emit(fields: list[tuple[str, object]]) -> str:
    return json.dumps(dict(fields), ensure_ascii=False, separators=(",", ":"))


def _expr_fields(expr: SigmaExpr) -> list[tuple[str, object]]:
    return [("sigma_expr", str(expr)), ("e_expr", str(to_conventional_e(expr)))]


def _cmd_express(args, stdin) -> str:
    S = _parse_arg("polynomial", _read(args.poly, stdin))
    r = _arity(S, args.r)
    expr = express_in_elementary(S, r, args.delta)
    verified = expr.substitute() == S
    if args.json:
        return _emit([("verb", "express"), ("r", r), ("delta", expr.delta)] + _expr_fields(expr) + [("verified", verified)])
    if not verified:
        raise ValidationError("round-trip check failed")
    return f"{expr}\n{to_conventional_e(expr)}"


def _h_tuple(texts: Sequence[str], stdin) -> list[Poly]:
    hs = [_parse_arg(f"h{j}", _read(t, stdin)) for j, t in enumerate(texts, start=1)]
    for j, h in enumerate(hs, start=1):
        _require_univariate(f"h{j}", h)
    return hs


def _cmd_bialternant(args, stdin) -> str:
    hs = _h_tuple(args.polys, stdin)
    r = len(hs)
    if args.r is not None and args.r != r:
        raise ValidationError(f"-r {args.r} does not match the {r} polynomials given")
    top = max(per_var_degree(h, X) for h in hs)
    delta = args.delta if args.delta is not None else max(top - (r - 1), 0)
    expr = bialternant_to_sigma(hs, r, delta)
    verified = verify_bialternant(hs, expr)
    if args.json:
        return _emit([("verb", "bialternant"), ("r", r), ("delta", delta)] + _expr_fields(expr) + [("verified", verified)])
    if not verified:
        raise ValidationError("identity check failed")
    return f"{expr}\n{to_conventional_e(expr)}"


def _cmd_divdiff(args, stdin) -> str:
    F = _parse_arg("F", _read(args.poly, stdin))
    _require_univariate("F", F)
    if args.nodes is not None:
        nodes = [_parse_rational("node", t) for t in args.nodes.split(",")]
        if args.r is not None and args.r != len(nodes):
            raise ValidationError(f"-r {args.r} does not match the {len(nodes)} nodes given")
        value = divdiff_at_nodes(F, nodes, args.d)
        if args.json:
            return _emit([
                ("verb", "divdiff"),
                ("r", len(nodes)),
                ("nodes", [json_rational(n) for n in nodes]),
                ("value", json_rational(value)),
            ])
        return format_rational(value)
    if args.r is None:
        raise ValidationError("divdiff needs -r or --nodes")
    dd = divdiff_determinant(F, args.r, args.d)
    d = dd.expr.delta + args.r - 1
    if args.json:
        return _emit(
            [("verb", "divdiff"), ("r", args.r), ("d", d)]
            + _expr_fields(dd.expr)
            + [("value", format_poly(dd.value))]
        )
    return str(dd.expr)


def _cmd_resultant(args, stdin) -> str:
    if args.f is None or args.F is None:
        raise ValidationError("resultant needs both -f and -F")
    f = _parse_arg("f", _read(args.f, stdin))
    F = _parse_arg("F", _read(args.F, stdin))
    _require_univariate("f", f)
    _require_univariate("F", F)
    value = norm_resultant(f, F)
    if args.json:
        return _emit([("verb", "resultant"), ("f", format_poly(f)), ("F", format_poly(F)), ("value", json_rational(value))])
    return format_rational(value)


def _cmd_wedge_decompose(args, stdin) -> str:
    hs = _h_tuple(args.polys, stdin)
    r = len(hs)
    if args.r is not None and args.r != r:
        raise ValidationError(f"-r {args.r} does not match the {r} polynomials given")
    top = max(per_var_degree(h, X) for h in hs)
    d = args.d if args.d is not None else max(top, r - 1)
    w = wedge_of(hs, d)
    S, expr = decompose_rank1(w)
    if args.json:
        return _emit(
            [("verb", "wedge-decompose"), ("r", r), ("d", d), ("quotient", format_poly(S))]
            + _expr_fields(expr)
        )
    return f"{format_poly(S)}\n{expr}\n{to_conventional_e(expr)}"


def _cmd_verify(args, stdin) -> str:
    if len(args.polys) < 2:
        raise ValidationError("verify needs a sigma expression followed by the h polynomials")
    S = _parse_arg("sigma expression", _read(args.polys[0], stdin))
    hs = _h_tuple(args.polys[1:], stdin)
    r = len(hs)
    if args.r is not None and args.r != r:
        raise ValidationError(f"-r {args.r} does not match the {r} polynomials given")
    for v in S.variables():
        if not is_s(v) or not 1 <= s_index(v) <= r:
            raise ValidationError(f"sigma expression must use only s1..s{r}")
    holds = verify_bialternant(hs, SigmaExpr(S, r, max(S.total_degree(), 0)))
    if args.json:
        return _emit([("verb", "verify"), ("holds", holds)])
    return "true" if holds else "false"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symwedge",
        description="Exact symmetric-polynomial, exterior-power and divided-difference computations.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, d=False, delta=False):
        p.add_argument("-r", type=int, help="arity (number of variables x1..xr)")
        if d:
            p.add_argument("-d", type=int, help="degree bound")
        if delta:
            p.add_argument("--delta", type=int, help="degree bound for the sigma expression")
        p.add_argument("--json", action="store_true", help="emit one JSON document")

    p = sub.add_parser("express", help="write a symmetric polynomial in elementary symmetric polynomials")
    p.add_argument("poly", help="symmetric polynomial in x1..xr, or - for stdin")
    common(p, delta=True)
    p.set_defaults(run=_cmd_express)

    p = sub.add_parser("bialternant", help="alternant of h1..hr divided by the Vandermonde determinant")
    p.add_argument("polys", nargs="+", help="polynomials in x")
    common(p, delta=True)
    p.set_defaults(run=_cmd_bialternant)

    p = sub.add_parser("divdiff", help="divided difference of F over r nodes")
    p.add_argument("poly", help="polynomial F in x, or - for stdin")
    p.add_argument("--nodes", help="comma-separated rational nodes")
    common(p, d=True)
    p.set_defaults(run=_cmd_divdiff)

    p = sub.add_parser("resultant", help="product of F over the roots of a monic f")
    p.add_argument("-f", help="monic polynomial in x")
    p.add_argument("-F", help="polynomial in x")
    p.add_argument("--json", action="store_true", help="emit one JSON document")
    p.set_defaults(run=_cmd_resultant)

    p = sub.add_parser("wedge-decompose", help="write h1^...^hr as S times x^(r-1)^...^x^0")
    p.add_argument("polys", nargs="+", help="polynomials in x")
    common(p, d=True)
    p.set_defaults(run=_cmd_wedge_decompose)

    p = sub.add_parser("verify", help="check a sigma expression against an alternant quotient")
    p.add_argument("polys", nargs="+", help="sigma expression in s1..sr, then h1..hr in x")
    common(p)
    p.set_defaults(run=_cmd_verify)
    return parser


def run(argv: Sequence[str], stdin: TextIO | None = None, stderr: TextIO | None = None) -> tuple[int, str]:
    """Execute one command; returns ``(exit_code, stdout_text)``."""
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        out = args.run(args, stdin)
    except InputError as exc:
        print(f"parse error: {exc}", file=err)
        return 2, ""
    except (ValidationError, SymWedgeError) as exc:
        print(f"error: {exc}", file=err)
        return 1, ""
    return 0, out + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
