"""Command line front end.

Usage examples::

    walgebra mul "[0,1,0,0]" "[0,0,0,1]"
    walgebra inv "[1,2,3,4]" --exact --json
    walgebra classify "[0.5,0.3535533906,0,-0.3535533906]"
    walgebra tet freq dis0

Exit status: 0 on success, 2 on malformed input, 3 on domain errors such
as inverting a zero divisor.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .element import Element, element_strings, euclid_norm, format_element, mul, parse_element
from .inversion import NotInvertible, inverse
from .norms import combined_norm, norm_minus_squared, norm_plus_squared
from .representations import phi, psi
from .scalars import FLOAT, ParseError, format_scalar
from .structure import (
    DomainError,
    ab,
    classify,
    conj,
    project,
    quartic_identity_check,
    sos_decomposition,
    to_cpair,
)
from .tet12 import CAMERTONE, frequency, parse_tone, transpose

__all__ = ["main", "run"]

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common_flags(suppress: bool) -> argparse.ArgumentParser:
    # subcommands repeat the flags with SUPPRESS so they may follow positionals
    def default(value):
        return argparse.SUPPRESS if suppress else value

    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--exact", action="store_true", default=default(False), help="exact Q(sqrt2) arithmetic")
    p.add_argument("--json", action="store_true", default=default(False), help="JSON output")
    p.add_argument("--tol", type=float, default=default(FLOAT.tol), help="float comparison tolerance")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="walgebra", description=__doc__.split("\n")[0], parents=[_common_flags(False)])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = _common_flags(True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def element_cmd(name, help, nargs=1):
        p = sub.add_parser(name, help=help, parents=[common])
        for n in range(nargs):
            p.add_argument("XY"[n], metavar="XY"[n], help="element '[x1, xi, xj, xk]'")
        return p

    element_cmd("mul", "product x*y", 2)
    element_cmd("inv", "multiplicative inverse")
    element_cmd("conj", "triangle conjugate")
    element_cmd("ab", "quadratic functionals calA, calB")
    element_cmd("classify", "InDPlus, InDMinus, Invertible or Zero")
    element_cmd("project", "components in D+ and D-")
    element_cmd("cpair", "image in C x C")
    element_cmd("matrix", "skew-circulant matrix")
    element_cmd("poly", "polynomial modulo y^4 + 1")
    element_cmd("norm", "combined, Euclidean and ideal norms")
    element_cmd("check", "quartic identity and sum-of-squares residuals")

    tet = sub.add_parser("tet", help="12-TET diminished-seventh demo", parents=[common])
    tsub = tet.add_subparsers(dest="tet_command", required=True, parser_class=_Parser)
    f = tsub.add_parser("freq", help="frequency of a tone like c0, dis1, a-2", parents=[common])
    f.add_argument("tone")
    f.add_argument("--a0", type=float, default=CAMERTONE, help="reference frequency in Hz")
    t = tsub.add_parser("transpose", help="x * i**n", parents=[common])
    t.add_argument("X")
    t.add_argument("N", type=int)
    return parser


def _scalar(value, exact: bool):
    return format_scalar(value) if exact else format_scalar(float(value))


def _parse(text: str, exact: bool) -> Element:
    if exact:
        return parse_element(text, exact=True)
    try:
        return parse_element(text, exact=False)
    except ParseError as float_err:
        # rationals and sqrt2 terms are accepted and rounded
        try:
            return parse_element(text, exact=True).to_float()
        except ParseError:
            raise float_err from None


def _execute(args) -> tuple[object, str]:
    """Return ``(json_result, text)`` for a parsed command line."""
    exact, tol = args.exact, args.tol
    cmd = args.command

    if cmd == "tet":
        if args.tet_command == "freq":
            hz = frequency(parse_tone(args.tone), args.a0)
            return hz, f"{hz:.10g}"
        x = _parse(args.X, exact)
        y = transpose(x, args.N)
        return element_strings(y), format_element(y)

    x = _parse(args.X, exact)
    if cmd == "mul":
        y = mul(x, _parse(args.Y, exact))
        return element_strings(y), format_element(y)
    if cmd == "inv":
        y = inverse(x, tol=tol)
        return element_strings(y), format_element(y)
    if cmd == "conj":
        y = conj(x)
        return element_strings(y), format_element(y)
    if cmd == "ab":
        v = ab(x)
        res = {"calA": _scalar(v.calA, exact), "calB": _scalar(v.calB, exact)}
        return res, f"calA = {res['calA']}\ncalB = {res['calB']}"
    if cmd == "classify":
        tag = str(classify(x, tol))
        return tag, tag
    if cmd == "project":
        xp, xm = project(x)
        res = {"plus": element_strings(xp), "minus": element_strings(xm)}
        return res, f"plus:  {format_element(xp)}\nminus: {format_element(xm)}"
    if cmd == "cpair":
        z = to_cpair(x)
        res = z.to_json_obj(lambda v: _scalar(v, exact))
        def wrap(v: str) -> str:
            return f"({v})" if "sqrt2" in v and ("+" in v[1:] or "-" in v[1:]) else v

        text = "\n".join(f"{name} = {wrap(re)} + {wrap(im)}*i" for name, (re, im) in res.items())
        return res, text
    if cmd == "matrix":
        m = psi(x)
        return [[_scalar(v, exact) for v in row] for row in m.dense()], m.to_text()
    if cmd == "poly":
        p = phi(x)
        return [_scalar(c, exact) for c in p.coeffs], p.to_text()
    if cmd == "norm":
        xp, xm = project(x)
        res = {
            "combined": combined_norm(x),
            "euclid": euclid_norm(x),
            "norm_plus": float(norm_plus_squared(xp)) ** 0.5,
            "norm_minus": float(norm_minus_squared(xm)) ** 0.5,
        }
        return res, "\n".join(f"{k} = {v:.10g}" for k, v in res.items())
    if cmd == "check":
        q_minus, q_plus = quartic_identity_check(x)
        rm, sm, rp, sp = sos_decomposition(x)
        v = ab(x)
        s_minus = rm * rm + sm * sm - v.minus
        s_plus = rp * rp + sp * sp - v.plus
        res = {
            "quartic": [_scalar(q_minus, exact), _scalar(q_plus, exact)],
            "sos": [_scalar(s_minus, exact), _scalar(s_plus, exact)],
        }
        text = (
            f"quartic residuals: {res['quartic'][0]}, {res['quartic'][1]}\n"
            f"sum-of-squares residuals: {res['sos'][0]}, {res['sos'][1]}"
        )
        return res, text
    raise UsageError(f"unknown command {cmd!r}")  # pragma: no cover


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    """Run the CLI with ``argv`` and return the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv

    def fail(code: int, kind: str, message: str, detail: str | None = None, **extra) -> int:
        if want_json:
            print(json.dumps({"error": message, "kind": kind, "exit_code": code, **extra}), file=stdout)
        else:
            print(f"error: {detail or message}", file=stderr)
        return code

    try:
        args = build_parser().parse_args(argv)
    except UsageError as err:
        return fail(EXIT_PARSE, "usage", str(err))
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)

    try:
        result, text = _execute(args)
    except ParseError as err:
        return fail(EXIT_PARSE, "parse", err.message, err.annotated(), position=err.position)
    except NotInvertible as err:
        return fail(EXIT_DOMAIN, "domain", f"not invertible: {err.tag}", tag=str(err.tag))
    except (DomainError, ValueError) as err:
        return fail(EXIT_DOMAIN, "domain", str(err))

    if args.json:
        command = args.command if args.command != "tet" else f"tet {args.tet_command}"
        payload = {"command": command, "backend": "exact" if args.exact else "float", "result": result}
        print(json.dumps(payload), file=stdout)
    else:
        print(text, file=stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(run())

