"""Command-line front end.

    diffdep depcheck -n 1 "x" "x'"
    diffdep novcheck -n 2 x1 x2
    diffdep orelcm "D1" "x1"

Exit status is 0 for every mathematical answer, 2 for malformed input,
3 when a search bound is exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .core import AlgebraSignature, rho_components, substitute
from .depsolve import diff_alg_dependent, prolongation_oracle, verify_certificate
from .errors import DiffDepError, ParseError, ResourceLimitError, SignatureError
from .fox import fox_gradient, jacobian
from .novikov import embed, nov_basis, novikov_dependent
from .ore import DEFAULT_MAX_ORE_ORDER, ore_common_multiple, ore_mul
from .parsing import parse_expr

VERBS = ("depcheck", "novcheck", "fox", "jacobian", "orelcm", "subst", "rho", "basis")

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class UsageError(DiffDepError):
    pass


@dataclass
class Command:
    verb: str
    signature: AlgebraSignature
    inputs: list
    max_ore_order: int = DEFAULT_MAX_ORE_ORDER
    oracle_max_order: int = 3
    format: str = "json"
    with_oracle: bool = False
    lines: list = field(default_factory=list)

    def __post_init__(self):
        if self.verb not in VERBS:
            raise UsageError(f"unknown verb {self.verb!r}")
        if self.max_ore_order < 0 or self.oracle_max_order < 0:
            raise UsageError("orders must be nonnegative")
        if self.format not in ("json", "text"):
            raise UsageError(f"unknown format {self.format!r}")
        if not self.lines:
            self.lines = list(range(1, len(self.inputs) + 1))


def _parse_all(cmd, kind, sig=None, inputs=None, lines=None):
    sig = sig or cmd.signature
    inputs = cmd.inputs if inputs is None else inputs
    lines = cmd.lines if lines is None else lines
    return [parse_expr(src, kind, sig, line=ln) for src, ln in zip(inputs, lines)]


def _need(cmd, lo, hi=None):
    k = len(cmd.inputs)
    if k < lo or (hi is not None and k > hi):
        want = f"exactly {lo}" if hi == lo else f"at least {lo}"
        raise UsageError(f"{cmd.verb} expects {want} input(s), got {k}")


def _verdict_report(verdict, fs):
    report = {"status": verdict.status, "pivots": [list(p) for p in verdict.pivots]}
    if verdict.dependent:
        report["certificate"] = [str(b) for b in verdict.certificate]
        report["verified"] = verify_certificate(fs, verdict.certificate)
    return report


def _depcheck(cmd):
    _need(cmd, 1)
    fs = _parse_all(cmd, "diffpoly")
    verdict = diff_alg_dependent(fs, max_ore_order=cmd.max_ore_order)
    report = _verdict_report(verdict, fs)
    if cmd.with_oracle:
        rank, count, order = prolongation_oracle(fs, cmd.oracle_max_order)
        report["oracle"] = {
            "rank": rank,
            "count": count,
            "order": order,
            "status": "dependent" if rank < count else "inconclusive",
        }
    return report


def _novcheck(cmd):
    _need(cmd, 1)
    if cmd.signature.m != 1:
        raise UsageError("novcheck needs m = 1")
    elements = [embed(e, cmd.signature) for e in _parse_all(cmd, "novikov")]
    verdict = novikov_dependent(elements, max_ore_order=cmd.max_ore_order)
    report = _verdict_report(verdict, [e.body for e in elements])
    report["elements"] = [str(e) for e in elements]
    return report


def _fox(cmd):
    _need(cmd, 1)
    fs = _parse_all(cmd, "diffpoly")
    return {"status": "ok", "result": [[str(op) for op in fox_gradient(f)] for f in fs]}


def _jacobian(cmd):
    _need(cmd, 1)
    fs = _parse_all(cmd, "diffpoly")
    return {"status": "ok", "result": [[str(op) for op in row] for row in jacobian(fs)]}


def _orelcm(cmd):
    _need(cmd, 2, 2)
    a, b = _parse_all(cmd, "orepoly")
    if a.is_zero() or b.is_zero():
        raise UsageError("orelcm needs nonzero operators")
    c, d, s = ore_common_multiple(a, b, max_order=cmd.max_ore_order)
    multiple = ore_mul(c, a)
    if multiple != ore_mul(d, b) or multiple.is_zero():
        raise DiffDepError("common multiple failed verification")
    return {"status": "ok", "c": str(c), "d": str(d), "s": s, "multiple": str(multiple)}


def _subst(cmd):
    _need(cmd, 2)
    fs = _parse_all(cmd, "diffpoly", inputs=cmd.inputs[1:], lines=cmd.lines[1:])
    outer = AlgebraSignature(len(fs), cmd.signature.m)
    (g,) = _parse_all(cmd, "diffpoly", sig=outer, inputs=cmd.inputs[:1], lines=cmd.lines[:1])
    return {"status": "ok", "result": str(substitute(g, fs))}


def _rho(cmd):
    _need(cmd, 1)
    fs = _parse_all(cmd, "diffpoly")
    return {"status": "ok", "result": [[[r, str(c)] for r, c in rho_components(f)] for f in fs]}


def _basis(cmd):
    _need(cmd, 1)
    weights = []
    for src, ln in zip(cmd.inputs, cmd.lines):
        try:
            w = int(src)
        except ValueError:
            raise ParseError(f"expected a positive integer degree, got {src!r}", ln, 1) from None
        if w < 1:
            raise ParseError(f"degree must be positive, got {w}", ln, 1)
        weights.append(w)
    n = cmd.signature.n
    return {
        "status": "ok",
        "result": [{"degree": w, "monomials": [str(u) for u in nov_basis(n, w)]} for w in weights],
    }


_HANDLERS = {
    "depcheck": _depcheck,
    "novcheck": _novcheck,
    "fox": _fox,
    "jacobian": _jacobian,
    "orelcm": _orelcm,
    "subst": _subst,
    "rho": _rho,
    "basis": _basis,
}


def _error(kind, message):
    return {"status": "error", "error": {"kind": kind, "message": message}}


def run_command(cmd):
    """Execute ``cmd`` and return ``(exit_code, report_dict)``."""
    try:
        return EXIT_OK, _HANDLERS[cmd.verb](cmd)
    except ResourceLimitError as exc:
        return EXIT_RESOURCE, _error("resource-limit", str(exc))
    except ParseError as exc:
        return EXIT_USAGE, _error("parse", str(exc))
    except (UsageError, SignatureError) as exc:
        return EXIT_USAGE, _error("arity", str(exc))
    except DiffDepError as exc:
        return EXIT_INTERNAL, _error("internal", str(exc))


def render(report, fmt):
    if fmt == "json":
        return json.dumps(report, sort_keys=True)
    lines = []
    for key in sorted(report):
        value = report[key]
        if isinstance(value, str):
            lines.append(f"{key}: {value}")
        elif key == "certificate":
            lines.append(f"{key}: ({', '.join(value)})")
        else:
            lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
    return "\n".join(lines)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", "--vars", type=int, default=1, help="number of variables x1..xn")
    common.add_argument("-m", "--derivations", type=int, default=1, help="number of derivations D1..Dm")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--max-ore-order", type=int, default=DEFAULT_MAX_ORE_ORDER)
    common.add_argument("--oracle", type=int, default=3, metavar="S",
                        help="highest prolongation order tried by --with-oracle")
    common.add_argument("--with-oracle", action="store_true",
                        help="cross-check depcheck with the prolongation Jacobian rank")
    common.add_argument("--input", metavar="PATH", help="read one expression per line from PATH")
    common.add_argument("exprs", nargs="*")

    parser = argparse.ArgumentParser(prog="diffdep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)
    helps = {
        "depcheck": "decide differential-algebraic dependence",
        "novcheck": "decide Novikov dependence (use @ for the product)",
        "fox": "Fox gradient of each input",
        "jacobian": "Jacobian matrix of the inputs",
        "orelcm": "common left multiple c*a = d*b of two operators",
        "subst": "substitute inputs 2.. into input 1",
        "rho": "rho-homogeneous components",
        "basis": "Novikov basis monomials of the given degrees",
    }
    for verb in VERBS:
        sub.add_parser(verb, parents=[common], help=helps[verb])
    return parser


def _read_inputs(args):
    inputs = list(args.exprs)
    lines = list(range(1, len(inputs) + 1))
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            for ln, text in enumerate(fh, start=1):
                text = text.strip()
                if text and not text.startswith("#"):
                    inputs.append(text)
                    lines.append(ln)
    return inputs, lines


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        sig = AlgebraSignature(args.vars, args.derivations)
        inputs, lines = _read_inputs(args)
        cmd = Command(
            verb=args.verb,
            signature=sig,
            inputs=inputs,
            max_ore_order=args.max_ore_order,
            oracle_max_order=args.oracle,
            format=args.format,
            with_oracle=args.with_oracle,
            lines=lines,
        )
    except (ValueError, OSError) as exc:
        print(render(_error("arity", str(exc)), args.format))
        return EXIT_USAGE
    code, report = run_command(cmd)
    print(render(report, cmd.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
