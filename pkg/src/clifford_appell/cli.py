"""Command line front end.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 verification found a failing identity, 2 unreadable input, 3 input outside
the operation's domain.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Sequence

from .algebra import check_dim, get_max_generators, multivector_from_json, parse_rational
from .construction import (
    ck_extension,
    fischer_decompose,
    random_monogenic,
    shifted_appell_sequence,
)
from .errors import DimensionError, NotMonogenicError, ParseError, PreconditionError
from .operators import cauchy_riemann, hypercomplex_derivative
from .poly import (
    ZERO_DEGREE,
    CliffordPolynomial,
    format_poly_latex,
    format_poly_text,
    homogeneous_degree,
    poly_from_json,
    poly_scale,
    poly_to_json,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3


# --------------------------------------------------------------------------
# input
# --------------------------------------------------------------------------

def _read_source(args) -> object:
    if args.json is not None:
        text = args.json
    elif args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {args.input}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        # a bare rational such as 1/3 is not valid JSON but is accepted
        stripped = text.strip()
        try:
            return str(parse_rational(stripped))
        except ParseError:
            raise ParseError(f"input is not valid JSON: {stripped[:60]!r}") from None


def parse_polynomial(obj, m: int | None) -> CliffordPolynomial:
    """Accept a polynomial object, a multivector object or a rational literal.

    The last two describe constants and need ``m`` from the command line.
    """
    if isinstance(obj, dict) and "terms" in obj:
        return poly_from_json(obj, m)
    if m is None:
        raise ParseError("--m is required when the input is a constant")
    if isinstance(obj, dict):
        return CliffordPolynomial.constant(multivector_from_json(m, obj))
    if isinstance(obj, (str, int)) and not isinstance(obj, bool):
        return CliffordPolynomial.constant(parse_rational(obj), m)
    raise ParseError(f"cannot interpret {type(obj).__name__} as a polynomial")


def parse_sequence(obj, m: int | None):
    """Return ``(seed or None, [M_0, M_1, ...])`` from a serialized sequence."""
    seed = None
    if isinstance(obj, dict):
        if "sequence" not in obj:
            raise ParseError('sequence file must have a "sequence" list')
        if "m" in obj:
            if m is not None and obj["m"] != m:
                raise ParseError(f"file has m={obj['m']} but --m {m} was given")
            m = obj["m"]
        if "seed" in obj:
            seed = parse_polynomial(obj["seed"], m)
        obj = obj["sequence"]
    if not isinstance(obj, list):
        raise ParseError("sequence must be a list of polynomials")
    terms = [parse_polynomial(item, m) for item in obj]
    dims = {t.m for t in terms} | ({seed.m} if seed is not None else set())
    if len(dims) > 1:
        raise ParseError(f"terms use different m: {sorted(dims)}")
    return seed, terms


# --------------------------------------------------------------------------
# output
# --------------------------------------------------------------------------

def _diag(level: str, message: str) -> None:
    print(f"{level}: {message}", file=sys.stderr)


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(obj) -> None:
    _emit(json.dumps(obj))


def _render(p: CliffordPolynomial, fmt: str) -> str:
    return format_poly_latex(p) if fmt == "latex" else format_poly_text(p)


def _label(name: str, index, fmt: str) -> str:
    return f"{name}_{{{index}}}" if fmt == "latex" else f"{name}_{index}"


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def cmd_gen(args) -> int:
    seed = parse_polynomial(_read_source(args), args.m)
    seq = shifted_appell_sequence(seed, args.terms)
    if args.format == "json":
        _emit_json({"m": seed.m, "seed": poly_to_json(seed),
                    "sequence": [poly_to_json(t) for t in seq]})
    else:
        for n, term in enumerate(seq):
            _emit(f"{_label('M', n, args.format)} = {_render(term, args.format)}")
    return EXIT_OK


def verify_sequence(seed, terms: Sequence[CliffordPolynomial]) -> List[dict]:
    """Check monogenicity of every term, the derivative law between
    neighbours and, when a seed is known, ``M_0 == seed``."""
    checks = []

    def record(identity, n, residual):
        entry = {"identity": identity, "n": n, "passed": residual.is_zero()}
        if residual:
            entry["residual"] = poly_to_json(residual)
        checks.append(entry)

    if seed is not None and terms:
        record("M_0 = seed", 0, terms[0] - seed)
    for n, term in enumerate(terms):
        record("monogenic", n, cauchy_riemann(term))
        if n:
            record("appell", n, hypercomplex_derivative(term) - poly_scale(terms[n - 1], n))
    return checks


def cmd_verify(args) -> int:
    seed, terms = parse_sequence(_read_source(args), args.m)
    if not terms:
        _diag("warning", "empty sequence: nothing to verify")
    checks = verify_sequence(seed, terms)
    passed = all(c["passed"] for c in checks)
    if args.format == "json":
        _emit_json({"passed": passed, "checks": checks})
    else:
        for c in checks:
            status = "PASS" if c["passed"] else "FAIL"
            line = f"{status} {c['identity']} n={c['n']}"
            if not c["passed"]:
                residual = poly_from_json(c["residual"])
                line += f" residual: {_render(residual, args.format)}"
            _emit(line)
        _emit("all checks passed" if passed else "verification failed")
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


def cmd_fischer(args) -> int:
    p = parse_polynomial(_read_source(args), args.m)
    k = args.degree
    if k is None:
        d = homogeneous_degree(p)
        if d is None:
            raise PreconditionError("input is not homogeneous")
        k = 0 if d is ZERO_DEGREE else d
    fc = fischer_decompose(p, k)
    if args.format == "json":
        _emit_json({"m": fc.m, "k": fc.k, "components": [poly_to_json(c) for c in fc]})
    else:
        for nu, piece in enumerate(fc):
            _emit(f"{_label('P', fc.k - nu, args.format)} = {_render(piece, args.format)}")
    return EXIT_OK


def _emit_poly(p: CliffordPolynomial, fmt: str) -> None:
    if fmt == "json":
        _emit_json(poly_to_json(p))
    else:
        _emit(_render(p, fmt))


def cmd_ck(args) -> int:
    p = parse_polynomial(_read_source(args), args.m)
    _emit_poly(ck_extension(p), args.format)
    return EXIT_OK


def cmd_random_monogenic(args) -> int:
    if args.m is None or args.degree is None:
        raise ParseError("random-monogenic needs --m and --degree")
    _emit_poly(random_monogenic(args.m, args.degree, args.rng_seed), args.format)
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "verify": cmd_verify,
    "fischer": cmd_fischer,
    "ck": cmd_ck,
    "random-monogenic": cmd_random_monogenic,
}


def _dim(text: str) -> int:
    try:
        return check_dim(int(text))
    except (ValueError, DimensionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clifford-appell",
        description="Shifted Appell sequences of monogenic polynomials with exact arithmetic.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=_dim, default=None,
                        help=f"number of Clifford generators (1..{get_max_generators()})")
    source = common.add_mutually_exclusive_group()
    source.add_argument("--input", metavar="PATH|-", default=None,
                        help="read JSON from a file, or stdin for '-' (default)")
    source.add_argument("--json", metavar="TEXT", default=None, help="inline JSON input")
    common.add_argument("--format", choices=("json", "latex", "text"), default="json")
    common.add_argument("--terms", type=_nonneg, default=3, metavar="N",
                        help="generate M_0 .. M_N (gen)")
    common.add_argument("--degree", type=_nonneg, default=None, metavar="k",
                        help="degree for fischer and random-monogenic")
    common.add_argument("--rng-seed", type=int, default=0, metavar="INT")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "gen": "generate a shifted Appell sequence from a monogenic seed",
        "verify": "check monogenicity and the Appell law on a sequence file",
        "fischer": "Fischer decomposition of a homogeneous polynomial in x_1..x_m",
        "ck": "Cauchy-Kovalevskaya extension of a polynomial in x_1..x_m",
        "random-monogenic": "random homogeneous monogenic polynomial",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[common], help=text, description=text)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ParseError, DimensionError) as exc:
        _diag("error", str(exc))
        return EXIT_PARSE
    except NotMonogenicError as exc:
        print(json.dumps({"error": str(exc), "residual": poly_to_json(exc.residual)}),
              file=sys.stderr)
        return EXIT_PRECONDITION
    except PreconditionError as exc:
        _diag("error", str(exc))
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
