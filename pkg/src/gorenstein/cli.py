"""Command-line front end.

Exit codes: 0 success, 1 mathematical rejection (or a failed check), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .groebner import NotArtinianError
from .invariants import (
    InvariantUndefinedError,
    UnsupportedCubicError,
    associated_form,
    evaluate_invariant,
    ternary_cubic_invariants,
)
from .local_algebra import (
    AlgebraTooSmallError,
    NotGorensteinError,
    NotLocalError,
    QuotientAlgebra,
    embedding_dimension,
    hilbert_function,
    ideal_filtration,
    milnor_algebra,
    quotient_algebra,
    socle,
)
from .nilpoly import (
    component_form,
    inverse_system_R,
    inverse_system_S,
    nil_polynomial,
    verify_annihilator,
)
from .parsing import ParseError, identifiers, natural_key, parse_polynomial, parse_rational
from .poly import Polynomial
from .worked_examples import run_checks

SCHEMA_VERSION = 1

REJECTIONS = (
    NotArtinianError,
    NotGorensteinError,
    NotLocalError,
    AlgebraTooSmallError,
    InvariantUndefinedError,
    UnsupportedCubicError,
)


class UsageError(Exception):
    pass


def rational_str(c: Fraction) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def poly_json(p: Polynomial) -> dict[str, Any]:
    return {
        "variables": list(p.variables),
        "terms": [{"exponents": list(m), "coeff": rational_str(c)} for m, c in p.sorted_terms()],
        "text": str(p),
    }


def vector_json(v: Sequence[Fraction]) -> list[str]:
    return [rational_str(c) for c in v]


# input handling


def _params(items: Sequence[str] | None) -> dict[str, Fraction]:
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise UsageError(f"--param expects NAME=VALUE, got {item!r}")
        try:
            out[name.strip()] = parse_rational(value)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return out


def _vars(text: str | None) -> list[str] | None:
    if not text:
        return None
    return [v.strip() for v in text.replace(" ", ",").split(",") if v.strip()]


def _ints(text: str | None) -> list[int] | None:
    if not text:
        return None
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from None


def _split_exprs(items: Sequence[str] | None) -> list[str]:
    out = []
    for item in items or ():
        out.extend(part for part in item.split(";") if part.strip())
    return out


def _parse(text: str, variables, params) -> Polynomial:
    try:
        return parse_polynomial(text, variables, params)
    except ParseError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _form(args) -> Polynomial:
    if not args.form:
        raise UsageError("--form is required")
    return _parse(args.form, _vars(args.vars), _params(args.param))


def _gens(args) -> list[Polynomial]:
    texts = _split_exprs(args.gens)
    if not texts:
        raise UsageError("--gens is required")
    params = _params(args.param)
    variables = _vars(args.vars)
    if variables is None:
        names = {v for t in texts for v in identifiers(t) if v not in params}
        variables = sorted(names, key=natural_key)
    return [_parse(t, variables, params) for t in texts]


def _algebra(args) -> QuotientAlgebra:
    gens = _gens(args)
    A = quotient_algebra(gens, weights=_ints(args.weights))
    if getattr(args, "basis", None):
        basis = [_parse(t, A.variables, _params(args.param)) for t in _split_exprs([args.basis])]
        try:
            A = A.with_basis(basis)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return A


def _algebra_summary(A: QuotientAlgebra) -> dict[str, Any]:
    filt = ideal_filtration(A)
    sd = socle(A)
    out = {
        "variables": list(A.variables),
        "dim": A.dim,
        "basis": [str(b) for b in A.basis],
        "groebner_basis": [poly_json(g) for g in A.gb.generators],
        "nil_index": filt.nil_index,
        "embedding_dimension": embedding_dimension(A),
        "hilbert_function": hilbert_function(A),
        "socle_dimension": sd.dim,
        "gorenstein": sd.is_gorenstein,
    }
    if sd.is_gorenstein:
        out["socle_generator"] = str(A.element(sd.generator))
    return out


# commands


def cmd_milnor(args) -> dict[str, Any]:
    return _algebra_summary(milnor_algebra(_form(args)))


def cmd_quotient(args) -> dict[str, Any]:
    return _algebra_summary(_algebra(args))


def cmd_nilpoly(args) -> dict[str, Any]:
    A = _algebra(args)
    npd = nil_polynomial(A, omega_scale=parse_rational(args.omega_scale))
    return {
        "dim": A.dim,
        "nil_index": npd.nil_index,
        "pi_basis": [str(A.element(v)) for v in npd.pi_basis],
        "omega": vector_json(npd.omega),
        "P": poly_json(npd.P),
        "components": {str(s): poly_json(c) for s, c in npd.components.items()},
        "top_form": poly_json(component_form(npd, npd.nil_index)),
    }


def cmd_inverse_system(args) -> dict[str, Any]:
    A = _algebra(args)
    if args.kind == "R":
        inv = inverse_system_R(nil_polynomial(A))
    else:
        inv = inverse_system_S(A)
    rep = verify_annihilator(inv, A.generators, A)
    return {
        "kind": inv.source,
        "g": poly_json(inv.g),
        "verification": {
            "generators_annihilate": rep.generators_annihilate,
            "derivative_span_dim": rep.span_dim,
            "expected_dim": rep.expected_dim,
            "passed": rep.passed,
        },
    }


def cmd_associated_form(args) -> dict[str, Any]:
    af = associated_form(_form(args), args.socle)
    return {
        "degree": af.degree,
        "socle_generator": str(af.socle_generator),
        "mu": [{"k": list(k), "value": rational_str(v)} for k, v in sorted(af.mu.items(), reverse=True)],
        "form": poly_json(af.form),
    }


def _invariants_json(Q: Polynomial) -> dict[str, Any]:
    inv = ternary_cubic_invariants(Q)
    return {
        "I4": rational_str(inv.I4),
        "I6": rational_str(inv.I6),
        "Delta": rational_str(inv.Delta),
        "j": "undefined" if inv.j is None else rational_str(inv.j),
        "jbold": "undefined" if inv.jbold is None else rational_str(inv.jbold),
    }


def cmd_invariants(args) -> dict[str, Any]:
    Q = _form(args)
    out = {"form": _invariants_json(Q)}
    if args.associated:
        af = associated_form(Q)
        out["associated_form"] = poly_json(af.form)
        out["associated"] = _invariants_json(af.form)
        try:
            out["jbold_at_associated"] = rational_str(evaluate_invariant(af.form, "jbold"))
        except InvariantUndefinedError:
            out["jbold_at_associated"] = "undefined"
    return out


def cmd_verify_paper(args) -> dict[str, Any]:
    checks = run_checks()
    return {
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
        "all_passed": all(c.passed for c in checks),
    }


COMMANDS = {
    "milnor": cmd_milnor,
    "quotient": cmd_quotient,
    "nilpoly": cmd_nilpoly,
    "inverse-system": cmd_inverse_system,
    "associated-form": cmd_associated_form,
    "invariants": cmd_invariants,
    "verify-paper": cmd_verify_paper,
}


def _sweep_point(payload):
    argv, value, param = payload
    args = build_parser().parse_args(argv + ["--param", f"{param}={value}"])
    try:
        return {"value": value, "status": "ok", "results": COMMANDS[args.command](args)}
    except REJECTIONS as exc:
        return {"value": value, "status": "rejected", "error": str(exc)}


def cmd_sweep(args) -> dict[str, Any]:
    if args.target == "sweep" or args.target not in COMMANDS:
        raise UsageError(f"cannot sweep {args.target!r}")
    values = [v.strip() for v in args.values.split(",") if v.strip()]
    for v in values:
        try:
            parse_rational(v)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    argv = [args.target] + list(args.rest)
    payloads = [(argv, v, args.name) for v in values]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            points = list(pool.map(_sweep_point, payloads))
    else:
        points = [_sweep_point(p) for p in payloads]
    return {"parameter": args.name, "points": points}


# argument parsing


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--vars", help="ordered variable list, e.g. z1,z2,z3")
    p.add_argument("--param", action="append", metavar="NAME=VALUE", help="rational parameter substitution")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--out", metavar="FILE", help="write the report to FILE")


def _add_algebra(p: argparse.ArgumentParser) -> None:
    p.add_argument("--gens", action="append", metavar="EXPR", help="ideal generators (repeat or separate by ';')")
    p.add_argument("--weights", help="quasihomogeneous weights, e.g. 3,2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gorenstein", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("milnor", help="Milnor algebra of a polynomial")
    p.add_argument("--form", required=True)
    _add_common(p)

    p = sub.add_parser("quotient", help="local algebra Q[x]/I")
    _add_algebra(p)
    p.add_argument("--basis", help="basis representatives separated by ';', starting with 1")
    _add_common(p)

    p = sub.add_parser("nilpoly", help="nil-polynomial of a Gorenstein quotient")
    _add_algebra(p)
    p.add_argument("--basis", help="basis representatives separated by ';', starting with 1")
    p.add_argument("--omega-scale", default="1", help="value of omega on the socle generator")
    _add_common(p)

    p = sub.add_parser("inverse-system", help="inverse system with annihilator certificate")
    _add_algebra(p)
    p.add_argument("--basis", help="basis representatives separated by ';', starting with 1")
    p.add_argument("--kind", choices=("R", "S"), default="R", help="restricted nil-polynomial or generalized system")
    _add_common(p)

    p = sub.add_parser("associated-form", help="associated form of a form with isolated singularity")
    p.add_argument("--form", required=True)
    p.add_argument("--socle", choices=("monomial", "hessian"), default="monomial")
    _add_common(p)

    p = sub.add_parser("invariants", help="ternary cubic invariants (Hesse shape)")
    p.add_argument("--form", required=True)
    p.add_argument("--associated", action="store_true", help="also evaluate at the associated form")
    _add_common(p)

    p = sub.add_parser("verify-paper", help="recompute both reference families")
    _add_common(p)

    p = sub.add_parser("sweep", help="run a command over parameter values")
    p.add_argument("--name", default="t", help="parameter name")
    p.add_argument("--values", required=True, help="comma-separated rational values")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("target", help="command to run")
    p.add_argument("rest", nargs=argparse.REMAINDER, help="arguments for the command")
    _add_common(p)
    return parser


def _text_report(report: dict[str, Any]) -> str:
    lines = [f"command: {report['command']}"]

    def walk(value, prefix):
        if isinstance(value, dict):
            if set(value) >= {"variables", "terms", "text"}:
                lines.append(f"{prefix}: {value['text']}")
                return
            for k, v in value.items():
                walk(v, f"{prefix}.{k}" if prefix else k)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, v in enumerate(value):
                walk(v, f"{prefix}[{i}]")
        else:
            lines.append(f"{prefix}: {value}")

    if report["command"] == "verify-paper":
        for c in report["results"]["checks"]:
            status = "PASS" if c["passed"] else "FAIL"
            lines.append(f"{status}  {c['name']}" + (f"  ({c['detail']})" if c["detail"] else ""))
        lines.append(f"all_passed: {report['results']['all_passed']}")
    else:
        walk(report["results"], "")
    return "\n".join(lines) + "\n"


def _hoist_output_flags(args) -> None:
    """Move --json/--out written after the swept command onto the sweep itself."""
    rest, i = [], 0
    while i < len(args.rest):
        item = args.rest[i]
        if item == "--json":
            args.json = True
        elif item == "--out" and i + 1 < len(args.rest):
            args.out = args.rest[i + 1]
            i += 1
        elif item.startswith("--out="):
            args.out = item.split("=", 1)[1]
        else:
            rest.append(item)
        i += 1
    args.rest = rest


def run_command(argv: Sequence[str] | None = None) -> tuple[int, dict[str, Any] | None, str]:
    """Run the CLI; return (exit code, report, rendered output)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), None, ""
    if args.command == "sweep":
        _hoist_output_flags(args)
    start = time.perf_counter()
    report: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "inputs": {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "json", "out")},
    }
    code = 0
    try:
        if args.command == "sweep":
            report["results"] = cmd_sweep(args)
        else:
            report["results"] = COMMANDS[args.command](args)
        if args.command == "verify-paper" and not report["results"]["all_passed"]:
            code = 1
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2, None, ""
    except REJECTIONS as exc:
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        code = 1
    report["elapsed_seconds"] = round(time.perf_counter() - start, 6)
    if args.json:
        text = json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    elif "error" in report:
        text = f"command: {args.command}\nrejected: {report['error']['message']}\n"
    else:
        text = _text_report(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code, report, text


def main(argv: Sequence[str] | None = None) -> int:
    code, _, _ = run_command(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
