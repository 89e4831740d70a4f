"""Command-line interface: ``cubicaudit <subcommand> ...``.

Exit codes: 0 success, 2 invalid input, 3 when the result is undecided.
Every JSON payload carries ``"schema": "v1"``.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .audit import SCHEMA, audit_curve, dumps, run_corpus
from .config import Config
from .forms import QuadraticForm, TernaryCubicForm
from .jacobian import DiagonalCubic, enumerate_diagonal_cubics, jacobian_curve, verify_curve_identity
from .localfields import (
    Place,
    Status,
    find_isotropic_vector,
    is_isotropic_quadratic,
    solvable_padic_cubic,
    solvable_real_cubic,
)
from .reduction import (
    ELIMINATION_VARIABLE,
    common_factor_analysis,
    formal_resultant_audit,
    full_system,
    generic_combinations,
    reduced_system,
)
from .search import search_points_cubic

EXIT_OK, EXIT_INVALID, EXIT_UNDECIDED = 0, 2, 3


class InvalidInput(ValueError):
    pass


def parse_form(text: str) -> TernaryCubicForm:
    """Accept ``{"cubic": [...]}``, a bare JSON list, or ``a1,...,a10``."""
    text = text.strip()
    try:
        if text.startswith("{"):
            return TernaryCubicForm.from_json(json.loads(text))
        if text.startswith("["):
            return TernaryCubicForm.from_json({"cubic": json.loads(text)})
        return TernaryCubicForm.parse(text)
    except (ValueError, TypeError, KeyError, ZeroDivisionError) as exc:
        raise InvalidInput(f"bad form {text!r}: {exc}") from None


def _rationals(text: str) -> list[Fraction]:
    try:
        return [Fraction(p) for p in text.replace(" ", "").split(",") if p]
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(str(exc)) from None


def _emit(payload: dict, config: Config, out) -> None:
    payload = {"schema": SCHEMA, **payload}
    if config.output == "table":
        for k, v in payload.items():
            out.write(f"{k:<16} {v if isinstance(v, (str, int)) else json.dumps(v)}\n")
    else:
        out.write(dumps(payload) + "\n")


# -- subcommands ------------------------------------------------------------------

def cmd_local(args, config, out):
    F = parse_form(args.form)
    place = Place.parse(args.place)
    if place.is_infinite:
        v = solvable_real_cubic(F)
    else:
        v = solvable_padic_cubic(F, place.p, config.max_depth)
    _emit({"verdict": v.to_json()}, config, out)
    return EXIT_UNDECIDED if v.status is Status.UNDECIDED else EXIT_OK


def cmd_quadratic(args, config, out):
    if args.diag:
        Q = QuadraticForm.diagonal(_rationals(args.diag))
    else:
        try:
            Q = QuadraticForm(json.loads(args.matrix))
        except (ValueError, TypeError) as exc:
            raise InvalidInput(str(exc)) from None
    place = args.place or "global"
    iso = is_isotropic_quadratic(Q, place if place == "global" else Place.parse(place))
    payload = {"isotropic": iso}
    if iso and place == "global" and args.vector:
        vec = find_isotropic_vector(Q, config.height)
        payload["vector"] = list(vec) if vec else None
        if vec is None:
            payload["height_cap"] = config.height
            _emit(payload, config, out)
            return EXIT_UNDECIDED
    _emit(payload, config, out)
    return EXIT_OK


def cmd_reduce(args, config, out):
    F = parse_form(args.form)
    sys_ = full_system(F) if args.variant == "full" else reduced_system(F, args.variant)
    if args.emit == "system":
        payload = {"variant": args.variant, "system": sys_.to_json()}
    elif args.emit == "resultants":
        if args.variant == "full":
            raise InvalidInput("resultants need a reduced variant (x, y or z)")
        F1, F2 = generic_combinations(sys_)
        payload = {"variant": args.variant,
                   "resultants": formal_resultant_audit(F1, F2, ELIMINATION_VARIABLE[args.variant]).to_json()}
    else:
        payload = {"variant": args.variant, "common_factor": common_factor_analysis(sys_, config.height).to_json()}
    _emit(payload, config, out)
    return EXIT_OK


def cmd_jacobian(args, config, out):
    D = DiagonalCubic.parse(args.diagonal)
    C = jacobian_curve(D)
    payload = {**C.to_json(), "diagonal": list(D.coeffs)}
    if args.verify:
        payload["identity"] = verify_curve_identity(D)
    _emit(payload, config, out)
    return EXIT_OK


def cmd_enumerate(args, config, out):
    classes = enumerate_diagonal_cubics(args.product)
    _emit({"product": args.product, "count": len(classes), "classes": [list(d.coeffs) for d in classes]}, config, out)
    return EXIT_OK


def cmd_search(args, config, out):
    F = parse_form(args.form)
    pts = search_points_cubic(F, config.height)
    _emit({"height": config.height, "count": len(pts), "points": [p.to_json() for p in pts]}, config, out)
    return EXIT_OK


def cmd_audit(args, config, out):
    claims = args.claims.split(",") if args.claims else None
    if args.corpus:
        reports = run_corpus(config)
        payload = {"config": config.to_json(), "reports": [r.to_json(claims) for r in reports]}
        out.write(dumps({"schema": SCHEMA, **payload}) + "\n")
        undecided = any(r.claim("local.everywhere") == "undecided" for r in reports)
        return EXIT_OK if not undecided else EXIT_UNDECIDED
    if not args.form:
        raise InvalidInput("audit needs --form or --corpus")
    rep = audit_curve(parse_form(args.form), config)
    out.write(dumps(rep.to_json(claims)) + "\n")
    return EXIT_UNDECIDED if rep.claim("local.everywhere") == "undecided" else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cubicaudit", description=__doc__.splitlines()[0])
    p.add_argument("--output", choices=("json", "table"))
    p.add_argument("--depth", type=int, help="p-adic search depth")
    p.add_argument("--height", type=int, help="point search height")
    p.add_argument("--rewrite-box", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("local", help="solvability of a cubic at one place")
    s.add_argument("--form", required=True)
    s.add_argument("--place", required=True, help="inf or a prime")
    s.add_argument("--depth", type=int, dest="sub_depth")
    s.set_defaults(func=cmd_local)

    s = sub.add_parser("quadratic", help="isotropy of a quadratic form")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--diag", help="comma-separated diagonal entries")
    g.add_argument("--matrix", help="symmetric matrix as JSON")
    s.add_argument("--place", help="inf, a prime, or global (default)")
    s.add_argument("--vector", action="store_true", help="also search for an isotropic vector")
    s.set_defaults(func=cmd_quadratic)

    s = sub.add_parser("reduce", help="quadratic systems, resultants and common factors")
    s.add_argument("--form", required=True)
    s.add_argument("--variant", choices=("x", "y", "z", "full"), default="z")
    s.add_argument("--emit", choices=("system", "resultants", "gcd"), default="system")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("jacobian", help="Jacobian of a diagonal cubic")
    s.add_argument("--diagonal", required=True, help="A1,A2,A3")
    s.add_argument("--verify", action="store_true", help="also check the curve identity symbolically")
    s.set_defaults(func=cmd_jacobian)

    s = sub.add_parser("enumerate", help="diagonal cubic classes with a given product")
    s.add_argument("--product", type=int, required=True)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("search", help="rational points up to a height")
    s.add_argument("--form", required=True)
    s.add_argument("--height", type=int, dest="sub_height")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("audit", help="full audit of one curve or the corpus")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--form")
    g.add_argument("--corpus", action="store_true")
    s.add_argument("--claims", help="comma-separated claim id prefixes to keep")
    s.set_defaults(func=cmd_audit)
    return p


def dispatch(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        config = Config.from_env(
            max_depth=getattr(args, "sub_depth", None) or args.depth,
            height=getattr(args, "sub_height", None) or args.height,
            rewrite_box=args.rewrite_box,
            seed=args.seed,
            output=args.output,
            workers=args.workers,
        )
        return args.func(args, config, out)
    except (InvalidInput, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
