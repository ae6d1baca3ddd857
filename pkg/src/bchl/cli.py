"""Command-line interface.

Subcommands: expand (construct a polynomial), ct (constant term of a
weight), inner-product, verify (identity suites).  Exit codes: 0 success,
1 verification failure, 2 usage or parameter-parsing errors (including
modulus violations), 3 genericity failures (a denominator or pole
separation degenerated at the given point).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import nonsymmetric as nsym
from . import symmetric as sym
from .ct_engine import (
    FactoredIntegrand,
    GenericityError,
    build_density,
    constant_term,
    ct_quadrature,
    inner_product_0,
)
from .ring import LaurentPoly, ModulusError, ParameterPoint, fraction_str, parse_fraction
from .verify import SUITES, run_suite

USAGE_EXIT = 2
GENERICITY_EXIT = 3

PARAM_KEYS = ("t", "a", "b", "c", "d", "t0", "t1", "t2", "t3", "s")


def parse_params(text: str) -> dict:
    out = {}
    if not text:
        return out
    for item in text.split(","):
        if "=" not in item:
            raise ValueError(f"malformed parameter assignment {item!r}")
        key, _, val = item.partition("=")
        key = key.strip()
        if key not in PARAM_KEYS:
            raise ValueError(f"unknown parameter {key!r}")
        out[key] = parse_fraction(val)
    return out


def default_params_text(args_text):
    if args_text:
        return args_text
    path = os.environ.get("BCHL_PARAMS")
    if path and os.path.exists(path):
        with open(path) as fh:
            return fh.read().strip()
    return args_text or ""


def point_nonsymmetric(vals: dict) -> ParameterPoint:
    return ParameterPoint.nonsymmetric(
        vals.get("t", Fraction(0)),
        vals.get("a", Fraction(0)),
        vals.get("b", Fraction(0)),
        vals.get("c", Fraction(0)),
        vals.get("d", Fraction(0)),
    )


def point_symmetric(vals: dict) -> ParameterPoint:
    return ParameterPoint.symmetric(
        vals.get("t", Fraction(0)),
        vals.get("t0", Fraction(0)),
        vals.get("t1", Fraction(0)),
        vals.get("t2", Fraction(0)),
        vals.get("t3", Fraction(0)),
        a=vals.get("a"),
        b=vals.get("b"),
    )


def parse_index_vector(text: str) -> tuple:
    return tuple(int(x) for x in text.split(","))


def emit_poly(poly: LaurentPoly, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(poly.to_json_dict()))
    else:
        print(poly.format_text())


def cmd_expand(args) -> int:
    vals = parse_params(default_params_text(args.params))
    if args.family == "nonsymmetric":
        if args.mu is None:
            raise ValueError("--mu is required for the nonsymmetric family")
        mu = parse_index_vector(args.mu)
        n = args.n or len(mu)
        point = point_nonsymmetric(vals)
        poly = nsym.e_composition(mu, n, point)
    else:
        if args.lam is None:
            raise ValueError("--lambda is required for the symmetric family")
        lam = parse_index_vector(args.lam)
        n = args.n or len(lam)
        point = point_symmetric(vals)
        poly = sym.k_polynomial(lam, n, point)
    emit_poly(poly, args.format)
    return 0


def cmd_ct(args) -> int:
    vals = parse_params(default_params_text(args.params))
    point = point_symmetric(vals) if args.kind == "symmetric" else point_nonsymmetric(vals)
    density = build_density(args.kind, args.n, point)
    value = constant_term(density)
    out = {"value": fraction_str(value)}
    if args.quadrature:
        approx = ct_quadrature(density, args.quadrature)
        out["quadrature"] = {"re": approx.real, "im": approx.imag, "grid": args.quadrature}
        out["discrepancy"] = abs(approx - complex(value))
    print(json.dumps(out))
    return 0


def _operand(spec_text: str, n: int, family: str):
    """Parse an inner-product operand: 'e:1,0', 'k:2,1' or 'mono:0,1'."""
    kind, _, body = spec_text.partition(":")
    vec = parse_index_vector(body)
    if kind == "mono":
        return ("mono", vec)
    if kind == "e" and family == "nonsymmetric":
        return ("e", vec)
    if kind == "k" and family == "symmetric":
        return ("k", vec)
    raise ValueError(f"operand {spec_text!r} not valid for family {family!r}")


def cmd_inner_product(args) -> int:
    vals = parse_params(default_params_text(args.params))
    n = args.n
    if args.family == "nonsymmetric":
        point = point_nonsymmetric(vals)
        point.require_unit_moduli()
        kind_l, vec_l = _operand(args.left, n, "nonsymmetric")
        kind_r, vec_r = _operand(args.right, n, "nonsymmetric")
        f = (
            LaurentPoly.monomial(n, vec_l)
            if kind_l == "mono"
            else nsym.e_composition(vec_l, n, point)
        )
        if kind_r == "mono":
            g = LaurentPoly.monomial(n, vec_r)
        else:
            g = lambda pp: nsym.e_composition(vec_r, n, pp)
        value = inner_product_0(f, g, point)
        density = build_density("nonsymmetric", n, point)
        from .ct_engine import bar_iota

        integrand = FactoredIntegrand(
            n,
            density.scalar,
            (f, bar_iota(g, point)) + density.numerator_factors,
            density.denominators,
        )
    else:
        point = point_symmetric(vals)
        point.require_unit_moduli()
        kind_l, vec_l = _operand(args.left, n, "symmetric")
        kind_r, vec_r = _operand(args.right, n, "symmetric")
        f = LaurentPoly.monomial(n, vec_l) if kind_l == "mono" else sym.k_polynomial(vec_l, n, point)
        g = LaurentPoly.monomial(n, vec_r) if kind_r == "mono" else sym.k_polynomial(vec_r, n, point)
        value = sym.symmetric_inner_product(f, g, n, point)
        density = build_density("symmetric", n, point)
        integrand = FactoredIntegrand(
            n, density.scalar, (f, g) + density.numerator_factors, density.denominators
        )
    out = {"value": fraction_str(value)}
    if args.quadrature:
        approx = ct_quadrature(integrand, args.quadrature)
        out["quadrature"] = {"re": approx.real, "im": approx.imag, "grid": args.quadrature}
        out["discrepancy"] = abs(approx - complex(value))
    print(json.dumps(out))
    return 0


def cmd_verify(args) -> int:
    kwargs = {}
    if args.n_max is not None:
        kwargs["n_max"] = args.n_max
    if args.m_max is not None:
        kwargs["m_max"] = args.m_max
    if args.trials is not None:
        kwargs["trials"] = args.trials
    report = run_suite(args.suite, args.seed, **kwargs)
    print(json.dumps(report, indent=None, sort_keys=False))
    return 0 if all(c["status"] == "pass" for c in report["checks"]) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bchl",
        description="Exact Hall-Littlewood polynomials of type BC and their torus integrals.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_expand = subs.add_parser("expand", help="construct a polynomial")
    p_expand.add_argument("--family", choices=("symmetric", "nonsymmetric"), required=True)
    p_expand.add_argument("--lambda", dest="lam", help="partition, e.g. 2,1")
    p_expand.add_argument("--mu", help="composition, e.g. 0,-1,2")
    p_expand.add_argument("--n", type=int)
    p_expand.add_argument("--params", default="")
    p_expand.add_argument("--format", choices=("json", "text"), default="json")
    p_expand.set_defaults(func=cmd_expand)

    p_ct = subs.add_parser("ct", help="constant term of a weight")
    p_ct.add_argument("--kind", choices=("symmetric", "nonsymmetric"), required=True)
    p_ct.add_argument("--n", type=int, required=True)
    p_ct.add_argument("--params", default="")
    p_ct.add_argument("--quadrature", type=int, help="also run the float oracle on an N-point grid")
    p_ct.set_defaults(func=cmd_ct)

    p_ip = subs.add_parser("inner-product", help="exact inner product")
    p_ip.add_argument("--family", choices=("symmetric", "nonsymmetric"), required=True)
    p_ip.add_argument("--left", required=True, help="e:1,0 | k:2,1 | mono:0,1")
    p_ip.add_argument("--right", required=True)
    p_ip.add_argument("--n", type=int, required=True)
    p_ip.add_argument("--params", default="")
    p_ip.add_argument("--quadrature", type=int)
    p_ip.set_defaults(func=cmd_inner_product)

    p_verify = subs.add_parser("verify", help="run an identity suite")
    p_verify.add_argument("--suite", choices=sorted(SUITES), required=True)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--n-max", type=int)
    p_verify.add_argument("--m-max", type=int)
    p_verify.add_argument("--trials", type=int)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GenericityError as exc:
        print(f"genericity error: {exc}", file=sys.stderr)
        return GENERICITY_EXIT
    except (ModulusError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
