"""Command-line interface.

Every subcommand prints a single JSON document (sorted keys, indented)
to stdout.  Exit codes: 0 success, 1 a verification subcommand found a
failing row or claim, 2 usage or computation error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .algebra import Algebra, null_filiform
from .automorphisms import Automorphism, act_on_cocycle
from .cohomology import second_cohomology
from .errors import CentextError, DimMismatch, FieldMismatch
from .extensions import central_extension, in_T1
from .fields import Field
from .forms import BilinearForm, delta, nabla
from .identities import builtin_variety, format_identity, VARIETY_NAMES
from .orbits import (
    automorphism_count,
    check_table1,
    orbits_on_H2,
    orbits_on_T1,
)
from .reproduce import run_reproduction

_TOKEN = re.compile(r"\s*(?:(?P<sign>[+-])|(?P<num>\d+(?:/\d+)?)|(?P<star>\*)"
                    r"|(?P<atom>(?:nabla|delta)(?:_(?:\d+|n))+))")


def _atom_form(token: str, n: int, field: Field) -> BilinearForm:
    parts = token.split("_")
    idx = [n if p == "n" else int(p) for p in parts[1:]]
    if parts[0] == "nabla":
        if len(idx) != 1:
            raise ValueError(f"nabla takes one index, got {token!r}")
        return nabla(idx[0], n, field)
    if len(idx) != 2:
        raise ValueError(f"delta takes two indices, got {token!r}")
    return delta(idx[0], idx[1], n, field)


def parse_cocycle_expr(text: str, n: int, field: Field) -> BilinearForm:
    """Parse a form expression such as 'nabla_n + 3*delta_2_1' or
    '1/2*delta_1_1 - delta_n_1'.  The letter n in an index stands for
    the algebra dimension."""
    pos = 0
    total = BilinearForm.zero(field, n)
    expect_term = True
    sign = 1
    coeff = None
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ValueError(f"cannot read cocycle expression at {text[pos:]!r}")
            break
        pos = m.end()
        if m.group("sign"):
            if coeff is not None:
                raise ValueError("dangling coefficient in cocycle expression")
            if not expect_term:
                expect_term = True
                sign = 1 if m.group("sign") == "+" else -1
            else:
                sign *= 1 if m.group("sign") == "+" else -1
        elif m.group("num"):
            if coeff is not None:
                raise ValueError("two coefficients in a row")
            coeff = Fraction(m.group("num"))
        elif m.group("star"):
            if coeff is None:
                raise ValueError("'*' without a coefficient")
        else:
            c = field.scalar(Fraction(sign) * (coeff if coeff is not None else 1))
            total = total + c * _atom_form(m.group("atom"), n, field)
            sign, coeff, expect_term = 1, None, False
    if expect_term or coeff is not None:
        raise ValueError(f"incomplete cocycle expression {text!r}")
    return total


def _load_field(spec: str) -> Field:
    return Field.from_spec(spec)


def _load_algebra(spec: str, field: Field) -> Algebra:
    if spec.startswith("mu0:"):
        return null_filiform(int(spec[4:]), field)
    with open(spec) as fh:
        alg = Algebra.from_json(json.load(fh))
    return alg


def _load_cocycle(spec: str, algebra: Algebra) -> BilinearForm:
    if spec.startswith("named:") or spec.startswith("expr:"):
        text = spec.split(":", 1)[1]
        return parse_cocycle_expr(text, algebra.dim, algebra.field)
    with open(spec) as fh:
        theta = BilinearForm.from_json(json.load(fh))
    if theta.field != algebra.field:
        raise FieldMismatch("cocycle file field differs from the algebra's")
    if theta.n != algebra.dim:
        raise DimMismatch("cocycle file dimension differs from the algebra's")
    return theta


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _cmd_identities(args) -> int:
    variety = builtin_variety(args.variety)
    out = {
        "variety": variety.name,
        "char_exclusions": sorted(variety.char_exclusions),
        "identities": [
            {
                "text": text,
                "formatted": format_identity(schema),
                "degree": schema.degree,
                "multilinear": schema.is_multilinear,
            }
            for text, schema in zip(variety.identity_texts, variety.identities)
        ],
        "multilinearized": [format_identity(s) for s in variety.multilinear_identities],
    }
    _emit(out)
    return 0


def _cmd_cohomology(args) -> int:
    field = _load_field(args.field)
    algebra = _load_algebra(args.algebra, field)
    variety = builtin_variety(args.variety)
    h = second_cohomology(algebra, variety)
    _emit(
        {
            "algebra": {"dim": algebra.dim, "field": algebra.field.spec()},
            "variety": variety.name,
            "dim_z": h.dim_z,
            "dim_b": h.dim_b,
            "dim_h": h.dim_h,
            "z_basis": [t.to_json() for t in h.z_basis],
            "b_basis": [t.to_json() for t in h.b_basis],
            "h_representatives": [
                {"label": lab, "form": t.to_json()}
                for lab, t in zip(h.h_labels, h.h_reps)
            ],
            "preferred_basis_used": h.preferred_basis_used,
        }
    )
    return 0


def _cmd_extend(args) -> int:
    field = _load_field(args.field)
    algebra = _load_algebra(args.algebra, field)
    variety = builtin_variety(args.variety)
    thetas = [_load_cocycle(spec, algebra) for spec in args.cocycle]
    result = central_extension(algebra, thetas, variety)
    t1 = None
    if len(thetas) == 1:
        h = second_cohomology(algebra, variety)
        if h.class_is_zero(thetas[0]):
            t1 = False
        else:
            t1 = in_T1(algebra, variety, thetas[0], h)
    _emit(
        {
            "base": algebra.to_json(),
            "variety": variety.name,
            "cocycles": [t.to_json() for t in thetas],
            "extended": result.extended.to_json(),
            "non_split": result.non_split,
            "annihilator_dim": result.annihilator_dim,
            "class_coordinates": [
                [c.literal() for c in row] for row in result.class_coords
            ],
            "t1": t1,
        }
    )
    return 0


def _cmd_aut(args) -> int:
    field = _load_field(args.field)
    out = {"n": args.n, "field": field.spec()}
    if args.count:
        out["count"] = automorphism_count(args.n, field)
    if args.col is not None:
        col = [field.scalar(x) for x in args.col.split(",")]
        phi = Automorphism(field, col)
        out["column"] = [c.literal() for c in col]
        out["matrix"] = [[c.literal() for c in row] for row in phi.matrix]
        out["phi11"] = phi.phi11.literal()
    if not args.count and args.col is None:
        raise ValueError("aut needs --col and/or --count")
    _emit(out)
    return 0


def _cmd_act(args) -> int:
    field = _load_field(args.field)
    algebra = null_filiform(args.n, field)
    col = [field.scalar(x) for x in args.col.split(",")]
    phi = Automorphism(field, col)
    theta = _load_cocycle(args.cocycle, algebra)
    image = act_on_cocycle(phi, theta)
    out = {
        "n": args.n,
        "field": field.spec(),
        "column": [c.literal() for c in col],
        "cocycle": theta.to_json(),
        "image": image.to_json(),
    }
    if args.variety is not None:
        h = second_cohomology(algebra, builtin_variety(args.variety))
        out["variety"] = h.variety.name
        out["class_before"] = [c.literal() for c in h.reduce_class(theta)]
        out["class_after"] = [c.literal() for c in h.reduce_class(image)]
    _emit(out)
    return 0


def _cmd_classify(args) -> int:
    field = _load_field(args.field)
    fn = orbits_on_T1 if args.level == "t1" else orbits_on_H2
    report = fn(args.n, args.variety, field, budget=args.budget)
    _emit(report.to_json(include_members=args.members))
    return 0


def _cmd_verify_table1(args) -> int:
    field = _load_field(args.field)
    mu = None
    if args.mu is not None:
        mu = [Fraction(m) for m in args.mu.split(",")]
    rows = check_table1(args.n, field, mu)
    ok = all(r["ok"] for r in rows)
    _emit({"n": args.n, "field": field.spec(), "rows": rows, "ok": ok})
    return 0 if ok else 1


def _cmd_reproduce(args) -> int:
    primes = tuple(int(p) for p in args.primes.split(",")) if args.primes else (3, 5)
    report = run_reproduction(
        n_max=args.n_max, seed=args.seed, budget=args.budget, orbit_primes=primes
    )
    _emit(report)
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="centext",
        description="central extensions of null-filiform algebras, exactly",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("identities", help="show a variety's defining identities")
    p.add_argument("--variety", required=True, help=f"one of {', '.join(VARIETY_NAMES)}")
    p.set_defaults(fn=_cmd_identities)

    p = sub.add_parser("cohomology", help="cocycle and cohomology spaces")
    p.add_argument("--algebra", required=True, help="mu0:N or a JSON file")
    p.add_argument("--field", default="Q", help="Q or Fp:<prime> (default Q)")
    p.add_argument("--variety", required=True)
    p.set_defaults(fn=_cmd_cohomology)

    p = sub.add_parser("extend", help="build a central extension")
    p.add_argument("--algebra", required=True, help="mu0:N or a JSON file")
    p.add_argument("--field", default="Q")
    p.add_argument("--variety", required=True)
    p.add_argument(
        "--cocycle",
        action="append",
        required=True,
        help="named:<token>, expr:<expression>, or a JSON file; repeatable",
    )
    p.set_defaults(fn=_cmd_extend)

    p = sub.add_parser("aut", help="automorphisms of the null-filiform algebra")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--field", default="Q")
    p.add_argument("--col", help="comma-separated first column, e.g. 1,2,0")
    p.add_argument("--count", action="store_true", help="print the group order")
    p.set_defaults(fn=_cmd_aut)

    p = sub.add_parser("act", help="apply an automorphism to a cocycle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--field", default="Q")
    p.add_argument("--col", required=True)
    p.add_argument("--cocycle", required=True)
    p.add_argument("--variety", help="also reduce to class coordinates")
    p.set_defaults(fn=_cmd_act)

    p = sub.add_parser("classify", help="orbit classification over a finite field")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--field", required=True, help="Fp:<prime>")
    p.add_argument("--variety", required=True)
    p.add_argument("--level", choices=("h2", "t1"), default="t1")
    p.add_argument("--members", action="store_true", help="list orbit members")
    p.add_argument("--budget", type=int, help="enumeration budget override")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("verify-table1", help="verify the extension table rows")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--field", default="Q")
    p.add_argument("--mu", help="comma-separated parameter sample, default field-dependent")
    p.set_defaults(fn=_cmd_verify_table1)

    p = sub.add_parser("reproduce", help="run the full claim battery")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int)
    p.add_argument("--primes", help="comma-separated orbit primes, default 3,5")
    p.set_defaults(fn=_cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (CentextError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
