"""Command line front end: counting, tame zeta comparison, verification
suites, and digraph export.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import closedform, count, curve, dynmap, series, suites
from .dynmap import (
    AdditiveMap,
    ChebyshevMap,
    LattesMap,
    PowerMap,
    SubadditiveMap,
)
from .ff import make_field


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        a, b = text.split("..", 1)
        lo, hi = int(a), int(b)
        if lo < 1 or hi < lo:
            raise ValueError(f"bad range {text!r}")
        return list(range(lo, hi + 1))
    n = int(text)
    if n < 1:
        raise ValueError("n must be positive")
    return [n]


def _descriptor_from_args(args) -> object:
    kind = args.map
    if kind == "power":
        return PowerMap(args.m, args.p)
    if kind == "chebyshev":
        return ChebyshevMap(args.m, args.p)
    if kind == "additive":
        if not args.coeffs:
            raise ValueError("additive maps need --coeffs a_0,a_1,... (phi-power indexed)")
        coeffs = tuple(int(c) for c in args.coeffs.split(","))
        return AdditiveMap(args.p, coeffs, N=args.N)
    if kind == "subadditive":
        if not args.coeffs or not args.d:
            raise ValueError("subadditive maps need --coeffs and --d")
        core = AdditiveMap(args.p, tuple(int(c) for c in args.coeffs.split(",")), N=args.N)
        poly = (
            tuple(int(c) for c in args.poly.split(",")) if args.poly else None
        )
        return SubadditiveMap(core, args.d, poly)
    if kind == "lattes":
        if not args.curve:
            raise ValueError("Lattes maps need --curve a2,a4,a6")
        a2, a4, a6 = (int(c) for c in args.curve.split(","))
        E = curve.Curve(make_field(args.p), a2, a4, a6)
        return LattesMap(E, args.m)
    raise ValueError(f"unknown map kind {kind!r}")


def _add_descriptor_flags(sp, required: bool = True):
    sp.add_argument("--map", required=required,
                    choices=["power", "chebyshev", "additive", "subadditive", "lattes"])
    sp.add_argument("--m", type=int, default=2, help="multiplier m (power/chebyshev/lattes)")
    sp.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    sp.add_argument("--N", type=int, default=1, help="coefficient field extension degree")
    sp.add_argument("--curve", help="a2,a4,a6 for y^2 = x^3 + a2 x^2 + a4 x + a6")
    sp.add_argument("--coeffs", help="additive coefficients a_0,a_1,... indexed by phi-power")
    sp.add_argument("--d", type=int, help="subadditive automorphism order")
    sp.add_argument("--poly", help="explicit polynomial form for subadditive maps")


def cmd_count(args) -> int:
    d = _descriptor_from_args(args)
    ns = _parse_range(args.n)
    degree_bound = args.degree_bound
    rows = []
    all_match = True
    f = dynmap.build_map(d) if args.method in ("brute", "both") else None
    for n in ns:
        row = {"n": n}
        report = None
        if args.method in ("formula", "both"):
            report = count.fixed_point_formula(d, n)
            row["formula"] = report.total
        if args.method in ("brute", "both"):
            row["brute"] = dynmap.brute_fixed_points(f, n, degree_bound)
        if args.method == "both":
            row["match"] = row["formula"] == row["brute"]
            all_match = all_match and row["match"]
        if report is not None:
            row["kernels"] = {t.gamma: t.kernel for t in report.terms}
        rows.append(row)
    if args.format == "json":
        for row in rows:
            print(json.dumps(row, sort_keys=True))
    else:
        gammas = sorted({g for row in rows for g in row.get("kernels", {})})
        header = ["n"]
        if args.method in ("formula", "both"):
            header.append("f_n")
        if args.method in ("brute", "both"):
            header.append("brute")
        if args.method == "both":
            header.append("match")
        header += [f"kernel[{g}]" for g in gammas]
        print(",".join(header))
        for row in rows:
            cells = [str(row["n"])]
            if "formula" in row:
                cells.append(str(row["formula"]))
            if "brute" in row:
                cells.append(str(row["brute"]))
            if "match" in row:
                cells.append(str(int(row["match"])))
            cells += [str(row.get("kernels", {}).get(g, "")) for g in gammas]
            print(",".join(cells))
    return 0 if all_match else 1


def cmd_tame(args) -> int:
    d = _descriptor_from_args(args)
    T = args.T
    cnts = count.formula_counts(d, T)
    tz = series.tame_from_counts(cnts, d.p, T)
    ap = closedform.closed_form(d)
    cf = closedform.expand(ap, T)
    equal = tz == cf
    out = {
        "descriptor": d.label(),
        "T": T,
        "tame_coefficients": json.loads(tz.to_json()),
        "closed_form": json.loads(ap.to_json()),
        "closed_form_pretty": ap.pretty(),
        "equal": equal,
    }
    if count.is_coseparable(d):
        zf = series.zeta_from_counts(count.formula_counts(d, 30), 30)
        pres = series.pade_certify(zf, 4)
        out["full_zeta_rational"] = pres is not None
        if pres is not None:
            out["full_zeta"] = json.loads(pres.to_json())
        ok = equal and pres is not None
    else:
        cert, rep = suites.certify_descriptor(d)
        out["certificate"] = None if cert is None else json.loads(cert.to_json())
        out["filtration"] = json.loads(rep.to_json())
        ok = equal and cert is not None
    print(json.dumps(out, sort_keys=True))
    return 0 if ok else 1


def cmd_verify(args) -> int:
    if args.suite not in suites.SUITES:
        print(f"unknown suite {args.suite!r}; available: {', '.join(sorted(suites.SUITES))}",
              file=sys.stderr)
        return 2
    if args.suite == "lte":
        result = suites.suite_lte(trials=args.trials, seed=args.seed)
    else:
        result = suites.SUITES[args.suite]()
    for line in result.lines:
        print(line)
    # timing goes to stderr so identical runs stay byte-identical on stdout
    print(f"{'OK' if result.ok else 'FAILED'}  suite {result.name} "
          f"({len(result.lines)} checks)")
    print(f"[{result.name}: {result.elapsed:.1f}s]", file=sys.stderr)
    return 0 if result.ok else 1


def cmd_digraph(args) -> int:
    ext = make_field(args.p, args.N, enumeration_bound=args.enum_bound)
    if args.poly_map:
        F = make_field(args.p)
        coeffs = [int(c) for c in args.poly_map.split(",")]
        f = dynmap.RationalMap(dynmap.Poly.from_ints(F, coeffs), dynmap.Poly.one(F))
        label = "poly[" + args.poly_map + "]"
    elif args.map:
        d = _descriptor_from_args(args)
        f = dynmap.build_map(d)
        label = d.label()
    else:
        raise ValueError("digraph needs either --map or --poly-map")
    g = dynmap.restrict_digraph(f, ext, enumeration_bound=args.enum_bound)
    census = g.cycle_census()
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(g.dot_export())
    if args.census:
        with open(args.census, "w") as fh:
            fh.write(census.to_csv())
    else:
        sys.stdout.write(census.to_csv())
    print(f"# {label} on P^1(F_{ext.order}): {g.size} vertices, "
          f"{census.periodic} periodic, cyclic density {census.density} "
          f"= {float(census.density):.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dynaffine",
        description="Fixed points and tame zeta functions of dynamically affine maps on P^1",
    )
    ap.add_argument(
        "--degree-bound",
        type=int,
        default=int(os.environ.get("DYNAFFINE_DEGREE_BOUND", dynmap.DEFAULT_DEGREE_BOUND)),
        help="iteration degree bound for brute-force counting",
    )
    ap.add_argument(
        "--enum-bound",
        type=int,
        default=int(os.environ.get("DYNAFFINE_ENUM_BOUND", dynmap.DEFAULT_ENUM_BOUND)),
        help="field enumeration bound for digraphs",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("count", help="fixed-point counts: formula vs brute force")
    _add_descriptor_flags(sp)
    sp.add_argument("--n", required=True, help="iterate or range, e.g. 1..8")
    sp.add_argument("--method", choices=["formula", "brute", "both"], default="both")
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("tame", help="tame zeta: counts vs closed form, with certificate")
    _add_descriptor_flags(sp)
    sp.add_argument("--T", type=int, default=30, help="truncation order")
    sp.set_defaults(func=cmd_tame)

    sp = sub.add_parser("verify", help="run a named verification suite")
    sp.add_argument("suite", help=f"one of: {', '.join(sorted(suites.SUITES))}")
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=42)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("digraph", help="functional digraph of a restriction")
    _add_descriptor_flags(sp, required=False)
    sp.add_argument("--poly-map", dest="poly_map",
                    help="plain polynomial coefficients c_0,c_1,... over F_p", default=None)
    sp.add_argument("--dot", help="write DOT output to this file")
    sp.add_argument("--census", help="write cycle-census CSV to this file (default stdout)")
    sp.set_defaults(func=cmd_digraph)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
