"""Command-line front end.

Exit codes: 0 success, 2 invalid input or usage, 3 not a witness,
4 internal contract violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from . import feasibility as fz
from .errors import ContractViolation, InvalidInput, NotAWitness
from .invariants import (
    ThreefoldInvariants,
    from_chern_numbers,
    hypersurface_invariants,
    preset,
    validate,
)
from .miyaoka import bound_polynomial, deficit_polynomial, surface_invariants
from .sos import HomogeneousPoly, common_zero_check, fermat_witness, witness_from_json
from .targets import TargetSpec, ci_map_degree, target_report

EXIT_INVALID = 2
EXIT_NOT_WITNESS = 3
EXIT_CONTRACT = 4

DEFAULT_ASYMPTOTE_M = "100,300,1000,3000,10000"


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_format(p: argparse.ArgumentParser, csv_ok: bool = False) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", dest="fmt", action="store_const", const="json")
    if csv_ok:
        g.add_argument("--csv", dest="fmt", action="store_const", const="csv")
    p.set_defaults(fmt="human")


def _add_invariant_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--hypersurface", type=int, metavar="M", help="smooth degree-M hypersurface in P^4")
    p.add_argument("--preset", choices=["P3", "Q"])
    p.add_argument("--h3", type=int)
    p.add_argument("--c2h", type=int)
    p.add_argument("--index", type=int)
    p.add_argument("--c1-cubed", type=int, help="with --c1c2 and --index, nonzero index only")
    p.add_argument("--c1c2", type=int)


def _resolve_invariants(args) -> tuple[ThreefoldInvariants, Optional[int]]:
    if args.hypersurface is not None:
        return hypersurface_invariants(args.hypersurface), args.hypersurface
    if args.preset is not None:
        return preset(args.preset), None
    if args.c1_cubed is not None or args.c1c2 is not None:
        if None in (args.c1_cubed, args.c1c2, args.index):
            raise InvalidInput("--c1-cubed, --c1c2 and --index must be given together")
        return from_chern_numbers(args.c1_cubed, args.c1c2, args.index), None
    if None in (args.h3, args.c2h, args.index):
        raise InvalidInput("give --hypersurface, --preset, or all of --h3 --c2h --index")
    return validate(ThreefoldInvariants(args.h3, args.c2h, args.index)), None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadricmaps",
        description="Degree bounds for morphisms from Picard-rank-one threefolds to the 3-quadric.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="threefold, bound and surface invariants")
    _add_invariant_args(p)
    p.add_argument("--degree", type=int, help="generator degree d for surface invariants")
    _add_format(p)

    p = sub.add_parser("bound", help="Miyaoka floor and largest non-excluded generator degree")
    _add_invariant_args(p)
    _add_format(p)

    p = sub.add_parser("feasible", help="per-degree verdicts")
    _add_invariant_args(p)
    p.add_argument("--d-limit", type=int)
    _add_format(p, csv_ok=True)

    p = sub.add_parser("fermat", help="Fermat sum-of-squares witness for even degree")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--emit-witness", type=Path, metavar="PATH")
    _add_format(p)

    p = sub.add_parser("verify-sos", help="verify sum(phi_i^2) = F*G from a witness file")
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("--emit-witness", type=Path, metavar="PATH")
    _add_format(p)

    p = sub.add_parser("common-zeros", help="look for common zeros of the phi_i in a witness file")
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=20000)
    _add_format(p)

    p = sub.add_parser("table", help="hypersurface bound table over a range of m")
    p.add_argument("--m-from", type=int, default=2)
    p.add_argument("--m-to", type=int, default=20)
    p.add_argument("--jobs", type=int, default=1)
    _add_format(p, csv_ok=True)

    p = sub.add_parser("target", help="node thresholds for complete-intersection targets")
    p.add_argument("--degrees", type=_int_list, required=True)
    p.add_argument("--h3", type=int)
    p.add_argument("--degree", type=int, help="generator degree for the map-degree formula")
    _add_format(p)

    p = sub.add_parser("asymptote", help="d_m / m against the limit slope 2 + 2 sqrt(3)")
    p.add_argument("--m-values", type=_int_list, default=_int_list(DEFAULT_ASYMPTOTE_M))
    _add_format(p, csv_ok=True)

    return parser


def _dump_json(obj, out) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def _dump_csv(header, rows, out) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    out.write(buf.getvalue())


def cmd_invariants(args, out) -> int:
    inv, _ = _resolve_invariants(args)
    bound, deficit = bound_polynomial(inv), deficit_polynomial(inv)
    data = {
        "invariants": inv.to_json(),
        "bound_polynomial": [[c.numerator, c.denominator] for c in bound.coeffs],
        "deficit_polynomial": [[c.numerator, c.denominator] for c in deficit.coeffs],
    }
    if args.degree is not None:
        data["surface"] = {"d": args.degree, **surface_invariants(inv, args.degree).to_json()}
    if args.fmt == "json":
        _dump_json(data, out)
        return 0
    print(f"H^3 = {inv.h3}, c2.H = {inv.c2h}, k = {inv.index}", file=out)
    print(f"bound(d) = (4/9)H^3 d^3 + (2/9)k H^3 d^2 + (2/3)(c2.H - k^2 H^3/3) d = {bound}", file=out)
    print(f"deficit(d) = H^3 d^3/2 - bound(d) = {deficit}", file=out)
    if args.degree is not None:
        s = surface_invariants(inv, args.degree)
        print(f"d = {args.degree}: K_S^2 = (k+d)^2 d H^3 = {s.k_s_squared}", file=out)
        print(f"        c2(S) = d c2.H + d^2 (d+k) H^3 = {s.c2_surface}", file=out)
        print(f"        double points H^3 d^3/2 = {s.double_points}", file=out)
    return 0


def cmd_bound(args, out) -> int:
    inv, m = _resolve_invariants(args)
    report = fz.bound_report(inv)
    data = report.to_json()
    if m is not None:
        data["hypersurface_degree"] = m
        data["closed_form_d_max"] = fz.hypersurface_dmax_closed_form(m)
        if m == 3:
            data["published_d_max"] = fz.PUBLISHED_D3
    if args.fmt == "json":
        _dump_json(data, out)
        return 0
    print(f"invariants: H^3 = {inv.h3}, c2.H = {inv.c2h}, k = {inv.index}", file=out)
    print(f"nef floor d >= max(1, -k) = {report.d_floor}", file=out)
    print(f"largest d >= floor with H^3 d^3/2 <= bound(d): {report.d_max}", file=out)
    fe = data["first_excluded"]
    print(
        f"d = {fe['d']}: double points {fe['double_points'][0]}/{fe['double_points'][1]}, "
        f"bound {fe['bound'][0]}/{fe['bound'][1]}",
        file=out,
    )
    for note in report.notes:
        print(f"note: {note}", file=out)
    return 0


def cmd_feasible(args, out) -> int:
    inv, m = _resolve_invariants(args)
    result = fz.verdicts_for(inv, m=m, d_limit=args.d_limit)
    if args.fmt == "json":
        _dump_json(result.to_json(), out)
    elif args.fmt == "csv":
        _dump_csv(fz.CSV_COLUMNS, [v.csv_row() for v in result.verdicts], out)
    else:
        for v in result.verdicts:
            print(f"d = {v.d:>4}  {v.status.value:<26} {v.detail}", file=out)
        print(result.tail_note(), file=out)
        for note in result.report.notes:
            print(f"note: {note}", file=out)
        print(result.summary(), file=out)
    return 0


def _write_witness(path: Path, w) -> None:
    path.write_text(w.dumps(), encoding="utf-8")


def cmd_fermat(args, out) -> int:
    w = fermat_witness(args.degree)
    zeros = common_zero_check(w.phi)
    if args.emit_witness:
        _write_witness(args.emit_witness, w)
    md = w.map_degree()
    data = {
        "m": w.m,
        "d": w.d,
        "F": str(w.F),
        "phi": [str(p) for p in w.phi],
        "G": str(w.G),
        "map_degree": [md.numerator, md.denominator],
        "common_zeros": zeros.to_json(),
    }
    if args.fmt == "json":
        _dump_json(data, out)
        return 0
    print(f"F = {w.F}", file=out)
    for i, p in enumerate(w.phi):
        print(f"phi_{i} = {p}", file=out)
    print(f"G = {w.G}", file=out)
    print(f"map degree m d^3/2 = {md}", file=out)
    print(f"common zeros of phi: {zeros.status.value}", file=out)
    return 0


def _load_json(path: Path):
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read witness {path}: {exc}") from exc


def cmd_verify(args, out) -> int:
    w = witness_from_json(_load_json(args.input))
    if args.emit_witness:
        _write_witness(args.emit_witness, w)
    data = {"m": w.m, "d": w.d, "G": str(w.G), "remainder_degree": w.remainder_degree, "valid": True}
    if args.fmt == "json":
        _dump_json(data, out)
        return 0
    print(f"valid witness: sum(phi_i^2) = F * G with G = {w.G}", file=out)
    print(f"remainder degree 2d - m = {w.remainder_degree}", file=out)
    if w.remainder_degree == 1:
        print("2d - m = 1: such a map cannot exist if the phi_i have no common zero on X", file=out)
    return 0


def cmd_common_zeros(args, out) -> int:
    data = _load_json(args.input)
    try:
        phi = [HomogeneousPoly.from_json(p, data.get("d")) for p in data["phi"]]
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"witness JSON missing field: {exc}") from exc
    res = common_zero_check(phi, seed=args.seed, samples=args.samples)
    if args.fmt == "json":
        _dump_json(res.to_json(), out)
    else:
        print(f"{res.status.value}: {res.reason}", file=out)
        if res.point is not None:
            print(f"point ({':'.join(map(str, res.point))}) over {res.field}", file=out)
    return 0


TABLE_COLUMNS = ["m", "h3", "c2h", "index", "d_floor", "d_max", "d_m", "closed_form"]


def table_row(m: int) -> list:
    inv = hypersurface_invariants(m)
    rep = fz.bound_report(inv)
    return [m, inv.h3, inv.c2h, inv.index, rep.d_floor, rep.d_max, fz.hypersurface_dmax(m),
            fz.hypersurface_dmax_closed_form(m)]


def cmd_table(args, out) -> int:
    if args.m_from < 2 or args.m_to < args.m_from:
        raise InvalidInput("need 2 <= --m-from <= --m-to")
    ms = range(args.m_from, args.m_to + 1)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            rows = list(ex.map(table_row, ms, chunksize=64))
    else:
        rows = [table_row(m) for m in ms]
    if args.fmt == "csv":
        _dump_csv(TABLE_COLUMNS, [["" if v is None else v for v in r] for r in rows], out)
    elif args.fmt == "json":
        _dump_json([dict(zip(TABLE_COLUMNS, r)) for r in rows], out)
    else:
        print(" ".join(f"{c:>11}" for c in TABLE_COLUMNS), file=out)
        for r in rows:
            print(" ".join(f"{str(v):>11}" for v in r), file=out)
    return 0


def cmd_target(args, out) -> int:
    t = TargetSpec(tuple(args.degrees))
    data = target_report(t)
    if args.h3 is not None and args.degree is not None:
        md = ci_map_degree(args.h3, args.degree, t)
        data["map_degree"] = [md.numerator, md.denominator]
    if args.fmt == "json":
        _dump_json(data, out)
        return 0
    print(f"target: complete intersection of degrees {list(t.degrees)} in P^{t.ambient_dimension}", file=out)
    exact = data["min_nodes_exact"]
    print(
        f"strategy threshold: hyperplane sections need n >= (4/9)*{t.product} = "
        f"{exact[0]}/{exact[1]}, i.e. n >= {data['min_nodes']} nodes",
        file=out,
    )
    if "map_degree" in data:
        print(f"map degree h3 d^3 / prod = {data['map_degree'][0]}/{data['map_degree'][1]}", file=out)
    return 0


def cmd_asymptote(args, out) -> int:
    if any(m < 2 for m in args.m_values):
        raise InvalidInput("all m must be >= 2")
    rows = fz.asymptotic_report(args.m_values)
    if args.fmt == "json":
        _dump_json(
            {
                "limit_slope_approx": round(fz.ASYMPTOTIC_SLOPE, 6),
                "intercept_approx": round(fz.ASYMPTOTIC_INTERCEPT, 6),
                "rows": [{"m": r.m, "d_m": r.d_m, "ratio_approx": round(r.ratio, 6)} for r in rows],
            },
            out,
        )
    elif args.fmt == "csv":
        _dump_csv(["m", "d_m", "ratio_approx"], [[r.m, r.d_m, f"{r.ratio:.6f}"] for r in rows], out)
    else:
        print(f"limit slope 2 + 2 sqrt(3) ~ {fz.ASYMPTOTIC_SLOPE:.5f}, "
              f"intercept -10 - 5 sqrt(3) ~ {fz.ASYMPTOTIC_INTERCEPT:.3f} (approximate)", file=out)
        for r in rows:
            print(f"m = {r.m:>6}  d_m = {r.d_m!s:>7}  d_m/m ~ {r.ratio:.5f}", file=out)
    return 0


COMMANDS = {
    "invariants": cmd_invariants,
    "bound": cmd_bound,
    "feasible": cmd_feasible,
    "fermat": cmd_fermat,
    "verify-sos": cmd_verify,
    "common-zeros": cmd_common_zeros,
    "table": cmd_table,
    "target": cmd_target,
    "asymptote": cmd_asymptote,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except NotAWitness as exc:
        print(f"error: not a witness: {exc}", file=sys.stderr)
        return EXIT_NOT_WITNESS
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ContractViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT


if __name__ == "__main__":
    sys.exit(main())
