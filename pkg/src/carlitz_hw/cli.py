"""Command-line surface.

Subcommands: invariants, scan, bpoly, powersum, genus, verify.  Machine
payload goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 domain errors (bad input, reducible modulus, failed verify), 2 internal
invariant violations, 3 resource limits.  The environment variable
CARLITZ_HW_BUDGET (decimal integer) overrides the exact-mode cost ceiling.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bpoly as bpoly_mod
from . import invariants, powersums, scan
from .errors import DomainError, InternalError, ResourceLimitError
from .fieldcore import make_field
from .polyring import NEG_INF, Modulus, format_poly, parse_poly


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; route through the domain-error
    # path instead so exit codes keep their documented meaning
    def error(self, message):
        raise DomainError(message)


def _build_parser() -> _Parser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--p", type=int, required=True, help="characteristic (prime)")
    shared.add_argument("--e", type=int, default=1, help="extension degree (default 1)")
    shared.add_argument("--field-poly", default=None,
                        help="defining polynomial of F_q over F_p in x "
                             "(only with --e > 1; default: least irreducible)")
    top = _Parser(prog="carlitz-hw",
                  description="Hasse-Witt invariants and ordinariness of "
                              "cyclotomic function fields over F_q(T)")
    sub = top.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", parents=[shared],
                           help="full invariant report for one modulus")
    p_inv.add_argument("--m", required=True, help="monic irreducible modulus in T")
    p_inv.add_argument("--no-orbit", action="store_true",
                       help="disable the Frobenius-orbit reduction")

    p_scan = sub.add_parser("scan", parents=[shared],
                            help="classify all irreducible moduli of a degree")
    p_scan.add_argument("--d", type=int, required=True)
    p_scan.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p_scan.add_argument("--out", default=None, help="output path (default stdout)")
    p_scan.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p_scan.add_argument("--mode", choices=("full", "witness"), default="full")
    p_scan.add_argument("--limit", type=int, default=None)
    p_scan.add_argument("--no-orbit", action="store_true")

    p_bp = sub.add_parser("bpoly", parents=[shared],
                          help="generating polynomial of one exponent")
    p_bp.add_argument("--n", type=int, required=True)
    group = p_bp.add_mutually_exclusive_group(required=True)
    group.add_argument("--mod", default=None, help="reduce mod this modulus")
    group.add_argument("--exact", action="store_true")
    p_bp.add_argument("--d", type=int, default=None,
                      help="ambient degree for range validation (with --exact)")

    p_ps = sub.add_parser("powersum", parents=[shared],
                          help="power sum over monic polynomials of one degree")
    p_ps.add_argument("--i", type=int, required=True)
    p_ps.add_argument("--n", type=int, required=True)
    group = p_ps.add_mutually_exclusive_group(required=True)
    group.add_argument("--mod", default=None)
    group.add_argument("--exact", action="store_true")

    p_gen = sub.add_parser("genus", parents=[shared],
                           help="genus pair for all moduli of a degree")
    p_gen.add_argument("--d", type=int, required=True)

    p_ver = sub.add_parser("verify", parents=[shared],
                           help="run the identity suites at (q, d)")
    p_ver.add_argument("--d", type=int, required=True)
    p_ver.add_argument("--suites", default=",".join(invariants.SUITE_NAMES),
                       help="comma-separated subset of: "
                            + ",".join(invariants.SUITE_NAMES))
    return top


def _budget() -> int | None:
    raw = os.environ.get("CARLITZ_HW_BUDGET")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"CARLITZ_HW_BUDGET must be a decimal integer, got {raw!r}")


def _make_ctx(args):
    if args.field_poly is not None:
        if args.e == 1:
            raise DomainError("--field-poly is only accepted when --e > 1")
        helper = make_field(args.p)
        coeffs = parse_poly(args.field_poly.replace("x", "T"), helper).coeffs
        ctx = make_field(args.p, args.e, coeffs)
    else:
        ctx = make_field(args.p, args.e)
    if ctx.e > 1:
        # reproducibility: the defining polynomial is part of the result
        print(f"note: field modulus {ctx.format_field_modulus()}", file=sys.stderr)
    return ctx


def _parse_modulus(text, ctx) -> Modulus:
    return Modulus(parse_poly(text, ctx))


def _fmt_degree(deg) -> str:
    return "-inf" if deg == NEG_INF else str(deg)


def _cmd_invariants(args) -> int:
    ctx = _make_ctx(args)
    rep = invariants.hasse_witt(_parse_modulus(args.m, ctx),
                                use_orbit=not args.no_orbit)
    print(json.dumps(rep.to_json_dict(), separators=(",", ":")))
    return 0


def _cmd_scan(args) -> int:
    ctx = _make_ctx(args)
    mode = scan.MODE_WITNESS if args.mode == "witness" else scan.MODE_FULL
    records = scan.scan_degree(ctx, args.d, mode=mode, limit=args.limit,
                               workers=args.workers,
                               use_orbit=not args.no_orbit)
    scan.write_records(records, args.format, args.out)
    return 0


def _cmd_bpoly(args) -> int:
    ctx = _make_ctx(args)
    if args.mod is not None:
        poly = bpoly_mod.b_poly(args.n, ctx, m=_parse_modulus(args.mod, ctx))
    else:
        if args.d is None:
            raise DomainError("--exact requires --d for range validation")
        poly = bpoly_mod.b_poly(args.n, ctx, d=args.d, budget=_budget())
    parts = [_fmt_degree(poly.u_degree)]
    parts.extend(format_poly(c) for c in poly.coeffs)
    print("; ".join(parts))
    return 0


def _cmd_powersum(args) -> int:
    ctx = _make_ctx(args)
    if args.mod is not None:
        poly = powersums.s_mod(args.i, args.n, _parse_modulus(args.mod, ctx))
    else:
        poly = powersums.s_exact(args.i, args.n, ctx, budget=_budget())
    print(f"{_fmt_degree(poly.degree)}; {format_poly(poly)}")
    return 0


def _cmd_genus(args) -> int:
    ctx = _make_ctx(args)
    g, g_plus = invariants.genus(ctx, args.d)
    print(json.dumps({"p": ctx.p, "e": ctx.e, "q": ctx.q, "d": args.d,
                      "g": g, "g_plus": g_plus}, separators=(",", ":")))
    return 0


def _cmd_verify(args) -> int:
    ctx = _make_ctx(args)
    names = [s.strip() for s in args.suites.split(",") if s.strip()]
    if not names:
        raise DomainError("--suites must name at least one suite")
    budget = _budget()
    all_passed = True
    for name in names:
        checks = invariants.run_verify_suite(name, ctx, args.d, budget=budget)
        passed = all(c.passed for c in checks)
        all_passed = all_passed and passed
        line = f"suite={name} result={'pass' if passed else 'fail'}"
        for c in checks:
            if not c.passed:
                line += f" failed={c.name}"
                if c.detail:
                    line += f" detail={c.detail!r}"
                break
        print(line)
    return 0 if all_passed else 1


_DISPATCH = {
    "invariants": _cmd_invariants,
    "scan": _cmd_scan,
    "bpoly": _cmd_bpoly,
    "powersum": _cmd_powersum,
    "genus": _cmd_genus,
    "verify": _cmd_verify,
}


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _DISPATCH[args.command](args)
    except (DomainError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
