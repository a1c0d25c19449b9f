"""Command-line front end: batch decision queries over vector files.

Exit codes are uniform across subcommands: 0 = positive verdict
(convertible / verified / no violation), 1 = negative or undecided,
2 = input error.  All vectors are JSON arrays of exact literals ("0.4",
"2/5"); plain numbers are accepted in float mode only.
"""

from __future__ import annotations

import argparse
import json
import sys

from .backend import EXACT, float_backend
from . import catalysis, mlocc, renyi
from .majorize import majorizes
from .specvec import load_vector, tensor


def _build_parser():
    p = argparse.ArgumentParser(
        prog="trumpkit",
        description="Decision toolkit for single-copy, multiple-copy and "
                    "catalyst-assisted entanglement transformations.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, need_x=True, need_y=True):
        if need_x:
            sp.add_argument("--x", required=True, metavar="FILE",
                            help="source vector file")
        if need_y:
            sp.add_argument("--y", required=True, metavar="FILE",
                            help="target vector file")
        sp.add_argument("--backend", choices=["exact", "float"],
                        default="exact")
        sp.add_argument("--eps", type=float, default=1e-12,
                        help="comparison tolerance (float backend)")
        sp.add_argument("--json", action="store_true", dest="as_json",
                        help="machine-readable output")

    sp = sub.add_parser("majorize", help="single-copy convertibility")
    common(sp)

    sp = sub.add_parser("mlocc", help="multiple-copy scan over k")
    common(sp)
    sp.add_argument("--k-max", type=int, default=8)

    sp = sub.add_parser("catalyst", help="catalyst construction/search")
    sp.add_argument("action",
                    choices=["build", "combine", "lift", "search", "scan"])
    common(sp)
    sp.add_argument("--c", metavar="FILE", help="catalyst vector file "
                    "(combine/lift/scan)")
    sp.add_argument("--k", type=int, default=None,
                    help="copy count for build/combine (default: auto-scan)")
    sp.add_argument("--k-max", type=int, default=8)
    sp.add_argument("--n-copies", type=int, default=1, help="lift target")
    sp.add_argument("--m-max", type=int, default=8, help="scan range")
    sp.add_argument("--dim-c", type=int, default=2, help="search dimension")
    sp.add_argument("--budget", type=int, default=10000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--transcript", action="store_true",
                    help="print the verification transcript")

    sp = sub.add_parser("classify",
                        help="is more than one copy ever useful for y?")
    common(sp, need_x=False)

    sp = sub.add_parser("rfilter", help="Renyi-entropy dominance filter")
    common(sp)
    sp.add_argument("--alpha-grid", default=None,
                    help="comma-separated orders overriding the default")

    return p


def _backend_of(args):
    if args.backend == "float":
        print("note: float backend, comparisons within eps=%g are "
              "heuristic" % args.eps, file=sys.stderr)
        return float_backend(args.eps)
    return EXACT


def _emit(payload, as_json):
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for key, val in payload.items():
            print("%s: %s" % (key, val))


def cmd_majorize(args) -> int:
    be = _backend_of(args)
    x = load_vector(args.x, be)
    y = load_vector(args.y, be)
    rep = majorizes(x, y)
    _emit(rep.to_json(), args.as_json)
    return 0 if rep.holds else 1


def cmd_mlocc(args) -> int:
    be = _backend_of(args)
    x = load_vector(args.x, be)
    y = load_vector(args.y, be)
    scan = mlocc.scan_Mk(x, y, args.k_max)
    payload = scan.to_json()
    if scan.first_success is None:
        payload["flag"] = ("not_member" if scan.short_circuited
                           else "unknown")
    _emit(payload, args.as_json)
    return 0 if scan.first_success is not None else 1


def cmd_catalyst(args) -> int:
    be = _backend_of(args)
    x = load_vector(args.x, be)
    y = load_vector(args.y, be)
    if args.action == "build":
        k = args.k
        if k is None:
            scan = mlocc.scan_Mk(x, y, args.k_max)
            k = scan.first_success
            if k is None:
                _emit({"error": "no multi-copy witness within k_max=%d"
                       % args.k_max}, args.as_json)
                return 1
        cert = catalysis.build_catalyst_thm1(x, y, k)
    elif args.action == "combine":
        if args.c is None or args.k is None:
            raise SystemExit("combine requires --c and --k")
        cp = load_vector(args.c, be)
        cert = catalysis.combine_catalysts(x, y, args.k, cp)
    elif args.action == "lift":
        if args.c is None:
            raise SystemExit("lift requires --c")
        c = load_vector(args.c, be)
        cert = catalysis.lift_catalyst(x, y, c, args.n_copies)
    elif args.action == "search":
        cert = catalysis.search_catalyst(x, y, args.dim_c, args.budget,
                                         args.seed)
        if cert is None:
            _emit({"result": "absent",
                   "note": "no catalyst found within budget; absence is "
                           "not a proof of nonexistence"}, args.as_json)
            return 1
    else:  # scan
        if args.c is None:
            raise SystemExit("scan requires --c")
        c = load_vector(args.c, be)
        result = catalysis.multicopy_catalyst_scan(x, y, c, args.m_max)
        _emit({str(m): ok for m, ok in sorted(result.items())},
              args.as_json)
        return 0 if any(result.values()) else 1
    payload = cert.to_json()
    if args.transcript:
        xc = tensor(x, cert.catalyst)
        yc = tensor(y, cert.catalyst)
        payload["transcript"] = [
            {"l": l, "ex": str(xc.prefix(l)), "ey": str(yc.prefix(l))}
            for l in range(1, min(xc.dim, 64))]
    _emit(payload, args.as_json)
    return 0 if cert.verified else 1


def cmd_classify(args) -> int:
    be = _backend_of(args)
    y = load_vector(args.y, be)
    verdict = mlocc.classify_usefulness(y)
    _emit(verdict.to_json(), args.as_json)
    return 0


def cmd_rfilter(args) -> int:
    be = _backend_of(args)
    x = load_vector(args.x, be)
    y = load_vector(args.y, be)
    grid = None
    if args.alpha_grid:
        grid = tuple(float(a) for a in args.alpha_grid.split(","))
    verdict = renyi.r_filter(x, y, grid)
    _emit(verdict.to_json(), args.as_json)
    return 0 if not verdict.violated else 1


_DISPATCH = {
    "majorize": cmd_majorize,
    "mlocc": cmd_mlocc,
    "catalyst": cmd_catalyst,
    "classify": cmd_classify,
    "rfilter": cmd_rfilter,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
