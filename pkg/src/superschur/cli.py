"""Command-line front end.

Subcommands:

  compute   print one polynomial (factorial supersymmetric, one-row/column,
            shifted, or classical) in text or JSON form
  verify    run one identity's verification grid; exit 0 on full pass
  expand    expand a JSON polynomial over the hook basis
  bench     compare the compiled and pure-Python kernels

Output on stdout is deterministic for fixed flags and seed; wall times go
to stderr.  Exit codes: 0 success, 1 verification failure, 2 usage or
input error.
"""

import argparse
import json
import sys

from .algebra import poly_from_json_obj, poly_to_json_obj, poly_to_text
from .combinatorics import normalize_partition, skew
from .errors import (
    InternalMismatch,
    NotSupersymmetric,
    SuperschurError,
    WindowExceeded,
)
from .shifted import ShiftedContext, e_star, h_star, shifted_super_schur
from .supersym import (
    SuperContext,
    classical_super_schur,
    e_super,
    expand_in_basis,
    h_super,
    super_schur_conv,
)
from .verify import IDENTITIES, resolve_sequence, run_identity

USAGE_EXIT = 2
FAIL_EXIT = 1


def parse_partition(text):
    """Comma-separated weakly decreasing positive ints; [] for empty."""
    text = (text or "").strip()
    if text in ("", "[]"):
        return ()
    try:
        return normalize_partition(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}: {exc}") from None


def _single_index(lam, what):
    if len(lam) > 1:
        raise ValueError(f"--what {what} takes a single integer k, got {lam}")
    return lam[0] if lam else 0


def cmd_compute(args):
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    what = args.what
    if what not in ("s", "classical", "sstar") and mu:
        raise ValueError("--mu is only meaningful for --what s/sstar/classical")
    if what == "s":
        seq = resolve_sequence(args.seq, args.m, args.n, sum(lam), 0)
        poly = super_schur_conv(skew(lam, mu), SuperContext(args.m, args.n, seq))
    elif what == "classical":
        poly = classical_super_schur(skew(lam, mu), args.m, args.n)
    elif what == "sstar":
        poly = shifted_super_schur(skew(lam, mu), ShiftedContext(args.m, args.n))
    elif what in ("e", "h"):
        k = _single_index(lam, what)
        seq = resolve_sequence(args.seq, args.m, args.n, k, 0)
        ctx = SuperContext(args.m, args.n, seq)
        poly = e_super(k, ctx) if what == "e" else h_super(k, ctx)
    elif what in ("estar", "hstar"):
        k = _single_index(lam, what)
        ctx = ShiftedContext(args.m, args.n)
        poly = e_star(k, ctx) if what == "estar" else h_star(k, ctx)
    else:
        raise ValueError(f"unknown --what {what!r}")
    if args.format == "json":
        obj = {
            "what": what,
            "lambda": list(lam),
            "mu": list(mu),
            "m": args.m,
            "n": args.n,
            "poly": poly_to_json_obj(poly),
        }
        print(json.dumps(obj, indent=2))
    else:
        print(poly_to_text(poly))
    return 0


def cmd_verify(args):
    report = run_identity(
        args.identity,
        args.m,
        args.n,
        seq_text=args.seq,
        max_weight=args.max_weight,
        trials=args.trials,
        rng_seed=args.rng_seed,
        order=args.order,
        jobs=args.jobs,
    )
    if args.format == "json":
        print(json.dumps(report.to_json_obj(), indent=2))
    else:
        for line in report.text_lines():
            print(line)
    print(f"wall time: {report.wall_time:.3f}s", file=sys.stderr)
    return 0 if report.passed else FAIL_EXIT


def cmd_expand(args):
    with open(args.poly_file) as handle:
        obj = json.load(handle)
    poly = poly_from_json_obj(obj)
    seq_text = args.seq or "arith:0"
    seq = resolve_sequence(seq_text, args.m, args.n, args.k, 0)
    ctx = SuperContext(args.m, args.n, seq)
    expansion = expand_in_basis(poly, ctx, args.k)
    coeffs = {
        json.dumps(list(lam), separators=(",", ":")): str(c)
        for lam, c in sorted(expansion.coefficients.items())
    }
    print(
        json.dumps(
            {
                "coefficients": coeffs,
                "reconstruction_exact": expansion.reconstruction_exact,
            },
            indent=2,
        )
    )
    return 0


def cmd_bench(args):
    from .backend import BACKEND_NAME
    from .bench import format_rows, run_benchmarks, run_macro_benchmark

    rows = run_benchmarks(repeat=args.repeat)
    macro = run_macro_benchmark() if args.macro else None
    if args.format == "json":
        print(json.dumps({"micro": rows, "macro": macro, "active": BACKEND_NAME}, indent=2))
        return 0
    print(f"active backend: {BACKEND_NAME}")
    for line in format_rows(rows):
        print(line)
    if macro:
        print(
            f"macro: {macro['case']}: {macro['cases']} cases in "
            f"{macro['seconds']:.2f}s ({'pass' if macro['passed'] else 'FAIL'})"
        )
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="superschur",
        description="Exact computations and identity checks for factorial "
        "supersymmetric Schur polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="print one polynomial")
    compute.add_argument(
        "--what",
        required=True,
        choices=["s", "e", "h", "sstar", "estar", "hstar", "classical"],
    )
    compute.add_argument("--lambda", dest="lam", default="", metavar="PARTS",
                         help="partition, e.g. 3,1 ([] for empty); a single "
                         "integer k for e/h/estar/hstar")
    compute.add_argument("--mu", default="", metavar="PARTS",
                         help="inner partition for skew shapes")
    compute.add_argument("--m", type=int, required=True)
    compute.add_argument("--n", type=int, required=True)
    compute.add_argument("--seq", default="", help="zero | arith:<offset> | "
                         "list:<lo>:<v,..> | sym:<lo>:<hi> (default: auto symbolic)")
    compute.add_argument("--format", choices=["text", "json"], default="text")
    compute.set_defaults(func=cmd_compute)

    verify = sub.add_parser("verify", help="run one identity grid")
    verify.add_argument("--identity", required=True, choices=list(IDENTITIES))
    verify.add_argument("--max-weight", type=int, default=None)
    verify.add_argument("--m", type=int, required=True)
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--seq", default="")
    verify.add_argument("--trials", type=int, default=5)
    verify.add_argument("--rng-seed", type=int, default=0)
    verify.add_argument("--N", dest="order", type=int, default=12,
                        help="truncation order for series checks")
    verify.add_argument("--jobs", type=int, default=1,
                        help="parallelize grid cases; report order is fixed")
    verify.add_argument("--format", choices=["text", "json"], default="text")
    verify.set_defaults(func=cmd_verify)

    expand = sub.add_parser("expand", help="expand a polynomial in the hook basis")
    expand.add_argument("poly_file", help="JSON file with the serialized polynomial")
    expand.add_argument("--m", type=int, required=True)
    expand.add_argument("--n", type=int, required=True)
    expand.add_argument("--seq", default="",
                        help="numeric multiplicity-free sequence (default arith:0)")
    expand.add_argument("--k", type=int, required=True, help="degree bound")
    expand.set_defaults(func=cmd_expand)

    bench = sub.add_parser("bench", help="compare term kernels")
    bench.add_argument("--repeat", type=int, default=5)
    bench.add_argument("--macro", action="store_true",
                       help="also time a full verification grid")
    bench.add_argument("--format", choices=["text", "json"], default="text")
    bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NotSupersymmetric, InternalMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL_EXIT
    except WindowExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except (SuperschurError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
