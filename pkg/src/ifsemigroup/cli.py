"""Command-line entry point: ``ifsg {classify,materialize,verify,enumerate}``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import data
from . import ifs as F
from . import points as pts
from .harness import POLICIES, run_suite

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3


def parse_orders(text: str) -> range:
    """``"1..3"`` -> ``range(1, 4)``; a single integer is also accepted."""
    try:
        if ".." in text:
            lo, hi = (int(p) for p in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if not 1 <= lo <= hi:
        raise argparse.ArgumentTypeError(f"need 1 <= A <= B, got {text!r}")
    return range(lo, hi + 1)


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ifsg",
        description="Finite semigroups, intuitionistic fuzzy subsets and fuzzy points.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify an IFS and its set of fuzzy points")
    p.add_argument("--table", required=True, help="semigroup .sg file")
    p.add_argument("--ifs", required=True, help="IFS .ifs file")
    p.add_argument("--max-points", type=_positive, default=pts.DEFAULT_MAX_POINTS)

    p = sub.add_parser("materialize", help="export the point semigroup at resolution D")
    p.add_argument("--table", required=True, help="semigroup .sg file")
    p.add_argument("--resolution", type=_positive, required=True)
    p.add_argument("--out", required=True,
                   help="output stem; writes STEM.sg and the sidecar STEM.idx")
    p.add_argument("--max-points", type=_positive, default=pts.DEFAULT_MAX_POINTS)

    p = sub.add_parser("verify", help="run the theorem suite, JSON-lines report")
    p.add_argument("--orders", type=parse_orders, default=parse_orders("1..3"))
    p.add_argument("--resolution", type=_positive, default=2)
    p.add_argument("--policy", choices=[s.replace("_", "-") for s in POLICIES],
                   default="exhaustive-consistent")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=_positive, default=200,
                   help="IFSs per semigroup under the sampled policy")
    p.add_argument("--pairs", type=_positive, default=500,
                   help="sampled IFS pairs per semigroup for the union/intersection/product check")
    p.add_argument("--max-points", type=_positive, default=pts.DEFAULT_MAX_POINTS)
    p.add_argument("--manifest", help="file listing extra .sg tables, one path per line")
    p.add_argument("--out", help="write the JSON-lines report here (default: stdout)")

    p = sub.add_parser("enumerate", help="list associative tables")
    p.add_argument("--orders", type=parse_orders, default=parse_orders("1..3"))
    p.add_argument("--raw", action="store_true", help="do not reduce up to isomorphism")
    p.add_argument("--out", help="directory to write one .sg file per table")
    return parser


def cmd_classify(args) -> int:
    S = data.read_semigroup(args.table)
    A = data.read_ifs(args.ifs, S)
    P = pts.materialize(S, A.resolution, args.max_points)
    U = pts.underline(A, P)
    if not F.is_nonempty(A):
        print("note: empty IFS")
    print(f"semigroup order {S.order}, resolution {A.resolution}, "
          f"{len(U)} of {P.order} points in the underline set")
    print(f"{'kind':<16} {'fuzzy':<6} points")
    for kind in F.IFS_KINDS:
        crisp = {"semiprime": U.is_semiprime, "prime": U.is_prime}.get(kind)
        if crisp is not None:
            image = crisp()
        elif kind == "ideal_alt":
            image = U.classify("ideal")
        else:
            image = U.classify(kind)
        print(f"{kind:<16} {str(F.classify_ifs(A, kind)):<6} {image}")
    return EXIT_OK


def cmd_materialize(args) -> int:
    S = data.read_semigroup(args.table)
    P = pts.materialize(S, args.resolution, args.max_points)
    stem = Path(args.out)
    if stem.suffix == ".sg":
        stem = stem.with_suffix("")
    stem.parent.mkdir(parents=True, exist_ok=True)
    stem.with_suffix(".sg").write_text(pts.to_sg_text(P))
    stem.with_suffix(".idx").write_text(pts.to_index_text(P))
    print(f"wrote {P.order} points to {stem.with_suffix('.sg')} and {stem.with_suffix('.idx')}")
    return EXIT_OK


def cmd_verify(args) -> int:
    extra = data.read_manifest(args.manifest) if args.manifest else []
    reports = run_suite(args.orders, args.resolution, args.policy.replace("-", "_"),
                        seed=args.seed, count=args.count, pair_count=args.pairs,
                        max_points=args.max_points, extra=extra)
    body = "".join(r.to_json() + "\n" for r in reports)
    if args.out:
        Path(args.out).write_text(body)
    else:
        sys.stdout.write(body)
    out = sys.stderr if not args.out else sys.stdout
    failed = [r for r in reports if r.failed]
    budget = [r for r in reports if "budget exceeded" in r.notes or "size cap" in r.notes]
    for r in reports:
        tag = "FAIL" if r.failed else r.outcome
        print(f"{tag:<14} {r.check_id:<48} {r.instances_checked:>8}", file=out)
    print(f"{len(reports)} checks, {len(failed)} with counterexamples", file=out)
    if failed:
        return EXIT_COUNTEREXAMPLE
    return EXIT_BUDGET if budget else EXIT_OK


def cmd_enumerate(args) -> int:
    if max(args.orders) > 3:
        print("exhaustive enumeration is limited to order 3", file=sys.stderr)
        return EXIT_INPUT_ERROR
    cfg = data.EnumerationConfig(max(args.orders), up_to_iso=not args.raw,
                                 min_order=min(args.orders), budget=10 ** 6)
    found = list(data.enumerate_semigroups(cfg))
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, S in enumerate(found):
            (outdir / f"order{S.order}_{i:03d}.sg").write_text(data.serialize_semigroup(S))
    else:
        for S in found:
            sys.stdout.write(data.serialize_semigroup(S) + "\n")
    for n in args.orders:
        print(f"order {n}: {sum(S.order == n for S in found)}", file=sys.stderr)
    return EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "materialize": cmd_materialize,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except pts.SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
