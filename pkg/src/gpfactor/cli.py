"""Command-line front end.

    gpfactor count --k K
    gpfactor enumerate --k K
    gpfactor signsum --k K
    gpfactor verify --k-max K [--oracle] [--parallel P]
    gpfactor listcolor --k K --trials T --seed S [--palette P] [--parallel P]
    gpfactor export --n N --k K --format {json,dot}

Results go to stdout as one JSON object per line, diagnostics to stderr.
Exit status: 0 success, 1 a check failed or a list instance was
unsolvable, 2 usage error (including size-bound violations).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .errors import InstanceTooLarge, InvalidParameters
from .factorisation import enumerate_1f, signed_count_1f
from .gp_core import build_gp, export_graph
from .list_colouring import DEFAULT_MAX_EDGES, verify_choosability_sample

MAX_ENUMERATE_K = 40


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")
    sys.stdout.flush()


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer seed, got {text!r}")
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gpfactor", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    for name, help_ in (
        ("count", "signed 1-factorisation count of GP(3k,k)"),
        ("enumerate", "stream every 1-factorisation of GP(3k,k)"),
        ("signsum", "Alon-Tarsi sign sum of GP(3k,k)"),
    ):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--k", type=_positive, required=True)

    sp = sub.add_parser("verify", help="run invariant suites up to k-max")
    sp.add_argument("--k-max", type=_positive, required=True)
    sp.add_argument("--oracle", action="store_true", help="also run brute-force oracle suites")
    sp.add_argument("--parallel", type=_positive, default=1)

    sp = sub.add_parser("listcolor", help="random 3-list colouring trials on GP(3k,k)")
    sp.add_argument("--k", type=_positive, required=True)
    sp.add_argument("--trials", type=_positive, required=True)
    sp.add_argument("--seed", type=_seed, required=True)
    sp.add_argument("--palette", type=_positive, default=None)
    sp.add_argument("--parallel", type=_positive, default=1)

    sp = sub.add_parser("export", help="print GP(n,k)")
    sp.add_argument("--n", type=_positive, required=True)
    sp.add_argument("--k", type=_positive, required=True)
    sp.add_argument("--format", choices=("json", "dot"), default="json")
    return p


def _count(args) -> int:
    sc = signed_count_1f(args.k)
    _emit({
        "k": args.k,
        "count": str(sc.total()),
        "positive": str(sc.pos),
        "negative": str(sc.neg),
        "sign_sum": str(sc.difference()),
    })
    return 0


def _enumerate(args) -> int:
    g = build_gp(3 * args.k, args.k)
    for f in enumerate_1f(args.k):
        _emit(f.to_json(g))
    return 0


def _signsum(args) -> int:
    total = signed_count_1f(args.k).difference()
    _emit({"k": args.k, "sign_sum": str(total)})
    ok = total != 0
    print(f"{'PASS' if ok else 'FAIL'} sign sum nonzero for k={args.k}", flush=True)
    return 0 if ok else 1


def _verify(args) -> int:
    failed = passed = 0
    for name, run in checks.suites(args.k_max, args.oracle, args.parallel):
        ok = run()
        _emit({"check": name, "k_max": args.k_max, "status": "PASS" if ok else "FAIL"})
        passed += ok
        failed += not ok
    _emit({"summary": "PASS" if not failed else "FAIL", "passed": passed, "failed": failed})
    return 0 if not failed else 1


def _listcolor(args) -> int:
    report = verify_choosability_sample(args.k, args.trials, args.palette, args.seed, args.parallel)
    # wall time varies between runs, so it stays off stdout
    _emit(report.to_json(timing=False))
    print(json.dumps({"elapsed_ms": report.elapsed_ms,
                      "max_trial_ms": round(report.max_trial_ms, 3)}), file=sys.stderr)
    return 0 if not report.failures else 1


def _export(args) -> int:
    g = build_gp(args.n, args.k)
    sys.stdout.buffer.write(export_graph(g, args.format))
    sys.stdout.flush()
    return 0


HANDLERS = {
    "count": _count,
    "enumerate": _enumerate,
    "signsum": _signsum,
    "verify": _verify,
    "listcolor": _listcolor,
    "export": _export,
}


def _validate(parser: argparse.ArgumentParser, args) -> None:
    if args.command == "enumerate" and args.k > MAX_ENUMERATE_K:
        parser.error(f"--k {args.k} exceeds enumeration bound {MAX_ENUMERATE_K}")
    if args.command == "listcolor":
        edges = 9 * args.k
        if edges > DEFAULT_MAX_EDGES:
            parser.error(f"GP({3 * args.k},{args.k}) has {edges} edges, above the solver bound {DEFAULT_MAX_EDGES}")
        if args.palette is not None and args.palette < 3:
            parser.error("--palette must be at least 3 for size-3 lists")
    if args.command == "export":
        try:
            build_gp(args.n, args.k)
        except InvalidParameters as exc:
            parser.error(str(exc))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        return HANDLERS[args.command](args)
    except InstanceTooLarge as exc:
        print(f"gpfactor: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
