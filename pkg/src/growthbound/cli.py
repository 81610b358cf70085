"""Command line: ``growthbound {bound,weights,verify,encode}``.

Exit codes: 0 success, 1 verification mismatch, 2 bad flags or input,
3 node budget exhausted.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time

from . import bounds, formats
from .animals import InvalidAnimalError, read_animal
from .enumerator import BudgetExceeded, build_weight_sum
from .enumerator.driver import default_budget
from .formats import RunManifest, canonical_json, write_outputs
from .twigs import sequence_weight

EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


def _report(result: bounds.BoundResult) -> dict:
    rep = result.to_json()
    rep.pop("runtime_ms")  # timings live in the manifest so reports stay byte-stable
    return rep


def _emit(args, files: dict[str, str], manifest: RunManifest, main: str) -> None:
    if args.out:
        write_outputs(args.out, files, manifest)
    sys.stdout.write(files[main])


def cmd_bound(args) -> int:
    if args.i is not None and args.method != "iterate":
        raise UsageError("--i is only valid with --method iterate")
    start = time.perf_counter()
    digits = args.precision
    files = {}
    if args.method == "eden":
        res = bounds.eden_bound(args.d, digits)
    elif args.method == "general":
        res = bounds.general_bound(args.d, digits)
    elif args.method == "closed2d":
        if args.d != 2:
            raise UsageError("closed2d is the d = 2 bound")
        res = bounds.closed_form_2d(digits)
    elif args.method == "multinomial":
        if args.d < 3:
            raise UsageError("multinomial needs d >= 3 (use closed2d for d = 2)")
        res = bounds.multinomial_bound(args.d, digits=digits)
    else:
        if args.d not in (2, 3):
            raise UsageError("iterate needs d = 2 or 3")
        if args.i is None or args.i < 1:
            raise UsageError("iterate needs --i >= 1")
        ws = build_weight_sum(args.d, args.i, args.workers, args.budget)
        res = bounds.diagonal_radius_bound(ws.poly, digits, d=args.d, i=args.i)
        files[f"W_{args.d}d_{args.i}.json"] = ws.poly.dumps()
    files["bound.json"] = canonical_json(_report(res))
    manifest = RunManifest(
        "bound",
        {"method": args.method, "d": args.d, "i": args.i, "precision": digits},
        args.workers,
        args.budget,
        time.perf_counter() - start,
    )
    _emit(args, files, manifest, "bound.json")
    return 0


def cmd_weights(args) -> int:
    if args.d not in (2, 3):
        raise UsageError("weights needs d = 2 or 3")
    if args.i < 1:
        raise UsageError("--i must be at least 1")
    ws = build_weight_sum(args.d, args.i, args.workers, args.budget)
    poly = ws.poly.to_json()
    poly["count"] = str(ws.count)
    name = f"W_{args.d}d_{args.i}.json"
    files = {name: canonical_json(poly)}
    manifest = RunManifest(
        "weights",
        {"d": args.d, "i": args.i, "count": str(ws.count), "nodes": ws.nodes},
        args.workers,
        args.budget,
        ws.seconds,
    )
    if args.out:
        write_outputs(args.out, files, manifest)
    print(f"|C_{args.i}| = {ws.count}")
    print(f"W_{args.i}(x,y) = {ws.poly}")
    return 0


def cmd_verify(args) -> int:
    from .verify import run_suite

    checks = run_suite(args.suite, args.workers)
    for c in checks:
        print(c.line())
    bad = sum(not c.ok for c in checks)
    print(f"{args.suite}: {len(checks) - bad}/{len(checks)} passed")
    return EXIT_MISMATCH if bad else 0


def cmd_encode(args) -> int:
    try:
        animal = read_animal(args.input, args.d)
    except (InvalidAnimalError, OSError) as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "eden":
        if args.d != 2:
            raise UsageError("the Eden encoding is implemented for d = 2")
        from .twigs2d import decode_eden, encode_eden

        bits = encode_eden(animal)
        assert decode_eden(bits) == animal
        print(bits)
        return 0
    if args.d == 2:
        from .twigs2d import decode_twigs as dec, encode_polyomino as enc
    else:
        from .twigs3d import decode_twigs_3d as dec, encode_polycube as enc
    seq = enc(animal)
    if dec(seq) != animal:
        raise RuntimeError("decoding did not reproduce the input")
    print(seq)
    print(f"weight {sequence_weight(seq)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="growthbound", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, need_d=True):
        if need_d:
            p.add_argument("--d", type=int, required=True)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--budget", type=int, default=None, help="node budget (default from $GROWTHBOUND_BUDGET or 1e9)")
        p.add_argument("--out", default=None, help="directory for outputs and manifest.json")

    p = sub.add_parser("bound", help="compute an upper bound")
    p.add_argument("--method", choices=("eden", "closed2d", "multinomial", "general", "iterate"), required=True)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--precision", type=int, default=bounds.PRECISION)
    common(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("weights", help="build W_i and |C_i|")
    p.add_argument("--i", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("verify", help="replay a bundled table")
    p.add_argument("--suite", choices=("table1", "table3", "appendixB", "appendixA", "oracle"), required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("encode", help="encode an animal file")
    p.add_argument("--d", type=int, choices=(2, 3), required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--format", choices=("twigs", "eden"), default="twigs")
    p.set_defaults(func=cmd_encode)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        if getattr(args, "workers", 1) < 1:
            raise UsageError("--workers must be positive")
        if hasattr(args, "budget"):
            args.budget = default_budget() if args.budget is None else args.budget
            if args.budget < 1:
                raise UsageError("--budget must be positive")
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
