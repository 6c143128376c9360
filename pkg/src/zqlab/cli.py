"""Command-line front end: ``zqlab verify | zeros | oscillate | selftest``.

Exit codes: 0 pass, 1 numeric or verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict
from datetime import datetime, timezone

import numpy as np

from . import __version__

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
PARAM_FLAGS = ("x", "y", "a", "b", "alpha", "delta")


class UsageError(Exception):
    pass


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _positive_int(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0 or not math.isfinite(v):
        raise argparse.ArgumentTypeError("must be a positive finite number")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zqlab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"zqlab {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run identity verifiers")
    v.add_argument("identity", help="identity id, or 'all'")
    for name in PARAM_FLAGS:
        v.add_argument(f"--{name}", type=float)
    v.add_argument("--zeros", type=_positive_int, help="number of zeta zeros in zero sums")
    v.add_argument("--terms", type=_positive_int, help="series / sieve truncation")
    v.add_argument("--tol", type=_positive_float, help="override the pass tolerance")
    v.add_argument("--json", metavar="PATH", help="write a run manifest")
    v.add_argument("--fast", action="store_true", help="with 'all': skip the 10^6-term smoothed sums")
    v.add_argument("--experimental-d2-kernel", action="store_true",
                   help="also run the coarse triple-integral d^2 kernel check (not part of pass/fail)")

    z = sub.add_parser("zeros", help="refine zeta zero ordinates and write them out")
    z.add_argument("--count", type=_positive_int, default=100)
    z.add_argument("--out", metavar="FILE", help="output file (default: stdout)")
    z.add_argument("--seeds", metavar="FILE", help="seed file (default: bundled)")

    o = sub.add_parser("oscillate", help="Riesz-mean oscillation trace")
    o.add_argument("--kind", choices=("mu", "lambda", "d2"), required=True)
    o.add_argument("--delta", type=_positive_float, default=0.1)
    o.add_argument("--ymin", type=_positive_float, default=1e3)
    o.add_argument("--ymax", type=_positive_float, default=1e6)
    o.add_argument("--points", type=int, default=400)
    o.add_argument("--zeros", type=_positive_int, default=100)
    o.add_argument("--csv", metavar="PATH")
    o.add_argument("--json", metavar="PATH")

    s = sub.add_parser("selftest", help="run the invariant suites")
    s.add_argument("--fast", action="store_true", help="skip the 10^6-term smoothed sums")
    s.add_argument("--seeds", metavar="FILE", help="zero seed file to refine (default: bundled)")
    s.add_argument("--json", metavar="PATH")
    return p


def _write_json(path, command, config, reports, passed, started):
    manifest = {
        "command": command,
        "config": config,
        "version": __version__,
        "started": started,
        "finished": _now(),
        "reports": reports,
        "pass": passed,
    }
    with open(path, "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=False)
        fh.write("\n")


def _fmt_params(p: dict) -> str:
    return " ".join(f"{k}={v:g}" for k, v in p.items()) or "-"


def _print_reports(reports) -> None:
    print(f"{'identity':<28} {'params':<26} {'residual':>10} {'tol':>8}  {'result':<6} {'ms':>7}")
    for r in reports:
        print(f"{r.identity_id:<28} {_fmt_params(r.params):<26} {r.residual_abs:>10.3e} {r.tolerance:>8.1e}  "
              f"{'pass' if r.passed else 'FAIL':<6} {r.wall_time_ms:>7d}")


# ---------------------------------------------------------------- verify

def cmd_verify(args, argv) -> int:
    from .identities import (ORDER, REGISTRY, ParameterDomainError, accepted_params, default_config,
                             run_identity, verify_d2_kernel_experimental)
    started = _now()
    if args.identity != "all" and args.identity not in REGISTRY:
        raise UsageError(f"unknown identity {args.identity!r}; choose from: all, {', '.join(ORDER)}")
    given = {k: getattr(args, k) for k in PARAM_FLAGS if getattr(args, k) is not None}
    ids = ORDER if args.identity == "all" else (args.identity,)
    if given:
        if args.identity == "all":
            raise UsageError("parameter flags need a single identity, not 'all'")
        extra = set(given) - set(accepted_params(args.identity))
        if extra:
            raise UsageError(f"{args.identity} does not take --{', --'.join(sorted(extra))}")
    overrides = {}
    if args.zeros is not None:
        overrides["zero_count"] = args.zeros
    if args.terms is not None:
        overrides["series_terms"] = args.terms
    if args.tol is not None:
        overrides["tolerance"] = args.tol

    reports, skipped = [], []
    for iid in ids:
        if args.fast and args.identity == "all" and REGISTRY[iid].heavy:
            skipped.append(iid)
            continue
        cfg = default_config(iid).with_(**overrides)
        params = {**REGISTRY[iid].reference[0], **given} if given else None
        try:
            reports.extend(run_identity(iid, cfg, params))
        except (ParameterDomainError, ValueError) as exc:
            if given or overrides:
                raise UsageError(f"{iid}: {exc}") from None
            raise
    _print_reports(reports)
    if skipped:
        print(f"skipped (--fast): {', '.join(skipped)}")
    passed = all(r.passed for r in reports)

    experimental = []
    if args.experimental_d2_kernel:
        experimental = verify_d2_kernel_experimental(default_config("cohen-d2").with_(
            **{k: v for k, v in overrides.items() if k == "zero_count"}))
        print("experimental (excluded from the exit status):")
        _print_reports(experimental)
        for note in experimental[0].notes[2:4]:
            print(f"  {note}")

    failing = [r for r in reports if not r.passed]
    for r in failing:
        print(f"\nFAILED {r.identity_id} {_fmt_params(r.params)}")
        print(json.dumps(r.to_dict(), indent=2))
    if args.json:
        config = {"overrides": overrides, "params": given, "fast": args.fast,
                  "experimental_d2_kernel": args.experimental_d2_kernel, "skipped": skipped}
        _write_json(args.json, argv, config,
                    [r.to_dict() for r in reports] + [dict(r.to_dict(), experimental=True) for r in experimental],
                    passed, started)
    return EXIT_OK if passed else EXIT_FAIL


# ---------------------------------------------------------------- zeros

def cmd_zeros(args, argv) -> int:
    from .zeta import default_seed_path, zero_table
    table = zero_table(args.count, args.seeds)
    worst = max(z.residual for z in table)
    lines = [
        f"# zeta zero ordinates refined by Newton iteration; seeds from {args.seeds or default_seed_path().name}",
        f"# count {len(table)}, max |zeta(rho)| = {worst:.3e}",
        "# index gamma  # |zeta(1/2 + i gamma)| after refinement",
    ]
    lines += [f"{z.index} {z.gamma:.13f}  # {z.residual:.2e}" for z in table]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {len(table)} zeros to {args.out} (max |zeta(rho)| = {worst:.3e})")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------- oscillate

def cmd_oscillate(args, argv) -> int:
    from . import riesz
    from .zeta import zero_table
    if args.points <= 0:
        raise UsageError("--points must be positive")
    if not args.ymin < args.ymax:
        raise UsageError("need ymin < ymax")
    if args.zeros > 100:
        raise UsageError("the bundled seed file has 100 zeros")
    started = _now()
    table = zero_table(100).head(args.zeros)
    grid = np.geomspace(args.ymin, args.ymax, args.points) if args.points > 1 else np.array([args.ymin])
    tr = riesz.trace(args.kind, grid, args.delta, table)
    changes = riesz.sign_changes(tr)
    err = np.abs(tr.normalized_sum - tr.predicted)
    print(f"kind {args.kind}, delta {args.delta:g}, {args.points} points in [{args.ymin:g}, {args.ymax:g}], "
          f"{len(table)} zeros")
    print(f"sign changes: {changes}")
    print(f"max |normalized - predicted|: {err.max():.4g} (median {np.median(err):.4g}); "
          f"zero-sum tail estimate {tr.tail_estimate:.3g}")
    for note in tr.notes:
        print(f"  {note}")
    if args.csv:
        riesz.write_csv(tr, args.csv)
        print(f"wrote {args.csv}")
    if args.json:
        summary = {"identity_id": f"oscillate:{args.kind}", "sign_changes": changes,
                   "max_abs_error": float(err.max()), "tail_estimate": float(tr.tail_estimate),
                   "notes": list(tr.notes)}
        config = {"kind": args.kind, "delta": args.delta, "ymin": args.ymin, "ymax": args.ymax,
                  "points": args.points, "zeros": args.zeros}
        _write_json(args.json, argv, config, [summary], True, started)
    return EXIT_OK


# ---------------------------------------------------------------- selftest

def cmd_selftest(args, argv) -> int:
    from .selftest import run_selftest
    started = _now()
    results = run_selftest(fast=args.fast, seed_path=args.seeds)
    width = max(len(r.name) for r in results)
    for r in results:
        print(f"{r.name:<{width}}  {'pass' if r.passed else 'FAIL'}  {r.detail}")
    failed = [r for r in results if not r.passed]
    print(f"\n{len(results) - len(failed)}/{len(results)} checks passed" + (" (fast mode)" if args.fast else ""))
    if args.json:
        _write_json(args.json, argv, {"fast": args.fast, "seeds": args.seeds},
                    [asdict(r) for r in results], not failed, started)
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {"verify": cmd_verify, "zeros": cmd_zeros, "oscillate": cmd_oscillate, "selftest": cmd_selftest}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:      # argparse exits 2 on bad usage, 0 on --help
        return int(exc.code or 0)
    command = " ".join(["zqlab", *argv])
    try:
        return COMMANDS[args.command](args, command)
    except UsageError as exc:
        print(f"zqlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"zqlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:       # numeric failures surface as exit 1 with the reason
        print(f"zqlab: {args.command} failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
