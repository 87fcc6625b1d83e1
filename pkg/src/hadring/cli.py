"""Command-line front end.

Standard output carries JSON only; diagnostics go to standard error.
Exit status: 0 success, 1 property or structure violation, 2 usage/input error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from hadring.campaign import CampaignConfig, run_campaign, run_nilpotency_campaign
from hadring.errors import HadringError, NotBlockHadamardError
from hadring.matrix import ORACLE_LIMIT, charpoly_berkowitz, charpoly_minors_oracle
from hadring.rings import ring_make
from hadring.serialize import load_matrix, read_json, to_text
from hadring.starkad import (
    CauchySpec,
    analyze,
    block_hadamard_detect,
    cauchy_build,
    starkad_like_spec,
)

log = logging.getLogger("hadring")

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj, out_path=None):
    text = to_text(obj)
    sys.stdout.write(text)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _elements(ctx, text):
    if text is None:
        return None
    return [ctx.coerce(int(v, 16)) for v in text.split(",") if v.strip()]


def cmd_verify(args):
    config = CampaignConfig(args.ring, args.k, args.s, args.trials, args.seed, args.out)
    log.info("verify %s k=%d s=%d trials=%d seed=%d", config.ring, config.k, config.s, config.trials, config.seed)
    report = run_campaign(config, jobs=args.jobs)
    _emit(report, config.output)
    if not report["ok"]:
        log.error("%d violation(s)", len(report["violations"]))
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_charpoly(args):
    M = load_matrix(read_json(args.input))
    if args.algo == "minors":
        p = charpoly_minors_oracle(M, limit=args.limit)
    else:
        p = charpoly_berkowitz(M)
    # ascending coefficients only; the ring is that of the input file
    _emit(p.dump()["coeffs"])
    return EXIT_OK


def _layer(args):
    if args.starkad_like:
        if args.ring is None or args.t is None:
            raise UsageError("--starkad-like needs --ring and --t")
        return cauchy_build(starkad_like_spec(ring_make(args.ring), args.t))
    if args.input is None:
        raise UsageError("give --in PATH or --starkad-like")
    return load_matrix(read_json(args.input))


def cmd_analyze(args):
    M = _layer(args)
    try:
        report = analyze(M, args.k)
    except NotBlockHadamardError as exc:
        _emit({"error": "not block-Hadamard", "block": list(exc.block), "entry": list(exc.position)})
        log.error("%s", exc)
        return EXIT_VIOLATION
    _emit(report.to_json())
    if not report.within_bound:
        log.error("dependency degree %d exceeds 2s = %d", report.l, report.bound_new)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_nilpotency(args):
    report = run_nilpotency_campaign(args.ring, args.k, args.samples, args.seed)
    _emit(report)
    return EXIT_OK if report["ok"] else EXIT_VIOLATION


def cmd_cauchy(args):
    F = ring_make(args.ring)
    if args.x is None and args.y is None:
        spec = starkad_like_spec(F, args.t)
    else:
        x, y = _elements(F, args.x), _elements(F, args.y)
        if x is None or y is None:
            raise UsageError("--x and --y must be given together")
        spec = CauchySpec(F, tuple(x), tuple(y))
    M = cauchy_build(spec)
    doc = M.dump()
    if args.k is not None:
        try:
            block_hadamard_detect(M, args.k)
        except NotBlockHadamardError as exc:
            _emit({"matrix": doc, "detect": {"k": args.k, "ok": False, "block": list(exc.block), "entry": list(exc.position)}}, args.out)
            log.error("%s", exc)
            return EXIT_VIOLATION
        doc = {"matrix": doc, "detect": {"k": args.k, "ok": True, "s": M.rows >> args.k}}
    _emit(doc, args.out)
    return EXIT_OK


def _configure_logging(verbose):
    # own handler bound to the current stderr, independent of root config
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    log.handlers[:] = [handler]
    log.propagate = False
    log.setLevel(logging.INFO if verbose else logging.WARNING)


def build_parser():
    p = argparse.ArgumentParser(prog="hadring", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="seeded campaign checking q(M)^2 = 0 and related identities")
    v.add_argument("--ring", required=True, help="base ring spec, e.g. gf2:8:0x11b or quot:0b10000")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--s", type=int, required=True)
    v.add_argument("--trials", type=int, required=True)
    v.add_argument("--seed", type=int, required=True)
    v.add_argument("--out", help="also write the report here")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("charpoly", help="characteristic polynomial of a matrix JSON file")
    c.add_argument("--in", dest="input", required=True)
    c.add_argument("--algo", choices=("berkowitz", "minors"), default="berkowitz")
    c.add_argument("--limit", type=int, default=ORACLE_LIMIT, help="size limit for --algo minors")
    c.set_defaults(func=cmd_charpoly)

    a = sub.add_parser("analyze", help="power-dependency degree against the 2s and (k+1)s bounds")
    a.add_argument("--in", dest="input")
    a.add_argument("--starkad-like", action="store_true")
    a.add_argument("--ring")
    a.add_argument("--t", type=int)
    a.add_argument("--k", type=int, required=True)
    a.set_defaults(func=cmd_analyze)

    n = sub.add_parser("nilpotency", help="augmentation-ideal nilpotency campaign")
    n.add_argument("--ring", default="gf2:1:0x3")
    n.add_argument("--k", type=int, required=True)
    n.add_argument("--samples", type=int, default=200)
    n.add_argument("--seed", type=int, required=True)
    n.set_defaults(func=cmd_nilpotency)

    y = sub.add_parser("cauchy", help="build a Cauchy layer, optionally detect block-Hadamard structure")
    y.add_argument("--ring", required=True)
    y.add_argument("--t", type=int)
    y.add_argument("--x", help="comma-separated hex elements")
    y.add_argument("--y", help="comma-separated hex elements")
    y.add_argument("--k", type=int)
    y.add_argument("--out")
    y.set_defaults(func=cmd_cauchy)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    if args.command == "cauchy" and args.x is None and args.t is None:
        parser.error("cauchy needs --t or --x/--y")
    try:
        return args.func(args)
    except (UsageError, HadringError, ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        print(f"hadring {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
