"""Command-line front end: ``braidcong burau|member|verify|closure``.

Exit codes: 0 pass, 1 check failure, 2 usage error, 3 skipped check under ``--strict``.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

import numpy as np

from .braid import parse_braid
from .burau import burau_unreduced, integral_burau
from .finite import ClosureLimitExceeded, ModMatrix, closure
from .oracles import membership_report
from .suite import GROUPS, SuiteConfig, matrix_json, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SKIP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _word(args):
    try:
        return parse_braid(args.word, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, payload: dict, text: str):
    print(json.dumps(payload, indent=2) if args.json else text)


def cmd_burau(args) -> int:
    w = _word(args)
    R = integral_burau(w)
    payload = {"word": str(w), "integral_burau": matrix_json(R)}
    if args.laurent:
        payload["burau"] = [[str(p) for p in row] for row in burau_unreduced(w).rows]
    lines = [str(w)] + ["  " + " ".join(f"{int(x):>4}" for x in row) for row in R]
    if args.laurent:
        lines += ["unreduced Burau:"] + ["  " + ", ".join(row) for row in payload["burau"]]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_member(args) -> int:
    w = _word(args)
    r = membership_report(w)
    member = r.in_level2 if args.level == 2 else r.in_level4
    payload = {"word": str(w), "level": args.level, "member": member,
               "is_pure": r.is_pure, "in_pb_squared": r.in_pb_squared,
               f"rho_mod{args.level}": matrix_json(r.rho_mod2 if args.level == 2 else r.rho_mod4)}
    _emit(args, payload, f"{w}: {'in' if member else 'not in'} B_{w.strands}[{args.level}] "
                         f"(pure={r.is_pure}, PB^2={r.in_pb_squared})")
    return EXIT_OK


def _config(args) -> SuiteConfig:
    cfg = SuiteConfig(seed=args.seed, heavy=args.heavy, workers=args.workers)
    if args.n:
        cfg.n_values = tuple(args.n)
    if args.g:
        cfg.g = args.g
    return cfg


def cmd_verify(args) -> int:
    if args.g is not None and args.g < 2:
        raise UsageError("--g must be at least 2")
    if args.n and min(args.n) < 2:
        raise UsageError("--n values must be at least 2")
    report = run_suite(_config(args), (args.group,))
    if args.json:
        print(report.to_json(timing=not args.no_timing))
    else:
        print(report.render())
    return report.exit_code(args.strict)


def load_generators(path: str, modulus: int | None) -> list[ModMatrix]:
    """``{"modulus": m, "generators": [[[...], ...], ...]}`` or a bare array (needs ``--mod``)."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read generators from {path}: {exc}") from None
    if isinstance(data, dict):
        mats, m = data.get("generators"), data.get("modulus")
        if modulus is not None and m is not None and int(m) != modulus:
            raise UsageError(f"--mod {modulus} disagrees with modulus {m} in {path}")
        m = modulus if modulus is not None else m
    else:
        mats, m = data, modulus
    if m is None or not mats:
        raise UsageError("need a modulus and at least one generator")
    try:
        return [ModMatrix(np.array([[int(x) for x in row] for row in M], dtype=object), int(m))
                for M in mats]
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad generator matrix: {exc}") from None


def cmd_closure(args) -> int:
    gens = load_generators(args.gens, args.mod)
    try:
        G = closure(gens, limit=args.limit, workers=args.workers)
    except ClosureLimitExceeded as exc:
        _emit(args, {"status": "skipped", "partial": exc.partial, "limit": exc.limit},
              f"skipped: {exc}")
        return EXIT_SKIP if args.strict else EXIT_OK
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, {"status": "pass", "order": G.order, "modulus": G.modulus, "dim": G.dim},
          f"order {G.order} ({G.dim}x{G.dim} over Z/{G.modulus})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--strict", action="store_true", help="treat skipped checks as failures (exit 3)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="braidcong", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("burau", parents=[common], help="integral Burau matrix of a braid word")
    b.add_argument("word", help='e.g. "n=3; 1 -2 1"')
    b.add_argument("--n", type=int, help="number of strands when the word has no header")
    b.add_argument("--laurent", action="store_true", help="also print the unreduced Burau matrix")
    b.set_defaults(func=cmd_burau)

    m = sub.add_parser("member", parents=[common], help="level-2 or level-4 membership")
    m.add_argument("word")
    m.add_argument("--n", type=int)
    m.add_argument("--level", type=int, choices=(2, 4), required=True)
    m.set_defaults(func=cmd_member)

    v = sub.add_parser("verify", parents=[common], help="run verification checks")
    v.add_argument("group", choices=sorted(GROUPS) + ["all"])
    v.add_argument("--n", type=int, nargs="+", help="strand counts for the corpus checks")
    v.add_argument("--g", type=int, help="genus for generating-set and point-pushing checks")
    v.add_argument("--heavy", action="store_true", help="include the large closures (n = 7 pure, n = 6 full mod 4)")
    v.add_argument("--no-timing", action="store_true", help="omit wall times so reports are byte-identical")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("closure", parents=[common], help="order of a matrix group over Z/m")
    c.add_argument("--gens", required=True, help="JSON file of generator matrices")
    c.add_argument("--mod", type=int, choices=(2, 4, 8))
    c.add_argument("--limit", type=int, default=1 << 22)
    c.set_defaults(func=cmd_closure)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.workers < 1:
        parser.error("--workers must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"braidcong: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
