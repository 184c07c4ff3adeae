"""Command-line front end.

Subcommands:

  info        structural summary of a lattice (size, ends, chain counts)
  idempotent  compute the total-order idempotent by either construction
  mobius      Moebius values of element pairs or bottom-rooted chains
  verify      run the exact verification suite over a lattice or corpus

INPUT is either a path to a lattice text file or a generator descriptor
("boolean:3", "divisor:12", "product:boolean:2,chain:1", ...).

Exit status: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import (
    Ring,
    idempotent_direct,
    idempotent_original,
    mu_chain_infinity,
    mu_chain_infinity_oracle,
)
from .checks import CHECKS, DEFAULT_CORPUS, run_suite
from .errors import FeasibilityLimit, TotlatError
from .lattices import generate
from .posets import Chain
from .serialize import (
    formal_sum_to_json,
    formal_sum_to_text,
    parse_lattice_file,
)


def load_lattice(spec):
    if os.path.exists(spec):
        with open(spec) as fh:
            return parse_lattice_file(fh.read())
    return generate(spec, allow_large=True)


def cmd_info(args):
    L = load_lattice(args.input)
    print(f"elements: {L.n}")
    print(f"bottom: {L.names[L.bottom]}")
    print(f"top: {L.names[L.top]}")
    print(f"max chain length: {L.max_chain_length}")
    for kind, title in (("A", "bottom-rooted"), ("B", "top-ended"), ("Z", "bottom-to-top")):
        sizes = [
            len(L.chain_family(kind, n)) for n in range(L.max_chain_length + 1)
        ]
        print(f"{title} chain counts by length: {sizes}")
    print(f"complemented: {L.is_complemented_interval(L.bottom, L.top)}")
    print(f"fingerprint: {L.fingerprint()}")
    return 0


def cmd_idempotent(args):
    L = load_lattice(args.input)
    ring = Ring.parse(args.ring)
    if args.method == "direct":
        e = idempotent_direct(L, ring, crapo_filter=args.crapo)
    else:
        e = idempotent_original(L, ring)
    if args.format == "json":
        print(formal_sum_to_json(e))
    else:
        print(formal_sum_to_text(e))
    return 0


def cmd_mobius(args):
    L = load_lattice(args.input)
    if args.chain:
        labels = [s.strip() for s in args.chain.split(",")]
        members = tuple(L.poset.index_of(s) for s in labels)
        A = Chain(members, L.poset)
        value = mu_chain_infinity(L, A)
        print(f"mu(chain, infinity) = {value}")
        try:
            oracle = mu_chain_infinity_oracle(L, A)
            print(f"oracle = {oracle}")
        except FeasibilityLimit:
            print("oracle = (skipped: chain poset above the size limit)")
        return 0
    if args.x is None or args.y is None:
        raise TotlatError("mobius needs either x y or --chain")
    x = L.poset.index_of(args.x)
    y = L.poset.index_of(args.y)
    print(L.poset.mobius(x, y))
    return 0


def cmd_verify(args):
    if args.input:
        corpus = [args.input]
    else:
        corpus = list(DEFAULT_CORPUS)
    ring = Ring.parse(args.ring)
    checks = args.checks.split(",") if args.checks else None
    if checks:
        unknown = [c for c in checks if c not in CHECKS]
        if unknown:
            print(f"error: unknown checks: {', '.join(unknown)}", file=sys.stderr)
            print(f"available: {', '.join(sorted(CHECKS))}", file=sys.stderr)
            return 2
    reports = run_suite(
        corpus=corpus, ring=ring, checks=checks,
        seed=args.seed, sample_count=args.sample_count,
    )
    failed = False
    for r in reports:
        if r.status == "fail":
            failed = True
        if args.format == "json":
            print(json.dumps(r.to_dict(), sort_keys=True, ensure_ascii=False))
        else:
            extra = f" ({r.note})" if r.note else ""
            print(f"[{r.status:7s}] {r.name:22s} {r.lattice}{extra}  [{r.elapsed:.2f}s]")
    return 1 if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="totlat",
        description="Exact lattice endomorphism-algebra idempotent toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="structural summary of a lattice")
    p_info.add_argument("input", help="lattice file or generator descriptor")
    p_info.set_defaults(func=cmd_info)

    p_idem = sub.add_parser("idempotent", help="compute the total-order idempotent")
    p_idem.add_argument("input")
    p_idem.add_argument("--method", choices=("direct", "original"), default="direct")
    p_idem.add_argument("--crapo", action="store_true",
                        help="skip chains with a non-complemented step interval")
    p_idem.add_argument("--ring", default="int", help="int | mod:m | rat")
    p_idem.add_argument("--format", choices=("text", "json"), default="text")
    p_idem.set_defaults(func=cmd_idempotent)

    p_mob = sub.add_parser("mobius", help="Moebius values")
    p_mob.add_argument("input")
    p_mob.add_argument("x", nargs="?")
    p_mob.add_argument("y", nargs="?")
    p_mob.add_argument("--chain", help="comma-separated labels of a bottom-rooted chain")
    p_mob.set_defaults(func=cmd_mobius)

    p_ver = sub.add_parser("verify", help="run the verification suite")
    p_ver.add_argument("input", nargs="?",
                       help="single lattice; omit to run the default corpus")
    p_ver.add_argument("--corpus", choices=("default",), default=None,
                       help="use the built-in corpus (the default when no input is given)")
    p_ver.add_argument("--checks", help="comma-separated check names")
    p_ver.add_argument("--ring", default="int")
    p_ver.add_argument("--seed", type=int, default=None)
    p_ver.add_argument("--sample-count", type=int, default=500)
    p_ver.add_argument("--format", choices=("text", "json"), default="text")
    p_ver.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TotlatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
