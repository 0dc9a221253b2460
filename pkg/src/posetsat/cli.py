"""Command line entry point: construct / verify / certify / exact / export.

Exit status: 0 on success (or verified), 1 when a verification fails, 2 on
usage, file or parameter errors.
"""
from __future__ import annotations

import argparse
import json
import random
import re
import sys
from pathlib import Path

from .construction import build_saturated_family
from .errors import CertificateInvalid, UsageError
from .oracle import DEFAULT_BUDGET, MAX_ORACLE_N, exact_sat_star, enumerate_saturated
from .poset import Poset, antichain, chain, complete_bipartite
from .sets import Family, family_dot, fmt, load_family
from .verify import check_saturated, legs_certificate

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_NAMED = [
    (re.compile(r"^K(\d+),(\d+)$"), lambda m: complete_bipartite(int(m[1]), int(m[2]))),
    (re.compile(r"^antichain(\d+)$"), lambda m: antichain(int(m[1]))),
    (re.compile(r"^chain(\d+)$"), lambda m: chain(int(m[1]))),
]


def read_poset(source: str) -> Poset:
    """Poset from a JSON file, or one of the names ``K<s>,<t>``, ``antichain<k>``, ``chain<k>``."""
    path = Path(source)
    if not path.exists():
        for pat, make in _NAMED:
            m = pat.match(source)
            if m:
                return make(m)
        raise UsageError(f"no such poset file: {source}")
    try:
        return Poset.from_json(json.loads(path.read_text()))
    except json.JSONDecodeError as e:
        raise UsageError(f"{source}: invalid JSON ({e})") from e


def read_family(path: str) -> Family:
    try:
        return load_family(path)
    except FileNotFoundError as e:
        raise UsageError(f"no such family file: {path}") from e
    except json.JSONDecodeError as e:
        raise UsageError(f"{path}: invalid JSON ({e})") from e


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_construct(args) -> int:
    rng = random.Random(args.seed) if args.seed is not None else None
    con = build_saturated_family(args.n, args.s, args.t, f5_rng=rng)
    text = con.family.dumps()
    if args.json:
        _write(args.json, text)
    report_out = sys.stdout
    if not args.json:
        sys.stdout.write(text)
        report_out = sys.stderr
    if args.report:
        print(con.report(), file=report_out)
    return EXIT_OK


def cmd_verify(args) -> int:
    fam = read_family(args.family)
    rep = check_saturated(fam, args.s, args.t, workers=args.workers)
    print(rep.summary())
    if args.witnesses:
        _write(args.witnesses, json.dumps(rep.witnesses_json(), separators=(",", ":")) + "\n")
    return EXIT_OK if rep.saturated else EXIT_FAIL


def cmd_certify(args) -> int:
    fam = read_family(args.family)
    p = read_poset(args.poset)
    try:
        cert = legs_certificate(fam, p, avoid_top=args.avoid_top)
    except CertificateInvalid as e:
        print(f"certificate INVALID: {e}")
        return EXIT_FAIL
    print(f"certificate valid: |F| = {cert.family_size} >= {cert.lower_bound}"
          + (" (via the dual poset and complemented family)" if cert.dualized else ""))
    for x, fx in cert.f_map.items():
        src = f"C_{x} = {fmt(cert.partners[x])}" if x in cert.partners else "singleton in F"
        print(f"  f({x}) = {fmt(fx)}   [{src}]")
    return EXIT_OK


def cmd_exact(args) -> int:
    p = read_poset(args.poset)
    if args.cap is not None and not args.enumerate:
        raise UsageError("--cap only applies with --enumerate")
    if args.enumerate:
        if args.cap is None:
            raise UsageError("--enumerate needs --cap")
        fams = enumerate_saturated(args.n, p, args.cap, budget=args.budget)
        print(len(fams))
        for f in fams:
            sys.stdout.write(f.dumps())
        return EXIT_OK
    res = exact_sat_star(args.n, p, budget=args.budget)
    print(res.value)
    status = "exact" if res.exact else f"budget exhausted; complete up to size {res.lower_bound}"
    print(f"# {status}; {len(res.witnesses)} minimum families"
          + (" (truncated)" if res.truncated else "") + f"; {res.nodes} nodes", file=sys.stderr)
    return EXIT_OK


def cmd_export(args) -> int:
    if args.poset:
        text = read_poset(args.poset).to_dot()
    else:
        text = family_dot(read_family(args.family))
    _write(args.out, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="posetsat", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build the lantern family for K_{s,t}")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--s", type=int, required=True)
    c.add_argument("--t", type=int, required=True)
    c.add_argument("--json", metavar="OUT", help="write the family JSON here (default: stdout)")
    c.add_argument("--report", action="store_true", help="print the size-accounting table")
    c.add_argument("--seed", type=int, help="shuffle the F5 greedy order with this seed")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="exhaustively check induced K_{s,t}-saturation")
    v.add_argument("--family", required=True)
    v.add_argument("--s", type=int, required=True)
    v.add_argument("--t", type=int, required=True)
    v.add_argument("--witnesses", metavar="OUT", help="write a witness copy per missing set")
    v.add_argument("--workers", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("certify", help="check the legs-injection lower-bound certificate")
    r.add_argument("--family", required=True)
    r.add_argument("--poset", required=True, help="poset JSON file or a name like K2,2")
    r.add_argument("--avoid-top", action="store_true", help="also keep f(x) away from [n]")
    r.set_defaults(func=cmd_certify)

    e = sub.add_parser("exact", help=f"exact induced saturation number (n <= {MAX_ORACLE_N})")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--poset", required=True, help="poset JSON file or a name like antichain2")
    e.add_argument("--enumerate", action="store_true", help="list all saturated families up to --cap (n <= 4)")
    e.add_argument("--cap", type=int)
    e.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node limit")
    e.set_defaults(func=cmd_exact)

    x = sub.add_parser("export", help="DOT Hasse diagram of a poset or a family")
    g = x.add_mutually_exclusive_group(required=True)
    g.add_argument("--poset")
    g.add_argument("--family")
    x.add_argument("--out", help="output file (default: stdout)")
    x.set_defaults(func=cmd_export)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
