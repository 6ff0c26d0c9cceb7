"""Command line interface: ``keycrystal <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys

from .combinatorics import format_composition, parse_composition, strip
from .expansions import (
    demazure_expansion,
    format_schur,
    is_weakly_increasing,
    kostka_foulkes_charge,
    kostka_foulkes_maj,
    schur_form,
)
from .tabloid_crystal import tabloid_crystal
from .tabloids import enumerate_sskd, maj
from .verify import SUITES


class UsageError(Exception):
    pass


def _composition(text: str):
    try:
        return parse_composition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _partition(text: str):
    lam = _composition(text)
    if any(lam[k] < lam[k + 1] for k in range(len(lam) - 1)):
        raise UsageError(f"not a partition: {text}")
    return strip(lam)


def _emit(text: str, out):
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def cmd_sskd(args, out) -> int:
    shape = _composition(args.shape)
    tabs = enumerate_sskd(shape)
    if args.format == "json":
        data = {"shape": format_composition(shape), "count": len(tabs)}
        if not args.count:
            data["tabloids"] = [{"tabloid": t.serialize(), "maj": maj(t)} for t in tabs]
        _emit(json.dumps(data, indent=2, sort_keys=True), out)
    elif args.count:
        _emit(str(len(tabs)), out)
    else:
        _emit("\n".join(t.serialize() for t in tabs), out)
    return 0


def cmd_expand(args, out) -> int:
    shape = _composition(args.shape)
    exp = demazure_expansion(shape)
    if args.format == "json":
        data = exp.to_dict()
        if args.schur:
            data["schur"] = {format_composition(k): list(v.coeffs) for k, v in sorted(schur_form(exp).items(), reverse=True)}
        _emit(json.dumps(data, indent=2, sort_keys=True), out)
    else:
        _emit(exp.format(), out)
        if args.schur:
            _emit(format_schur(schur_form(exp)), out)
    return 0


def cmd_crystal(args, out) -> int:
    shape = _composition(args.shape)
    crystal = tabloid_crystal(shape)
    g = crystal.graph
    if args.maj is not None:
        keep = [t for c in crystal.components if c.maj == args.maj for t in c.vertices]
        g = g.subgraph(keep)
    def tooltip(t):
        return "wt=(" + ",".join(map(str, t.weight())) + f") maj={maj(t)}"

    if args.format == "dot":
        _emit(g.to_dot(lambda t: t.serialize(), tooltip=tooltip), out)
    else:
        _emit(g.to_json(lambda t: t.serialize(), extra=lambda t: {"maj": maj(t)}), out)
    return 0


def cmd_kostka(args, out) -> int:
    lam, mu = _partition(args.lam), _partition(args.mu)
    if sum(lam) != sum(mu):
        raise UsageError("partitions must have the same size")
    if args.method == "charge":
        poly = kostka_foulkes_charge(lam, mu)
    elif args.method == "maj":
        poly = kostka_foulkes_maj(lam, mu)
    else:
        poly = kostka_foulkes_charge(lam, mu)
        if poly != kostka_foulkes_maj(lam, mu):
            sys.stderr.write("charge and maj disagree\n")
            return 1
    _emit(poly.format("t"), out)
    return 0


def cmd_verify(args, out) -> int:
    suite = SUITES[args.suite]
    report = suite(args.max_size)
    _emit(json.dumps(report.to_dict(), indent=2, sort_keys=True), out)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="keycrystal", description="Key tabloid crystals and Demazure expansions.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sskd", help="enumerate key tabloids of a shape")
    s.add_argument("shape", help='weak composition, e.g. "(0,2,1,2)"')
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print only the count")
    mode.add_argument("--list", action="store_true", help="print every tabloid (default)")
    s.add_argument("--format", choices=["plain", "json"], default="plain")
    s.set_defaults(func=cmd_sskd)

    s = sub.add_parser("expand", help="Demazure expansion of E_b(X;q,0)")
    s.add_argument("shape")
    s.add_argument("--format", choices=["plain", "json"], default="plain")
    s.add_argument("--schur", action="store_true", help="also print the Schur form (weakly increasing keys only)")
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("crystal", help="crystal graph on key tabloids")
    s.add_argument("shape")
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--dot", dest="format", action="store_const", const="dot")
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    s.add_argument("--maj", type=int, default=None, help="keep only components with this maj")
    s.set_defaults(func=cmd_crystal, format="json")

    s = sub.add_parser("kostka", help="Kostka-Foulkes polynomial K_{lam,mu}(t)")
    s.add_argument("lam")
    s.add_argument("mu")
    s.add_argument("--method", choices=["charge", "maj", "both"], default="both")
    s.set_defaults(func=cmd_kostka)

    s = sub.add_parser("verify", help="run a property suite")
    s.add_argument("--suite", required=True, choices=sorted(SUITES))
    s.add_argument("--max-size", type=int, default=4)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.command == "expand" and args.schur and not is_weakly_increasing(_composition(args.shape)):
            raise UsageError("--schur needs a weakly increasing shape")
        return args.func(args, sys.stdout)
    except UsageError as exc:
        sys.stderr.write(f"keycrystal: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
