"""Command line front end.

Exit codes: 0 success, 1 unreadable or invalid input, 2 size cap exceeded,
3 oracle disagrees with the regularity formula.
"""

import argparse
import json
import os
import sys

from .birkhoff import birkhoff_roundtrip, ideal_lattice, join_irreducibles, lattice_from_poset
from .census import CensusQuery, census, census_record
from .config import default_caps
from .errors import HibiError, ParseError, SizeCapExceeded
from .invariants import (generator_count, hibi_generators, invariant_report, regularity,
                         two_chain_regularity)
from .oracle import h_polynomial
from .poset import Poset, is_simple

EXIT_INPUT, EXIT_CAP, EXIT_MISMATCH = 1, 2, 3


def _read_input(path):
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    P = Poset.from_dict(data)
    return P, bool(data.get("as_lattice", False))


def _poset_of_input(path, caps):
    """The poset of join-irreducibles to analyze, plus the input lattice if any."""
    P, as_lattice = _read_input(path)
    if not as_lattice:
        return P, None
    L = lattice_from_poset(P)
    birkhoff_roundtrip(L, caps)
    return join_irreducibles(L), L


def _emit(args, payload, text):
    out = json.dumps(payload) + "\n" if args.format == "json" else text
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _text_block(pairs):
    return "".join(f"{k}: {v}\n" for k, v in pairs)


def cmd_analyze(args, caps):
    P, _ = _poset_of_input(args.input, caps)
    L = ideal_lattice(P, caps)
    report = invariant_report(P, L, caps)
    gens = len(hibi_generators(L, caps))
    if gens != generator_count(L):
        raise HibiError("generator count mismatch")
    two_chain = two_chain_regularity(P) if P.n and is_simple(P) else None
    payload = {"report": report.to_dict(), "generator_count": gens,
               "two_chain_regularity": two_chain}
    rows = [(k, v) for k, v in report.to_dict().items() if k != "flags"]
    rows += list(report.flags.items())
    rows += [("generator_count", gens), ("two_chain_regularity", two_chain)]
    _emit(args, payload, _text_block(rows))
    return 0


def cmd_oracle(args, caps):
    P, _ = _poset_of_input(args.input, caps)
    summary = h_polynomial(P, caps)
    formula, zero = regularity(P)
    if zero:
        verdict, note = None, "I_L = 0 (P is a chain); no regularity to compare"
    else:
        verdict = "MATCH" if summary.reg_oracle == formula else "MISMATCH"
        note = None
    payload = {"summary": summary.to_dict(), "formula_regularity": formula,
               "verdict": verdict, "note": note}
    rows = [("Q(t)", summary.q_string()), ("hf", list(summary.hf)),
            ("deg_q", summary.q_degree), ("a", summary.a_invariant_oracle),
            ("reg_oracle", summary.reg_oracle), ("formula", formula),
            ("canonical_min_degree", summary.canonical_min_degree),
            ("symmetric", summary.symmetric)]
    rows.append(("verdict", verdict) if verdict else ("note", note))
    _emit(args, payload, _text_block(rows))
    return EXIT_MISMATCH if verdict == "MISMATCH" else 0


def cmd_census(args, caps):
    query = CensusQuery(
        n_min=args.nmin, n_max=args.nmax, simple=args.simple, pure=args.pure,
        reg=args.reg, k_value=args.k, gorenstein=args.gorenstein,
        extremal_gorenstein=args.extremal, linear_resolution=args.linear,
    )
    results = census(query, caps, workers=args.workers)
    if args.format == "json":
        out = "".join(json.dumps(census_record(P, r)) + "\n" for P, r in results)
    else:
        out = "".join(f"n={P.n} reg={r.regularity} |L|={r.lattice_size} {P!r}\n"
                      for P, r in results)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    if args.dot_dir:
        os.makedirs(args.dot_dir, exist_ok=True)
        for k, (P, _) in enumerate(results):
            with open(os.path.join(args.dot_dir, f"poset_{P.n}_{k:04d}.dot"), "w") as fh:
                fh.write(P.to_dot(f"P{k}"))
    return 0


def cmd_dot(args, caps):
    P, as_lattice = _read_input(args.input)
    text = (lattice_from_poset(P) if as_lattice else P).to_dot()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--cap-ideals", type=int, help="largest lattice (number of down-sets)")
    common.add_argument("--cap-oracle", type=int, help="largest poset for the series oracle")

    def add_input(p):
        p.add_argument("file", nargs="?", help="poset JSON file ('-' for stdin)")
        p.add_argument("-i", "--input", dest="input_opt", help="poset JSON file")

    parser = argparse.ArgumentParser(prog="hibi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (("analyze", "regularity and friends of a poset"),
                           ("oracle", "Hilbert series cross-check"),
                           ("dot", "Hasse diagram in DOT")):
        add_input(sub.add_parser(name, parents=[common], help=helptext))
    c = sub.add_parser("census", parents=[common], help="enumerate and filter posets")
    c.add_argument("--nmin", type=int, default=1)
    c.add_argument("--nmax", type=int, default=6)
    c.add_argument("--k", type=int, help="|P| - rank P")
    c.add_argument("--reg", type=int, help="regularity of a nonzero I_L")
    c.add_argument("--simple", action="store_true")
    c.add_argument("--pure", action="store_true")
    c.add_argument("--gorenstein", action="store_true")
    c.add_argument("--extremal", action="store_true")
    c.add_argument("--linear", action="store_true", help="linear resolution")
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--dot-dir", help="also write one DOT file per result here")
    return parser


COMMANDS = {"analyze": cmd_analyze, "oracle": cmd_oracle, "census": cmd_census, "dot": cmd_dot}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "file"):
        args.input = args.input_opt or args.file
        if args.input is None:
            parser.error("an input file is required")
    try:
        caps = default_caps()
        if args.cap_ideals is not None:
            caps = caps.replace(lattice_size=args.cap_ideals)
        if args.cap_oracle is not None:
            caps = caps.replace(oracle_poset=args.cap_oracle)
        return COMMANDS[args.command](args, caps)
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except HibiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
