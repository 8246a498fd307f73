"""Command-line front end: tgs check | enumerate | report | analyze."""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .core import QuotientError, StructureError, check_axioms, load_structure
from .enumeration import BoundExceeded, Catalog, default_jobs, enumerate_additive_monoids, enumerate_structures

log = logging.getLogger("tgs")

WHAT = ("ideals", "radical", "decompose", "spectrum", "code", "sbox", "fuzzy", "paths")


def _int_range(text: str) -> list:
    """'3' or '1-3' or '1,3'."""
    out = []
    for part in text.split(","):
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if not out or min(out) < 1:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return sorted(set(out))


def _emit(obj, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True, default=_jsonable))
    else:
        print(json.dumps(obj, indent=2, sort_keys=True, default=_jsonable))


def _jsonable(o):
    if isinstance(o, Fraction):
        return str(o)
    if hasattr(o, "tolist"):
        return o.tolist()
    if hasattr(o, "to_dict"):
        return o.to_dict()
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    return repr(o)


def cmd_check(args) -> int:
    try:
        ts = load_structure(args.file)
        rep = check_axioms(ts, args.axiom_mode, max_witnesses=args.max_witnesses)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "text":
        print(f"mode {rep.mode.name}: {'PASS' if rep.passed else 'FAIL'}")
        for r in rep.results:
            print(f"  {r.axiom}: {'pass' if r.passed else 'FAIL'} ({r.violations} violations)")
            for w in r.witnesses:
                print(f"    {w.check} gammas={list(w.gammas)} elements={list(w.elements)} lhs={w.lhs} rhs={w.rhs}")
    else:
        _emit(rep.to_dict(), args.format)
    return 0 if rep.passed else 1


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def cmd_enumerate(args) -> int:
    jobs = args.jobs if args.jobs is not None else default_jobs()
    pairs = [(n, m) for n in args.order for m in args.gamma_size]
    out = Path(args.out)
    single = len(pairs) == 1 and out.suffix
    if not single:
        out.mkdir(parents=True, exist_ok=True)
    manifest = {
        "tool_version": __version__,
        "parameters": {"orders": args.order, "gamma_sizes": args.gamma_size, "axiom_mode": args.axiom_mode,
                       "permute_gamma": args.permute_gamma, "jobs": jobs,
                       "max_order": args.max_order, "max_gamma": args.max_gamma},
        "phases": [],
        "outputs": {},
    }
    try:
        for n, m in pairs:
            t0 = time.perf_counter()
            if n <= args.max_order:
                enumerate_additive_monoids(n)
            t1 = time.perf_counter()
            cat = enumerate_structures(n, m, args.axiom_mode, args.permute_gamma, jobs, args.max_order, args.max_gamma)
            t2 = time.perf_counter()
            path = out if single else out / f"catalog_n{n}_m{m}.jsonl"
            cat.write(path)
            manifest["phases"].append({"order": n, "gamma_size": m, "reducts_seconds": round(t1 - t0, 4),
                                       "search_seconds": round(t2 - t1, 4), "entries": len(cat), **cat.stats})
            manifest["outputs"][path.name] = _sha256(path)
            print(f"n={n} m={m}: {len(cat)} structures over {cat.additive_reducts} additive reducts -> {path}")
    except BoundExceeded as exc:
        print(f"error: bound exceeded: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    mpath = out.with_name(out.name + ".manifest.json") if single else out / "manifest.json"
    mpath.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return 0


def cmd_report(args) -> int:
    from .reports import render_table

    try:
        cats = [Catalog.read(p) for p in args.catalog]
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    modes = {c.axiom_mode for c in cats}
    if len(modes) > 1:
        print(f"error: catalogs mix axiom modes {sorted(modes)}", file=sys.stderr)
        return 2
    text = render_table(args.table, cats)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="")
    else:
        sys.stdout.write(text)
    return 0


def _vec(text: str) -> tuple:
    return tuple(int(x) for x in text.split(","))


def _analyze(ts, args) -> dict:
    what = args.what
    gamma = args.gamma or ts.gamma[0]
    if what == "ideals":
        from .ideals import all_congruences, all_ideals, correspondence_report, lattice_shape

        il, cl = all_ideals(ts), all_congruences(ts)
        if args.dot:
            Path(args.dot).write_text(il.to_dot(), encoding="utf-8")
        return {"ideals": il.to_dict(), "ideal_shape": lattice_shape(il), "congruences": cl.to_dict(),
                "congruence_shape": lattice_shape(cl), "correspondence": correspondence_report(ts, il, cl).to_dict()}
    if what == "radical":
        from .radical import radical_report

        return radical_report(ts)
    if what == "decompose":
        from .decomposition import decomposition_report

        return decomposition_report(ts)
    if what == "spectrum":
        from .spectrum import spec_closed_sets, spectrum_report

        if args.dot:
            Path(args.dot).write_text(spec_closed_sets(ts).to_dot(), encoding="utf-8")
        return spectrum_report(ts)
    if what == "code":
        from .apps import check_code, code_generate, weight_report

        if args.check is not None:
            checks = []
            for c in args.check:
                g, u, v = c.split(":")
                checks.append((g, _vec(u), _vec(v)))
            rep = check_code(ts, args.length, checks)
            code = rep.pop("code", None)
            if code is not None:
                rep["weights"] = weight_report(ts, code)
            return rep
        if not args.generator:
            raise ValueError("--what code needs --generator or --check")
        code = code_generate(ts, args.length, [_vec(g) for g in args.generator])
        return {"codewords": [list(w) for w in code.words], "size": len(code), "weights": weight_report(ts, code)}
    if what == "sbox":
        from .apps import sbox_differential_profile

        prof, lift = sbox_differential_profile(ts, gamma)
        if args.csv:
            Path(args.csv).write_text(prof.to_csv(), encoding="utf-8", newline="")
        return {"profile": prof.to_dict(), "lift": lift}
    if what == "fuzzy":
        from .apps import fuzzy_from_chain, fuzzy_ideal_check

        if args.chain:
            chain = []
            for c in args.chain:
                alpha, members = c.split(":")
                chain.append((Fraction(alpha), _vec(members)))
            return fuzzy_from_chain(ts, chain)
        if not args.grades:
            raise ValueError("--what fuzzy needs --grades or --chain")
        return fuzzy_ideal_check(ts, [Fraction(g) for g in args.grades.split(",")])
    if what == "paths":
        from .apps import parse_graph, ternary_path_values

        if not args.graph:
            raise ValueError("--what paths needs --graph")
        g = parse_graph(Path(args.graph).read_text(encoding="utf-8"))
        return ternary_path_values(ts, gamma, g, args.horizon).to_dict()
    raise ValueError(f"unknown analysis {what!r}")


def cmd_analyze(args) -> int:
    try:
        ts = load_structure(args.file)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        rep = _analyze(ts, args)
    except (ValueError, QuotientError, StructureError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(rep, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tgs", description="Finite commutative ternary Gamma-semirings.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="check the axioms for a structure file")
    c.add_argument("file")
    c.add_argument("--axiom-mode", default="strict")
    c.add_argument("--max-witnesses", type=int, default=10)
    c.add_argument("--format", choices=("text", "json", "pretty"), default="text")
    c.set_defaults(func=cmd_check)

    e = sub.add_parser("enumerate", help="enumerate structures up to isomorphism")
    e.add_argument("--order", type=_int_range, required=True, help="n, a range like 1-3, or a list")
    e.add_argument("--gamma-size", type=_int_range, default=[1])
    e.add_argument("--axiom-mode", default="strict")
    e.add_argument("--permute-gamma", action="store_true")
    e.add_argument("--jobs", type=int, default=None, help="worker processes (default: TGS_JOBS or 1)")
    e.add_argument("--out", required=True, help="catalog file (.jsonl) or directory for several")
    e.add_argument("--max-order", type=int, default=4)
    e.add_argument("--max-gamma", type=int, default=2)
    e.set_defaults(func=cmd_enumerate)

    r = sub.add_parser("report", help="emit a table as CSV from catalogs")
    r.add_argument("catalog", nargs="+")
    r.add_argument("--table", choices=("1", "5", "6", "7"), required=True)
    r.add_argument("--out")
    r.set_defaults(func=cmd_report)

    a = sub.add_parser("analyze", help="run one analysis on a structure file")
    a.add_argument("file")
    a.add_argument("--what", choices=WHAT, required=True)
    a.add_argument("--format", choices=("json", "pretty"), default="pretty")
    a.add_argument("--gamma")
    a.add_argument("--dot", help="write the lattice or spectrum as DOT")
    a.add_argument("--length", type=int, default=1)
    a.add_argument("--generator", action="append", help="codeword like 1,0 (repeatable)")
    a.add_argument("--check", action="append", help="check operator gamma:u:v, e.g. 1:1,1:1,1 (repeatable)")
    a.add_argument("--csv", help="write the difference table as CSV")
    a.add_argument("--grades", help="fuzzy grades like 1,1/2,0")
    a.add_argument("--chain", action="append", help="grade:members like 1:0 (repeatable)")
    a.add_argument("--graph", help="edge-list file")
    a.add_argument("--horizon", type=int)
    a.set_defaults(func=cmd_analyze)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
