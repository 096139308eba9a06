"""Command-line front end.

Subcommands:
    check           identities and invariants of one algebra
    h2              second cohomology of one algebra
    extend          build a central extension from algebra + cocycle
    reconstruct     strip the annihilator, recover (base, cocycle)
    iso             search for an isomorphism between two algebras
    separate        partition a list of algebras up to isomorphism
    verify-catalog  run the membership predicates over catalog entries
    census          entry count and parameter-arity histogram
    orbits-fp       run the extension procedure over a prime field
    fmt             canonicalize a JSON file (idempotent)

Exit codes: 0 success / verified, 1 verification failure, 2 input error.
All machine-readable output is canonical JSON (sorted keys); pass
--report PATH to also write the report to a file.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ThreadPoolExecutor

from .algebra import Algebra
from .catalog import (PREDICATES, census, load_catalog, verify_entry)
from .cohomology import Cocycle, NotACocycle, h2_basis
from .exprs import ExprError
from .extensions import ZeroAnnihilator, central_extension, reconstruct
from .fields import PrimeField, field_from_tag
from .invariants import fingerprint, separate
from .morphisms import BudgetExceeded, is_isomorphism, iso_search
from .fplab import (crosscheck, run_procedure_fp_report,
                    specialized_entries_fp)


class InputError(Exception):
    pass


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"{path}: {e}")


def _load_algebra(path, field=None):
    doc = _load_json(path)
    try:
        return Algebra.from_json(doc, field=field)
    except (KeyError, ValueError, ExprError) as e:
        raise InputError(f"{path}: bad algebra document ({e})")


def _canonical(doc):
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _emit(report, args):
    text = _canonical(report)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)


# ----------------------------------------------------------------------
# subcommands

def cmd_check(args):
    A = _load_algebra(args.algebra)
    fp = fingerprint(A)
    report = {
        "novikov": A.is_novikov(),
        "right_commutative": A.is_right_commutative()[0],
        "left_symmetric": A.is_left_symmetric()[0],
        "nilpotency": A.nilpotency_index(),
        "filtration": list(fp.filtration),
        "ann": fp.ann,
        "square": fp.square,
        "min_generators": fp.min_generators,
        "commutative": fp.commutative,
        "associative": fp.associative,
        "split": A.is_split(),
    }
    for key in ("novikov", "nilpotency", "ann"):
        print(f"{key}: {str(report[key]).lower()}")
    _emit(report, args)
    return 0


def cmd_h2(args):
    A = _load_algebra(args.algebra)
    reps, dim = h2_basis(A)
    report = {
        "dim_h2": dim,
        "classes": [r.to_json() for r in reps],
    }
    _emit(report, args)
    return 0


def cmd_extend(args):
    A = _load_algebra(args.algebra)
    doc = _load_json(args.cocycle)
    try:
        theta = Cocycle.from_json(doc, base=A)
    except NotACocycle as e:
        raise InputError(f"{args.cocycle}: {e}")
    B = central_extension(A, theta)
    report = B.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(_canonical(report))
    _emit(report, args)
    return 0


def cmd_reconstruct(args):
    B = _load_algebra(args.algebra)
    try:
        base, theta = reconstruct(B)
    except ZeroAnnihilator as e:
        raise InputError(str(e))
    report = {"base": base.to_json(), "cocycle": theta.to_json()}
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(_canonical(report))
    _emit(report, args)
    return 0


def cmd_iso(args):
    A = _load_algebra(args.a)
    B = _load_algebra(args.b)
    if A.field != B.field:
        raise InputError("the two algebras live over different fields")
    exhaustive = isinstance(A.field, PrimeField)
    try:
        w = iso_search(A, B, budget=args.budget, height=args.height)
    except BudgetExceeded:
        _emit({"verdict": "budget_exceeded"}, args)
        return 1
    if w is not None:
        assert is_isomorphism(A, B, w)
        _emit({"verdict": "isomorphic",
               "witness": [[repr(x) for x in row] for row in w.entries]},
              args)
        return 0
    _emit({"verdict": "proven_distinct" if exhaustive
           else "not_found_heuristic"}, args)
    return 1


def cmd_separate(args):
    named = [(path, _load_algebra(path)) for path in args.algebras]
    rep = separate(named, budget=args.budget, height=args.height)
    report = {
        "groups": rep["groups"],
        "proven_isomorphic": [list(p) for p in rep["proven_isomorphic"]],
        "proven_distinct": [list(p) for p in rep["proven_distinct"]],
        "undecided": [list(p) for p in rep["undecided"]],
    }
    _emit(report, args)
    return 0


def cmd_verify_catalog(args):
    cat = load_catalog()
    field = field_from_tag(args.field)
    labels = args.labels.split(",") if args.labels else list(cat.entries)
    entries = [cat.entry(l) for l in labels]

    def run(entry):
        try:
            return entry.label, verify_entry(entry, field)
        except Exception as e:
            return entry.label, [{"sample": None,
                                  "checks": {"error": str(e)},
                                  "passed": False}]

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(run, entries))
    else:
        results = [run(e) for e in entries]
    failures = []
    for label, reports in results:
        for r in reports:
            if not r["passed"]:
                failures.append({
                    "label": label,
                    "sample": list(r["sample"]) if r["sample"] else [],
                    "failed": sorted(k for k in PREDICATES
                                     if not r["checks"].get(k, False)),
                })
    report = {"checked": len(results), "failures": failures}
    _emit(report, args)
    return 1 if failures else 0


def cmd_census(args):
    cat = load_catalog()
    got = census(cat)
    expected = cat.meta["census"]
    report = {
        "total": got["total"],
        "histogram": list(got["histogram"]),
        "expected_total": expected["total"],
        "expected_histogram": list(expected["histogram"]),
    }
    print(f"{got['total']} {tuple(got['histogram'])}")
    _emit(report, args)
    ok = (got["total"] == expected["total"]
          and list(got["histogram"]) == list(expected["histogram"]))
    return 0 if ok else 1


def cmd_orbits_fp(args):
    field = field_from_tag(args.field)
    if not isinstance(field, PrimeField):
        raise InputError("orbits-fp needs --field fp:p")
    cat = load_catalog()
    if args.base not in cat.bases:
        raise InputError(f"unknown base key {args.base!r}")
    rec = cat.bases[args.base]
    env = {}
    if args.base_params:
        for item in args.base_params.split(","):
            k, v = item.split("=")
            env[k] = field(int(v))
    A = rec.algebra(field, env)
    rep = run_procedure_fp_report(A, args.s, budget=args.budget)
    report = {k: rep[k] for k in ("p", "s", "h2_dim", "aut_order", "points",
                                  "orbits", "admissible_orbits", "merged")}
    report["classes"] = [B.to_json() for B in rep["classes"]]
    ok = True
    if args.crosscheck_labels:
        labels = args.crosscheck_labels.split(",")
        pool, skips = specialized_entries_fp(cat, field, labels)
        cc = crosscheck(rep["classes"], pool, budget=args.budget)
        report["crosscheck"] = {
            "matches": {str(k): v for k, v in cc["matches"].items()},
            "unmatched_classes": cc["unmatched_classes"],
            "unmatched_pool": cc["unmatched_pool"],
            "skips": [list(s) for s in skips],
        }
        ok = not cc["unmatched_classes"] and not cc["unmatched_pool"]
    _emit(report, args)
    return 0 if ok else 1


def cmd_fmt(args):
    doc = _load_json(args.file)
    text = _canonical(doc)
    with open(args.file, "w") as fh:
        fh.write(text)
    return 0


# ----------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="novikov",
        description="Exact-arithmetic central-extension toolkit")
    p.add_argument("--field", default="q",
                   help="field tag: q | qi | qsqrt:d | fp:p")
    p.add_argument("--budget", type=int, default=5_000_000,
                   help="search step budget")
    p.add_argument("--height", type=int, default=3,
                   help="rational height bound for heuristic searches")
    p.add_argument("--jobs", type=int, default=1,
                   help="parallel workers where supported")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for randomized suites")
    p.add_argument("--report", default=None,
                   help="also write the JSON report to this path")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="identities/invariants of one algebra")
    s.add_argument("algebra")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("h2", help="second cohomology")
    s.add_argument("algebra")
    s.set_defaults(func=cmd_h2)

    s = sub.add_parser("extend", help="build a central extension")
    s.add_argument("--algebra", required=True)
    s.add_argument("--cocycle", required=True)
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("reconstruct", help="recover (base, cocycle)")
    s.add_argument("algebra")
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_reconstruct)

    s = sub.add_parser("iso", help="isomorphism search")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("separate", help="partition algebras by isomorphism")
    s.add_argument("algebras", nargs="+")
    s.set_defaults(func=cmd_separate)

    s = sub.add_parser("verify-catalog", help="membership predicates")
    s.add_argument("--labels", default=None,
                   help="comma-separated entry labels (default: all)")
    s.set_defaults(func=cmd_verify_catalog)

    s = sub.add_parser("census", help="entry count and arity histogram")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("orbits-fp", help="extension procedure over F_p")
    s.add_argument("--base", required=True, help="base record key")
    s.add_argument("--base-params", default=None,
                   help="comma-separated name=int assignments")
    s.add_argument("--s", type=int, default=1)
    s.add_argument("--crosscheck-labels", default=None,
                   help="match classes against these catalog entries")
    s.set_defaults(func=cmd_orbits_fp)

    s = sub.add_parser("fmt", help="canonicalize a JSON file in place")
    s.add_argument("file")
    s.set_defaults(func=cmd_fmt)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    random.seed(args.seed)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, ExprError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
