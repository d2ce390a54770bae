"""Command-line front end.

Factor descriptors: R, C, Cs, H, Hs, O, Os name the standard doubled algebras;
Cbar, Csbar are the complex forms with the identity star; Htilde, Hstilde,
Hshat are the dim-4 reversion variants; cd:SIGNS[;star=V] spells any variant
out (signs "+-" etc., star conj | id | rev<unit>).  Tensor products join two
factors with "*", e.g. "C*O".

Exit codes: 0 success, 1 a requested check or comparison failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import atlas, cd, liealg, tensor, vinberg
from .descriptors import parse_algebra
from .errors import (
    CdlieError,
    ClosureFailure,
    NotSemisimple,
    OctonionicRequiresN3,
    UnknownAlgebra,
)

USAGE_ERRORS = (ValueError, KeyError)
CHECK_ERRORS = (ClosureFailure, OctonionicRequiresN3, NotSemisimple, UnknownAlgebra)

ALGEBRA_CHECKS = {
    "associative": cd.check_associative,
    "commutative": cd.check_commutative,
    "alternative": cd.check_alternative,
    "artin": cd.check_artin,
    "moufang": cd.check_moufang,
    "composition": cd.check_composition,
}


def thread_count():
    raw = os.environ.get("CDLIE_THREADS", "")
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        print("warning: ignoring non-integer CDLIE_THREADS=%r" % raw, file=sys.stderr)
        return 1
    return max(n, 1)


def emit(text):
    sys.stdout.write(text + "\n")


def emit_json(obj):
    sys.stdout.write(json.dumps(obj, indent=1) + "\n")


def _element_text(coeffs):
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if c == 1:
            parts.append("+e%d" % i)
        elif c == -1:
            parts.append("-e%d" % i)
        else:
            parts.append("%+de%d" % (c, i) if c.denominator == 1 else "+(%s)e%d" % (c, i))
    return "".join(parts).lstrip("+") or "0"


def _witness_text(w):
    # check witnesses mix basis indices, identity tags, and element tuples
    parts = [
        _element_text(part) if isinstance(part, tuple) else str(part) for part in w
    ]
    return "(" + ", ".join(parts) + ")"


def _witness_payload(w):
    if w is None:
        return None
    return [
        [str(x) for x in part] if isinstance(part, tuple) else part for part in w
    ]


# ---------------------------------------------------------------------------
# algebra


def cmd_algebra(args):
    alg = parse_algebra(args.descriptor)
    sig = cd.signature(alg)
    im = cd.im_star_basis(alg)
    if isinstance(alg, tensor.TensorAlgebra):
        ders = len(tensor.tensor_derivation_basis(alg))
    else:
        ders = len(cd.derivation_basis(alg))
    results = {}
    failed = []
    for name in args.check:
        fn = ALGEBRA_CHECKS.get(name)
        if fn is None:
            raise ValueError("unknown check %r (choose from %s)" % (name, ", ".join(sorted(ALGEBRA_CHECKS))))
        witness = fn(alg)
        results[name] = witness
        if witness is not None:
            failed.append(name)
    show_table = args.table or (alg.dim <= 8 and args.format == "text")
    if args.format == "structured":
        doc = {
            "descriptor": args.descriptor,
            "name": alg.name,
            "dim": alg.dim,
            "signature": list(sig),
            "im_star": list(im),
            "derivations": ders,
            "checks": {
                k: {"ok": w is None, "witness": _witness_payload(w)}
                for k, w in results.items()
            },
        }
        if show_table:
            doc["mul_sign"] = [list(r) for r in alg.mul_sign]
            doc["mul_index"] = [list(r) for r in alg.mul_index]
            doc["star_signs"] = list(alg.star_signs)
        emit_json(doc)
    else:
        emit("algebra %s: dim %d" % (alg.name, alg.dim))
        emit("inner-product signature (%d, %d)" % (sig[0], sig[1]))
        emit("star-odd units: %s" % (" ".join("e%d" % q for q in im) or "none"))
        emit("derivation dimension: %d" % ders)
        if show_table:
            emit("multiplication table (entry = e_i e_j):")
            width = len(str(alg.dim - 1)) + 1
            header = "    " + " ".join(("e%d" % j).rjust(width + 1) for j in range(alg.dim))
            emit(header)
            for i in range(alg.dim):
                row = []
                for j in range(alg.dim):
                    s = "+" if alg.mul_sign[i][j] > 0 else "-"
                    row.append(("%se%d" % (s, alg.mul_index[i][j])).rjust(width + 2))
                emit(("e%d" % i).ljust(4) + " ".join(row))
        for name in args.check:
            w = results[name]
            emit(
                "check %s: %s"
                % (name, "ok" if w is None else "counterexample %s" % _witness_text(w))
            )
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# build


def recipe_from_args(args):
    labels = ()
    if args.n > 1:
        labels = vinberg.class_representative(args.n, args.labels)
    space = vinberg.FULL_ANTIHERMITIAN if args.space == "a" else vinberg.SPECIAL_UNITARY
    return vinberg.ConstructionRecipe(
        k1=args.k1,
        k2=args.k2,
        n=args.n,
        labels=labels,
        space=space,
        force=args.force,
        strategy=args.strategy,
    )


def cmd_build(args):
    if args.k1 is None:
        raise ValueError("build needs --k1 (directly or via --config)")
    recipe = recipe_from_args(args)
    alg = vinberg.build_lie_algebra(recipe)
    counts = {}
    for label in alg.basis:
        counts[label[0]] = counts.get(label[0], 0) + 1
    if args.format == "structured":
        emit_json(
            {
                "recipe": alg.meta["recipe"],
                "dim": alg.dim,
                "strategy": alg.meta["strategy"],
                "space_effective": alg.meta["space_effective"],
                "metric_diag": alg.meta["metric_diag"],
                "non_lie": alg.meta["non_lie"],
                "basis_counts": {
                    "derivations": counts.get("d", 0),
                    "off_diagonal": counts.get("E", 0),
                    "diagonal": counts.get("T", 0),
                },
            }
        )
    else:
        emit("recipe %s" % alg.meta["recipe"])
        emit("dim %d (derivations %d, off-diagonal %d, diagonal %d)" % (
            alg.dim, counts.get("d", 0), counts.get("E", 0), counts.get("T", 0)))
        emit("strategy %s, metric diag %s" % (
            alg.meta["strategy"],
            " ".join("+1" if m > 0 else "-1" for m in alg.meta["metric_diag"])))
        if alg.meta["non_lie"]:
            emit("warning: bracket table violates the Jacobi identity (non_lie=true)")
    if args.out:
        liealg.save(alg, args.out)
        emit("wrote %s" % args.out)
    return 0


# ---------------------------------------------------------------------------
# analyze / identify


def _load_file(path):
    try:
        return liealg.load(path)
    except FileNotFoundError:
        raise ValueError("no such file: %s" % path)
    except json.JSONDecodeError as exc:
        raise ValueError("not a lie_algebra document: %s (%s)" % (path, exc))


def cmd_analyze(args):
    alg = _load_file(args.path)
    checks = args.checks
    doc = {"path": args.path, "dim": alg.dim, "recipe": alg.meta.get("recipe")}
    bad = False
    if "jacobi" in checks:
        witness = liealg.check_jacobi(alg)
        doc["jacobi"] = (
            {"ok": True}
            if witness is None
            else {"ok": False, "triple": list(witness[:3])}
        )
        bad = bad or witness is not None
    rep = None
    if "killing" in checks or "rank" in checks:
        rep = liealg.killing_report(alg)
        doc["killing"] = rep.as_dict()
    if "invariance" in checks:
        witness = liealg.invariance_check(alg, samples=args.samples, seed=args.seed)
        doc["invariance"] = (
            {"ok": True} if witness is None else {"ok": False, "triple": list(witness)}
        )
        bad = bad or witness is not None
    if "rank" in checks:
        if rep.n_zero != 0:
            raise NotSemisimple("rank estimation needs a nondegenerate invariant form")
        doc["rank_upper_bound"] = liealg.rank_estimate(
            alg, trials=args.trials, seed=args.seed
        )
    if args.format == "structured":
        emit_json(doc)
    else:
        emit("file %s" % args.path)
        if doc.get("recipe"):
            emit("recipe %s" % doc["recipe"])
        emit("dim %d" % alg.dim)
        if "jacobi" in doc:
            j = doc["jacobi"]
            emit("jacobi: %s" % ("ok" if j["ok"] else "violated at triple %s" % (tuple(j["triple"]),)))
        if rep is not None:
            emit(
                "killing: signature (%d, %d, %d), character %d, %s"
                % (
                    rep.n_plus,
                    rep.n_minus,
                    rep.n_zero,
                    rep.character,
                    "semisimple" if rep.n_zero == 0 else "degenerate",
                )
            )
        if "invariance" in doc:
            inv = doc["invariance"]
            emit("invariance: %s" % ("ok" if inv["ok"] else "violated at %s" % (tuple(inv["triple"]),)))
        if "rank_upper_bound" in doc:
            emit("rank upper bound: %d" % doc["rank_upper_bound"])
    return 1 if bad else 0


def cmd_identify(args):
    if args.path:
        alg = _load_file(args.path)
        if alg.meta.get("non_lie"):
            emit("file %s is marked non_lie; identification does not apply" % args.path)
            return 1
        rep = liealg.killing_report(alg)
        dim, character = alg.dim, rep.character
        provenance = alg.meta.get("recipe")
    else:
        dim, character = args.dim, args.character
        provenance = None
    names = atlas.identify(dim, character, provenance=provenance)
    if args.format == "structured":
        emit_json({"dim": dim, "character": character, "candidates": names})
    else:
        emit("(dim, character) = (%d, %d)" % (dim, character))
        for k, name in enumerate(names):
            emit("%s %s" % ("=>" if k == 0 else "  ", name))
    return 0


# ---------------------------------------------------------------------------
# square / tables


def _square_rows(cells):
    for c in cells:
        expected = c.expected.name if c.expected else ""
        yield [
            c.k1,
            c.k2,
            str(c.n),
            vinberg.labels_text(c.labels),
            "" if c.dim is None else str(c.dim),
            "" if c.character is None else str(c.character),
            expected,
            c.status,
        ]


def cmd_square(args):
    factors = args.factors or None
    classes = args.classes if args.classes else None
    if args.n == 1:
        classes = [""]
    cells = atlas.generate_square(args.n, factors=factors, classes=classes)
    bad = [c for c in cells if c.status == "mismatch"]
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["k1", "k2", "n", "labels", "dim", "character", "expected_name", "status"])
        for row in _square_rows(cells):
            writer.writerow(row)
    elif args.format == "structured":
        emit_json(
            [
                {
                    "k1": c.k1,
                    "k2": c.k2,
                    "n": c.n,
                    "labels": vinberg.labels_text(c.labels),
                    "dim": c.dim,
                    "character": c.character,
                    "expected": c.expected.name if c.expected else None,
                    "status": c.status,
                    "note": c.note,
                }
                for c in cells
            ]
        )
    else:
        factor_list = factors or atlas.load_data()["factor_order"]
        by_class = {}
        for c in cells:
            by_class.setdefault(c.label_class, {})[(c.k1, c.k2)] = c
        for cls, grid in by_class.items():
            emit("n=%d%s" % (args.n, " class %s" % cls if cls else ""))
            width = 16
            emit(" " * 4 + "".join(k.ljust(width) for k in factor_list))
            for k1 in factor_list:
                parts = []
                for k2 in factor_list:
                    c = grid.get((k1, k2))
                    if c is None:
                        parts.append("".ljust(width))
                        continue
                    if c.expected:
                        text = c.expected.name
                    elif c.dim is not None:
                        text = "(%s, %s)" % (c.dim, c.character)
                    else:
                        text = "-"
                    if c.status == "mismatch":
                        text = "MISMATCH(%s,%s)" % (c.dim, c.character)
                    elif c.status == "counting_only":
                        text += "*"
                    elif c.status == "non_lie":
                        text = "non-Lie"
                    parts.append(text.ljust(width))
                emit(k1.ljust(4) + "".join(parts))
            emit("")
        emit("cells: %d, mismatches: %d%s" % (len(cells), len(bad), " (* = counting only)"))
    return 1 if bad else 0


def cmd_tables(args):
    if args.id is None:
        raise ValueError("tables needs --id (directly or via --config)")
    report = atlas.verify_reverse_tables(args.id, max_n=args.max_n, dim_cap=args.cap)
    rows = [
        [
            r.table,
            r.row,
            str(r.n),
            "" if r.l is None else str(r.l),
            r.recipe,
            r.strategy,
            "" if r.dim is None else str(r.dim),
            "" if r.character is None else str(r.character),
            r.expected.name,
            r.status,
        ]
        for r in report.results
    ]
    ok = report.rows_ok()
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(
            ["table", "row", "n", "l", "recipe", "strategy", "dim", "character", "expected_name", "status"]
        )
        writer.writerows(rows)
    elif args.format == "structured":
        emit_json(
            {
                "table": report.table,
                "rows_ok": ok,
                "results": [
                    {
                        "row": r.row,
                        "n": r.n,
                        "l": r.l,
                        "recipe": r.recipe,
                        "strategy": r.strategy,
                        "dim": r.dim,
                        "character": r.character,
                        "expected": r.expected.name,
                        "status": r.status,
                        "note": r.note,
                    }
                    for r in report.results
                ],
            }
        )
    else:
        for r in report.results:
            got = "" if r.dim is None else " (%d, %s)" % (r.dim, r.character)
            note = " [%s]" % r.note if r.note else ""
            emit(
                "%s %-12s n=%d %s %s: %s%s%s"
                % (r.table, r.row, r.n, r.recipe, r.strategy, r.status, got, note)
            )
        emit(
            "table %s: %d verified, %d failed, %d counting-only; rows %s"
            % (
                report.table,
                len(report.verified),
                len(report.failed),
                sum(1 for r in report.results if r.status == "counting_only"),
                "ok" if ok else "NOT ok",
            )
        )
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser


def _add_format(p, choices=("text", "structured")):
    p.add_argument("--format", choices=choices, default="text")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cdlie",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="CDLIE_THREADS is accepted for compatibility; execution is kept "
        "serial so identical invocations stay byte-identical.",
    )
    parser.add_argument("--config", help="JSON file with flag defaults", default=None)
    sub = parser.add_subparsers(dest="command", required=True)
    parser._command_parsers = []

    p = sub.add_parser("algebra", help="inspect a composition algebra or tensor product")
    p.add_argument("descriptor")
    p.add_argument("--check", default="", type=lambda s: [x for x in s.split(",") if x])
    p.add_argument("--table", action="store_true", help="always print the multiplication table")
    _add_format(p)
    p.set_defaults(fn=cmd_algebra)

    p = sub.add_parser("build", help="build a Lie algebra and write its bracket table")
    p.add_argument("--k1", default=None)
    p.add_argument("--k2", default="R")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--labels", default="{+}")
    p.add_argument("--space", choices=("su", "a"), default="su")
    p.add_argument("--strategy", choices=("auto", "vinberg", "commutator"), default="auto")
    p.add_argument("--force", action="store_true")
    p.add_argument("--out", default=None)
    _add_format(p)
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("analyze", help="run checks on a stored bracket table")
    p.add_argument("path")
    p.add_argument(
        "--checks",
        default="jacobi,killing",
        type=lambda s: [x for x in s.split(",") if x],
        help="comma list from jacobi,killing,invariance,rank",
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--trials", type=int, default=5)
    _add_format(p)
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("identify", help="name candidates for a computed algebra")
    p.add_argument("path", nargs="?", default=None)
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--character", type=int, default=None)
    _add_format(p)
    p.set_defaults(fn=cmd_identify)

    p = sub.add_parser("square", help="generate the square of real forms")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--grand", action="store_true", help="all seven factors (the default)")
    p.add_argument("--factors", nargs="*", default=None)
    p.add_argument("--classes", nargs="*", default=None)
    _add_format(p, ("text", "structured", "csv"))
    p.set_defaults(fn=cmd_square)

    p = sub.add_parser("tables", help="verify the realization tables")
    p.add_argument("--id", default=None, choices=("I", "II", "III", "IV", "V"))
    p.add_argument("--max-n", type=int, default=4, dest="max_n")
    p.add_argument("--cap", type=int, default=256)
    _add_format(p, ("text", "structured", "csv"))
    p.set_defaults(fn=cmd_tables)
    parser._command_parsers = sub.choices.values()
    return parser


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    if "--config" in argv:
        at = argv.index("--config")
        try:
            with open(argv[at + 1]) as fh:
                defaults = json.load(fh)
        except (IndexError, OSError, json.JSONDecodeError) as exc:
            print("bad --config: %s" % exc, file=sys.stderr)
            return 2
        if not isinstance(defaults, dict):
            print("bad --config: expected a JSON object", file=sys.stderr)
            return 2
        del argv[at : at + 2]
        parser.set_defaults(**defaults)
        for p in parser._command_parsers:
            p.set_defaults(**defaults)
    thread_count()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.fn is cmd_identify and args.path is None:
        if args.dim is None or args.character is None:
            print("identify needs a file or both --dim and --character", file=sys.stderr)
            return 2
    try:
        return args.fn(args)
    except CHECK_ERRORS as exc:
        print("%s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 1
    except (CdlieError,) + USAGE_ERRORS as exc:
        print("%s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
