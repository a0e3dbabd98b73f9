"""Command-line front end.

Exit codes: 0 ok, 1 malformed input, 2 property violation or failed check,
3 indeterminate outcomes only, 4 bounds exceeded.  Matrix arguments accept a
file path, ``-`` for stdin, or a preset name (a2, a3, a4, a5, d4, c3, k4,
markov, b2); files may hold either the text format or a JSON matrix object.
Vertex labels are 1-based.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .companion import (
    admissible_cut,
    companion_from_cvectors,
    find_admissible_companion,
    is_admissible,
    make_companion,
)
from .errors import (
    MalformedInput,
    NotACompanion,
    NotAdmissible,
    NotSignSkewSymmetric,
    NoSymmetrizer,
    NotAcyclic,
    NotSkewSymmetric,
    NotUnitNorm,
    QuiverlabError,
    SignCoherenceLost,
)
from .exchange import mutation_class
from .exchange import mutate_along
from .io import (
    canonical_json,
    edge_pairs_to_wire,
    load_matrix,
    matrix_to_text,
    parse_walk,
)
from .rootsys import cartan_of
from .verify import conjecture_search, fuzz, verify_walk
from .yseed import apply_walk, initial_seed

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_VIOLATION = 2
EXIT_INDETERMINATE = 3
EXIT_BOUNDS = 4


def _add_walk_option(parser, required=True):
    parser.add_argument("-k", dest="ks", type=int, nargs="+", action="extend",
                        default=[], metavar="K",
                        help="vertex labels (1-based); repeatable")
    parser.required_walk = required


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverlab",
        description="exchange-matrix mutation, c-vectors, and quasi-Cartan companions")
    parser.add_argument("--version", action="version", version=f"quiverlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", help="mutate a matrix at the given vertices")
    p.add_argument("matrix")
    _add_walk_option(p)

    p = sub.add_parser("walk", help="mutate the standard-basis seed along a walk")
    p.add_argument("matrix")
    _add_walk_option(p, required=False)
    p.add_argument("--cvectors", action="store_true", help="print c-vectors per step")
    p.add_argument("--companion", action="store_true",
                   help="print the c-vector companion and its cut per step")

    p = sub.add_parser("companion", help="companion from c-vectors at the walk end")
    p.add_argument("matrix")
    _add_walk_option(p, required=False)
    p.add_argument("--figure", metavar="PNG", help="render the diagram with the cut")

    p = sub.add_parser("admissible", help="admissibility of a companion, or existence")
    p.add_argument("matrix")
    p.add_argument("--companion", metavar="FILE",
                   help="check this companion instead of deciding existence")
    p.add_argument("--cross-check", action="store_true",
                   help="also run the exhaustive sign search (<= 20 edges)")
    p.add_argument("--figure", metavar="PNG", help="render the diagram (with cut if found)")

    p = sub.add_parser("cut", help="admissible cut of the walk-end companion")
    p.add_argument("matrix")
    _add_walk_option(p, required=False)

    p = sub.add_parser("class", help="mutation class up to simultaneous permutation")
    p.add_argument("matrix")
    p.add_argument("--max-size", type=int, default=1000)
    p.add_argument("--max-depth", type=int, default=64)
    p.add_argument("--json", action="store_true", help="print the full report as JSON")

    p = sub.add_parser("verify", help="run every identity check along walks")
    p.add_argument("matrix")
    _add_walk_option(p, required=False)
    p.add_argument("--fuzz", nargs=3, type=int, metavar=("DEPTH", "TRIALS", "SEED"),
                   help="random walks instead of -k")
    p.add_argument("--conjecture", action="store_true",
                   help="allow skew-symmetrizable input (experimental checks)")
    p.add_argument("--report-dir", metavar="DIR",
                   help="write report.json, checks.tsv, summary.tsv and figures")
    p.add_argument("--json", action="store_true", help="print the full report as JSON")

    p = sub.add_parser("serve", help="start the session API")
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--snapshot", metavar="FILE", default=None,
                   help="persist sessions to this file")
    return parser


def _load(source: str):
    return load_matrix(source)


def _walk_labels(args) -> tuple[int, ...]:
    return parse_walk(list(args.ks))


def _print_matrix(B) -> None:
    sys.stdout.write(matrix_to_text(B))


def cmd_mutate(args) -> int:
    B = _load(args.matrix)
    if not args.ks:
        raise MalformedInput("mutate needs at least one -k")
    walk = _walk_labels(args)
    for k in walk:
        if not 0 <= k < B.n:
            raise MalformedInput(f"vertex {k + 1} out of range 1..{B.n}")
    _print_matrix(mutate_along(B, walk))
    return EXIT_OK


def cmd_walk(args) -> int:
    B0 = _load(args.matrix)
    walk = _walk_labels(args)
    for k in walk:
        if not 0 <= k < B0.n:
            raise MalformedInput(f"vertex {k + 1} out of range 1..{B0.n}")
    record = apply_walk(initial_seed(B0), walk)
    want_companion = args.companion
    A0 = cartan_of(B0) if want_companion else None
    for idx, seed in enumerate(record.seeds):
        label = "start" if idx == 0 else f"step {idx}: k={walk[idx - 1] + 1}"
        print(f"# {label}")
        _print_matrix(seed.B)
        if args.cvectors:
            print("c =", tuple(tuple(c) for c in seed.cvectors))
        if want_companion:
            comp = companion_from_cvectors(A0, seed)
            print("A =", tuple(tuple(r) for r in comp.rows))
            cut = admissible_cut(comp)
            print("cut =", json.dumps(edge_pairs_to_wire(cut.edges)))
    return EXIT_OK


def cmd_companion(args) -> int:
    B0 = _load(args.matrix)
    record = apply_walk(initial_seed(B0), _walk_labels(args))
    comp = companion_from_cvectors(cartan_of(B0), record.final)
    _print_matrix_rows(comp.rows)
    cut = admissible_cut(comp)
    print("cut =", json.dumps(edge_pairs_to_wire(cut.edges)))
    if args.figure:
        from .plotting import save_diagram

        save_diagram(record.final.B, args.figure, companion=comp)
        print(f"figure written to {args.figure}")
    return EXIT_OK


def _print_matrix_rows(rows) -> None:
    for row in rows:
        print(" ".join(str(x) for x in row))


def cmd_admissible(args) -> int:
    B = _load(args.matrix)
    if args.companion:
        with open(args.companion, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
        comp = make_companion(obj["A"] if isinstance(obj, dict) else obj, B)
        ok, witness = is_admissible(comp)
        if ok:
            print("admissible")
        else:
            print("not admissible")
            print("violating cycle:", [v + 1 for v in witness.vertices],
                  "oriented" if witness.oriented else "non-oriented")
        if args.figure:
            from .plotting import save_diagram

            save_diagram(B, args.figure, companion=comp)
        return EXIT_OK
    search = find_admissible_companion(B, cross_check=args.cross_check)
    if search.found:
        print("admissible companion found")
        _print_matrix_rows(search.companion.rows)
        if args.figure:
            from .plotting import save_diagram

            save_diagram(B, args.figure, companion=search.companion)
    else:
        print("no admissible companion")
        print("certificate (cycle parities sum to a contradiction):")
        for cyc, parity in zip(search.certificate.cycles,
                               search.certificate.parities()):
            kind = "oriented" if cyc.oriented else "non-oriented"
            print(f"  cycle {[v + 1 for v in cyc.vertices]} ({kind}, parity {parity})")
        if args.figure:
            from .plotting import save_diagram

            save_diagram(B, args.figure)
    return EXIT_OK


def cmd_cut(args) -> int:
    B0 = _load(args.matrix)
    record = apply_walk(initial_seed(B0), _walk_labels(args))
    comp = companion_from_cvectors(cartan_of(B0), record.final)
    cut = admissible_cut(comp)
    print(json.dumps(edge_pairs_to_wire(cut.edges)))
    return EXIT_OK


def cmd_class(args) -> int:
    B = _load(args.matrix)
    report = mutation_class(B, max_class_size=args.max_size, max_depth=args.max_depth)
    if args.json:
        obj = {
            "class_size": report.class_size,
            "representatives": [[list(r) for r in rep] for rep in report.representatives],
            "acyclic_witness": ([k + 1 for k in report.acyclic_witness]
                                if report.acyclic_witness is not None else None),
            "truncated": report.truncated,
            "bounds": {"max_size": report.max_class_size,
                       "max_depth": report.max_depth},
        }
        print(canonical_json(obj))
    else:
        print(f"class size (up to relabeling): {report.class_size}")
        if report.acyclic_witness is not None:
            print(f"acyclic member: yes, walk {[k + 1 for k in report.acyclic_witness]}")
        else:
            print("acyclic member: none found within bounds")
        print(f"truncated: {report.truncated}")
    return EXIT_BOUNDS if report.truncated else EXIT_OK


def cmd_verify(args) -> int:
    B0 = _load(args.matrix)
    if args.fuzz and args.ks:
        raise MalformedInput("give either --fuzz or -k, not both")
    if args.fuzz:
        depth, trials, seed = args.fuzz
        runner = conjecture_search if args.conjecture else fuzz
        report = runner(B0, depth, trials, seed)
    else:
        walk = _walk_labels(args)
        report = verify_walk(B0, walk, _mode="conjecture" if args.conjecture else "walk",
                             _require_skew=not args.conjecture)
    summary = report.summary
    print(f"mode: {report.mode}; trials: {summary['trials']}; "
          f"steps: {summary['steps']}")
    for check in sorted(summary["checks"]):
        counts = summary["checks"][check]
        print(f"  {check}: pass {counts['pass']}, fail {counts['fail']}, "
              f"unknown {counts['unknown']}")
    rrv = summary["real_root_vectors"]
    print(f"  real-root vectors: yes {rrv['yes']}, no {rrv['no']}, "
          f"unknown {rrv['unknown']}")
    print(f"failures: {report.failures}; unknowns: {report.unknowns}")
    if args.json:
        print(canonical_json(report.to_obj()))
    if args.report_dir:
        from .plotting import write_report_files

        companion = None
        try:
            companion = companion_from_cvectors(cartan_of(B0), initial_seed(B0))
        except QuiverlabError:
            pass
        written = write_report_files(report, args.report_dir, B=B0,
                                     companion=companion)
        for path in written:
            print(f"wrote {path}")
    if report.failures:
        return EXIT_VIOLATION
    if report.unknowns:
        return EXIT_INDETERMINATE
    return EXIT_OK


def cmd_serve(args) -> int:
    from .service import serve

    serve(port=args.port, snapshot_path=args.snapshot)
    return EXIT_OK


COMMANDS = {
    "mutate": cmd_mutate,
    "walk": cmd_walk,
    "companion": cmd_companion,
    "admissible": cmd_admissible,
    "cut": cmd_cut,
    "class": cmd_class,
    "verify": cmd_verify,
    "serve": cmd_serve,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (MalformedInput, NotSignSkewSymmetric, NoSymmetrizer, NotAcyclic,
            NotSkewSymmetric, FileNotFoundError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_MALFORMED
    except (SignCoherenceLost, NotACompanion, NotAdmissible, NotUnitNorm) as err:
        print(f"property violation: {err}", file=sys.stderr)
        return EXIT_VIOLATION
    except QuiverlabError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
