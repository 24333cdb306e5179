"""Command-line interface.

Exit codes: 0 for positive verdicts (covering / realizable / found), 1 for
negative verdicts, 2 for usage and capacity errors.
"""

import argparse
import json
import os
import sys

from . import covering, export, realize, search, walks
from . import vectors as V
from .errors import ParikhGridError, WalkUnrealizable
from .grid import build_grid


def _out(args, text):
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _parse_vectors(text):
    """Parse a list like "(3,0,0),(0,3,0)" into vector tuples."""
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        parts.append(cur)
    return [V.parse_vector(p) for p in parts]


def cmd_grid(args):
    g = build_grid(args.k, args.sigma)
    if args.format == "dot":
        _out(args, export.grid_to_dot(g))
    else:
        _out(args, json.dumps(export.grid_to_dict(g, args.directed), indent=2))
    return 0


def cmd_verify(args):
    report = covering.verify(args.word, args.k, args.sigma)
    if args.format == "table":
        _out(args, export.cover_table([report]))
    else:
        _out(args, export.to_json(report))
    return 0 if report.is_covering else 1


def cmd_walk(args):
    sigma = args.sigma
    walk = walks.walk_of(args.word, args.k,
                         V.Alphabet(sigma) if sigma else None)
    doc = {
        "schema": export.SCHEMA, "kind": "walk",
        "k": walk.k, "sigma": walk.sigma(), "word": args.word,
        "vertices": [list(p) for p in walk.vertices],
        "labels": [[lab.out_letter, lab.in_letter] for lab in walk.labels],
        "enclosing_vectors": [list(p) for p in walk.enclosing_vectors()],
        "inner_vectors": [list(p) for p in walk.inner_vectors()],
        "bowfree": walk.is_bowfree(),
    }
    _out(args, json.dumps(doc, indent=2))
    return 0


def cmd_realize(args):
    vectors = _parse_vectors(args.vectors)
    result = realize.is_realizable_set(vectors, sigma=args.sigma)
    if result.k != args.k:
        raise ParikhGridError("vectors have order %d, not k=%d"
                              % (result.k, args.k))
    _out(args, export.to_json(result))
    return 0 if result.realizable else 1


def cmd_bounds(args):
    _out(args, export.to_json(covering.bounds(args.k, args.sigma)))
    return 0


def cmd_covset(args):
    ks = sorted(covering.covset(args.word, args.sigma))
    _out(args, json.dumps({"schema": export.SCHEMA, "kind": "covset",
                           "sigma": args.sigma, "word": args.word,
                           "covset": ks}, indent=2))
    return 0


def cmd_construct(args):
    word = covering.construct_family(args.family, args.k, args.sigma)
    report = covering.verify(word, args.k, args.sigma)
    doc = {"schema": export.SCHEMA, "kind": "construction",
           "family": args.family.replace("-", "_"), "k": args.k,
           "sigma": args.sigma, "word": word,
           "report": export.report_to_dict(report)}
    _out(args, json.dumps(doc, indent=2))
    return 0


def _progress_printer(nodes, depth, found, length):
    sys.stderr.write(json.dumps({"event": "checkpoint", "nodes": nodes,
                                 "depth": depth, "found": found,
                                 "length": length}) + "\n")
    sys.stderr.flush()


def cmd_search(args):
    target = {"shortest": search.TARGET_SHORTEST, "pdb": search.TARGET_PDB,
              "length": search.TARGET_AT_LENGTH}[args.target]
    cfg = search.SearchConfig(
        k=args.k, sigma=args.sigma, target=target,
        target_length=args.length, max_len=args.max_len,
        worker_count=args.threads, node_budget=args.node_budget,
        split_depth=0 if args.progress else None,
    )
    outcome = search.run_search(
        cfg, progress=_progress_printer if args.progress else None)
    if args.format == "table" and outcome.witness:
        report = covering.verify(outcome.witness, args.k, args.sigma)
        _out(args, export.cover_table([report]))
    else:
        _out(args, export.to_json(outcome))
    return 0 if outcome.status == search.STATUS_FOUND else 1


def cmd_enumerate_pdb(args):
    reps = search.enumerate_all_pdb(args.k, args.sigma, force=args.force)
    _out(args, json.dumps({"schema": export.SCHEMA, "kind": "pdb_classes",
                           "k": args.k, "sigma": args.sigma,
                           "count": len(reps), "representatives": reps},
                          indent=2))
    return 0 if reps else 1


def cmd_mincov(args):
    report = covering.mincov_explore(args.k, args.sigma, args.max_len,
                                     node_budget=args.node_budget)
    _out(args, export.to_json(report))
    return 0


def _add_common(sub, k=True, sigma=True):
    if k:
        sub.add_argument("--k", type=int, required=True,
                         help="window length / vector order")
    if sigma:
        sub.add_argument("--sigma", type=int, required=True,
                         help="alphabet size")
    sub.add_argument("--output", help="write the result to a file")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="parikhgrid",
        description="Parikh vector grids, covering words, and exhaustive "
                    "shortest-covering-word search.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("grid", help="export the order-k grid")
    _add_common(p)
    p.add_argument("--format", choices=("dot", "json"), default="json")
    p.add_argument("--directed", action="store_true",
                   help="include labeled arcs and bows in JSON output")
    p.set_defaults(func=cmd_grid)

    p = subs.add_parser("verify", help="covering / perfect-cover check")
    p.add_argument("word")
    _add_common(p)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("walk", help="the walk a word induces")
    p.add_argument("word")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--sigma", type=int, default=None)
    p.add_argument("--output")
    p.set_defaults(func=cmd_walk)

    p = subs.add_parser("realize",
                        help='decide realizability of "(a,b,..),(c,d,..)"')
    p.add_argument("vectors")
    _add_common(p)
    p.set_defaults(func=cmd_realize)

    p = subs.add_parser("bounds", help="lower bounds and known verdicts")
    _add_common(p)
    p.set_defaults(func=cmd_bounds)

    p = subs.add_parser("covset", help="all k for which the word is covering")
    p.add_argument("word")
    _add_common(p, k=False)
    p.set_defaults(func=cmd_covset)

    p = subs.add_parser("construct", help="emit a known construction")
    p.add_argument("family", choices=("binary-pdb", "binary_pdb",
                                      "k2-eulerian", "k2_eulerian",
                                      "kcover-not-k1", "kcover_not_k1"))
    _add_common(p)
    p.set_defaults(func=cmd_construct)

    p = subs.add_parser("search", help="exhaustive search")
    _add_common(p)
    p.add_argument("--target", choices=("shortest", "pdb", "length"),
                   default="shortest")
    p.add_argument("--length", type=int, default=None,
                   help="target length (with --target length)")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--threads", type=int,
                   default=int(os.environ.get("PARIKHGRID_THREADS", "1")))
    p.add_argument("--node-budget", type=int,
                   default=search.DEFAULT_NODE_BUDGET)
    p.add_argument("--progress", action="store_true",
                   help="JSON checkpoint lines on stderr (forces single-"
                        "subtree exploration)")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_search)

    p = subs.add_parser("enumerate-pdb",
                        help="all perfect covers modulo relabeling/reversal")
    _add_common(p)
    p.add_argument("--force", action="store_true",
                   help="override the instance-size gate")
    p.set_defaults(func=cmd_enumerate_pdb)

    p = subs.add_parser("mincov",
                        help="minimum (k-1)-coverage among covering words")
    _add_common(p)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--node-budget", type=int,
                   default=search.DEFAULT_NODE_BUDGET)
    p.set_defaults(func=cmd_mincov)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WalkUnrealizable as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1
    except ParikhGridError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
