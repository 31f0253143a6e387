"""Command-line entry point: ``ribbon {compute,dual,classify,quasitrees,check}``."""

from __future__ import annotations

import argparse
import os
import sys

from .activities import branch_to_quasi_tree, resolution_branches, spanning_quasi_trees
from .checks import CHECKS, run_corpus
from .colouring import dual_coloured
from .evaluators import (
    bollobas_riordan,
    krushkal,
    p_normalized,
    t_cps,
    t_cs,
    t_ps,
    t_s,
    universal_U_state_sum,
)
from .fileformat import RibbonFormatError, describe_boundary, parse, serialize
from .generate import random_corpus
from .invariants import edge_type
from .ribbon import RibbonError

POLYS = ("tps", "ts", "tcps", "tcs", "U", "P", "br", "krushkal")


class UsageError(Exception):
    pass


def _load(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text)


def _fmt_set(edges) -> str:
    return "{" + ",".join(str(e) for e in sorted(edges)) + "}"


def cmd_compute(args) -> int:
    cg = _load(args.file)
    for line in describe_boundary(cg.graph):
        print(line, file=sys.stderr)
    kind = args.poly
    if kind == "krushkal":
        if args.ambient_genus is None:
            raise UsageError("--poly krushkal needs --ambient-genus")
        result = krushkal(cg, args.ambient_genus)
    elif kind == "br":
        result = bollobas_riordan(cg.graph, cg.vclasses)
    else:
        fn = {"tps": t_ps, "ts": t_s, "tcps": t_cps, "tcs": t_cs, "U": universal_U_state_sum, "P": p_normalized}[kind]
        result = fn(cg)
    print(result)
    return 0


def cmd_dual(args) -> int:
    sys.stdout.write(serialize(dual_coloured(_load(args.file))))
    return 0


def cmd_classify(args) -> int:
    cg = _load(args.file)
    for e in cg.edges:
        print(f"e{e}: {edge_type(cg, e)}")
    return 0


def _parse_order(text):
    if text is None:
        return None
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError("--order must be a comma-separated list of edge ids") from None


def cmd_quasitrees(args) -> int:
    cg = _load(args.file)
    order = _parse_order(args.order)
    trees = spanning_quasi_trees(cg)
    print("quasi-trees: " + " ".join(_fmt_set(q) for q in trees))
    for k, br in enumerate(resolution_branches(cg, order), 1):
        steps = " ".join(str(s) for s in br.steps)
        print(f"branch {k}: Q={_fmt_set(branch_to_quasi_tree(br))} [{steps}] weight {br.weight()}")
    return 0


def cmd_check(args) -> int:
    seed = args.seed if args.seed is not None else int(os.environ.get("RIBBON_CHECK_SEED", "0"))
    corpus = random_corpus(seed, args.count, args.max_vertices, args.max_edges)
    failures = run_corpus(corpus, seed, args.only, args.workers)
    for index, msg in failures[:20]:
        print(f"case {index}: {msg}")
        print("  " + serialize(corpus[index]).replace("\n", "\n  ").rstrip())
    print(f"checked {len(corpus)} graphs (seed {seed}): {len(failures)} failures")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ribbon", description="Tutte polynomials of coloured ribbon graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="print a polynomial of the graph")
    c.add_argument("--poly", choices=POLYS, required=True)
    c.add_argument("--ambient-genus", type=int, help="Euler genus of the closed surface (krushkal only)")
    c.add_argument("file", help="ribbon file, or - for stdin")
    c.set_defaults(func=cmd_compute)

    d = sub.add_parser("dual", help="print the coloured dual")
    d.add_argument("file")
    d.set_defaults(func=cmd_dual)

    k = sub.add_parser("classify", help="print the (contract, delete) type of each edge")
    k.add_argument("file")
    k.set_defaults(func=cmd_classify)

    q = sub.add_parser("quasitrees", help="list quasi-trees and resolution branches")
    q.add_argument("--order", help="edge order, lowest first, e.g. 2,1,3")
    q.add_argument("file")
    q.set_defaults(func=cmd_quasitrees)

    s = sub.add_parser("check", help="run the invariant suite on random graphs")
    s.add_argument("--seed", type=int, help="defaults to $RIBBON_CHECK_SEED or 0")
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--max-edges", type=int, default=6)
    s.add_argument("--max-vertices", type=int, default=3)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--only", action="append", choices=sorted(CHECKS), help="restrict to one check (repeatable)")
    s.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (RibbonFormatError, RibbonError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
