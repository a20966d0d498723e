"""Command-line front end: ``wmp <subcommand> ...``.

Graph arguments are expressions (``"C5"``, ``"K2+E1"``, ``"3*K2"``) or
``@path`` to read the first graph6 line of a file. Exit status is 0 on
success, 1 for a negative verdict when ``--fail-on-imperfect`` or
``--fail-on-noniso`` is given, and 2 for usage, parse and size errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import patterns
from .classifier import classify, explain
from .errors import GraphError
from .expr import parse_expr
from .graph import MAX_VERTICES, Graph, complement
from .graph6 import encode_graph6, parse_graph6
from .kozen import iso_via_product
from .perfection import is_perfect_oracle
from .products import tensor_product, weak_modular_product
from .sweep import run_sweep

ORACLE_DEFAULT_CAP = 42


class UsageError(Exception):
    pass


def load_graph(arg: str) -> Graph:
    if arg.startswith("@"):
        path = Path(arg[1:])
        try:
            lines = [ln.strip() for ln in path.read_text().splitlines() if ln.strip()]
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
        if not lines:
            raise UsageError(f"{path} contains no graph6 line")
        return parse_graph6(lines[0])
    return parse_expr(arg)


def format_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return encode_graph6(g)
    if fmt == "edges":
        return "\n".join([f"n {g.n}"] + [f"{i} {j}" for i, j in g.edges()])
    rows = ("".join("1" if g.has_edge(i, j) else "0" for j in range(g.n)) for i in range(g.n))
    return "\n".join(rows)


def _emit(args: argparse.Namespace, record: dict, text: str) -> None:
    print(json.dumps(record) if args.json else text)


def _product_size(g: Graph, h: Graph, cap: int = MAX_VERTICES) -> None:
    if g.n * h.n > cap:
        raise UsageError(f"product would have {g.n * h.n} vertices; the cap is {cap}")


def cmd_product(args: argparse.Namespace) -> int:
    g, h = load_graph(args.left), load_graph(args.right)
    _product_size(g, h)
    build = weak_modular_product if args.command == "product" else tensor_product
    prod = build(g, h).graph
    record = {"left": args.left, "right": args.right, "n": prod.n,
              "edges": prod.edge_count, "graph6": encode_graph6(prod)}
    _emit(args, record, format_graph(prod, args.format))
    return 0


def cmd_complement(args: argparse.Namespace) -> int:
    g = complement(load_graph(args.graph))
    record = {"graph": args.graph, "n": g.n, "edges": g.edge_count, "graph6": encode_graph6(g)}
    _emit(args, record, format_graph(g, args.format))
    return 0


def _witness_record(w) -> dict | None:
    return None if w is None else {"kind": w.kind.value, "cycle": list(w.cycle)}


def cmd_classify(args: argparse.Namespace) -> int:
    g, h = load_graph(args.left), load_graph(args.right)
    c = classify(g, h)
    record = {"left": args.left, "right": args.right, "verdict": c.verdict,
              "case": c.case_id, "orientation": c.orientation}
    text = c.verdict + ("\n" + explain(c) if args.explain else "")
    _emit(args, record, text)
    return 1 if args.fail_on_imperfect and not c.perfect else 0


def cmd_oracle(args: argparse.Namespace) -> int:
    g = load_graph(args.left)
    if args.right is not None:
        h = load_graph(args.right)
        _product_size(g, h, min(args.max_vertices, MAX_VERTICES))
        target = weak_modular_product(g, h).graph
    else:
        if g.n > args.max_vertices:
            raise UsageError(f"graph has {g.n} vertices; the oracle cap is {args.max_vertices}")
        target = g
    v = is_perfect_oracle(target)
    verdict = "PERFECT" if v.perfect else "IMPERFECT"
    record = {"left": args.left, "right": args.right, "verdict": verdict,
              "case": None, "orientation": None, "witness": _witness_record(v.witness)}
    text = verdict
    if v.witness is not None:
        text += f"\nodd {v.witness.kind.value}: {' '.join(map(str, v.witness.cycle))}"
    _emit(args, record, text)
    return 1 if args.fail_on_imperfect and not v.perfect else 0


def cmd_iso(args: argparse.Namespace) -> int:
    g, h = load_graph(args.left), load_graph(args.right)
    w = iso_via_product(g, h)
    record = {"left": args.left, "right": args.right, "isomorphic": w is not None,
              "mapping": None if w is None else list(w.mapping)}
    if w is None:
        text = "NOT ISOMORPHIC"
    else:
        text = "ISOMORPHIC\n" + "\n".join(f"{x} -> {y}" for x, y in enumerate(w.mapping))
    _emit(args, record, text)
    return 1 if args.fail_on_noniso and w is None else 0


def cmd_sweep(args: argparse.Namespace) -> int:
    if not 1 <= args.max_n <= 6:
        raise UsageError("--max-n must be between 1 and 6")
    report = run_sweep(args.max_n, jobs=args.jobs)
    if args.json:
        print(json.dumps({
            "max_n": report.max_n, "classes": report.classes, "pairs": report.pairs,
            "mismatches": [list(m) for m in report.mismatches],
            "counts": [{"case": case, "perfect": perfect, "count": n}
                       for (case, perfect), n in sorted(report.counts.items(),
                                                        key=lambda kv: (kv[0][0] or 99, kv[0][1]))],
        }))
    else:
        print(f"{report.classes} classes, {report.pairs} ordered pairs, "
              f"{len(report.mismatches)} mismatches")
        print(report.table())
        for left, right, said, truth in report.mismatches:
            print(f"MISMATCH {left} {right} classifier={said} oracle={truth}")
    return 0 if report.ok else 1


def cmd_catalog(args: argparse.Namespace) -> int:
    for name, p in patterns.CATALOG.items():
        record = {"name": name, "n": p.graph.n, "edges": p.graph.edge_count,
                  "graph6": encode_graph6(p.graph)}
        _emit(args, record, f"{name:<12} n={p.graph.n} m={p.graph.edge_count} {record['graph6']}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wmp", description="Build, classify and test weak modular products of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_json(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--json", action="store_true", help="one JSON record per result")
        return p

    for name, helptext in (("product", "weak modular product"), ("tensor", "tensor product")):
        p = with_json(sub.add_parser(name, help=helptext))
        p.add_argument("left")
        p.add_argument("right")
        p.add_argument("--format", choices=("graph6", "edges", "adjacency"), default="graph6")
        p.set_defaults(func=cmd_product)

    p = with_json(sub.add_parser("complement", help="complement of a graph"))
    p.add_argument("graph")
    p.add_argument("--format", choices=("graph6", "edges", "adjacency"), default="graph6")
    p.set_defaults(func=cmd_complement)

    p = with_json(sub.add_parser("classify", help="structural perfection verdict for wmp(G, H)"))
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--explain", action="store_true", help="describe the matched case")
    p.add_argument("--fail-on-imperfect", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = with_json(sub.add_parser("oracle", help="odd hole/antihole search on G or wmp(G, H)"))
    p.add_argument("left")
    p.add_argument("right", nargs="?")
    p.add_argument("--max-vertices", type=int, default=ORACLE_DEFAULT_CAP)
    p.add_argument("--fail-on-imperfect", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = with_json(sub.add_parser("iso", help="isomorphism via a maximum clique of wmp(G, H)"))
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--fail-on-noniso", action="store_true")
    p.set_defaults(func=cmd_iso)

    p = with_json(sub.add_parser("sweep", help="classifier vs oracle on all small factor pairs"))
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: all CPUs)")
    p.set_defaults(func=cmd_sweep)

    p = with_json(sub.add_parser("catalog", help="list the named pattern graphs"))
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, UsageError) as exc:
        print(f"wmp {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
