"""Command-line interface: generators, cycle reports, separators, verification.

Exit codes: 0 all checks pass, 1 a theorem-backed check failed (witness in
the output), 2 budget exhaustion left something inconclusive, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .auxgraph import build_aux, l_set, supersaturation_report, type_census
from .corpus import random_graph
from .cycles import (
    BudgetExceededError,
    CycleEmbedding,
    DEFAULT_BUDGET,
    enumerate_longest_cycles,
    longest_cycle_length,
    min_pairwise_intersection,
)
from .exchange import improve_by_exchange
from .flow import max_disjoint_paths, xy_separator
from .graphs import Graph, graph_from_graph6, graph_to_graph6
from .harness import CorpusSpec, reports_to_json, run_corpus
from .transitive import GroupPresentation, cayley, circulant

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse default exits 2; usage errors are 3 here
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _read_graph(path: str) -> Graph:
    with open(path, "r", encoding="ascii") as handle:
        text = handle.read().strip()
    return graph_from_graph6(text.splitlines()[0])


def _parse_cycle(g: Graph, text: str) -> CycleEmbedding:
    seq = [int(tok) for tok in text.replace(",", " ").split()]
    return CycleEmbedding.from_sequence(g, seq)


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def cmd_gen(args) -> int:
    if args.generator == "circulant":
        conn = {int(tok) for tok in args.conn.split(",") if tok.strip()}
        g = circulant(args.n, conn)
    elif args.generator == "cayley":
        with open(args.file, "r", encoding="utf-8") as handle:
            gp = GroupPresentation.parse(handle.read())
        g = cayley(gp)
    elif args.generator == "random":
        g = random_graph(args.n, args.p, args.seed)
    else:
        raise _UsageError(f"unknown generator {args.generator!r}")
    print(graph_to_graph6(g))
    return EXIT_PASS


def cmd_cycles(args) -> int:
    g = _read_graph(args.infile)
    try:
        if args.enumerate:
            cs = enumerate_longest_cycles(g, limit=args.limit, budget=args.budget)
            _emit(cs.to_json_dict())
            return EXIT_INCONCLUSIVE if cs.truncated else EXIT_PASS
        c = longest_cycle_length(g, budget=args.budget)
        _emit({"length": c})
        return EXIT_PASS
    except BudgetExceededError as err:
        _emit({"error": str(err), "best_length_lower_bound": err.best_length})
        return EXIT_INCONCLUSIVE


def cmd_intersect(args) -> int:
    g = _read_graph(args.infile)
    try:
        cs = enumerate_longest_cycles(g, limit=args.limit, budget=args.budget)
    except BudgetExceededError as err:
        _emit({"error": str(err)})
        return EXIT_INCONCLUSIVE
    if len(cs) < 2:
        _emit({"length": cs.length, "count": len(cs), "m_min": None,
               "note": "single longest cycle"})
        return EXIT_PASS
    m_min, (x, y) = min_pairwise_intersection(cs)
    _emit({
        "length": cs.length,
        "count": len(cs),
        "truncated": cs.truncated,
        "m_min": m_min,
        "witness_x": list(x.vertices),
        "witness_y": list(y.vertices),
    })
    return EXIT_INCONCLUSIVE if cs.truncated else EXIT_PASS


def cmd_separator(args) -> int:
    g = _read_graph(args.infile)
    x = _parse_cycle(g, args.x)
    y = _parse_cycle(g, args.y)
    rep = xy_separator(g, x, y)
    _emit(rep.to_json_dict())
    return EXIT_PASS if rep.bound_satisfied else EXIT_FAIL


def cmd_auxgraph(args) -> int:
    g = _read_graph(args.infile)
    x = _parse_cycle(g, args.x)
    y = _parse_cycle(g, args.y)
    shared = x.vertex_set() & y.vertex_set()
    if not shared:
        _emit({"error": "empty intersection"})
        return EXIT_FAIL
    xs, ys = x.vertex_set() - shared, y.vertex_set() - shared
    if not xs or not ys:
        _emit({"m": len(shared), "edges": [], "note": "one cycle inside the other"})
        return EXIT_PASS
    family = max_disjoint_paths(g, xs, ys, allowed=frozenset(range(g.n)) - shared)
    f = build_aux(g, x, y, family)
    census = {f"({a},{b})": count for (a, b), count in sorted(type_census(f).items())}
    _emit({
        "aux": f.to_json_dict(),
        "type_census": census,
        "l_set": sorted(list(p) for p in l_set(f)),
        "supersaturation": supersaturation_report(f).to_json_dict(),
    })
    return EXIT_PASS


def cmd_certify(args) -> int:
    g = _read_graph(args.infile)
    x = _parse_cycle(g, args.x)
    y = _parse_cycle(g, args.y)
    improved = improve_by_exchange(g, x, y)
    if improved is None:
        _emit({"improved": False})
    else:
        _emit({
            "improved": True,
            "q1": list(improved[0].vertices),
            "q2": list(improved[1].vertices),
            "total_before": x.length + y.length,
            "total_after": improved[0].length + improved[1].length,
        })
    return EXIT_PASS


def cmd_verify(args) -> int:
    spec = CorpusSpec.parse(args.corpus, seed=args.seed)
    if args.budget:
        spec = CorpusSpec(kind=spec.kind, params=spec.params, seed=spec.seed,
                          budget=args.budget, pair_limit=spec.pair_limit,
                          enumeration_limit=spec.enumeration_limit)
    reports = run_corpus(spec, suite=args.suite)
    text = reports_to_json(reports, spec, args.suite)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    statuses = [r.worst_status() for r in reports]
    if "fail" in statuses:
        return EXIT_FAIL
    if "inconclusive" in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cyclemeet", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a graph as graph6 on stdout")
    gen_sub = gen.add_subparsers(dest="generator", required=True)
    gc = gen_sub.add_parser("circulant")
    gc.add_argument("--n", type=int, required=True)
    gc.add_argument("--conn", type=str, required=True, help="comma-separated connection set")
    gy = gen_sub.add_parser("cayley")
    gy.add_argument("--file", type=str, required=True, help="group presentation file")
    gr = gen_sub.add_parser("random")
    gr.add_argument("--n", type=int, required=True)
    gr.add_argument("--p", type=float, required=True)
    gr.add_argument("--seed", type=int, default=0)
    gen.set_defaults(func=cmd_gen)

    cyc = sub.add_parser("cycles", help="longest cycle length or full enumeration")
    cyc.add_argument("--in", dest="infile", required=True)
    cyc.add_argument("--enumerate", action="store_true")
    cyc.add_argument("--limit", type=int, default=None)
    cyc.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    cyc.set_defaults(func=cmd_cycles)

    inter = sub.add_parser("intersect", help="minimum pairwise longest-cycle intersection")
    inter.add_argument("--in", dest="infile", required=True)
    inter.add_argument("--limit", type=int, default=None)
    inter.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    inter.set_defaults(func=cmd_intersect)

    sep = sub.add_parser("separator", help="vertex cut separating two cycles")
    sep.add_argument("--in", dest="infile", required=True)
    sep.add_argument("--x", required=True, help="comma-separated cycle vertices")
    sep.add_argument("--y", required=True)
    sep.set_defaults(func=cmd_separator)

    aux = sub.add_parser("auxgraph", help="auxiliary graph, type census, counts")
    aux.add_argument("--in", dest="infile", required=True)
    aux.add_argument("--x", required=True)
    aux.add_argument("--y", required=True)
    aux.set_defaults(func=cmd_auxgraph)

    cert = sub.add_parser("certify", help="attempt an exchange on a cycle pair")
    cert.add_argument("--in", dest="infile", required=True)
    cert.add_argument("--x", required=True)
    cert.add_argument("--y", required=True)
    cert.set_defaults(func=cmd_certify)

    ver = sub.add_parser("verify", help="run a verification suite over a corpus")
    ver.add_argument("--suite", choices=["babai", "smith", "thm14", "devos", "all"],
                     required=True)
    ver.add_argument("--corpus", type=str, default="default")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--budget", type=int, default=0)
    ver.add_argument("--out", type=str, default=None)
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
