"""Batch command-line front end.

Exit codes: 0 success, 1 ledger failure, 2 usage error, 3 input parse
error, 4 budget exhaustion where the verb requires exactness.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chordalize import (ChainValidationError, ChordalizationPartition,
                         NCViolationError, NotAHoleCoverError, run_chain)
from .generators import GeneratedGraph, generate
from .graph import GraphError, ParseError, parse_edge_list, serialize
from .holes import (enumerate_holes, hole_components, min_hole_cover,
                    vertex_satisfies_nc)
from .index import ReportOptions, bound_report, exact_index
from .oracles import (Correspondence, ListAssignment, NotChordalError,
                      OracleLimitError, check_efl_instance,
                      chordal_clique_and_coloring, chromatic_number,
                      clique_number,
                      contains_join_subgraph, degeneracy_and_cover_numbers,
                      dp_chromatic_tiny, dp_colorable, has_clique_minor,
                      is_chordal_with_peo, list_colorable)

EXIT_OK = 0
EXIT_LEDGER = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_BUDGET = 4

DEFAULT_BUDGET = 200_000


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", metavar="PATH", help="graph file, or - for stdin")
    p.add_argument("--format", choices=("edgelist", "json"), default="edgelist")
    p.add_argument("--fixture", metavar="NAME",
                   help="named fixture (paper_fig1, paper_fig5)")
    p.add_argument("--gen", metavar="SPEC", help="generator spec, e.g. cycle:4")
    p.add_argument("--seed", type=int, default=None,
                   help="seed appended to a 'random:n:p' generator spec")


def _resolve_graph(args) -> GeneratedGraph:
    sources = [s for s in (args.input, args.fixture, args.gen) if s]
    if len(sources) != 1:
        raise SystemExit2("exactly one of --input, --fixture, --gen is required")
    if args.fixture:
        return generate(args.fixture)
    if args.gen:
        spec = args.gen
        if spec.startswith("@"):
            spec = open(spec[1:]).read()
        if args.seed is not None and spec.startswith("random:") and spec.count(":") == 2:
            spec = f"{spec}:{args.seed}"
        return generate(spec)
    text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    return GeneratedGraph(parse_edge_list(text, fmt=args.format))


class SystemExit2(Exception):
    pass


def _resolve_vertices(tokens, named) -> list[int]:
    out = []
    for t in tokens:
        if isinstance(t, int):
            out.append(t)
        elif isinstance(t, str) and t in named:
            out.append(named[t])
        else:
            try:
                out.append(int(t))
            except (TypeError, ValueError):
                raise SystemExit2(f"unknown vertex name {t!r}") from None
    return out


def _emit(obj: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(obj, indent=1))
    else:
        for k, v in obj.items():
            print(f"{k}: {v}")


def _cmd_gen(args) -> int:
    gg = _resolve_graph(args)
    print(serialize(gg.graph, fmt=args.out_format))
    return EXIT_OK


def _cmd_analyze(args) -> int:
    gg = _resolve_graph(args)
    g = gg.graph
    hs = enumerate_holes(g, max_hole_count=args.max_holes)
    if not hs.complete:
        print("hole enumeration truncated; raise --max-holes", file=sys.stderr)
        return EXIT_BUDGET
    comps = hole_components(hs)
    nc_vertices = [v for v in range(g.order) if vertex_satisfies_nc(hs, v).ok]
    mc = min_hole_cover(hs, args.budget)
    idx = exact_index(g, budget=args.budget)
    out = {
        "n": g.order,
        "m": g.edge_count,
        "holes": [list(h) for h in hs.holes],
        "omega_region": list(comps.omega_region),
        "classes": [list(c) for c in comps.classes],
        "nc_vertices": nc_vertices,
        "min_hole_cover": sorted(mc.cover),
        "min_hole_cover_optimal": mc.optimal,
        "nc_cover": (idx.witness.to_json_list()[0]
                     if idx.value == 1 and idx.witness else None),
        "index": idx.to_json_dict(),
    }
    _emit(out, args.json)
    return EXIT_BUDGET if (idx.budget_exhausted or not mc.optimal) else EXIT_OK


def _cmd_chordalize(args) -> int:
    gg = _resolve_graph(args)
    g, named = gg.graph, dict(gg.named)
    if args.partition:
        raw = json.loads(args.partition)
        parts = [_resolve_vertices(p, named) for p in raw]
        partition = ChordalizationPartition.of(*parts)
    elif args.cover:
        cover = _resolve_vertices(json.loads(args.cover), named)
        partition = ChordalizationPartition.of(cover)
    else:
        idx = exact_index(g, budget=args.budget)
        if idx.value == 0:
            _emit({"chordal": True, "final": serialize(g)}, args.json)
            return EXIT_OK
        if idx.budget_exhausted:
            print("budget exhausted during the partition search", file=sys.stderr)
            return EXIT_BUDGET
        partition = idx.witness
    trace = run_chain(g, partition)
    _emit(trace.to_json_dict(), args.json)
    return EXIT_OK


def _cmd_index(args) -> int:
    gg = _resolve_graph(args)
    idx = exact_index(gg.graph, budget=args.budget)
    _emit(idx.to_json_dict(), args.json)
    return EXIT_BUDGET if idx.budget_exhausted else EXIT_OK


def _cmd_verify(args) -> int:
    gg = _resolve_graph(args)
    opt = ReportOptions(
        budget=args.budget,
        chi_limit=args.chi_limit,
        want_beta=args.beta,
        join_mn=tuple(args.join) if args.join else None,
        dp_tiny=args.dp_tiny,
    )
    report = bound_report(gg.graph, opt)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=1))
    else:
        d = report.to_json_dict()
        for key in ("n", "m", "omega", "omega_star", "chromatic", "degeneracy",
                    "alpha", "beta", "dp_tiny", "omega_region_clique"):
            if d[key] is not None:
                print(f"{key}: {d[key]}")
        print(f"index: {report.index.value} (exact={report.index.exact})")
        for row in report.ledger:
            print(f"[{row.status.upper():5}] {row.name}: "
                  f"{row.lhs} {row.rel} {row.rhs}  {row.note}")
    if not report.all_pass():
        return EXIT_LEDGER
    if report.index.budget_exhausted:
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_oracle(args) -> int:
    gg = _resolve_graph(args)
    g, out = gg.graph, {}
    op = args.operation
    if op == "chordal":
        peo = is_chordal_with_peo(g)
        out = {"chordal": peo.perfect, "peo": list(peo.order),
               "hole": list(peo.hole) if peo.hole else None}
    elif op == "omega":
        out = {"omega": clique_number(g)}
    elif op == "chordal-coloring":
        omega, coloring = chordal_clique_and_coloring(g)
        out = {"omega": omega, "coloring": coloring}
    elif op == "chromatic":
        out = {"chi": chromatic_number(g, cap=args.cap, limit=args.chi_limit)}
    elif op == "degeneracy":
        d, alpha, beta = degeneracy_and_cover_numbers(g, want_beta=True)
        out = {"degeneracy": d, "alpha": alpha, "beta": beta}
    elif op == "list-colorable":
        if not args.lists:
            raise SystemExit2("--lists JSON is required")
        la = ListAssignment.from_json_dict(g, json.loads(args.lists))
        ok, coloring = list_colorable(g, la)
        out = {"colorable": ok, "coloring": coloring}
    elif op == "dp-colorable":
        if not args.cover_json:
            raise SystemExit2("--cover-json JSON is required")
        cov = Correspondence.from_json_dict(g, json.loads(args.cover_json))
        ok, choice = dp_colorable(g, cov)
        out = {"colorable": ok, "choice": choice}
    elif op == "dp-tiny":
        out = {"dp_chromatic": dp_chromatic_tiny(g, k_max=args.k_max)}
    elif op == "join-subgraph":
        if args.m is None or args.n is None:
            raise SystemExit2("--m and --n are required")
        found, witness = contains_join_subgraph(g, args.m, args.n)
        out = {"found": found,
               "witness": [list(w) for w in witness] if witness else None}
    elif op == "clique-minor":
        if args.t is None:
            raise SystemExit2("--t is required")
        res = has_clique_minor(g, args.t, budget=args.budget)
        status = {True: "pass", False: "fail", None: "indeterminate"}[res.found]
        out = {"status": status,
               "branch_sets": ([list(b) for b in res.branch_sets]
                               if res.branch_sets else None)}
        _emit(out, args.json)
        return EXIT_BUDGET if res.found is None else EXIT_OK
    elif op == "efl":
        if not args.cliques:
            raise SystemExit2("--cliques JSON is required")
        cliques = json.loads(args.cliques)
        cert = check_efl_instance(g, cliques)
        _emit(cert.to_json_dict(), args.json)
        return EXIT_OK if cert.status == "pass" else EXIT_LEDGER
    else:
        raise SystemExit2(f"unknown oracle operation {op!r}")
    _emit(out, args.json)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="holechord",
        description="hole covers, local chordalization and the bound ledger")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("gen", help="emit a generated graph")
    _add_input_flags(p)
    p.add_argument("--out-format", choices=("edgelist", "json", "dot"),
                   default="edgelist")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("analyze", help="holes, region, classes, NC vertices")
    _add_input_flags(p)
    p.add_argument("--max-holes", type=int, default=10**6)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("chordalize", help="run a chordalization chain")
    _add_input_flags(p)
    p.add_argument("--partition", metavar="JSON",
                   help='ordered parts, e.g. \'[["u","v","w"],["x"]]\'')
    p.add_argument("--cover", metavar="JSON", help="one-stage cover")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_chordalize)

    p = sub.add_parser("index", help="non-chordality index")
    _add_input_flags(p)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_index)

    p = sub.add_parser("verify", help="bound ledger; exit 1 on any failed row")
    _add_input_flags(p)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--chi-limit", type=int, default=12)
    p.add_argument("--beta", action="store_true", help="compute alpha/beta")
    p.add_argument("--join", nargs=2, type=int, metavar=("M", "N"),
                   help="check the join-subgraph completion route")
    p.add_argument("--dp-tiny", action="store_true",
                   help="exact correspondence number on tiny graphs")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="direct access to one oracle")
    p.add_argument("operation",
                   choices=("chordal", "chordal-coloring", "omega",
                            "chromatic", "degeneracy", "list-colorable",
                            "dp-colorable", "dp-tiny", "join-subgraph",
                            "clique-minor", "efl"))
    _add_input_flags(p)
    p.add_argument("--lists", metavar="JSON")
    p.add_argument("--cover-json", metavar="JSON")
    p.add_argument("--cliques", metavar="JSON")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--k-max", type=int, default=3)
    p.add_argument("--chi-limit", type=int, default=12)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_oracle)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except json.JSONDecodeError as exc:
        print(f"parse error [json]: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NotAHoleCoverError, NCViolationError, ChainValidationError) as exc:
        print(f"invalid cover/partition: {exc}", file=sys.stderr)
        return EXIT_LEDGER
    except NotChordalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LEDGER
    except OracleLimitError as exc:
        print(f"limit: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
