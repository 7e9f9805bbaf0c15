"""Command-line entry point.

    bicliquebounds bicliques --g6 Bw
    bicliquebounds gen --family crown --k 5 --format edges | bicliquebounds bicliques --count-only
    bicliquebounds census --n 6 --class twinfree --check properties

Exit codes: 0 success, 1 usage or input error, 2 failed precondition or a
violation found.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .bicliques import bicliques_containing, dumps_bicliques, enumerate_bicliques
from .census import (
    BOUNDS,
    GENERATE_MAX_N,
    PROPERTY_CHECKS,
    CensusFilter,
    conjecture_search,
    default_jobs,
    generate_all_connected,
    ingest_graph6,
    run_checks,
    tree_spectrum,
    tree_spectrum_gaps,
)
from .families import family
from .graph import (
    Graph,
    GraphError,
    is_bipartite,
    is_connected,
    is_diamond_free,
    is_induced_c4_free,
    is_tree,
    is_triangle_free,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
)
from .twins import alone_vertices, false_twin_classes, good_assignment, is_false_twin_free, tw_reduce
from .witness import PreconditionError, build_witness, verify_witness, witness_to_json

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which is reserved for violations here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------- input

def _detect_format(text: str) -> str:
    for line in text.splitlines():
        if line.strip():
            return "edges" if line.lstrip()[0].isdigit() else "g6"
    raise GraphError("empty input")


def parse_graph_text(text: str, fmt: str = "auto") -> Graph:
    fmt = _detect_format(text) if fmt == "auto" else fmt
    if fmt == "edges":
        return parse_edge_list(text)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise GraphError(f"expected one graph6 line, got {len(lines)}")
    return parse_graph6(lines[0].strip())


def read_graph(args) -> Graph:
    if args.g6 is not None:
        return parse_graph6(args.g6)
    if args.input is None:
        raise UsageError("give --input PATH (or - for stdin) or --g6 STRING")
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    return parse_graph_text(text, args.format)


def _add_input(p):
    p.add_argument("--input", "-i", help="graph file (graph6 line or edge list), - for stdin")
    p.add_argument("--g6", help="inline graph6 string")
    p.add_argument("--format", choices=["auto", "g6", "edges"], default="auto",
                   help="input format (auto: a first line starting with a digit is an edge list)")


def _add_output(p, choices=("text", "json")):
    p.add_argument("--output", "-o", choices=choices, default="text")


def _emit(obj, args, text):
    if args.output == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def _write_graph(g: Graph, fmt: str) -> str:
    if fmt == "g6":
        return to_graph6(g)
    return to_edge_list(g).rstrip("\n")


# ---------------------------------------------------------------- subcommands

def cmd_bicliques(args) -> int:
    g = read_graph(args)
    if args.containing is not None:
        bics = bicliques_containing(g, args.containing)
    else:
        bics = enumerate_bicliques(g)
    if args.count_only:
        _emit({"count": len(bics)}, args, str(len(bics)))
    elif args.output == "json":
        print(dumps_bicliques(bics))
    else:
        for b in sorted(bics):
            print(" ".join(map(str, b.a)), "|", " ".join(map(str, b.b)))
        print(f"# {len(bics)} bicliques")
    return EXIT_OK


def cmd_twins(args) -> int:
    g = read_graph(args)
    if args.reduce:
        h, mapping = tw_reduce(g)
        if args.output == "json":
            print(json.dumps({"graph": to_edge_list(h), "g6": to_graph6(h) if h.n <= 62 else None,
                              "map": {str(k): v for k, v in sorted(mapping.items())}}, indent=2))
        else:
            print(_write_graph(h, "g6" if h.n <= 62 else "edges"))
        return EXIT_OK
    part = false_twin_classes(g)
    classes = part.as_lists()
    _emit({"classes": classes, "representatives": list(part.representatives)}, args,
          "\n".join(" ".join(map(str, c)) for c in classes))
    return EXIT_OK


def classify(g: Graph) -> dict:
    asg = good_assignment(g)
    return {
        "n": g.n,
        "m": g.m,
        "connected": is_connected(g),
        "twinFree": is_false_twin_free(g),
        "k3Free": is_triangle_free(g),
        "c4Free": is_induced_c4_free(g),
        "diamondFree": is_diamond_free(g),
        "bipartite": is_bipartite(g),
        "tree": is_tree(g),
        "goodAssignment": "feasible" if asg.feasible else str(asg),
        "aloneVertices": [v for v in range(g.n) if alone_vertices(g) >> v & 1],
    }


def cmd_classify(args) -> int:
    info = classify(read_graph(args))
    _emit(info, args, "\n".join(f"{k}: {v}" for k, v in info.items()))
    return EXIT_OK


def cmd_witness(args) -> int:
    g = read_graph(args)
    try:
        w, labels = build_witness(g)
    except PreconditionError as exc:
        print(f"precondition violated: {exc.violation}", file=sys.stderr)
        return EXIT_VIOLATION
    payload = {"witness": witness_to_json(w), "labels": labels.to_json()}
    code = EXIT_OK
    if args.verify:
        ok = verify_witness(g, w)
        payload["verified"] = ok
        code = EXIT_OK if ok else EXIT_VIOLATION
    if args.output == "json":
        print(json.dumps(payload, indent=2))
    else:
        for v, b in sorted(w.items()):
            print(f"{v}: {' '.join(map(str, b.a))} | {' '.join(map(str, b.b))}")
        if args.verify:
            print("verify:", "OK" if payload["verified"] else "FAILED")
    return code


def cmd_gen(args) -> int:
    g = family(args.family, args.k, args.b)
    if args.format == "g6" and g.n > 62:
        raise UsageError(f"graph6 short form holds n <= 62, this graph has n={g.n}; use --format edges")
    print(_write_graph(g, args.format))
    return EXIT_OK


def _census_source(args):
    if args.input is not None:
        errors = []
        src = ingest_graph6(args.input, errors=errors)
        if args.n is not None:
            src = (g for g in src if g.n == args.n)
        return src, errors
    if args.n is None:
        raise UsageError("census needs --n or --input")
    if args.n > GENERATE_MAX_N:
        raise UsageError(f"internal generation stops at n={GENERATE_MAX_N}; pass a graph6 file with --input")
    return generate_all_connected(args.n), []


def _sampled(source, args):
    if args.sample is None:
        return source
    graphs = list(source)
    rng = random.Random(args.seed)
    return rng.sample(graphs, min(args.sample, len(graphs)))


def cmd_census(args) -> int:
    jobs = args.jobs if args.jobs is not None else default_jobs()
    if args.check == "tree-spectrum":
        if args.n is None:
            raise UsageError("tree-spectrum needs --n")
        spec = sorted(tree_spectrum(args.n))
        gaps = tree_spectrum_gaps(args.n)
        ok = not gaps and spec[0] >= (args.n + 1) // 2
        payload = {"n": args.n, "spectrum": spec, "gaps": gaps, "min_bicliques": spec[0], "ok": ok}
        _write_report(payload, args, f"n={args.n}: counts {spec}, gaps {gaps or 'none'}")
        return EXIT_OK if ok else EXIT_VIOLATION

    source, errors = _census_source(args)
    source = _sampled(source, args)
    if args.check in ("conjecture1", "conjecture2"):
        report = conjecture_search(source, int(args.check[-1]), jobs)
    else:
        filt = CensusFilter.parse(args.cls)
        if args.check == "bound":
            names = [f"bound:{args.bound}"]
        elif args.check == "properties":
            names = [c.name for c in PROPERTY_CHECKS]
        elif args.check == "witness":
            names = ["witness"]
        else:
            names = ["pendant-accounting"]
        report = run_checks(source, filt, names, jobs)
    for e in errors:
        print(f"line {e.line}: {e.message}", file=sys.stderr)
    if args.output == "csv":
        text = report.to_csv().rstrip("\n")
    else:
        text = report.to_text()
    _write_report(report.to_json(), args, text)
    if errors:
        return EXIT_INPUT
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _write_report(payload, args, text):
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2)
    if args.output == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="bicliquebounds", description="Maximal biclique counts and lower-bound checks.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bicliques", help="list or count maximal bicliques")
    _add_input(p)
    _add_output(p)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--containing", type=int, metavar="V", help="only bicliques containing vertex V")
    p.set_defaults(func=cmd_bicliques)

    p = sub.add_parser("twins", help="false-twin classes or the twin-free reduction")
    _add_input(p)
    _add_output(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--reduce", action="store_true", help="emit Tw(G)")
    mode.add_argument("--classes", action="store_true", help="list the false-twin classes (default)")
    p.set_defaults(func=cmd_twins)

    p = sub.add_parser("classify", help="class predicates as JSON")
    _add_input(p)
    p.set_defaults(func=cmd_classify, output="json")

    p = sub.add_parser("witness", help="vertex -> biclique witness map")
    _add_input(p)
    _add_output(p)
    p.add_argument("--verify", action="store_true", help="re-check the map against the enumeration")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("gen", help="emit a family member")
    p.add_argument("--family", required=True,
                   choices=["crown", "powerset", "complete", "path", "cycle", "bipartite", "figure1", "figure2"])
    p.add_argument("--k", type=int)
    p.add_argument("--b", type=int, help="second side for bipartite (default: k)")
    p.add_argument("--format", choices=["g6", "edges"], default="g6")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("census", help="exhaustive checks over all connected graphs")
    p.add_argument("--n", type=int)
    p.add_argument("--input", "-i", help="graph6 file (.gz ok), - for stdin")
    p.add_argument("--class", dest="cls", default="twinfree",
                   help="dash-joined filter, e.g. k3free-twinfree (tokens: %s, mindegN)"
                   % ", ".join(CensusFilter.TOKENS))
    p.add_argument("--check", default="bound",
                   choices=["bound", "properties", "conjecture1", "conjecture2", "tree-spectrum",
                            "witness", "accounting"])
    p.add_argument("--bound", default="half", choices=sorted(BOUNDS))
    p.add_argument("--jobs", "-j", type=int, help="worker processes (default: $BICLIQUE_JOBS or 1)")
    p.add_argument("--sample", type=int, help="check a random sample of this many graphs")
    p.add_argument("--seed", type=int, default=0, help="seed for --sample")
    p.add_argument("--out", help="also write the JSON report here")
    _add_output(p, ("text", "json", "csv"))
    p.set_defaults(func=cmd_census)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
