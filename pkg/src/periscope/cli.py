"""Command-line front end: ``periscope compute|generate|search|experiment|verify``.

Exit codes: 0 success, 1 input error, 2 a verification suite failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import constructions as cons
from . import experiments as exp
from . import indices as ix
from .graph import Graph, GraphError, from_json, parse_graph6, to_graph6, to_json
from .search import SearchError, maximize_index
from .verify import SUITES, run_suite

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


class InputError(Exception):
    pass


def _threads(value: Optional[int]) -> int:
    if value is None:
        value = int(os.environ.get("PERISCOPE_THREADS", "1"))
    if value < 1:
        raise InputError("--threads must be >= 1")
    return value


def _read_graphs(args) -> list[Graph]:
    if (args.g6 is None) == (args.input is None):
        raise InputError("give exactly one of --g6 or --input")
    if args.g6 is not None:
        return [parse_graph6(args.g6)]
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc}") from exc
    if text.lstrip().startswith("{"):
        return [from_json(text)]
    graphs = [parse_graph6(line) for line in text.splitlines() if line.strip()]
    if not graphs:
        raise InputError("no graphs in input")
    return graphs


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_compute(args) -> int:
    wanted = args.indices.split(",") if args.indices else list(ix.INDEX_NAMES)
    unknown = set(wanted) - set(ix.INDEX_NAMES)
    if unknown:
        raise InputError(f"unknown indices: {sorted(unknown)}")
    reports = []
    for g in _read_graphs(args):
        d = ix.index_report(g, breakdown=args.breakdown).to_dict(wanted)
        d["g6"] = to_graph6(g)
        reports.append(d)
    if args.format == "table":
        cols = ["g6", "n", *wanted]
        lines = ["\t".join(cols)] + ["\t".join(str(r[c]) for c in cols) for r in reports]
        _emit("\n".join(lines), args.out)
    else:
        payload = reports[0] if len(reports) == 1 else reports
        _emit(json.dumps(payload, sort_keys=True), args.out)
    return EXIT_OK


def cmd_generate(args) -> int:
    params: list = [int(p) for p in args.params] if args.family != "table1_witness" else [
        int(args.params[0]),
        args.params[1],
    ]
    g = cons.build(cons.ConstructionSpec(args.family, tuple(params)))
    _emit(to_json(g) if args.format == "json" else to_graph6(g), args.out)
    return EXIT_OK


def cmd_search(args) -> int:
    res = maximize_index(args.n, args.cls, args.index, workers=_threads(args.threads))
    _emit(res.to_json(), args.out)
    return EXIT_OK


def cmd_experiment(args) -> int:
    if args.kind == "sweep":
        if not args.family or not args.params:
            raise InputError("sweep needs --family and --params")
        params = [int(p) for p in args.params.split(",")]
        rep = exp.ratio_sweep(args.family, params)
        if args.format == "json":
            _emit(json.dumps([r.__dict__ for r in rep.rows], sort_keys=True), args.out)
        else:
            _emit(rep.to_csv(), args.out)
    elif args.kind == "irr":
        rep = exp.monte_carlo_irr(args.n, args.p, args.trials, args.seed)
        _emit(rep.to_json(), args.out)
    else:
        rows = exp.verify_ultra_closure(
            [
                ("RD x K3", cons.rhombic_dodecahedron(), cons.complete(3)),
                ("RD x C5", cons.rhombic_dodecahedron(), cons.cycle(5)),
                ("RD x K5", cons.rhombic_dodecahedron(), cons.complete(5)),
            ]
        )
        _emit(json.dumps([r.__dict__ for r in rows], sort_keys=True), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = sorted(SUITES) if args.all else (args.suite or [])
    if not names:
        raise InputError("give --suite NAME (repeatable) or --all")
    workers = _threads(args.threads)
    ok = True
    blocks = []
    for name in names:
        if name not in SUITES:
            raise InputError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
        res = run_suite(name, workers=workers)
        ok &= res.passed
        blocks.append(res.format())
    _emit("\n".join(blocks), args.out)
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="periscope", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="indices of one or more graphs")
    c.add_argument("--g6", help="inline graph6 string")
    c.add_argument("--input", help="file of graph6 lines or a JSON edge list; '-' for stdin")
    c.add_argument("--indices", help=f"comma list from {','.join(ix.INDEX_NAMES)}")
    c.add_argument("--breakdown", action="store_true", help="include per-vertex/edge/pair values")
    c.add_argument("--format", choices=["json", "table"], default="json")
    c.add_argument("--out")
    c.set_defaults(func=cmd_compute)

    g = sub.add_parser("generate", help="emit a named construction")
    g.add_argument("family", choices=sorted([*cons.FAMILIES, "table1_witness"]))
    g.add_argument("params", nargs="*")
    g.add_argument("--format", choices=["g6", "json"], default="g6")
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("search", help="exhaustive maximum of an index over a class")
    s.add_argument("--class", dest="cls", default="graphs", help="trees|graphs|bipartite|diameter:<d>")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--index", choices=ix.INDEX_NAMES, default="peri")
    s.add_argument("--threads", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)

    e = sub.add_parser("experiment", help="ratio sweeps, Monte-Carlo irr, product closure")
    e.add_argument("kind", choices=["sweep", "irr", "ultra-closure"])
    e.add_argument("--family", choices=sorted(exp.SWEEP_FAMILIES))
    e.add_argument("--params", help="comma-separated family parameters")
    e.add_argument("--n", type=int, default=200)
    e.add_argument("--p", type=float, default=0.5)
    e.add_argument("--trials", type=int, default=100)
    e.add_argument("--seed", type=int, default=2023)
    e.add_argument("--format", choices=["csv", "json"], default="csv")
    e.add_argument("--out")
    e.set_defaults(func=cmd_experiment)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", action="append", help=f"one of {', '.join(sorted(SUITES))}")
    v.add_argument("--all", action="store_true")
    v.add_argument("--threads", type=int)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, GraphError, SearchError, cons.ConstructionError, ValueError) as exc:
        print(f"periscope: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run(argv: Optional[Sequence[str]] = None) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
