"""Command-line interface: ``vulngraph compute|construct|enumerate|verify``.

Exit codes: 0 success, 1 counterexample found, 2 invalid input, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from . import extremal, verification
from .enumeration import all_connected_graphs, all_trees, all_unicyclic
from .errors import CapExceededError, VulnGraphError
from .graph import Graph, from_edge_list
from .graph6 import parse_graph6, parse_graph6_stream, to_graph6
from .invariants import DEFAULT_MAX_N, PARAMETERS, ParameterResult, compute

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3
MAX_N_ENV = "VULNGRAPH_MAX_N"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_edge_list(text: str) -> Graph:
    """``n m`` on the first line, then ``m`` lines ``u v`` (0-indexed)."""
    lines = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise UsageError("edge list must start with a line 'n m'")
    try:
        n, m = map(int, lines[0])
        edges = [(int(u), int(v)) for u, v in lines[1:]]
    except ValueError as exc:
        raise UsageError(f"malformed edge list: {exc}") from exc
    if len(edges) != m:
        raise UsageError(f"edge list header announces {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)


def _looks_like_edge_list(text: str) -> bool:
    for line in text.splitlines():
        if line.strip() and not line.lstrip().startswith("#"):
            parts = line.split()
            return len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts)
    return False


def load_graphs(source: str, stdin: TextIO) -> list[Graph]:
    """Graphs from ``-`` (stdin), a file of graph6 lines or an edge list, or inline graph6."""
    if source == "-":
        text = stdin.read()
    elif Path(source).is_file():
        text = Path(source).read_text()
    else:
        return [parse_graph6(source)]
    if _looks_like_edge_list(text):
        return [parse_edge_list(text)]
    graphs = list(parse_graph6_stream(text))
    if not graphs:
        raise UsageError(f"no graphs found in {source}")
    return graphs


def result_to_json(result: ParameterResult) -> dict:
    cert = result.certificate
    return {
        "parameter": result.parameter,
        "value": None if result.value is None else str(result.value),
        "certificate": None
        if cert is None
        else {
            "cut": cert.vertices,
            "cut_size": cert.cut_size,
            "omega": cert.omega,
            "tau": cert.tau,
            "value": str(cert.value),
        },
        "undefined": result.undefined,
    }


def _parse_params(raw: Sequence[str]) -> list[str]:
    names = [p.strip() for chunk in raw for p in chunk.split(",") if p.strip()]
    if not names or names == ["all"]:
        return list(PARAMETERS)
    for name in names:
        if name not in PARAMETERS:
            raise UsageError(f"unknown parameter {name!r}; choose from {', '.join(PARAMETERS)}")
    return names


def _max_n(args) -> int:
    if args.max_n is not None:
        return args.max_n
    raw = os.environ.get(MAX_N_ENV)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"{MAX_N_ENV} must be an integer") from exc


def _cmd_compute(args, out: TextIO, stdin: TextIO) -> int:
    params = _parse_params(args.params)
    limit = _max_n(args)
    for source in args.graphs:
        for g in load_graphs(source, stdin):
            results = compute(g, params, max_n=limit)
            if args.format == "table":
                out.write(f"# {to_graph6(g).decode()} n={g.n} m={g.m}\n")
                for r in results:
                    cut = "-" if r.certificate is None else " ".join(map(str, r.certificate.vertices)) or "{}"
                    value = r.undefined if r.value is None else str(r.value)
                    out.write(f"{r.parameter:<13}{value:<30}{cut}\n")
            else:
                record = {
                    "graph6": to_graph6(g).decode(),
                    "n": g.n,
                    "m": g.m,
                    "results": [result_to_json(r) for r in results],
                }
                out.write(json.dumps(record, sort_keys=True) + "\n")
    return EXIT_OK


CONSTRUCTORS = {
    "min-tenacity": extremal.build_min_tenacity_graph,
    "harary": extremal.build_harary_graph,
    "min-connectivity": extremal.build_min_connectivity_graph,
    "extremal-tree": extremal.extremal_tree,
    "extremal-unicyclic": extremal.extremal_unicyclic,
}


def _cmd_construct(args, out: TextIO, stdin: TextIO) -> int:
    build = CONSTRUCTORS[args.kind]
    if args.kind.startswith("extremal-"):
        g = build(args.n)
    else:
        if args.m is None:
            raise UsageError(f"construct {args.kind} needs --m")
        g = build(args.n, args.m)
    out.write(to_graph6(g).decode() + "\n")
    return EXIT_OK


def _cmd_enumerate(args, out: TextIO, stdin: TextIO) -> int:
    if args.family == "trees":
        graphs = all_trees(args.n)
    elif args.family == "unicyclic":
        graphs = all_unicyclic(args.n)
    else:
        if args.m is None:
            raise UsageError("enumerate connected needs --m")
        graphs = all_connected_graphs(args.n, args.m, up_to_isomorphism=not args.labeled)
    for g in graphs:
        out.write(to_graph6(g).decode() + "\n")
    return EXIT_OK


def _cmd_verify(args, out: TextIO, stdin: TextIO) -> int:
    claim = args.claim
    kwargs = {"timing": args.timing}
    if args.n_max is not None:
        kwargs["n_max"] = args.n_max
    if claim == "lemmas":
        kwargs.update(samples=args.samples, seed=args.seed)
        if args.n_max is not None:
            kwargs["sample_n_max"] = min(10, args.n_max)
    elif args.samples != 1000 or args.seed != 0:
        raise UsageError("--samples and --seed only apply to 'verify lemmas'")
    report = getattr(verification, f"verify_{claim}")(**kwargs)
    out.write(json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n")
    return EXIT_OK if report.status == "verified" else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vulngraph", description="Exact graph vulnerability parameters and extremal tenacity.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("compute", help="compute parameters of graphs")
    p.add_argument("graphs", nargs="+", help="inline graph6, '-' for stdin, or a graph6 / edge-list file")
    p.add_argument("--params", action="append", default=[], help="comma-separated names, or 'all' (default)")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--max-n", type=int, default=None, help=f"override the n <= {DEFAULT_MAX_N} search cap")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("construct", help="emit an extremal graph as graph6")
    p.add_argument("kind", choices=sorted(CONSTRUCTORS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("enumerate", help="emit a graph family as graph6 lines")
    p.add_argument("family", choices=("trees", "unicyclic", "connected"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--labeled", action="store_true", help="every labelled graph instead of one per class")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="exhaustively check a result and print a JSON report")
    p.add_argument("claim", choices=("theorem1", "corollary1", "theorem2", "theorem3", "lemmas", "harary"))
    p.add_argument("--n-max", type=int)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true", help="record duration_ms (makes output nondeterministic)")
    p.set_defaults(func=_cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout: TextIO = None, stderr: TextIO = None, stdin: TextIO = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, stdout, stdin)
    except CapExceededError as exc:
        stderr.write(f"vulngraph: cap exceeded: {exc}\n")
        return EXIT_CAP
    except (UsageError, VulnGraphError, OSError) as exc:
        stderr.write(f"vulngraph: error: {exc}\n")
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())
