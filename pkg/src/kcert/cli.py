"""``kcert`` command line.

Exit codes: 0 success (or "yes" for decisions), 1 decision "no",
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import analysis, oracle
from .cert_a1 import A1State, a1_run
from .cert_a2 import A2State, a2_run
from .graph import SparseGraph
from .stream_io import StreamFormatError, open_stream, write_stream

STATS_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "kcert run statistics",
    "type": "object",
    "required": [
        "algorithm", "k", "n", "m_stream", "passes", "cert_edges", "per_forest_edges",
        "self_loops_skipped", "duplicates_seen", "peak_words", "wall_time_ms",
    ],
    "properties": {
        "algorithm": {"enum": ["a1", "a2"]},
        "k": {"type": "integer", "minimum": 1},
        "n": {"type": "integer", "minimum": 0},
        "m_stream": {"type": "integer", "minimum": 0},
        "passes": {"type": "integer", "minimum": 1},
        "cert_edges": {"type": "integer", "minimum": 0},
        "per_forest_edges": {"type": ["array", "null"], "items": {"type": "integer", "minimum": 0}},
        "self_loops_skipped": {"type": "integer", "minimum": 0},
        "duplicates_seen": {"type": "integer", "minimum": 0},
        "peak_words": {"type": "integer", "minimum": 0},
        "wall_time_ms": {"type": "number", "minimum": 0},
        "skipped_by_membership": {"type": "integer", "minimum": 0},
        "handed_over": {"type": "integer", "minimum": 0},
        "flow_ops": {"type": "integer", "minimum": 0},
        "edge_ops": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}


@dataclass
class RunStats:
    algorithm: str
    k: int
    n: int
    m_stream: int
    passes: int
    cert_edges: int
    per_forest_edges: Optional[list[int]]
    self_loops_skipped: int
    duplicates_seen: int
    peak_words: int
    wall_time_ms: float
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        d.update(d.pop("extra"))
        return d


def build_certificate(path: str, algorithm: str, k: int) -> tuple[SparseGraph, RunStats]:
    start = time.perf_counter()
    with open_stream(path) as stream:
        if algorithm == "a1":
            state = A1State(stream.n, k)
            cert = a1_run(stream, k, state)
            extra = {"flow_ops": state.flow_ops.ops}
            per_forest = None
            m_stream = state.edges_seen
            loops, dups = state.self_loops, state.duplicates
        else:
            state = A2State(stream.n, k)
            cert = a2_run(stream, k, state)
            extra = {
                "skipped_by_membership": sum(state.skipped),
                "handed_over": sum(state.handed),
                "edge_ops": state.edge_ops,
            }
            per_forest = state.per_forest_edges
            m_stream = state.m_stream
            loops = state.self_loops
            dups = state.duplicates_seen
        passes = stream.pass_index
        n = stream.n
    stats = RunStats(
        algorithm=algorithm,
        k=k,
        n=n,
        m_stream=m_stream,
        passes=passes,
        cert_edges=cert.edge_count,
        per_forest_edges=per_forest,
        self_loops_skipped=loops,
        duplicates_seen=dups,
        peak_words=state.budget.peak_words,
        wall_time_ms=round((time.perf_counter() - start) * 1000.0, 3),
        extra=extra,
    )
    return cert, stats


def load_graph(path: str) -> SparseGraph:
    with open_stream(path) as stream:
        g = SparseGraph(stream.n)
        for e in stream.edges():
            g.add_edge(e.u, e.v)
    return g


def _write_json(path: str, payload: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def cmd_certify(args) -> int:
    cert, stats = build_certificate(args.input, args.algorithm, args.k)
    write_stream(args.output, cert.n, cert.edges(), comment=f"certificate algorithm={args.algorithm} k={args.k}")
    if args.stats:
        _write_json(args.stats, stats.to_dict())
    return 0


def cmd_decide(args) -> int:
    cert, stats = build_certificate(args.input, args.algorithm, args.k)
    result = analysis.is_k_connected(cert, args.k)
    print(json.dumps({
        "n": stats.n,
        "m_stream": stats.m_stream,
        "k": args.k,
        "algorithm": args.algorithm,
        "passes": stats.passes,
        "cert_edges": stats.cert_edges,
        "k_connected": result,
    }))
    if args.stats:
        _write_json(args.stats, stats.to_dict())
    return 0 if result else 1


def cmd_separators(args) -> int:
    if args.algorithm != "a2":
        print("error: separators need the a2 certificate; a1 carries no separator guarantee", file=sys.stderr)
        return 2
    cert, _ = build_certificate(args.input, "a2", args.k)
    for sep in analysis.all_separators(cert, args.k):
        print(" ".join(str(v) for v in sep.vertices))
    return 0


def cmd_cut_vertices(args) -> int:
    cert, _ = build_certificate(args.input, "a2", 2)
    for v in analysis.cut_vertices(cert):
        print(v)
    return 0


def cmd_gen(args) -> int:
    params = {
        "n": args.n,
        "p": args.p,
        "offsets": tuple(int(o) for o in args.offsets.split(",")) if args.offsets else (),
        "separator_size": args.separator_size,
    }
    oracle.generate(args.model, params, args.seed, path=args.output)
    return 0


def cmd_oracle_kconn(args) -> int:
    result = oracle.oracle_k_connected(load_graph(args.input), args.k)
    print(json.dumps({"k": args.k, "k_connected": result}))
    return 0 if result else 1


def cmd_oracle_kappa(args) -> int:
    g = load_graph(args.input)
    if not (0 <= args.u < g.n and 0 <= args.v < g.n) or args.u == args.v:
        raise ValueError("u and v must be distinct vertices of the graph")
    print(oracle.oracle_local_connectivity(g, args.u, args.v))
    return 0


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kcert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="build a sparse certificate")
    p.add_argument("--algorithm", choices=("a1", "a2"), required=True)
    p.add_argument("-k", type=_positive, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--stats")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("decide", help="decide k-connectivity")
    p.add_argument("-k", type=_positive, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--algorithm", choices=("a1", "a2"), default="a2")
    p.add_argument("--stats")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("separators", help="list all separators of size < k")
    p.add_argument("-k", type=_positive, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--algorithm", choices=("a1", "a2"), default="a2")
    p.set_defaults(func=cmd_separators)

    p = sub.add_parser("cut-vertices", help="list cut vertices")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_cut_vertices)

    p = sub.add_parser("gen", help="write a seeded graph stream")
    p.add_argument("--model", choices=oracle.MODELS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--offsets", help="comma-separated circulant offsets")
    p.add_argument("--separator-size", type=int, default=1)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="brute-force reference checks")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("kconn")
    q.add_argument("-k", type=_positive, required=True)
    q.add_argument("--input", required=True)
    q.set_defaults(func=cmd_oracle_kconn)
    q = osub.add_parser("kappa")
    q.add_argument("-u", type=int, required=True)
    q.add_argument("-v", type=int, required=True)
    q.add_argument("--input", required=True)
    q.set_defaults(func=cmd_oracle_kappa)
    return parser


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except (StreamFormatError, OSError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
