"""Command-line front end.

Subcommands: verify, reconstruct, generate, enumerate, classify,
decompose, crossing. All reports are JSON on stdout (suppress with
--quiet); parse and validation problems go to stderr. Exit codes are a
stable interface:

    0  pass / success
    1  input error (unreadable or malformed files, bad parameters)
    2  verification failed (a witness shows the map breaks circuits)
    3  map verified but induced by no vertex isomorphism
    4  precondition failed (connectivity guards, desk-scale bounds)
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path as FilePath

from . import __version__
from .circuits import DEFAULT_MAX_CIRCUITS, enumerate_circuits
from .edge_maps import (
    EdgeMap,
    IndependentEdges,
    StarAt,
    StarViolation,
    check_circuit_injection,
    classify_star_image,
    classify_star_preimage,
    decompose_by_star_preimage,
    edge_map_from_json,
    edge_map_to_json,
    reconstruct_vertex_isomorphism,
)
from .errors import (
    CircuitMapError,
    DecompositionViolationError,
    DuplicateEdgeError,
    ForeignEdgeSetError,
    FormatError,
    InvalidPrimeError,
    LoopEdgeError,
    NotABijectionError,
    NotInducedError,
    NotThreeConnectedError,
    UnknownEdgeError,
    UnknownNameError,
    UnknownVertexError,
)
from .generators import build_counterexample, named_graph, random_three_connected
from .graph import (
    Graph,
    edge_set_from_pairs,
    graph_from_json,
    graph_to_json,
)
from .structure import LinkedCircuitPair, find_crossing_structure

EXIT_PASS = 0
EXIT_INPUT = 1
EXIT_FAIL = 2
EXIT_NOT_INDUCED = 3
EXIT_PRECONDITION = 4

_INPUT_ERRORS = (
    FormatError,
    LoopEdgeError,
    DuplicateEdgeError,
    UnknownVertexError,
    UnknownEdgeError,
    NotABijectionError,
    ForeignEdgeSetError,
    InvalidPrimeError,
    UnknownNameError,
)


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_graph(path: str) -> Graph:
    return graph_from_json(_load_json(path))


def _load_map(path: str, source: Graph, target: Graph) -> EdgeMap:
    return edge_map_from_json(source, target, _load_json(path))


def _dump_file(path: FilePath, data: dict) -> None:
    path.write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")


def _emit(report: dict, started: float, quiet: bool) -> None:
    report["elapsed_ms"] = int(round((time.perf_counter() - started) * 1000))
    if not quiet:
        print(json.dumps(report, indent=2))


def _pairs(graph: Graph, edge_ids) -> list[list[str]]:
    return [list(graph.endpoints(i)) for i in sorted(edge_ids)]


def _star_class_json(graph: Graph, kind) -> dict:
    if isinstance(kind, StarAt):
        return {"kind": "star", "vertex": kind.vertex}
    if isinstance(kind, IndependentEdges):
        return {"kind": "independent"}
    assert isinstance(kind, StarViolation)
    out = {"kind": "violation", "variant": kind.kind,
           "edges": _pairs(graph, kind.edges)}
    if kind.vertex is not None:
        out["vertex"] = kind.vertex
    return out


def _witness_json(witness) -> dict:
    home = witness.circuit.host
    other = witness.mapped.host
    return {
        "direction": witness.direction,
        "circuit": _pairs(home, witness.circuit.edges),
        "image": _pairs(other, witness.mapped.members),
    }


def _linked_pair_json(graph: Graph, witness: LinkedCircuitPair) -> dict:
    return {
        "kind": "linked_pair",
        "circuit_a": _pairs(graph, witness.circuit_a.edges),
        "circuit_b": _pairs(graph, witness.circuit_b.edges),
        "bridges": _pairs(graph, (witness.bridge_a, witness.bridge_b)),
        "path_vertices": list(witness.path.vertices),
        "path_edge": list(graph.endpoints(witness.path_edge)),
        "anchors_a": list(witness.anchors_a()),
        "anchors_b": list(witness.anchors_b()),
    }


# -- subcommand handlers ------------------------------------------------------


def _cmd_verify(args) -> int:
    started = time.perf_counter()
    source = _load_graph(args.source)
    target = _load_graph(args.target)
    edge_map = _load_map(args.map, source, target)
    verdict = check_circuit_injection(
        edge_map, mode=args.mode, samples=args.samples, seed=args.seed,
        max_count=args.max_circuits)
    report = {
        "result": "pass" if verdict.passed else "fail",
        "mode": verdict.mode,
        "circuits_checked": verdict.circuits_checked,
        "witness": _witness_json(verdict.witness) if verdict.witness else None,
    }
    _emit(report, started, args.quiet)
    return EXIT_PASS if verdict.passed else EXIT_FAIL


def _cmd_reconstruct(args) -> int:
    started = time.perf_counter()
    source = _load_graph(args.source)
    target = _load_graph(args.target)
    edge_map = _load_map(args.map, source, target)
    try:
        iso = reconstruct_vertex_isomorphism(edge_map)
    except NotThreeConnectedError as err:
        _emit({"result": "not_three_connected", "detail": str(err)},
              started, args.quiet)
        return EXIT_PRECONDITION
    except NotInducedError as err:
        witness = {"vertex": err.vertex}
        if err.star_class is not None:
            witness["class"] = _star_class_json(target, err.star_class)
        _emit({"result": "not_induced", "detail": str(err), "witness": witness},
              started, args.quiet)
        return EXIT_NOT_INDUCED
    report = {
        "result": "induced",
        "vertex_map": {u: w for u, w in iso.pairs},
    }
    _emit(report, started, args.quiet)
    return EXIT_PASS


def _cmd_generate(args) -> int:
    started = time.perf_counter()
    if args.kind == "counterexample":
        prefix = args.out or f"counterexample_p{args.p}"
        source, target, edge_map = build_counterexample(args.p)
        files = {
            f"{prefix}.source.json": graph_to_json(source),
            f"{prefix}.target.json": graph_to_json(target),
            f"{prefix}.map.json": edge_map_to_json(edge_map),
        }
    elif args.kind == "named":
        graph = named_graph(args.name, args.size)
        prefix = args.out or args.name
        files = {f"{prefix}.json": graph_to_json(graph)}
    else:  # random3c
        graph = random_three_connected(args.n, args.seed)
        prefix = args.out or f"random3c_n{args.n}_s{args.seed}"
        files = {f"{prefix}.json": graph_to_json(graph)}
    for name, data in files.items():
        _dump_file(FilePath(name), data)
    _emit({"result": "ok", "files": sorted(files)}, started, args.quiet)
    return EXIT_PASS


def _cmd_enumerate(args) -> int:
    started = time.perf_counter()
    graph = _load_graph(args.graph)
    circuits = enumerate_circuits(graph, args.max_circuits)
    report = {
        "result": "ok",
        "count": len(circuits),
        "circuits": [_pairs(graph, c.edges) for c in circuits],
    }
    _emit(report, started, args.quiet)
    return EXIT_PASS


def _cmd_classify(args) -> int:
    started = time.perf_counter()
    source = _load_graph(args.source)
    target = _load_graph(args.target)
    edge_map = _load_map(args.map, source, target)
    report = {
        "result": "ok",
        "star_images": {
            v: _star_class_json(target, classify_star_image(edge_map, v))
            for v in source.vertices},
        "star_preimages": {
            w: _star_class_json(source, classify_star_preimage(edge_map, w))
            for w in target.vertices},
    }
    _emit(report, started, args.quiet)
    return EXIT_PASS


def _cmd_decompose(args) -> int:
    started = time.perf_counter()
    source = _load_graph(args.source)
    target = _load_graph(args.target)
    edge_map = _load_map(args.map, source, target)
    try:
        side_a, side_b, crossing = decompose_by_star_preimage(edge_map, args.vertex)
    except DecompositionViolationError as err:
        _emit({"result": "decomposition_violation", "detail": str(err)},
              started, args.quiet)
        return EXIT_FAIL
    report = {
        "result": "ok",
        "vertex": args.vertex,
        "side_a": list(side_a),
        "side_b": list(side_b),
        "crossing": _pairs(source, crossing.members),
    }
    _emit(report, started, args.quiet)
    return EXIT_PASS


def _cmd_crossing(args) -> int:
    started = time.perf_counter()
    graph = _load_graph(args.graph)
    cut_pairs = _load_json(args.cut)
    if not isinstance(cut_pairs, list):
        raise FormatError("cut file must hold a JSON list of endpoint pairs")
    crossing = edge_set_from_pairs(graph, cut_pairs)
    outcome = find_crossing_structure(graph, crossing)
    if isinstance(outcome, LinkedCircuitPair):
        report = {"result": "linked_pair",
                  "witness": _linked_pair_json(graph, outcome)}
    else:
        report = {"result": "circuit",
                  "circuit": _pairs(graph, outcome.edges),
                  "crossing_edges_used":
                      len(set(outcome.edges) & crossing.members)}
    _emit(report, started, args.quiet)
    return EXIT_PASS


# -- parser -------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circuitmap",
        description="Verify circuit-preserving edge maps between finite "
                    "graphs, reconstruct inducing vertex isomorphisms, and "
                    "generate reference instances.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--quiet", action="store_true",
                       help="suppress the JSON report")

    p = sub.add_parser("verify", help="check that a map preserves circuits")
    p.add_argument("source", help="source graph JSON file")
    p.add_argument("target", help="target graph JSON file")
    p.add_argument("map", help="edge map JSON file")
    p.add_argument("--mode", choices=("exhaustive", "sampled"),
                   default="exhaustive")
    p.add_argument("--samples", type=int, default=500,
                   help="circuits to draw in sampled mode")
    p.add_argument("--seed", type=int, default=1,
                   help="seed for sampled mode")
    p.add_argument("--max-circuits", type=int, default=DEFAULT_MAX_CIRCUITS)
    common(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("reconstruct",
                       help="recover the vertex isomorphism inducing a map")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("map")
    common(p)
    p.set_defaults(handler=_cmd_reconstruct)

    p = sub.add_parser("generate", help="write reference instances to files")
    kinds = p.add_subparsers(dest="kind", required=True)
    g = kinds.add_parser("counterexample",
                         help="the non-induced circuit injection family")
    g.add_argument("--p", type=int, required=True,
                   help="prime parameter, greater than 2")
    g.add_argument("--out", help="output file prefix")
    common(g)
    g.set_defaults(handler=_cmd_generate)
    g = kinds.add_parser("named", help="catalog graph")
    g.add_argument("--name", required=True)
    g.add_argument("--size", type=int)
    g.add_argument("--out")
    common(g)
    g.set_defaults(handler=_cmd_generate)
    g = kinds.add_parser("random3c", help="seeded random 3-connected graph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=1)
    g.add_argument("--out")
    common(g)
    g.set_defaults(handler=_cmd_generate)

    p = sub.add_parser("enumerate", help="list every circuit of a graph")
    p.add_argument("graph")
    p.add_argument("--max-circuits", type=int, default=DEFAULT_MAX_CIRCUITS)
    common(p)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("classify",
                       help="star image and preimage classes under a map")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("map")
    common(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("decompose",
                       help="split the source along an independent star preimage")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("map")
    p.add_argument("--vertex", required=True,
                   help="target vertex whose star preimage to delete")
    common(p)
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("crossing",
                       help="certify an independent crossing edge family")
    p.add_argument("graph")
    p.add_argument("cut", help="JSON list of endpoint pairs")
    common(p)
    p.set_defaults(handler=_cmd_crossing)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except _INPUT_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, json.JSONDecodeError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except NotInducedError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_NOT_INDUCED
    except DecompositionViolationError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_FAIL
    except CircuitMapError as err:
        # Connectivity guards, desk-scale bounds, hypothesis violations.
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
