"""Circuit recognition, enumeration, and constructive circuit-plus-path search.

A circuit is the edge set of a simple cycle: nonempty, connected, every
touched vertex of degree exactly 2. Enumeration returns every distinct
circuit in canonical order (sorted edge-id tuples compared
lexicographically) and refuses instances beyond a configurable count, since
the exhaustive checks built on top of it are meant for desk-scale graphs.
"""

from __future__ import annotations

from .connectivity import is_k_connected, two_disjoint_paths
from .errors import (
    NoSuchCircuitError,
    NotTwoConnectedError,
    TooManyCircuitsError,
    UnknownEdgeError,
)
from .graph import (
    Circuit,
    EdgeSet,
    Graph,
    Path,
    _edge_ids_form_circuit,
    require_same_host,
)

DEFAULT_MAX_CIRCUITS = 100_000


def is_circuit(graph: Graph, edge_set: EdgeSet) -> bool:
    """Recognize the edge set of a simple cycle inside graph."""
    require_same_host(graph, edge_set)
    return _edge_ids_form_circuit(graph, edge_set.members)


def enumerate_circuits(graph: Graph, max_count: int = DEFAULT_MAX_CIRCUITS) -> list[Circuit]:
    """All distinct circuits of the graph in canonical order.

    Depth-first elementary-cycle search: each circuit is discovered exactly
    once from its smallest vertex (by vertex index), walking only through
    larger vertices, with one of the two traversal directions kept. Raises
    TooManyCircuitsError as soon as the count would exceed max_count.
    """
    if max_count < 1:
        raise ValueError("max_count must be positive")
    adjacency = graph._adjacency
    found: list[frozenset[int]] = []

    def extend(root: int, current: int, path_vertices: list[int],
               path_edges: list[int], on_path: set[int]) -> None:
        for nbr, eid in adjacency[current]:
            if nbr == root:
                # Close the cycle; need length >= 3 and one fixed direction.
                if len(path_edges) >= 2 and path_vertices[1] < current:
                    if len(found) >= max_count:
                        raise TooManyCircuitsError(
                            f"more than {max_count} circuits")
                    found.append(frozenset(path_edges + [eid]))
            elif nbr > root and nbr not in on_path:
                path_vertices.append(nbr)
                path_edges.append(eid)
                on_path.add(nbr)
                extend(root, nbr, path_vertices, path_edges, on_path)
                on_path.discard(nbr)
                path_edges.pop()
                path_vertices.pop()

    for root in range(graph.vertex_count()):
        extend(root, root, [root], [], {root})
    found.sort(key=sorted)
    return [Circuit(graph, ids) for ids in found]


def circuit_through_two_edges(graph: Graph, edge_a: int, edge_b: int,
                              max_count: int = DEFAULT_MAX_CIRCUITS) -> Circuit:
    """First circuit in canonical order containing both edges.

    In a 3-connected graph such a circuit exists for any two distinct
    edges; NoSuchCircuitError therefore signals a precondition failure.
    """
    m = graph.edge_count()
    for eid in (edge_a, edge_b):
        if not 0 <= eid < m:
            raise UnknownEdgeError(f"edge id {eid} is out of range")
    if edge_a == edge_b:
        raise ValueError("the two edges must be distinct")
    for circuit in enumerate_circuits(graph, max_count):
        if edge_a in circuit.edges and edge_b in circuit.edges:
            return circuit
    raise NoSuchCircuitError(
        f"no circuit contains edges {edge_a} and {edge_b}")


def circuit_and_attached_path(graph: Graph, a: str, b: str, c: str
                              ) -> tuple[Circuit, Path, str]:
    """Circuit through a and b, plus a path hanging c onto it.

    For distinct vertices a, b, c of a 2-connected graph, returns
    (C, P, t) where C is a circuit containing a and b, t is a vertex of C,
    and P is a path from c to t sharing only t with C. When c already lies
    on C, P is empty and t = c; otherwise t avoids both a and b.
    """
    for v in (a, b, c):
        graph.require_vertex(v)
    if len({a, b, c}) != 3:
        raise ValueError("a, b, c must be distinct")
    if not is_k_connected(graph, 2):
        raise NotTwoConnectedError("attachment search needs a 2-connected graph")

    first, second = two_disjoint_paths(graph, a, b)
    circuit = Circuit(graph, frozenset(first.edges) | frozenset(second.edges))
    on_circuit = circuit.vertex_set()
    if c in on_circuit:
        result = (circuit, Path.empty(graph, c), c)
        validate_attached_path(graph, a, b, c, *result)
        return result

    # Attach c: route two disjoint paths from c to some circuit vertex v
    # other than a, b and cut each at its first contact with the circuit.
    v = min(on_circuit - {a, b})
    toward_1, toward_2 = two_disjoint_paths(graph, c, v)
    prefix_1, t1 = _cut_at_first_contact(toward_1, on_circuit)
    prefix_2, t2 = _cut_at_first_contact(toward_2, on_circuit)

    if {t1, t2} == {a, b}:
        # Both probes pass through a and b, so the two full probe paths
        # close into a circuit through a and b that already contains c.
        joined = Circuit(graph, frozenset(toward_1.edges) | frozenset(toward_2.edges))
        result = (joined, Path.empty(graph, c), c)
    elif t1 not in (a, b):
        result = (circuit, prefix_1, t1)
    else:
        result = (circuit, prefix_2, t2)
    validate_attached_path(graph, a, b, c, *result)
    return result


def _cut_at_first_contact(path: Path, targets: frozenset[str]) -> tuple[Path, str]:
    """Truncate a path (walking from its start) at its first vertex in targets."""
    for k, v in enumerate(path.vertices):
        if k > 0 and v in targets:
            return Path(path.host, path.vertices[:k + 1], path.edges[:k]), v
    raise ValueError("path never meets the target set")


def validate_attached_path(graph: Graph, a: str, b: str, c: str,
                           circuit: Circuit, path: Path, t: str) -> None:
    """Assert the circuit-plus-attached-path postcondition; ValueError if broken."""
    on_circuit = circuit.vertex_set()
    if circuit.host != graph or path.host != graph:
        raise ValueError("result hosted on the wrong graph")
    if a not in on_circuit or b not in on_circuit:
        raise ValueError("circuit misses a or b")
    if t not in on_circuit:
        raise ValueError("attachment vertex is not on the circuit")
    if path.is_empty():
        if t != c or c not in on_circuit:
            raise ValueError("empty path requires t = c on the circuit")
        return
    if t in (a, b):
        raise ValueError("nonempty path may not attach at a or b")
    if path.ends() != (c, t):
        raise ValueError("path must run from c to t")
    overlap = set(path.vertices) & on_circuit
    if overlap != {t}:
        raise ValueError(f"path meets the circuit at {sorted(overlap)}, not only t")
