"""Structural certificates for independent crossing edge families.

Given a 3-connected graph and an independent edge set A whose deletion
leaves exactly two components (every A edge crossing between them), one of
two configurations always exists and is constructed here:

* a linked circuit pair: vertex-disjoint circuits, one per side, joined by
  two bridge edges and a third connector edge sitting on a path between
  the circuits, all three connectors drawn from A; or
* a single circuit through at least four edges of A.

The first arises when both sides are 2-connected; the second when a side
has a cutpoint, by routing two disjoint paths around it through the other
side. Downstream, the bridge edges of a linked pair are exactly the pairs
whose images under a circuit injection can never share an endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuits import circuit_and_attached_path
from .connectivity import cutpoints, is_k_connected, two_disjoint_paths
from .edge_maps import EdgeMap
from .errors import (
    ForeignEdgeSetError,
    HypothesisViolationError,
    InvalidWitnessError,
)
from .graph import Circuit, EdgeSet, Graph, Path, components, delete_edges, induced_subgraph


@dataclass(frozen=True)
class LinkedCircuitPair:
    """Two disjoint circuits tied together by three connectors.

    bridge_a and bridge_b each join a circuit_a vertex to a circuit_b
    vertex; path runs from a third circuit_a vertex to a third circuit_b
    vertex, meeting the circuits only at its ends, and path_edge is the
    designated connector edge on it.
    """

    circuit_a: Circuit
    circuit_b: Circuit
    bridge_a: int
    bridge_b: int
    path: Path
    path_edge: int

    def connectors(self) -> tuple[int, int, int]:
        return self.bridge_a, self.bridge_b, self.path_edge

    def anchors_a(self) -> tuple[str, str, str]:
        """The three designated vertices on circuit_a, bridge ends first."""
        va = self.circuit_a.vertex_set()
        ends = []
        for eid in (self.bridge_a, self.bridge_b):
            u, v = self.circuit_a.host.endpoints(eid)
            ends.append(u if u in va else v)
        return ends[0], ends[1], self.path.vertices[0]

    def anchors_b(self) -> tuple[str, str, str]:
        vb = self.circuit_b.vertex_set()
        ends = []
        for eid in (self.bridge_a, self.bridge_b):
            u, v = self.circuit_b.host.endpoints(eid)
            ends.append(u if u in vb else v)
        return ends[0], ends[1], self.path.vertices[-1]


def validate_linked_pair(graph: Graph, witness: LinkedCircuitPair,
                         connectors_from: EdgeSet | None = None) -> None:
    """Check every structural requirement; raise InvalidWitnessError if broken."""

    def fail(reason: str):
        raise InvalidWitnessError(f"linked circuit pair invalid: {reason}")

    if witness.circuit_a.host != graph or witness.circuit_b.host != graph \
            or witness.path.host != graph:
        fail("parts hosted on the wrong graph")
    va = witness.circuit_a.vertex_set()
    vb = witness.circuit_b.vertex_set()
    if va & vb:
        fail("circuits share a vertex")

    if witness.bridge_a == witness.bridge_b:
        fail("bridges are the same edge")
    for eid in (witness.bridge_a, witness.bridge_b):
        u, v = graph.endpoints(eid)
        if not ((u in va and v in vb) or (u in vb and v in va)):
            fail(f"bridge ({u!r}, {v!r}) does not join the circuits")

    if witness.path.is_empty():
        fail("connector path has no edges")
    path_vs = witness.path.vertices
    if path_vs[0] not in va or path_vs[-1] not in vb:
        fail("path must run from circuit_a to circuit_b")
    if set(path_vs) & va != {path_vs[0]}:
        fail("path reenters circuit_a")
    if set(path_vs) & vb != {path_vs[-1]}:
        fail("path reenters circuit_b")
    if witness.path_edge not in witness.path.edges:
        fail("designated connector is not on the path")

    a1, a2, a3 = witness.anchors_a()
    b1, b2, b3 = witness.anchors_b()
    if len({a1, a2, a3}) != 3:
        fail("designated circuit_a vertices are not distinct")
    if len({b1, b2, b3}) != 3:
        fail("designated circuit_b vertices are not distinct")

    occupied = (set(witness.circuit_a.edges) | set(witness.circuit_b.edges)
                | set(witness.path.edges))
    if witness.bridge_a in occupied or witness.bridge_b in occupied:
        fail("a bridge edge reappears in a circuit or the path")

    if connectors_from is not None:
        if connectors_from.host != graph:
            raise ForeignEdgeSetError("connector edge set hosted elsewhere")
        for eid in witness.connectors():
            if eid not in connectors_from.members:
                u, v = graph.endpoints(eid)
                fail(f"connector ({u!r}, {v!r}) is not in the crossing set")


def find_crossing_structure(graph: Graph, crossing: EdgeSet
                            ) -> LinkedCircuitPair | Circuit:
    """Certify an independent crossing family with one of the two witnesses.

    Preconditions, all checked here: graph is 3-connected; crossing is an
    independent edge set; deleting it leaves exactly two components with
    every crossing edge between them. Violations raise
    HypothesisViolationError.

    Returns a validated LinkedCircuitPair whose connectors come from
    `crossing` when both sides are 2-connected, and otherwise a validated
    Circuit containing at least four crossing edges.
    """
    if crossing.host != graph:
        raise ForeignEdgeSetError("crossing set is hosted on a different graph")
    if not is_k_connected(graph, 3):
        raise HypothesisViolationError("graph is not 3-connected")

    touched = set()
    for eid in crossing:
        for v in graph.endpoints(eid):
            if v in touched:
                raise HypothesisViolationError(
                    f"crossing set is not independent at {v!r}")
            touched.add(v)

    reduced, _ = delete_edges(graph, crossing)
    blocks = components(reduced)
    if len(blocks) != 2:
        raise HypothesisViolationError(
            f"deleting the crossing set leaves {len(blocks)} components, not 2")
    side_a, side_b = set(blocks[0]), set(blocks[1])
    for eid in crossing:
        u, v = graph.endpoints(eid)
        if not ((u in side_a and v in side_b) or (u in side_b and v in side_a)):
            raise HypothesisViolationError(
                f"edge ({u!r}, {v!r}) does not cross between the sides")
    if len(crossing) < 3:
        raise HypothesisViolationError(
            "a 3-connected graph forces at least three crossing edges")

    sub_a, ids_a = induced_subgraph(graph, blocks[0])
    sub_b, ids_b = induced_subgraph(graph, blocks[1])

    if is_k_connected(sub_a, 2) and is_k_connected(sub_b, 2):
        return _linked_pair_from_two_connected_sides(
            graph, crossing, side_a, sub_a, ids_a, sub_b, ids_b)
    return _circuit_around_cutpoint(graph, crossing, sub_a, sub_b)


def _linked_pair_from_two_connected_sides(graph: Graph, crossing: EdgeSet,
                                          side_a: set[str],
                                          sub_a: Graph, ids_a: tuple[int, ...],
                                          sub_b: Graph, ids_b: tuple[int, ...]
                                          ) -> LinkedCircuitPair:
    """Both sides 2-connected: anchor circuits with two connectors each
    and thread the third connector into the joining path."""
    e1, e2, e3 = sorted(crossing.members)[:3]

    def split(eid: int) -> tuple[str, str]:
        u, v = graph.endpoints(eid)
        return (u, v) if u in side_a else (v, u)

    a1, b1 = split(e1)
    a2, b2 = split(e2)
    a3, b3 = split(e3)

    circ_a, tail_a, attach_a = circuit_and_attached_path(sub_a, a1, a2, a3)
    circ_b, tail_b, attach_b = circuit_and_attached_path(sub_b, b1, b2, b3)

    circuit_a = _translate_circuit(graph, circ_a, ids_a)
    circuit_b = _translate_circuit(graph, circ_b, ids_b)

    # Joining path: attach_a .. a3, the crossing edge e3, b3 .. attach_b.
    left = _translate_path(graph, tail_a, ids_a).reversed()
    right = _translate_path(graph, tail_b, ids_b)
    path = Path(graph,
                left.vertices + right.vertices,
                left.edges + (e3,) + right.edges)

    witness = LinkedCircuitPair(circuit_a, circuit_b, e1, e2, path, e3)
    validate_linked_pair(graph, witness, crossing)
    return witness


def _circuit_around_cutpoint(graph: Graph, crossing: EdgeSet,
                             sub_a: Graph, sub_b: Graph) -> Circuit:
    """One side fails 2-connectivity: pick a cutpoint there, join two of
    its split components by two disjoint paths through the whole graph,
    and return the resulting circuit, which must use four crossing edges."""
    weak = sub_a if not is_k_connected(sub_a, 2) else sub_b
    cut_vertices = cutpoints(weak)
    if not cut_vertices:
        raise HypothesisViolationError(
            "a side is not 2-connected yet has no cutpoint; "
            "the input cannot come from a 3-connected graph")
    v = cut_vertices[0]
    remainder, _ = induced_subgraph(weak, [x for x in weak.vertices if x != v])
    blocks = components(remainder)
    a = blocks[0][0]
    b = blocks[1][0]
    first, second = two_disjoint_paths(graph, a, b, forbidden=(v,))
    circuit = Circuit(graph, frozenset(first.edges) | frozenset(second.edges))
    used = len(set(circuit.edges) & crossing.members)
    if used < 4:
        raise InvalidWitnessError(
            f"constructed circuit uses {used} crossing edges, expected >= 4")
    return circuit


def _translate_circuit(graph: Graph, circuit: Circuit,
                       ids: tuple[int, ...]) -> Circuit:
    return Circuit(graph, frozenset(ids[i] for i in circuit.edges))


def _translate_path(graph: Graph, path: Path, ids: tuple[int, ...]) -> Path:
    return Path(graph, path.vertices, tuple(ids[i] for i in path.edges))


def connector_images_nonadjacent(edge_map: EdgeMap,
                                 witness: LinkedCircuitPair) -> bool:
    """Do the images of the two bridge connectors avoid sharing an endpoint?

    For a verified circuit injection whose source carries the witness this
    is always true; the check validates the witness first and then simply
    compares image endpoints.
    """
    validate_linked_pair(edge_map.source, witness)
    u, v = edge_map.target.endpoints(edge_map.image_of(witness.bridge_a))
    x, y = edge_map.target.endpoints(edge_map.image_of(witness.bridge_b))
    return not ({u, v} & {x, y})
