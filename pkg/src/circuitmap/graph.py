"""Core graph types and operations.

Graphs here are finite, simple and undirected: string vertex labels, no
loops, no parallel edges. Edges are identified by dense integer ids given
by their position in the edge tuple, and every derived object (EdgeSet,
Path, Circuit) pins the graph it lives on, so ids never migrate silently
between graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateEdgeError,
    ForeignEdgeSetError,
    FormatError,
    LoopEdgeError,
    UnknownEdgeError,
    UnknownVertexError,
)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    vertices: ordered tuple of distinct string labels.
    edges: tuple of endpoint pairs; the position of a pair is its edge id.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        seen = set()
        for v in self.vertices:
            if not isinstance(v, str):
                raise UnknownVertexError(f"vertex label {v!r} is not a string")
            if v in seen:
                raise ValueError(f"duplicate vertex label {v!r}")
            seen.add(v)
        pairs = set()
        for i, (u, v) in enumerate(self.edges):
            if u == v:
                raise LoopEdgeError(f"edge {i} is a loop at {u!r}")
            if u not in seen:
                raise UnknownVertexError(f"edge {i} uses unknown vertex {u!r}")
            if v not in seen:
                raise UnknownVertexError(f"edge {i} uses unknown vertex {v!r}")
            key = (u, v) if u < v else (v, u)
            if key in pairs:
                raise DuplicateEdgeError(f"edge {i} repeats pair {key!r}")
            pairs.add(key)

    # -- derived lookups, built once per instance --

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _pair_ids(self) -> dict[tuple[str, str], int]:
        out = {}
        for i, (u, v) in enumerate(self.edges):
            key = (u, v) if u < v else (v, u)
            out[key] = i
        return out

    @cached_property
    def _incident(self) -> tuple[tuple[int, ...], ...]:
        lists: list[list[int]] = [[] for _ in self.vertices]
        for i, (u, v) in enumerate(self.edges):
            lists[self._index[u]].append(i)
            lists[self._index[v]].append(i)
        return tuple(tuple(l) for l in lists)

    @cached_property
    def _adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex index: (neighbor index, edge id) pairs sorted by neighbor."""
        lists: list[list[tuple[int, int]]] = [[] for _ in self.vertices]
        for i, (u, v) in enumerate(self.edges):
            ui, vi = self._index[u], self._index[v]
            lists[ui].append((vi, i))
            lists[vi].append((ui, i))
        return tuple(tuple(sorted(l)) for l in lists)

    # -- queries --

    def vertex_count(self) -> int:
        return len(self.vertices)

    def edge_count(self) -> int:
        return len(self.edges)

    def has_vertex(self, v: str) -> bool:
        return v in self._index

    def require_vertex(self, v) -> str:
        if v not in self._index:
            raise UnknownVertexError(f"unknown vertex {v!r}")
        return v

    def endpoints(self, edge_id: int) -> tuple[str, str]:
        return self.edges[edge_id]

    def has_edge(self, u: str, v: str) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._pair_ids

    def edge_id(self, u: str, v: str) -> int:
        """Resolve an unordered endpoint pair to its edge id."""
        key = (u, v) if u < v else (v, u)
        try:
            return self._pair_ids[key]
        except KeyError:
            raise UnknownEdgeError(f"no edge joins {u!r} and {v!r}") from None

    def degree(self, v: str) -> int:
        return len(self._incident[self._index[self.require_vertex(v)]])

    def incident_edges(self, v: str) -> tuple[int, ...]:
        return self._incident[self._index[self.require_vertex(v)]]

    def neighbors(self, v: str) -> tuple[str, ...]:
        vi = self._index[self.require_vertex(v)]
        return tuple(self.vertices[ni] for ni, _ in self._adjacency[vi])


def build_graph(vertices: Iterable, edges: Iterable[Sequence]) -> Graph:
    """Build a Graph from labels and endpoint pairs.

    Labels are coerced to strings; vertex order follows first appearance in
    the input, duplicates are dropped, and edge ids follow input order, so
    the result is deterministic for any ordered input.
    """
    labels: list[str] = []
    seen = set()
    for v in vertices:
        s = v if isinstance(v, str) else str(v)
        if s not in seen:
            seen.add(s)
            labels.append(s)
    pairs = []
    for e in edges:
        u, v = e
        pairs.append((u if isinstance(u, str) else str(u),
                      v if isinstance(v, str) else str(v)))
    return Graph(tuple(labels), tuple(pairs))


@dataclass(frozen=True)
class EdgeSet:
    """A subset of a specific graph's edges, by id."""

    host: Graph
    members: frozenset[int]

    def __post_init__(self):
        m = self.host.edge_count()
        for i in self.members:
            if not isinstance(i, int) or not 0 <= i < m:
                raise ValueError(f"invalid edge id {i!r} for host with {m} edges")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __contains__(self, edge_id: int) -> bool:
        return edge_id in self.members

    def pairs(self) -> tuple[tuple[str, str], ...]:
        """Member endpoint pairs in edge-id order."""
        return tuple(self.host.endpoints(i) for i in sorted(self.members))

    def vertex_set(self) -> frozenset[str]:
        out = set()
        for i in self.members:
            u, v = self.host.endpoints(i)
            out.add(u)
            out.add(v)
        return frozenset(out)


def edge_set_from_pairs(graph: Graph, pairs: Iterable[Sequence[str]]) -> EdgeSet:
    """Resolve endpoint pairs (order inside a pair does not matter) to an EdgeSet."""
    ids = set()
    for pair in pairs:
        u, v = pair
        ids.add(graph.edge_id(u, v))
    return EdgeSet(graph, frozenset(ids))


def require_same_host(graph: Graph, edge_set: EdgeSet) -> None:
    if edge_set.host != graph:
        raise ForeignEdgeSetError("edge set is hosted on a different graph")


@dataclass(frozen=True)
class Path:
    """A simple path, stored as its vertex sequence plus the matching edge ids.

    A path may be empty: a single vertex and no edges.
    """

    host: Graph
    vertices: tuple[str, ...]
    edges: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.edges) + 1 or not self.vertices:
            raise ValueError("path needs exactly one more vertex than edges")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path repeats a vertex")
        for v in self.vertices:
            self.host.require_vertex(v)
        for k, eid in enumerate(self.edges):
            if frozenset(self.host.endpoints(eid)) != \
                    frozenset((self.vertices[k], self.vertices[k + 1])):
                raise ValueError(f"edge {eid} does not join step {k} of the path")

    @classmethod
    def empty(cls, graph: Graph, at: str) -> "Path":
        return cls(graph, (graph.require_vertex(at),), ())

    @classmethod
    def from_vertices(cls, graph: Graph, vertices: Sequence[str]) -> "Path":
        ids = tuple(graph.edge_id(vertices[k], vertices[k + 1])
                    for k in range(len(vertices) - 1))
        return cls(graph, tuple(vertices), ids)

    def is_empty(self) -> bool:
        return not self.edges

    def ends(self) -> tuple[str, str]:
        return self.vertices[0], self.vertices[-1]

    def reversed(self) -> "Path":
        return Path(self.host, tuple(reversed(self.vertices)),
                    tuple(reversed(self.edges)))

    def pairs(self) -> tuple[tuple[str, str], ...]:
        return tuple(self.host.endpoints(i) for i in self.edges)


def _edge_ids_form_circuit(graph: Graph, ids: frozenset[int]) -> bool:
    """True iff the edge subset is the edge set of one simple cycle:
    nonempty, every touched vertex has degree exactly 2, and the touched
    vertices form a single connected piece. Simplicity then forces size >= 3.
    """
    if not ids:
        return False
    degree: dict[str, int] = {}
    adjacent: dict[str, list[str]] = {}
    for i in ids:
        u, v = graph.endpoints(i)
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
        adjacent.setdefault(u, []).append(v)
        adjacent.setdefault(v, []).append(u)
    if any(d != 2 for d in degree.values()):
        return False
    start = next(iter(degree))
    stack = [start]
    reached = {start}
    while stack:
        x = stack.pop()
        for y in adjacent[x]:
            if y not in reached:
                reached.add(y)
                stack.append(y)
    return len(reached) == len(degree)


@dataclass(frozen=True)
class Circuit:
    """The edge set of a simple cycle. Construction validates the shape."""

    host: Graph
    edges: frozenset[int]

    def __post_init__(self):
        if not _edge_ids_form_circuit(self.host, self.edges):
            raise ValueError("edge set is not a circuit")

    def key(self) -> tuple[int, ...]:
        """Canonical sort key: the sorted edge-id tuple."""
        return tuple(sorted(self.edges))

    def __len__(self) -> int:
        return len(self.edges)

    def vertex_set(self) -> frozenset[str]:
        out = set()
        for i in self.edges:
            u, v = self.host.endpoints(i)
            out.add(u)
            out.add(v)
        return frozenset(out)

    def pairs(self) -> tuple[tuple[str, str], ...]:
        return tuple(self.host.endpoints(i) for i in self.key())


# -- whole-graph operations --


def star(graph: Graph, v: str) -> EdgeSet:
    """All edges incident to v (empty for an isolated vertex)."""
    return EdgeSet(graph, frozenset(graph.incident_edges(v)))


def components(graph: Graph) -> tuple[tuple[str, ...], ...]:
    """Connected components as sorted vertex tuples, ordered by least label."""
    unseen = set(graph.vertices)
    blocks = []
    for v in graph.vertices:
        if v not in unseen:
            continue
        block = [v]
        unseen.discard(v)
        stack = [v]
        while stack:
            x = stack.pop()
            for ni, _ in graph._adjacency[graph._index[x]]:
                y = graph.vertices[ni]
                if y in unseen:
                    unseen.discard(y)
                    block.append(y)
                    stack.append(y)
        blocks.append(tuple(sorted(block)))
    blocks.sort(key=lambda b: b[0])
    return tuple(blocks)


def delete_edges(graph: Graph, removed: EdgeSet) -> tuple[Graph, tuple[int, ...]]:
    """Remove an edge subset, keeping every vertex.

    Returns the reduced graph and a translation table mapping each new edge
    id to the id it had in the original graph.
    """
    require_same_host(graph, removed)
    keep = [i for i in range(graph.edge_count()) if i not in removed.members]
    reduced = Graph(graph.vertices, tuple(graph.edges[i] for i in keep))
    return reduced, tuple(keep)


def induced_subgraph(graph: Graph, vertices: Iterable[str]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on a vertex subset, keeping the host's vertex order.

    Returns the subgraph and the table mapping each of its edge ids back to
    the host edge id.
    """
    wanted = set()
    for v in vertices:
        wanted.add(graph.require_vertex(v))
    kept_vertices = tuple(v for v in graph.vertices if v in wanted)
    keep = [i for i, (u, v) in enumerate(graph.edges)
            if u in wanted and v in wanted]
    sub = Graph(kept_vertices, tuple(graph.edges[i] for i in keep))
    return sub, tuple(keep)


# -- JSON wire format --


def graph_to_json(graph: Graph) -> dict:
    """Plain-dict form: vertices sorted, edges as endpoint pairs in id order."""
    return {
        "vertices": sorted(graph.vertices),
        "edges": [[u, v] for u, v in graph.edges],
    }


def graph_from_json(data) -> Graph:
    """Parse the wire format, accepting vertices and edges in any order."""
    if not isinstance(data, dict):
        raise FormatError("graph document must be a JSON object")
    if "vertices" not in data or "edges" not in data:
        raise FormatError("graph document needs 'vertices' and 'edges'")
    vertices = data["vertices"]
    edges = data["edges"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise FormatError("'vertices' must be a list of strings")
    if not isinstance(edges, list):
        raise FormatError("'edges' must be a list of endpoint pairs")
    pairs = []
    for k, e in enumerate(edges):
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(x, str) for x in e)):
            raise FormatError(f"edge entry {k} must be a pair of strings")
        pairs.append((e[0], e[1]))
    return Graph(tuple(vertices), tuple(pairs))
