"""Vertex connectivity checks and internally disjoint path pairs.

k-connectivity is decided by exhaustive removal of vertex subsets, which
keeps the implementation oracle-grade simple at desk scale. The disjoint
path search runs two rounds of augmentation on the standard vertex-split
flow network, with all iteration in index order so results are
deterministic for a given graph.
"""

from __future__ import annotations

from itertools import combinations
from typing import Collection

from .errors import NoTwoPathsError
from .graph import Graph, Path


def _connected_after_removal(graph: Graph, removed: set[int]) -> bool:
    """Is the graph minus the removed vertex indices connected?
    A graph with no remaining vertices or a single one counts as connected."""
    remaining = [i for i in range(graph.vertex_count()) if i not in removed]
    if len(remaining) <= 1:
        return True
    start = remaining[0]
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for nbr, _ in graph._adjacency[x]:
            if nbr not in removed and nbr not in seen:
                seen.add(nbr)
                stack.append(nbr)
    return len(seen) == len(remaining)


def is_k_connected(graph: Graph, k: int) -> bool:
    """True iff the graph has more than k vertices and no set of fewer than
    k vertices disconnects it. Under this convention K_n is (n-1)-connected
    but not n-connected.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    n = graph.vertex_count()
    if n <= k:
        return False
    # Any disconnecting set of size < k-1 extends to one of size exactly
    # k-1 (at least three vertices remain at every extension step), so
    # checking subsets of size k-1 alone is sufficient.
    for subset in combinations(range(n), k - 1):
        if not _connected_after_removal(graph, set(subset)):
            return False
    return True


def cutpoints(graph: Graph) -> tuple[str, ...]:
    """Vertices whose removal increases the number of components, sorted."""
    def count_components(removed: set[int]) -> int:
        remaining = [i for i in range(graph.vertex_count()) if i not in removed]
        unseen = set(remaining)
        blocks = 0
        for s in remaining:
            if s not in unseen:
                continue
            blocks += 1
            unseen.discard(s)
            stack = [s]
            while stack:
                x = stack.pop()
                for nbr, _ in graph._adjacency[x]:
                    if nbr in unseen:
                        unseen.discard(nbr)
                        stack.append(nbr)
        return blocks

    base = count_components(set())
    out = [v for i, v in enumerate(graph.vertices)
           if count_components({i}) > base]
    return tuple(sorted(out))


def two_disjoint_paths(graph: Graph, a: str, b: str,
                       forbidden: Collection[str] = ()) -> tuple[Path, Path]:
    """Two internally vertex-disjoint paths from a to b avoiding forbidden.

    Raises NoTwoPathsError when no such pair exists (that is, when a and b
    are not 2-connected to each other in the graph minus forbidden).
    """
    graph.require_vertex(a)
    graph.require_vertex(b)
    if a == b:
        raise ValueError("endpoints must be distinct")
    banned = set()
    for v in forbidden:
        banned.add(graph.require_vertex(v))
    if a in banned or b in banned:
        raise ValueError("endpoints may not be forbidden")

    index = graph._index
    ai, bi = index[a], index[b]
    banned_idx = {index[v] for v in banned}

    # Vertex-split flow network with unit capacities. Nodes are
    # ('out', v) and ('in', v); each internal vertex has in->out capacity
    # 1; each edge (u, w) contributes out_u->in_w and out_w->in_u.
    # Source is ('out', a), sink is ('in', b).
    source = ("out", ai)
    sink = ("in", bi)

    def arcs_from(node):
        kind, v = node
        if kind == "in":
            if v not in (ai, bi):
                yield ("out", v)
        else:
            for nbr, _ in graph._adjacency[v]:
                if nbr not in banned_idx:
                    yield ("in", nbr)

    flow: dict[tuple, int] = {}

    def augment() -> bool:
        # Depth-first search in the residual network, index order.
        parent = {source: None}
        stack = [source]
        while stack:
            node = stack.pop()
            if node == sink:
                # Unwind and flip the path.
                x = sink
                while parent[x] is not None:
                    p = parent[x]
                    if flow.get((x, p), 0) == 1:
                        flow[(x, p)] = 0
                    else:
                        flow[(p, x)] = 1
                    x = p
                return True
            candidates = []
            for nxt in arcs_from(node):
                if nxt not in parent and flow.get((node, nxt), 0) == 0:
                    candidates.append(nxt)
            # Residual reverse arcs: cancel existing flow into this node.
            for (x, y), f in flow.items():
                if f == 1 and y == node and x not in parent:
                    candidates.append(x)
            for nxt in sorted(candidates, reverse=True):
                parent[nxt] = node
                stack.append(nxt)
        return False

    if not (augment() and augment()):
        raise NoTwoPathsError(
            f"no two internally disjoint paths join {a!r} and {b!r}")

    # Decompose the two units of flow into vertex sequences. Augmentation
    # cancellation keeps net flow integral, so from each node there is at
    # most one saturated outgoing arc not cancelled by a reverse unit.
    used_first_arcs = set()

    def walk() -> list[str]:
        sequence = [ai]
        node = source
        while node != sink:
            step = None
            for nxt in arcs_from(node):
                if flow.get((node, nxt), 0) == 1 and (node, nxt) not in used_first_arcs:
                    step = nxt
                    break
            if step is None:
                raise NoTwoPathsError("flow decomposition failed")
            used_first_arcs.add((node, step))
            node = step
            if node[0] == "in":
                sequence.append(node[1])
                if node != sink:
                    node = ("out", node[1])
        return [graph.vertices[i] for i in sequence]

    first = Path.from_vertices(graph, walk())
    second = Path.from_vertices(graph, walk())
    _validate_disjoint_pair(graph, a, b, first, second)
    return first, second


def _validate_disjoint_pair(graph: Graph, a: str, b: str,
                            first: Path, second: Path) -> None:
    if first.ends() != (a, b) or second.ends() != (a, b):
        raise NoTwoPathsError("internal check failed: wrong endpoints")
    shared = set(first.vertices) & set(second.vertices)
    if shared != {a, b}:
        raise NoTwoPathsError(
            f"internal check failed: paths share {sorted(shared)}")
    if set(first.edges) & set(second.edges):
        raise NoTwoPathsError("internal check failed: paths share an edge")
