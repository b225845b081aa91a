"""Instance builders: the counterexample family, a catalog of named graphs,
permuted edge maps, and seeded random graphs.

The counterexample family is the reason 3-connectivity cannot be weakened
in reconstruction: for any prime p > 2 it yields a circuit injection from
a 2-connected source onto a p-connected complete bipartite graph that is
not induced by any vertex relabeling.
"""

from __future__ import annotations

from .connectivity import is_k_connected
from .edge_maps import EdgeMap
from .errors import (
    GenerationFailedError,
    InvalidPrimeError,
    NotABijectionError,
    UnknownNameError,
)
from .graph import Graph, build_graph
from .rng import XorShift64Star


# -- the counterexample family ------------------------------------------------


def theta_graph(p: int) -> Graph:
    """Two hubs u and w joined by p internally disjoint paths of p edges.

    Vertices: "u", "w", and interiors "x_{i}_{k}" for path i, position k
    (1 <= k <= p-1). Edge ids run path-major: edge (i, j) is i*p + j, with
    j = 0 incident to hub u and j = p-1 incident to hub w.
    """
    if p < 2:
        raise UnknownNameError("theta graph needs at least 2 edges per path")
    vertices = ["u", "w"]
    for i in range(p):
        for k in range(1, p):
            vertices.append(f"x_{i}_{k}")
    edges = []
    for i in range(p):
        for j in range(p):
            lo = "u" if j == 0 else f"x_{i}_{j}"
            hi = "w" if j == p - 1 else f"x_{i}_{j + 1}"
            edges.append((lo, hi))
    return build_graph(vertices, edges)


def complete_bipartite(p: int) -> Graph:
    """K_{p,p} on sides b0..b{p-1} and c0..c{p-1}; edge (j, t) has id j*p + t."""
    if p < 1:
        raise UnknownNameError("complete bipartite part size must be positive")
    vertices = [f"b{j}" for j in range(p)] + [f"c{t}" for t in range(p)]
    edges = [(f"b{j}", f"c{t}") for j in range(p) for t in range(p)]
    return build_graph(vertices, edges)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def build_counterexample(p: int) -> tuple[Graph, Graph, EdgeMap]:
    """The circuit injection that no vertex isomorphism induces.

    For prime p > 2: source is the theta graph with p paths of p edges,
    target is K_{p,p}, and edge (i, j) of the source maps to the target
    edge (b_j, c_{(i+j) mod p}). Every source circuit (a union of two
    hub-to-hub paths) lands on a circuit of the target, but the map is not
    a circuit isomorphism and the source is 2- but not 3-connected.
    """
    if not isinstance(p, int) or not _is_prime(p) or p <= 2:
        raise InvalidPrimeError(f"parameter must be a prime greater than 2, got {p!r}")
    source = theta_graph(p)
    target = complete_bipartite(p)
    assignment = [0] * source.edge_count()
    for i in range(p):
        for j in range(p):
            assignment[i * p + j] = j * p + (i + j) % p
    return source, target, EdgeMap(source, target, tuple(assignment))


# -- permuted maps ------------------------------------------------------------


def permuted_edge_map(graph: Graph, relabel: dict[str, str]) -> EdgeMap:
    """Edge map of the vertex relabeling `relabel` applied to graph.

    The target is the relabeled copy with vertices sorted and edges stored
    as sorted pairs in sorted order, so the edge-id assignment is a
    nontrivial permutation in general. By construction the result is
    induced by the relabeling.
    """
    if set(relabel) != set(graph.vertices):
        raise NotABijectionError("relabeling must cover exactly the vertices")
    if len(set(relabel.values())) != len(relabel):
        raise NotABijectionError("relabeling repeats a target label")
    mapped = []
    for u, v in graph.edges:
        x, y = relabel[u], relabel[v]
        mapped.append((x, y) if x < y else (y, x))
    target_edges = sorted(mapped)
    target = Graph(tuple(sorted(relabel.values())), tuple(target_edges))
    position = {pair: j for j, pair in enumerate(target_edges)}
    return EdgeMap(graph, target, tuple(position[pair] for pair in mapped))


# -- named catalog ------------------------------------------------------------


def _complete(n: int) -> Graph:
    vertices = [str(i) for i in range(n)]
    edges = [(str(i), str(j)) for i in range(n) for j in range(i + 1, n)]
    return build_graph(vertices, edges)


def _wheel(n: int) -> Graph:
    if n < 3:
        raise UnknownNameError("wheel rim needs at least 3 vertices")
    rim = [f"r{i}" for i in range(n)]
    edges = [(rim[i], rim[(i + 1) % n]) for i in range(n)]
    edges += [("hub", r) for r in rim]
    return build_graph(["hub"] + rim, edges)


def _prism() -> Graph:
    edges = [("a0", "a1"), ("a1", "a2"), ("a2", "a0"),
             ("b0", "b1"), ("b1", "b2"), ("b2", "b0"),
             ("a0", "b0"), ("a1", "b1"), ("a2", "b2")]
    return build_graph(["a0", "a1", "a2", "b0", "b1", "b2"], edges)


def _cube() -> Graph:
    vertices = [f"{i:03b}" for i in range(8)]
    edges = []
    for i in range(8):
        for bit in range(3):
            j = i ^ (1 << bit)
            if j > i:
                edges.append((vertices[i], vertices[j]))
    return build_graph(vertices, edges)


def _double_bowtie() -> Graph:
    """Two bowties joined by a 4-edge matching, cross-wired so the whole
    graph is 3-connected even though each side has a cutpoint."""
    edges = [("p0", "p1"), ("p0", "p2"), ("p1", "p2"),
             ("p0", "p3"), ("p0", "p4"), ("p3", "p4"),
             ("q0", "q1"), ("q0", "q2"), ("q1", "q2"),
             ("q0", "q3"), ("q0", "q4"), ("q3", "q4"),
             ("p1", "q1"), ("p2", "q3"), ("p3", "q2"), ("p4", "q4")]
    vertices = [f"p{i}" for i in range(5)] + [f"q{i}" for i in range(5)]
    return build_graph(vertices, edges)


def named_graph(name: str, size: int | None = None) -> Graph:
    """Catalog lookup. Recognized: K4, K5, K33, prism, Q3, double_bowtie
    (no size), wheel (rim size, or compact W5 / W6 forms), theta (path
    count, or compact theta3 forms).
    """
    key = name.strip().lower().replace("-", "_")
    plain = {
        "k4": lambda: _complete(4),
        "k5": lambda: _complete(5),
        "k33": lambda: complete_bipartite(3),
        "prism": _prism,
        "q3": _cube,
        "cube": _cube,
        "double_bowtie": _double_bowtie,
    }
    if key in plain:
        if size is not None:
            raise UnknownNameError(f"{name!r} does not take a size parameter")
        return plain[key]()
    for prefix, builder in (("w", _wheel), ("wheel", _wheel),
                            ("theta", theta_graph)):
        if key == prefix:
            if size is None:
                raise UnknownNameError(f"{name!r} needs a size parameter")
            return builder(size)
        if key.startswith(prefix) and key[len(prefix):].isdigit():
            if size is not None:
                raise UnknownNameError(
                    f"{name!r} already carries its size parameter")
            return builder(int(key[len(prefix):]))
    raise UnknownNameError(f"no catalog entry named {name!r}")


# -- seeded random graphs -----------------------------------------------------


def _random_cycle_with_chords(n: int, rng: XorShift64Star,
                              chords: int) -> tuple[list[str], list[tuple[str, str]]]:
    labels = [f"v{i}" for i in range(n)]
    order = list(range(n))
    rng.shuffle(order)
    edges = []
    present = set()
    for k in range(n):
        u, v = labels[order[k]], labels[order[(k + 1) % n]]
        edges.append((u, v))
        present.add(frozenset((u, v)))
    missing = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)
               if frozenset((labels[i], labels[j])) not in present]
    for _ in range(min(chords, len(missing))):
        pick = rng.randrange(len(missing))
        edges.append(missing.pop(pick))
    return labels, edges


def random_two_connected(n: int, seed: int) -> Graph:
    """Random Hamiltonian cycle plus a seeded number of chords; always
    2-connected since chords never break the cycle."""
    if n < 3:
        raise GenerationFailedError("2-connected graphs need at least 3 vertices")
    rng = XorShift64Star(seed)
    labels, edges = _random_cycle_with_chords(n, rng, rng.randrange(n + 1))
    return build_graph(labels, edges)


def random_three_connected(n: int, seed: int) -> Graph:
    """Seeded random 3-connected graph on n >= 4 vertices.

    Start from a random Hamiltonian cycle, add random chords until the
    minimum degree reaches 3, then keep adding chords until the exhaustive
    connectivity check passes. Densifying toward the complete graph makes
    success certain, but a retry bound guards the loop anyway.
    """
    if n < 4:
        raise GenerationFailedError(
            "3-connected graphs need at least 4 vertices")
    rng = XorShift64Star(seed)
    labels, edges = _random_cycle_with_chords(n, rng, 0)
    present = {frozenset(e) for e in edges}
    missing = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)
               if frozenset((labels[i], labels[j])) not in present]

    degree = {v: 2 for v in labels}
    limit = len(missing)
    for _ in range(limit + 1):
        if min(degree.values()) >= 3:
            graph = build_graph(labels, edges)
            if is_k_connected(graph, 3):
                return graph
        if not missing:
            break
        pick = rng.randrange(len(missing))
        u, v = missing.pop(pick)
        edges.append((u, v))
        degree[u] += 1
        degree[v] += 1
    raise GenerationFailedError(
        f"could not reach a 3-connected graph on {n} vertices")
