"""One-to-one edge maps between graphs: verification, star classification,
decomposition, and reconstruction of the inducing vertex isomorphism.

The central objects are EdgeMap (a bijection between the edge sets of two
graphs, by id) and the checks built on it:

* check_circuit_injection / check_circuit_isomorphism return a Verdict,
  carrying a concrete witness circuit on failure;
* classify_star_image / classify_star_preimage sort the mapped star of a
  vertex into exactly-a-star, independent set, or a violation witness;
* decompose_by_star_preimage splits the source along an independent star
  preimage into the two sides every preimage edge must cross;
* reconstruct_vertex_isomorphism recovers, for a 3-connected source, the
  unique vertex isomorphism inducing a verified circuit injection.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .circuits import DEFAULT_MAX_CIRCUITS, enumerate_circuits
from .connectivity import is_k_connected
from .errors import (
    DecompositionViolationError,
    FormatError,
    HypothesisViolationError,
    IsolatedVertexError,
    NotABijectionError,
    NotInducedError,
    NotThreeConnectedError,
)
from .graph import (
    Circuit,
    EdgeSet,
    Graph,
    _edge_ids_form_circuit,
    components,
    delete_edges,
    star,
)
from .rng import XorShift64Star


@dataclass(frozen=True)
class EdgeMap:
    """A one-to-one correspondence between the edges of two graphs.

    assignment[i] is the target edge id of source edge i. Construction
    rejects anything that is not a bijection between the full edge sets.
    """

    source: Graph
    target: Graph
    assignment: tuple[int, ...]

    def __post_init__(self):
        m_src = self.source.edge_count()
        m_tgt = self.target.edge_count()
        if m_src != m_tgt:
            raise NotABijectionError(
                f"source has {m_src} edges but target has {m_tgt}")
        if len(self.assignment) != m_src:
            raise NotABijectionError(
                f"assignment covers {len(self.assignment)} of {m_src} edges")
        seen = set()
        for i, j in enumerate(self.assignment):
            if not isinstance(j, int) or not 0 <= j < m_tgt:
                raise NotABijectionError(f"edge {i} maps to invalid id {j!r}")
            if j in seen:
                raise NotABijectionError(f"target edge {j} has two preimages")
            seen.add(j)

    @cached_property
    def _inverse(self) -> tuple[int, ...]:
        inv = [0] * len(self.assignment)
        for i, j in enumerate(self.assignment):
            inv[j] = i
        return tuple(inv)

    def image_of(self, edge_id: int) -> int:
        return self.assignment[edge_id]

    def preimage_of(self, edge_id: int) -> int:
        return self._inverse[edge_id]

    def image(self, edge_ids) -> frozenset[int]:
        return frozenset(self.assignment[i] for i in edge_ids)

    def preimage(self, edge_ids) -> frozenset[int]:
        return frozenset(self._inverse[j] for j in edge_ids)

    def inverted(self) -> "EdgeMap":
        return EdgeMap(self.target, self.source, self._inverse)


def edge_map_to_json(edge_map: EdgeMap) -> dict:
    """Wire form: one [[source pair], [target pair]] entry per source edge id."""
    entries = []
    for i in range(edge_map.source.edge_count()):
        u, v = edge_map.source.endpoints(i)
        x, y = edge_map.target.endpoints(edge_map.image_of(i))
        entries.append([[u, v], [x, y]])
    return {"map": entries}


def edge_map_from_json(source: Graph, target: Graph, data) -> EdgeMap:
    """Parse the wire format against two already-loaded graphs.

    Endpoint order inside a pair does not matter. Rejects pairs naming no
    edge, repeated or missing source edges, repeated target edges, and
    target graphs with isolated vertices (the map must be onto a graph
    that its edges fully cover).
    """
    if not isinstance(data, dict) or "map" not in data:
        raise FormatError("map document needs a 'map' entry")
    entries = data["map"]
    if not isinstance(entries, list):
        raise FormatError("'map' must be a list of pair-of-pairs entries")
    for v in target.vertices:
        if target.degree(v) == 0:
            raise IsolatedVertexError(
                f"target vertex {v!r} is isolated; the map cannot be onto")
    assignment: dict[int, int] = {}
    for k, entry in enumerate(entries):
        if (not isinstance(entry, list) or len(entry) != 2
                or any(not isinstance(p, list) or len(p) != 2 for p in entry)):
            raise FormatError(f"map entry {k} must be [[u, v], [x, y]]")
        (u, v), (x, y) = entry
        i = source.edge_id(u, v)
        j = target.edge_id(x, y)
        if i in assignment:
            raise NotABijectionError(
                f"source edge ({u!r}, {v!r}) appears twice in the map")
        assignment[i] = j
    if len(assignment) != source.edge_count():
        raise NotABijectionError(
            f"map covers {len(assignment)} of {source.edge_count()} source edges")
    return EdgeMap(source, target,
                   tuple(assignment[i] for i in range(source.edge_count())))


# -- verification -------------------------------------------------------------


@dataclass(frozen=True)
class MapWitness:
    """A circuit whose mapped edge set is not a circuit.

    direction "forward": circuit lives in the source, mapped in the target.
    direction "reverse": circuit lives in the target, mapped in the source.
    """

    direction: str
    circuit: Circuit
    mapped: EdgeSet


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verification run. Truthy iff the check passed."""

    passed: bool
    mode: str
    circuits_checked: int
    witness: MapWitness | None = None

    def __bool__(self) -> bool:
        return self.passed


def check_circuit_injection(edge_map: EdgeMap, mode: str = "exhaustive",
                            samples: int = 500, seed: int = 1,
                            max_count: int = DEFAULT_MAX_CIRCUITS) -> Verdict:
    """Does the map send every circuit of the source to a circuit of the target?

    mode "exhaustive" checks every circuit (canonical order, so the witness
    of a failing map is the canonically first counterexample). mode
    "sampled" checks up to `samples` circuits drawn from a seeded
    generator: fundamental circuits of a random spanning tree, then random
    symmetric differences of known circuits filtered back to circuits. A
    sampled Pass is evidence, not proof; a sampled Fail is always genuine.
    """
    if mode == "exhaustive":
        pool = (c.edges for c in enumerate_circuits(edge_map.source, max_count))
    elif mode == "sampled":
        pool = _sampled_circuits(edge_map.source, samples, seed)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    checked = 0
    for ids in pool:
        checked += 1
        image = edge_map.image(ids)
        if not _edge_ids_form_circuit(edge_map.target, image):
            witness = MapWitness("forward",
                                 Circuit(edge_map.source, ids),
                                 EdgeSet(edge_map.target, image))
            return Verdict(False, mode, checked, witness)
    return Verdict(True, mode, checked)


def check_circuit_isomorphism(edge_map: EdgeMap,
                              max_count: int = DEFAULT_MAX_CIRCUITS) -> Verdict:
    """Do circuits correspond in both directions under the map?

    Runs the exhaustive forward check first, then the reverse direction on
    the target's circuits. The verdict's witness names whichever circuit
    breaks first, in its own graph.
    """
    forward = check_circuit_injection(edge_map, "exhaustive", max_count=max_count)
    if not forward.passed:
        return forward
    checked = forward.circuits_checked
    for circuit in enumerate_circuits(edge_map.target, max_count):
        checked += 1
        pre = edge_map.preimage(circuit.edges)
        if not _edge_ids_form_circuit(edge_map.source, pre):
            witness = MapWitness("reverse", circuit,
                                 EdgeSet(edge_map.source, pre))
            return Verdict(False, "exhaustive", checked, witness)
    return Verdict(True, "exhaustive", checked)


def _sampled_circuits(graph: Graph, samples: int, seed: int):
    """Seeded stream of distinct circuits: spanning-tree fundamental circuits,
    then random pairwise symmetric differences kept when they are circuits."""
    rng = XorShift64Star(seed)
    order = list(range(graph.edge_count()))
    rng.shuffle(order)

    # Kruskal-style forest over the shuffled edge order.
    parent = {v: v for v in graph.vertices}

    def find(v: str) -> str:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    tree_adj: dict[str, list[tuple[str, int]]] = {v: [] for v in graph.vertices}
    chords = []
    for eid in order:
        u, v = graph.endpoints(eid)
        ru, rv = find(u), find(v)
        if ru == rv:
            chords.append(eid)
        else:
            parent[ru] = rv
            tree_adj[u].append((v, eid))
            tree_adj[v].append((u, eid))

    def tree_path(u: str, v: str) -> list[int]:
        back: dict[str, tuple[str, int]] = {u: (u, -1)}
        stack = [u]
        while stack:
            x = stack.pop()
            if x == v:
                break
            for y, eid in tree_adj[x]:
                if y not in back:
                    back[y] = (x, eid)
                    stack.append(y)
        ids = []
        x = v
        while x != u:
            x, eid = back[x]
            ids.append(eid)
        return ids

    emitted: set[frozenset[int]] = set()
    pool: list[frozenset[int]] = []
    produced = 0
    for eid in chords:
        if produced >= samples:
            return
        u, v = graph.endpoints(eid)
        ids = frozenset(tree_path(u, v) + [eid])
        if ids not in emitted:
            emitted.add(ids)
            pool.append(ids)
            produced += 1
            yield ids

    attempts = 0
    limit = samples * 20
    while produced < samples and len(pool) >= 2 and attempts < limit:
        attempts += 1
        i = rng.randrange(len(pool))
        j = rng.randrange(len(pool))
        if i == j:
            continue
        mix = pool[i] ^ pool[j]
        if mix and mix not in emitted and _edge_ids_form_circuit(graph, mix):
            emitted.add(mix)
            pool.append(mix)
            produced += 1
            yield mix


# -- star classification ------------------------------------------------------


@dataclass(frozen=True)
class StarAt:
    """The mapped star is exactly the star of one vertex."""

    vertex: str


@dataclass(frozen=True)
class IndependentEdges:
    """The mapped star is pairwise nonadjacent."""


@dataclass(frozen=True)
class StarViolation:
    """The mapped star is neither a full star nor independent.

    kind "no_common_vertex": edges holds two adjacent members plus one
    missing their shared vertex. kind "partial_star": every member passes
    through `vertex` but edges holds one edge of that star left uncovered.
    """

    kind: str
    edges: tuple[int, ...]
    vertex: str | None = None


StarImageClass = StarAt | IndependentEdges | StarViolation


def _classify_edge_ids(graph: Graph, ids: frozenset[int]) -> StarImageClass:
    ordered = sorted(ids)
    pairs = [frozenset(graph.endpoints(i)) for i in ordered]

    common = set(pairs[0])
    for p in pairs[1:]:
        common &= p

    adjacent = None
    for x in range(len(ordered)):
        for y in range(x + 1, len(ordered)):
            if pairs[x] & pairs[y]:
                adjacent = (x, y)
                break
        if adjacent:
            break

    if adjacent is None:
        # Pairwise nonadjacent. A single edge can still be a complete
        # star, when its endpoint has degree 1; try endpoints in sorted
        # order so the degenerate case stays deterministic.
        if len(ordered) == 1:
            for w in sorted(pairs[0]):
                if set(graph.incident_edges(w)) == ids:
                    return StarAt(w)
        return IndependentEdges()

    if common:
        (w,) = common
        star_ids = set(graph.incident_edges(w))
        if star_ids == ids:
            return StarAt(w)
        extra = min(star_ids - ids)
        return StarViolation("partial_star", (extra,), w)

    # Some two members meet but no vertex carries them all: witness the
    # least adjacent pair plus a least member missing their shared vertex.
    x, y = adjacent
    (shared,) = pairs[x] & pairs[y]
    third = next(i for i, p in zip(ordered, pairs) if shared not in p)
    return StarViolation("no_common_vertex", (ordered[x], ordered[y], third))


def classify_star_image(edge_map: EdgeMap, v: str) -> StarImageClass:
    """Classify the image of v's star in the target (target edge ids)."""
    ids = star(edge_map.source, v).members
    if not ids:
        raise IsolatedVertexError(f"source vertex {v!r} has no incident edges")
    return _classify_edge_ids(edge_map.target, edge_map.image(ids))


def classify_star_preimage(edge_map: EdgeMap, w: str) -> StarImageClass:
    """Classify the preimage of w's star in the source (source edge ids)."""
    ids = star(edge_map.target, w).members
    if not ids:
        raise IsolatedVertexError(f"target vertex {w!r} has no incident edges")
    return _classify_edge_ids(edge_map.source, edge_map.preimage(ids))


# -- decomposition ------------------------------------------------------------


def decompose_by_star_preimage(edge_map: EdgeMap, w: str
                               ) -> tuple[tuple[str, ...], tuple[str, ...], EdgeSet]:
    """Split the source along the preimage of w's star.

    For a verified circuit injection from a 2-connected source whose star
    preimage at w is an independent set, deleting that preimage leaves
    exactly two components, with every preimage edge crossing between
    them. Returns (side containing the least label, other side, crossing
    edges). Guard failures raise HypothesisViolationError; a wrong
    component structure raises DecompositionViolationError and means the
    map was not actually a circuit injection.
    """
    if not is_k_connected(edge_map.source, 2):
        raise HypothesisViolationError("decomposition needs a 2-connected source")
    kind = classify_star_preimage(edge_map, w)
    if not isinstance(kind, IndependentEdges):
        raise HypothesisViolationError(
            f"star preimage of {w!r} is {type(kind).__name__}, not independent")
    crossing = EdgeSet(edge_map.source,
                       edge_map.preimage(star(edge_map.target, w).members))
    reduced, _ = delete_edges(edge_map.source, crossing)
    blocks = components(reduced)
    if len(blocks) != 2:
        raise DecompositionViolationError(
            f"deleting the preimage left {len(blocks)} components, not 2")
    side_a, side_b = set(blocks[0]), set(blocks[1])
    for eid in crossing:
        u, v = edge_map.source.endpoints(eid)
        if not ((u in side_a and v in side_b) or (u in side_b and v in side_a)):
            raise DecompositionViolationError(
                f"preimage edge ({u!r}, {v!r}) does not cross the split")
    return blocks[0], blocks[1], crossing


# -- reconstruction -----------------------------------------------------------


@dataclass(frozen=True)
class VertexIso:
    """A bijective vertex relabeling, stored as (source, target) pairs."""

    pairs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        sources = {p[0] for p in self.pairs}
        targets = {p[1] for p in self.pairs}
        if len(sources) != len(self.pairs) or len(targets) != len(self.pairs):
            raise NotABijectionError("vertex map repeats a source or target")

    @classmethod
    def from_dict(cls, mapping: dict[str, str]) -> "VertexIso":
        return cls(tuple(sorted(mapping.items())))

    @cached_property
    def as_dict(self) -> dict[str, str]:
        return dict(self.pairs)

    def apply(self, v: str) -> str:
        return self.as_dict[v]


def is_induced_by(edge_map: EdgeMap, iso: VertexIso) -> bool:
    """Does the edge map act exactly as the vertex relabeling iso?

    True iff for every source edge (u, v), the image edge's endpoints are
    precisely {iso(u), iso(v)}.
    """
    table = iso.as_dict
    if set(table) != set(edge_map.source.vertices):
        return False
    for i in range(edge_map.source.edge_count()):
        u, v = edge_map.source.endpoints(i)
        x, y = edge_map.target.endpoints(edge_map.image_of(i))
        if {table[u], table[v]} != {x, y}:
            return False
    return True


def reconstruct_vertex_isomorphism(edge_map: EdgeMap,
                                   check_connectivity: bool = True) -> VertexIso:
    """Recover the vertex isomorphism inducing a circuit injection.

    For a verified circuit injection whose source is 3-connected, every
    star maps onto exactly one target star, and reading off those centers
    yields the unique inducing vertex isomorphism. Raises
    NotThreeConnectedError when the source guard fails (suppress with
    check_connectivity=False to probe other maps), and NotInducedError at
    the first vertex whose star image is not a full star, or when the
    collected centers fail to be a bijection.
    """
    if check_connectivity and not is_k_connected(edge_map.source, 3):
        raise NotThreeConnectedError(
            "reconstruction requires a 3-connected source")
    pairs = []
    for v in edge_map.source.vertices:
        if edge_map.source.degree(v) == 0:
            raise NotInducedError(
                f"source vertex {v!r} is isolated", vertex=v)
        kind = classify_star_image(edge_map, v)
        if not isinstance(kind, StarAt):
            raise NotInducedError(
                f"star image of {v!r} is {type(kind).__name__}, not a star",
                vertex=v, star_class=kind)
        pairs.append((v, kind.vertex))
    centers = {w for _, w in pairs}
    if len(centers) != len(pairs) or centers != set(edge_map.target.vertices):
        raise NotInducedError("star centers do not form a vertex bijection")
    iso = VertexIso(tuple(pairs))
    if not is_induced_by(edge_map, iso):
        raise NotInducedError("collected star centers do not induce the map")
    return iso
