"""Randomized invariants, checked with hypothesis on small graphs."""

from hypothesis import given, settings, strategies as st

from circuitmap import (
    EdgeSet,
    build_graph,
    check_circuit_injection,
    circuit_and_attached_path,
    classify_star_image,
    classify_star_preimage,
    components,
    cutpoints,
    delete_edges,
    enumerate_circuits,
    graph_from_json,
    graph_to_json,
    is_circuit,
    is_k_connected,
    named_graph,
    permuted_edge_map,
    random_two_connected,
    reconstruct_vertex_isomorphism,
    star,
    StarAt,
    two_disjoint_paths,
    validate_attached_path,
)
from conftest import CORPUS, seeded_relabel
from oracle import brute_circuits, brute_components, brute_is_k_connected


@st.composite
def graphs(draw, max_vertices=7, max_edges=10):
    n = draw(st.integers(1, max_vertices))
    labels = [f"v{i}" for i in range(n)]
    possible = [(labels[i], labels[j])
                for i in range(n) for j in range(i + 1, n)]
    if possible:
        edges = draw(st.lists(st.sampled_from(possible), unique=True,
                              max_size=min(len(possible), max_edges)))
    else:
        edges = []
    return build_graph(labels, edges)


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_each_edge_sits_in_exactly_its_two_endpoint_stars(g):
    for eid in range(g.edge_count()):
        u, v = g.endpoints(eid)
        holders = [x for x in g.vertices if eid in star(g, x).members]
        assert sorted(holders) == sorted((u, v))


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_json_round_trip(g):
    import json

    payload = graph_to_json(g)
    assert graph_from_json(payload) == g
    assert json.dumps(graph_to_json(graph_from_json(payload))) == json.dumps(payload)


@settings(max_examples=40, deadline=None)
@given(graphs(max_vertices=6, max_edges=9))
def test_enumeration_matches_powerset_oracle(g):
    assert {c.edges for c in enumerate_circuits(g)} == brute_circuits(g)


@settings(max_examples=40, deadline=None)
@given(graphs(max_vertices=6, max_edges=9))
def test_circuit_symmetric_differences_stay_even(g):
    circuits = enumerate_circuits(g)
    for a in circuits[:6]:
        for b in circuits[:6]:
            mix = a.edges ^ b.edges
            degree = {}
            for eid in mix:
                for v in g.endpoints(eid):
                    degree[v] = degree.get(v, 0) + 1
            assert all(d % 2 == 0 for d in degree.values())
            # an even edge set is a circuit only if the library agrees
            if mix:
                is_circuit(g, EdgeSet(g, mix))


@settings(max_examples=30, deadline=None)
@given(graphs(max_vertices=6, max_edges=9), st.integers(1, 4))
def test_connectivity_matches_oracle(g, k):
    assert is_k_connected(g, k) is brute_is_k_connected(g, k)


@settings(max_examples=40, deadline=None)
@given(graphs(max_vertices=6, max_edges=9))
def test_two_connected_iff_connected_without_cutpoints(g):
    expected = (g.vertex_count() >= 3 and is_k_connected(g, 1)
                and not cutpoints(g))
    assert is_k_connected(g, 2) is expected


@settings(max_examples=60, deadline=None)
@given(graphs(), st.data())
def test_components_partition_and_translation(g, data):
    ids = data.draw(st.sets(st.sampled_from(range(g.edge_count())))
                    if g.edge_count() else st.just(set()))
    reduced, old_id = delete_edges(g, EdgeSet(g, frozenset(ids)))
    blocks = components(reduced)
    assert sorted(v for b in blocks for v in b) == sorted(g.vertices)
    assert [set(b) for b in blocks] == brute_components(reduced)
    for new, old in enumerate(old_id):
        assert reduced.endpoints(new) == g.endpoints(old)


@settings(max_examples=30, deadline=None)
@given(st.integers(4, 9), st.integers(0, 2**32), st.data())
def test_disjoint_paths_on_random_two_connected(n, seed, data):
    g = random_two_connected(n, seed)
    a = data.draw(st.sampled_from(g.vertices))
    b = data.draw(st.sampled_from([v for v in g.vertices if v != a]))
    p, q = two_disjoint_paths(g, a, b)
    assert p.ends() == (a, b) and q.ends() == (a, b)
    assert set(p.vertices) & set(q.vertices) == {a, b}
    assert not set(p.edges) & set(q.edges)


@settings(max_examples=30, deadline=None)
@given(st.integers(4, 9), st.integers(0, 2**32), st.data())
def test_attached_path_postcondition(n, seed, data):
    g = random_two_connected(n, seed)
    a = data.draw(st.sampled_from(g.vertices))
    b = data.draw(st.sampled_from([v for v in g.vertices if v != a]))
    c = data.draw(st.sampled_from([v for v in g.vertices if v not in (a, b)]))
    circuit, path, t = circuit_and_attached_path(g, a, b, c)
    validate_attached_path(g, a, b, c, circuit, path, t)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(CORPUS), st.integers(0, 2**32))
def test_relabeling_round_trip(name, seed):
    g = named_graph(name)
    relabel = seeded_relabel(g, seed)
    f = permuted_edge_map(g, relabel)
    assert reconstruct_vertex_isomorphism(f).as_dict == relabel
    for v in g.vertices:
        assert classify_star_image(f, v) == StarAt(relabel[v])
    inverse = {w: v for v, w in relabel.items()}
    for w in f.target.vertices:
        assert classify_star_preimage(f, w) == StarAt(inverse[w])


@settings(max_examples=25, deadline=None)
@given(st.integers(4, 7), st.integers(0, 2**32), st.integers(0, 2**32))
def test_sampled_failures_are_sound(n, seed, shuffle_seed):
    from circuitmap import EdgeMap
    from circuitmap.rng import XorShift64Star

    g = random_two_connected(n, seed)
    images = list(range(g.edge_count()))
    XorShift64Star(shuffle_seed).shuffle(images)
    f = EdgeMap(g, g, tuple(images))
    sampled = check_circuit_injection(f, mode="sampled", samples=40,
                                      seed=seed + 1)
    exhaustive = check_circuit_injection(f)
    if not sampled.passed:
        assert not exhaustive.passed  # sampling may miss, never invent
        assert is_circuit(g, EdgeSet(g, sampled.witness.circuit.edges))
        assert not is_circuit(g, sampled.witness.mapped)
