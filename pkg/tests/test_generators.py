import pytest

from circuitmap import (
    GenerationFailedError,
    InvalidPrimeError,
    NotABijectionError,
    UnknownNameError,
    build_counterexample,
    build_graph,
    check_circuit_injection,
    complete_bipartite,
    enumerate_circuits,
    is_k_connected,
    named_graph,
    permuted_edge_map,
    random_three_connected,
    random_two_connected,
    reconstruct_vertex_isomorphism,
    theta_graph,
)
from circuitmap.rng import XorShift64Star
from oracle import brute_is_k_connected


class TestTheta:
    def test_shape(self, theta3):
        assert theta3.vertices[:2] == ("u", "w")
        assert theta3.vertex_count() == 8
        assert theta3.edge_count() == 9
        assert theta3.endpoints(0) == ("u", "x_0_1")
        assert theta3.endpoints(2) == ("x_0_2", "w")
        assert theta3.degree("u") == 3 and theta3.degree("x_1_1") == 2

    def test_path_edge_ids_are_contiguous(self):
        g = theta_graph(5)
        # path i occupies ids i*5 .. i*5+4
        assert g.endpoints(5) == ("u", "x_1_1")
        assert g.endpoints(9) == ("x_1_4", "w")

    def test_small_sizes_rejected(self):
        with pytest.raises(UnknownNameError):
            theta_graph(1)


class TestCompleteBipartite:
    def test_shape(self):
        g = complete_bipartite(3)
        assert g.vertices == ("b0", "b1", "b2", "c0", "c1", "c2")
        assert g.edge_count() == 9
        assert g.endpoints(0) == ("b0", "c0")
        assert g.endpoints(5) == ("b1", "c2")
        assert g == named_graph("K33")


class TestCounterexample:
    def test_p3_shapes(self):
        src, tgt, f = build_counterexample(3)
        assert (src.vertex_count(), src.edge_count()) == (8, 9)
        assert tgt == complete_bipartite(3)
        # image of the edge at position j on path i is (b_j, c_{(i+j) mod p})
        assert tgt.endpoints(f.image_of(0)) == ("b0", "c0")
        assert tgt.endpoints(f.image_of(5)) == ("b2", "c0")
        assert tgt.endpoints(f.image_of(7)) == ("b1", "c0")

    def test_p5_shapes(self):
        src, tgt, _ = build_counterexample(5)
        assert (src.vertex_count(), src.edge_count()) == (22, 25)
        assert (tgt.vertex_count(), tgt.edge_count()) == (10, 25)
        assert len(enumerate_circuits(src)) == 10

    @pytest.mark.parametrize("p", [2, 4, 6, 9, 1, 0, -5])
    def test_bad_sizes_rejected(self, p):
        with pytest.raises(InvalidPrimeError):
            build_counterexample(p)

    def test_non_integer_rejected(self):
        with pytest.raises(InvalidPrimeError):
            build_counterexample(3.0)


class TestPermutedEdgeMap:
    def test_identity_relabeling(self, k4):
        f = permuted_edge_map(k4, {v: v for v in k4.vertices})
        assert f.assignment == tuple(range(6))
        assert f.target == k4

    def test_round_trip(self):
        g = named_graph("W5")
        relabel = dict(zip(sorted(g.vertices), ["r2", "r0", "hub", "r4", "r1", "r3"]))
        f = permuted_edge_map(g, relabel)
        assert check_circuit_injection(f).passed
        assert reconstruct_vertex_isomorphism(f).as_dict == relabel

    def test_hub_fixing_rotation_round_trip(self):
        g = named_graph("W5")
        rotation = {"hub": "hub", "r0": "r1", "r1": "r2", "r2": "r3",
                    "r3": "r4", "r4": "r0"}
        f = permuted_edge_map(g, rotation)
        assert reconstruct_vertex_isomorphism(f).as_dict == rotation

    def test_triangle_transposition_still_injects(self):
        tri = build_graph("abc", [("a", "b"), ("b", "c"), ("c", "a")])
        f = permuted_edge_map(tri, {"a": "b", "b": "a", "c": "c"})
        assert check_circuit_injection(f).passed

    def test_bad_relabelings(self, k4):
        with pytest.raises(NotABijectionError):
            permuted_edge_map(k4, {"0": "a", "1": "b", "2": "c"})
        with pytest.raises(NotABijectionError):
            permuted_edge_map(k4, {"0": "a", "1": "a", "2": "b", "3": "c"})


class TestNamedCatalog:
    @pytest.mark.parametrize(
        "name,vertices,edges",
        [
            ("K4", 4, 6), ("K5", 5, 10), ("K33", 6, 9), ("prism", 6, 9),
            ("Q3", 8, 12), ("cube", 8, 12), ("W5", 6, 10), ("W6", 7, 12),
            ("double_bowtie", 10, 16),
        ],
    )
    def test_catalog_shapes(self, name, vertices, edges):
        g = named_graph(name)
        assert (g.vertex_count(), g.edge_count()) == (vertices, edges)

    def test_catalog_is_three_connected(self):
        for name in ("K4", "K5", "K33", "prism", "Q3", "W5", "W6",
                     "double_bowtie"):
            assert is_k_connected(named_graph(name), 3), name

    def test_name_forms(self):
        assert named_graph("wheel", 5) == named_graph("W5") == named_graph("w5")
        assert named_graph("theta", 3) == named_graph("theta3")
        assert named_graph("Q3") == named_graph("cube")
        assert named_graph("double-bowtie") == named_graph("double_bowtie")

    @pytest.mark.parametrize(
        "name,size",
        [("nope", None), ("K4", 5), ("wheel", None), ("wheel", 2),
         ("theta", None), ("w", None)],
    )
    def test_bad_names(self, name, size):
        with pytest.raises(UnknownNameError):
            named_graph(name, size)


class TestRandomGraphs:
    def test_two_connected_deterministic(self):
        a = random_two_connected(8, seed=11)
        b = random_two_connected(8, seed=11)
        assert a == b
        assert is_k_connected(a, 2)

    def test_two_connected_varies_with_seed(self):
        outs = {random_two_connected(8, seed=s).edges for s in range(6)}
        assert len(outs) > 1

    def test_three_connected(self):
        g = random_three_connected(7, seed=4)
        assert g == random_three_connected(7, seed=4)
        assert min(g.degree(v) for v in g.vertices) >= 3
        assert is_k_connected(g, 3)
        assert brute_is_k_connected(g, 3)

    def test_three_connected_minimum_is_complete(self):
        g = random_three_connected(4, seed=1)
        assert g.edge_count() == 6

    def test_sizes_too_small(self):
        with pytest.raises(GenerationFailedError):
            random_three_connected(3, seed=1)
        with pytest.raises(GenerationFailedError):
            random_two_connected(2, seed=1)


class TestRng:
    def test_pinned_stream(self):
        r = XorShift64Star(1)
        assert [r.next_u64() for _ in range(3)] == [
            5180492295206395165,
            12380297144915551517,
            13389498078930870103,
        ]

    def test_zero_seed_escapes(self):
        assert XorShift64Star(0).next_u64() == 973819730272012410

    def test_randrange_bounds(self):
        r = XorShift64Star(99)
        draws = [r.randrange(7) for _ in range(200)]
        assert set(draws) <= set(range(7))
        assert len(set(draws)) == 7

    def test_shuffle_is_permutation(self):
        items = list(range(10))
        r = XorShift64Star(5)
        r.shuffle(items)
        assert sorted(items) == list(range(10))
        assert items != list(range(10))
