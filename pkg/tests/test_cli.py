"""End-to-end coverage of the command line entry points.

Everything drives circuitmap.cli.main directly; one subprocess smoke test
lives in the acceptance suite instead.
"""

import json

import pytest

from circuitmap import graph_to_json, named_graph
from circuitmap.cli import (
    EXIT_FAIL,
    EXIT_INPUT,
    EXIT_NOT_INDUCED,
    EXIT_PASS,
    EXIT_PRECONDITION,
    main,
)


@pytest.fixture(autouse=True)
def in_tmp(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def read_json(path):
    return json.loads(path.read_text(encoding="utf-8"))


def last_report(capsys):
    return json.loads(capsys.readouterr().out)


def generate_counterexample(p=3):
    assert main(["generate", "counterexample", "--p", str(p), "--quiet"]) == EXIT_PASS
    base = f"counterexample_p{p}"
    return (f"{base}.source.json", f"{base}.target.json", f"{base}.map.json")


def write_graph(path, name):
    path.write_text(json.dumps(graph_to_json(named_graph(name))), encoding="utf-8")


class TestGenerate:
    def test_counterexample_files(self, in_tmp, capsys):
        code = main(["generate", "counterexample", "--p", "3"])
        assert code == EXIT_PASS
        report = last_report(capsys)
        assert report["result"] == "ok"
        assert sorted(report["files"]) == [
            "counterexample_p3.map.json",
            "counterexample_p3.source.json",
            "counterexample_p3.target.json",
        ]
        src = read_json(in_tmp / "counterexample_p3.source.json")
        assert len(src["vertices"]) == 8 and len(src["edges"]) == 9

    def test_byte_stable_across_runs(self, in_tmp):
        main(["generate", "counterexample", "--p", "3", "--out", "a", "--quiet"])
        main(["generate", "counterexample", "--p", "3", "--out", "b", "--quiet"])
        for part in ("source", "target", "map"):
            assert (in_tmp / f"a.{part}.json").read_bytes() == \
                   (in_tmp / f"b.{part}.json").read_bytes()

    def test_named_and_random(self, in_tmp):
        from circuitmap import graph_from_json, is_k_connected

        assert main(["generate", "named", "--name", "prism", "--quiet"]) == EXIT_PASS
        assert read_json(in_tmp / "prism.json") == graph_to_json(named_graph("prism"))
        assert main(["generate", "random3c", "--n", "8", "--seed", "7",
                     "--quiet"]) == EXIT_PASS
        path = in_tmp / "random3c_n8_s7.json"
        first = path.read_bytes()
        assert is_k_connected(graph_from_json(read_json(path)), 3)
        assert main(["generate", "random3c", "--n", "8", "--seed", "7",
                     "--quiet"]) == EXIT_PASS
        assert path.read_bytes() == first

    def test_bad_prime_is_input_error(self):
        assert main(["generate", "counterexample", "--p", "4", "--quiet"]) == EXIT_INPUT

    def test_bad_name_is_input_error(self):
        assert main(["generate", "named", "--name", "nope", "--quiet"]) == EXIT_INPUT


class TestVerify:
    def test_counterexample_passes(self, capsys):
        src, tgt, fmap = generate_counterexample()
        assert main(["verify", src, tgt, fmap]) == EXIT_PASS
        report = last_report(capsys)
        assert report["result"] == "pass"
        assert report["mode"] == "exhaustive"
        assert report["circuits_checked"] == 3
        assert report["witness"] is None
        assert isinstance(report["elapsed_ms"], int)

    def test_sampled_mode(self, capsys):
        src, tgt, fmap = generate_counterexample()
        assert main(["verify", src, tgt, fmap, "--mode", "sampled",
                     "--samples", "30", "--seed", "9"]) == EXIT_PASS
        assert last_report(capsys)["mode"] == "sampled"

    def test_broken_map_fails_with_witness(self, in_tmp, capsys):
        src, tgt, fmap = generate_counterexample()
        data = read_json(in_tmp / fmap)
        # swap images across two different source paths; swapping inside a
        # single path would permute a circuit image onto itself
        data["map"][0][1], data["map"][3][1] = data["map"][3][1], data["map"][0][1]
        (in_tmp / "broken.json").write_text(json.dumps(data), encoding="utf-8")
        assert main(["verify", src, tgt, "broken.json"]) == EXIT_FAIL
        report = last_report(capsys)
        assert report["result"] == "fail"
        assert report["witness"]["direction"] == "forward"
        assert report["witness"]["circuit"]

    def test_swapped_k4_map_exits_2_with_triangle_witness(self, in_tmp, capsys):
        write_graph(in_tmp / "k4.json", "K4")
        g = named_graph("K4")
        pairs = [[list(g.edges[i]), list(g.edges[j])]
                 for i, j in zip(range(6), (5, 1, 2, 3, 4, 0))]
        (in_tmp / "swap.json").write_text(json.dumps({"map": pairs}),
                                          encoding="utf-8")
        assert main(["verify", "k4.json", "k4.json", "swap.json"]) == EXIT_FAIL
        report = last_report(capsys)
        assert report["witness"]["circuit"] == [["0", "1"], ["0", "2"], ["1", "2"]]

    def test_corrupt_map_is_input_error(self, in_tmp, capsys):
        src, tgt, fmap = generate_counterexample()
        data = read_json(in_tmp / fmap)
        data["map"][1][1] = data["map"][0][1]  # duplicate target edge
        (in_tmp / fmap).write_text(json.dumps(data), encoding="utf-8")
        assert main(["verify", src, tgt, fmap]) == EXIT_INPUT
        assert "error" in capsys.readouterr().err

    def test_missing_file(self):
        assert main(["verify", "no.json", "no.json", "no.json"]) == EXIT_INPUT

    def test_malformed_json(self, in_tmp):
        (in_tmp / "bad.json").write_text("{", encoding="utf-8")
        assert main(["verify", "bad.json", "bad.json", "bad.json"]) == EXIT_INPUT

    def test_quiet_suppresses_report(self, capsys):
        src, tgt, fmap = generate_counterexample()
        assert main(["verify", src, tgt, fmap, "--quiet"]) == EXIT_PASS
        assert capsys.readouterr().out == ""


class TestReconstruct:
    def test_counterexample_hits_guard(self, capsys):
        src, tgt, fmap = generate_counterexample()
        assert main(["reconstruct", src, tgt, fmap]) == EXIT_PRECONDITION
        assert last_report(capsys)["result"] == "not_three_connected"

    def test_identity_on_k4(self, in_tmp, capsys):
        write_graph(in_tmp / "k4.json", "K4")
        pairs = [[list(e), list(e)] for e in named_graph("K4").edges]
        (in_tmp / "id.json").write_text(json.dumps({"map": pairs}), encoding="utf-8")
        assert main(["reconstruct", "k4.json", "k4.json", "id.json"]) == EXIT_PASS
        report = last_report(capsys)
        assert report["result"] == "induced"
        assert report["vertex_map"] == {v: v for v in "0123"}

    def test_relabeled_wheel_recovers_permutation(self, in_tmp, capsys):
        from circuitmap import edge_map_to_json, permuted_edge_map

        g = named_graph("W5")
        rotation = {"hub": "hub", "r0": "r1", "r1": "r2", "r2": "r3",
                    "r3": "r4", "r4": "r0"}
        f = permuted_edge_map(g, rotation)
        (in_tmp / "src.json").write_text(json.dumps(graph_to_json(g)),
                                         encoding="utf-8")
        (in_tmp / "tgt.json").write_text(json.dumps(graph_to_json(f.target)),
                                         encoding="utf-8")
        (in_tmp / "map.json").write_text(json.dumps(edge_map_to_json(f)),
                                         encoding="utf-8")
        assert main(["reconstruct", "src.json", "tgt.json",
                     "map.json"]) == EXIT_PASS
        assert last_report(capsys)["vertex_map"] == rotation

    def test_swapped_map_not_induced(self, in_tmp, capsys):
        write_graph(in_tmp / "k4.json", "K4")
        g = named_graph("K4")
        pairs = [[list(g.edges[i]), list(g.edges[j])]
                 for i, j in zip(range(6), (5, 1, 2, 3, 4, 0))]
        (in_tmp / "swap.json").write_text(json.dumps({"map": pairs}),
                                          encoding="utf-8")
        assert main(["reconstruct", "k4.json", "k4.json",
                     "swap.json"]) == EXIT_NOT_INDUCED
        report = last_report(capsys)
        assert report["result"] == "not_induced"
        assert report["witness"]["vertex"] == "0"
        assert report["witness"]["class"]["kind"] == "violation"


class TestEnumerate:
    def test_counts(self, in_tmp, capsys):
        write_graph(in_tmp / "k4.json", "K4")
        assert main(["enumerate", "k4.json"]) == EXIT_PASS
        report = last_report(capsys)
        assert report["count"] == 7 and len(report["circuits"]) == 7

    def test_budget_exhaustion_is_precondition_exit(self, in_tmp):
        write_graph(in_tmp / "k4.json", "K4")
        assert main(["enumerate", "k4.json", "--max-circuits",
                     "2"]) == EXIT_PRECONDITION


class TestClassifyDecomposeCrossing:
    def test_classify_counterexample(self, capsys):
        src, tgt, fmap = generate_counterexample()
        assert main(["classify", src, tgt, fmap]) == EXIT_PASS
        report = last_report(capsys)
        assert report["star_images"]["u"] == {"kind": "star", "vertex": "b0"}
        assert report["star_images"]["x_0_1"] == {"kind": "independent"}
        assert report["star_preimages"]["b0"] == {"kind": "star", "vertex": "u"}
        assert report["star_preimages"]["c0"] == {"kind": "independent"}

    def test_decompose_counterexample(self, capsys):
        src, tgt, fmap = generate_counterexample()
        assert main(["decompose", src, tgt, fmap, "--vertex", "c0"]) == EXIT_PASS
        report = last_report(capsys)
        assert report["side_a"] == ["u", "x_1_1", "x_1_2", "x_2_1"]
        assert report["side_b"] == ["w", "x_0_1", "x_0_2", "x_2_2"]
        assert len(report["crossing"]) == 3

    def test_decompose_guard_is_precondition_exit(self, capsys):
        src, tgt, fmap = generate_counterexample()
        assert main(["decompose", src, tgt, fmap,
                     "--vertex", "b0"]) == EXIT_PRECONDITION

    def test_crossing_prism(self, in_tmp, capsys):
        write_graph(in_tmp / "prism.json", "prism")
        cut = [["a0", "b0"], ["a1", "b1"], ["a2", "b2"]]
        (in_tmp / "cut.json").write_text(json.dumps(cut), encoding="utf-8")
        assert main(["crossing", "prism.json", "cut.json"]) == EXIT_PASS
        report = last_report(capsys)
        assert report["result"] == "linked_pair"
        assert report["witness"]["path_vertices"] == ["a2", "b2"]
        assert report["witness"]["anchors_a"] == ["a0", "a1", "a2"]

    def test_crossing_guard_violation(self, in_tmp):
        write_graph(in_tmp / "theta.json", "theta3")
        cut = [["u", "x_0_1"], ["u", "x_1_1"], ["u", "x_2_1"]]
        (in_tmp / "cut.json").write_text(json.dumps(cut), encoding="utf-8")
        assert main(["crossing", "theta.json", "cut.json"]) == EXIT_PRECONDITION

    def test_crossing_cut_must_be_list(self, in_tmp):
        write_graph(in_tmp / "prism.json", "prism")
        (in_tmp / "cut.json").write_text("{}", encoding="utf-8")
        assert main(["crossing", "prism.json", "cut.json"]) == EXIT_INPUT
