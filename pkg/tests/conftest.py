from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from circuitmap import build_graph, named_graph
from circuitmap.rng import XorShift64Star

# Small 3-connected graphs used throughout; name -> constructor args.
CORPUS = ("K4", "K5", "W5", "W6", "prism", "Q3", "K33")

# One verdict line per acceptance criterion, filled in by test_acceptance
# and echoed after the run so the verdicts survive output capture.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def corpus_graphs():
    return [(name, named_graph(name)) for name in CORPUS]


def seeded_relabel(graph, seed: int) -> dict[str, str]:
    """Deterministic vertex permutation within the graph's own label set."""
    labels = sorted(graph.vertices)
    shuffled = list(labels)
    XorShift64Star(seed).shuffle(shuffled)
    return dict(zip(labels, shuffled))


@pytest.fixture
def k4():
    return named_graph("K4")


@pytest.fixture
def prism():
    return named_graph("prism")


@pytest.fixture
def theta3():
    return named_graph("theta", 3)


@pytest.fixture
def bowtie():
    # two triangles glued at c; the one cutpoint in the corpus
    return build_graph(
        ["a", "b", "c", "d", "e"],
        [("a", "b"), ("a", "c"), ("b", "c"), ("c", "d"), ("c", "e"), ("d", "e")],
    )
