from __future__ import annotations

import sys
from pathlib import Path

import pytest

from upo import EdgeOrder, build_graph, parse_upg

FIXTURES = Path(__file__).parent / "fixtures"
sys.path.insert(0, str(Path(__file__).parent))

# filled by test_acceptance, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def load(name: str):
    doc = parse_upg((FIXTURES / name).read_text(encoding="utf-8"))
    return doc.graph, doc.order


@pytest.fixture
def vee():
    g = build_graph("abvc", [("e1", "a", "v"), ("e2", "b", "v"), ("e3", "v", "c")], "abc")
    return g, EdgeOrder.from_sequence(["e1", "e2", "e3"])


@pytest.fixture
def fork():
    return load("fork.upg")


@pytest.fixture
def merge():
    return load("merge.upg")


@pytest.fixture
def wire():
    return build_graph(["t1", "b1"], [("w", "t1", "b1")], ["t1", "b1"]), EdgeOrder(("w",))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
