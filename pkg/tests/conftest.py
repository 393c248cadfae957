import sys
from pathlib import Path

import pytest

from eideal.graphs import Graph, parse_graph

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load_fixture(name: str) -> Graph:
    return parse_graph((FIXTURES / name).read_text())


@pytest.fixture
def fig3_g1() -> Graph:
    return load_fixture("fig3_g1.graph")


@pytest.fixture
def fig4_g1() -> Graph:
    return load_fixture("fig4_g1.graph")


@pytest.fixture
def fig4_g2() -> Graph:
    return load_fixture("fig4_g2.graph")


@pytest.fixture
def p2() -> Graph:
    return load_fixture("p2.graph")


@pytest.fixture
def p4() -> Graph:
    return load_fixture("p4.graph")


@pytest.fixture
def c4() -> Graph:
    return load_fixture("c4.graph")
