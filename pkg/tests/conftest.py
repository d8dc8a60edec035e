import pytest

from minipaint import io
from minipaint.graph import Graph

from helpers import FIG1_COLORS, FIG1_EDGES, FIG1_LABELS, FIG1_TEMPLATE


@pytest.fixture(scope="session")
def fig1():
    return io.figure1()


@pytest.fixture(scope="session")
def fig1_plan(fig1):
    return io.parse_plan(io.bundled("figure1-plan.json"), fig1)


@pytest.fixture(scope="session")
def fig1_flood(fig1):
    return io.parse_flood(io.bundled("figure1-flood.json"), fig1)


@pytest.fixture(scope="session")
def fig1_handbuilt():
    """The worked example typed in directly, independent of the bundled JSON."""
    g = Graph.from_labels(FIG1_LABELS, FIG1_EDGES)
    t = tuple(FIG1_COLORS.index(FIG1_TEMPLATE[lab]) for lab in FIG1_LABELS)
    return g, t


@pytest.fixture
def vid(fig1):
    return fig1.graph.labels.index


@pytest.fixture
def vset(fig1):
    return lambda names: frozenset(fig1.graph.labels.index(x) for x in names.split())


@pytest.fixture
def cid(fig1):
    return fig1.colors.index


from hypothesis import HealthCheck, settings  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE_LINES

    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
