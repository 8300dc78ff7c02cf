import pytest

from oddgirth.generators import gen_blowup, gen_complete, gen_cycle, gen_mobius_ladder
from oddgirth.graph import build_graph

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    """Collects one status line per acceptance criterion for the terminal summary."""

    def log(criterion: str, passed: bool, detail: str = "") -> None:
        ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] {criterion} {detail}".rstrip())

    return log


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def c5():
    return gen_cycle(5)


@pytest.fixture
def m8():
    return gen_mobius_ladder(8)


@pytest.fixture
def k44():
    return gen_blowup(gen_complete(2), [4, 4])[0]


@pytest.fixture
def phi():
    """C_6 on 0..5 plus the diagonal {1, 4}."""
    return build_graph(6, [(i, (i + 1) % 6) for i in range(6)] + [(1, 4)])


@pytest.fixture
def tetra8():
    """Tetrahedron for k=2: center 0, branches 1, 3, 5; p=1, q=r=2, x=w=2, y=1."""
    return build_graph(8, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (1, 6), (6, 3), (3, 5), (5, 7), (7, 1)])
