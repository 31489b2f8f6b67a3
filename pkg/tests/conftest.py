import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpus import fano, locally_sparse_corpus, loose_path2, single_edge  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def corpus():
    return locally_sparse_corpus()


@pytest.fixture
def fano_plane():
    return fano()


@pytest.fixture
def edge3():
    return single_edge()


@pytest.fixture
def path2():
    return loose_path2()


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
