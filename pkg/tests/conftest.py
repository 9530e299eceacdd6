import json
from pathlib import Path

import pytest

from cyclolab.sums import context_for

FIELDS = [(19, 1, 3), (37, 1, 3), (73, 1, 3), (17, 2, 3), (101, 1, 5)]
SMALL_FIELDS = FIELDS[:4]

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def reference():
    return json.loads((DATA / "printed_reference.json").read_text())


_contexts = {}


def ctx_for(p, r, l, generator=None):
    key = (p, r, l, generator)
    if key not in _contexts:
        _contexts[key] = context_for(p, r, 2 * l * l, generator)
    return _contexts[key]


@pytest.fixture(scope="session")
def ctx19():
    return ctx_for(19, 1, 3)


@pytest.fixture(scope="session")
def ctx37():
    return ctx_for(37, 1, 3)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
