import pytest

from tiltval.engine import Engine

_ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


_ENGINES: dict[str, Engine] = {}


@pytest.fixture(scope="session")
def engine_for():
    def get(label: str) -> Engine:
        if label not in _ENGINES:
            _ENGINES[label] = Engine(label)
        return _ENGINES[label]

    return get
