import pytest

from pavoid.partition import Partition

_ACCEPTANCE: list[str] = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[0][2:])):
            terminalreporter.write_line(line)


@pytest.fixture
def P():
    return Partition.of
