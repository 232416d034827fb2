import pytest

from monolift.catalog import named_ideal
from monolift.configuration import components_artinian

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture
def record_criterion():
    """Record one pass/fail line per acceptance criterion, then assert it."""

    def record(number, title, ok, detail=""):
        line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


@pytest.fixture
def triangle():
    return named_ideal("triangle")


@pytest.fixture
def almost_lex():
    return named_ideal("almost-lex")


@pytest.fixture
def almost_lex_configuration(almost_lex):
    return components_artinian(almost_lex, t=1)
