import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

_ACCEPTANCE: list[str] = []


@pytest.fixture
def acceptance():
    """Record one summary line per acceptance criterion."""

    def record(label: str, ok: bool, detail: str = "") -> bool:
        _ACCEPTANCE.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
