from __future__ import annotations

import pytest

from gincalc.report import VerifyConfig, verify_paper

CRITERIA: dict[int, tuple[str, bool]] = {}


@pytest.fixture(scope="session")
def default_report():
    return verify_paper(VerifyConfig())


@pytest.fixture
def record():
    """Log one acceptance line, then assert on it."""

    def _record(n: int, desc: str, ok: bool):
        CRITERIA[n] = (desc, bool(ok))
        assert ok, f"criterion {n} failed: {desc}"

    return _record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        desc, ok = CRITERIA[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {n:2d}: {desc}")
