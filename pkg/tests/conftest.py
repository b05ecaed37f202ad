from __future__ import annotations

import pytest

# Filled by tests/test_acceptance.py: (criterion label, passed, detail)
ACCEPTANCE_LINES: list[tuple[str, bool, str]] = []


@pytest.fixture
def acceptance_report():
    def record(label: str, passed: bool, detail: str) -> None:
        ACCEPTANCE_LINES.append((label, passed, detail))
        print(f"[{'PASS' if passed else 'FAIL'}] {label}: {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {label}: {detail}")
