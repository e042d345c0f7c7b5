"""Shared pytest plumbing: the acceptance-criteria summary block.

The acceptance tests register one result per criterion; after the run the
terminal summary prints one PASS/FAIL line each, visible regardless of
pytest's output-capture mode.
"""

from __future__ import annotations

_ACCEPTANCE_RESULTS: list[tuple[str, bool]] = []


def record_acceptance(name: str, passed: bool) -> None:
    _ACCEPTANCE_RESULTS.append((name, passed))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed in _ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"[acceptance] {name}: {'PASS' if passed else 'FAIL'}")
