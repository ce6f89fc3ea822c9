"""Shared fixtures and the acceptance-report hook."""

import pytest

from razavy_dw import build_coupled, normalization_and_gamma

ACCEPTANCE_LINES: list[tuple[int, str, bool, str]] = []


def record_criterion(number: int, label: str, ok: bool, detail: str = "") -> None:
    """Collect one acceptance line; printed in the terminal summary."""
    ACCEPTANCE_LINES.append((number, label, ok, detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number, label, ok, detail in sorted(ACCEPTANCE_LINES, key=lambda r: r[0]):
        status = "PASS" if ok else "FAIL"
        suffix = f"  ({detail})" if detail else ""
        terminalreporter.write_line(f"criterion {number:>2} {status}: {label}{suffix}")


@pytest.fixture(scope="session")
def basis():
    return normalization_and_gamma()


@pytest.fixture(scope="session")
def sys001(basis):
    return build_coupled(basis, 0.01)


@pytest.fixture(scope="session")
def sys01(basis):
    return build_coupled(basis, 0.1)


@pytest.fixture(scope="session")
def sys02(basis):
    return build_coupled(basis, 0.2)
