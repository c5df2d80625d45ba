import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", deadline=None, max_examples=1000, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


import pytest


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def criterion(request):
    """Run one acceptance check, record a PASS/FAIL line, then assert."""
    lines = request.config._acceptance_lines

    def check(number: int, title: str, fn):
        try:
            ok, detail = fn()
        except Exception as exc:  # recorded, then re-raised for pytest
            lines.append(f"criterion {number:>2} FAIL  {title}: {type(exc).__name__}: {exc}")
            print(lines[-1])
            raise
        lines.append(f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}: {detail}")
        print(lines[-1])
        assert ok, lines[-1]

    return check


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
