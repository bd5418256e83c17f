import pytest

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion, shown in the terminal summary."""
    def record(label: str, ok: bool, detail: str = ""):
        ACCEPTANCE[label] = (ok, detail)
        print(f"{'PASS' if ok else 'FAIL'} {label} {detail}")
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[label]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {label}  {detail}")
