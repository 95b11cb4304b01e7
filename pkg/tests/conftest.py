import pytest

ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record a named pass/fail line for the acceptance summary."""

    def record(ok, detail):
        ACCEPTANCE.append((request.node.name, bool(ok), detail))
        print(f"{'PASS' if ok else 'FAIL'} {request.node.name}: {detail}")
        assert ok, detail

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
