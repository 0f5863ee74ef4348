import pytest

ACCEPTANCE: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion's pass/fail line for the terminal summary."""

    class Recorder:
        def __init__(self):
            self.number = None

        def __call__(self, number: int, title: str):
            self.number = number
            ACCEPTANCE[number] = (title, False)
            return self

        def passed(self):
            title, _ = ACCEPTANCE[self.number]
            ACCEPTANCE[self.number] = (title, True)

    return Recorder()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {n:2d}. {title}")
