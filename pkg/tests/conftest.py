import pytest

VERDICTS: dict[int, bool] = {}


@pytest.fixture
def criterion():
    """Record a numbered acceptance verdict; the summary prints one line per criterion."""

    def record(number: int, passed: bool):
        VERDICTS[number] = VERDICTS.get(number, True) and passed
        print(f"criterion {number}: {'PASS' if passed else 'FAIL'}")
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(VERDICTS):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if VERDICTS[number] else 'FAIL'}")
