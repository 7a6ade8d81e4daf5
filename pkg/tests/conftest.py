from contextlib import contextmanager

import pytest

# number -> (description, passed); filled by the acceptance tests,
# printed once at the end of the run.
_ACCEPTANCE: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def criterion():
    """Record a pass/fail verdict for one numbered acceptance criterion."""

    @contextmanager
    def tracked(number: int, description: str):
        try:
            yield
        except BaseException:
            _ACCEPTANCE[number] = (description, False)
            raise
        _ACCEPTANCE[number] = (description, True)

    return tracked


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        description, ok = _ACCEPTANCE[number]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {number} {verdict} {description}")
