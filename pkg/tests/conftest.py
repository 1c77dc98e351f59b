import pytest

from ghwforge import kernels


@pytest.fixture(params=["python", "cython"])
def each_backend(request, monkeypatch):
    """Run the test once per kernel back end."""
    if request.param == "cython" and not kernels.HAVE_COMPILED:
        pytest.skip("compiled kernels not built")
    monkeypatch.setenv("GHWFORGE_PURE", "1" if request.param == "python" else "0")
    return request.param


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
