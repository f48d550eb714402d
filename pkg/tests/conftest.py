import pytest
from hypothesis import settings

from permbinom.field import build_field

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=[3, 4, 5, 6], ids=lambda n: f"GF(2^{n})")
def small_field(request):
    return build_field(request.param)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
