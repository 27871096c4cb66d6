import pytest

from cubicfield.cubic_forms import BinaryCubicForm
from cubicfield.weierstrass import ProjectivePoint, build_gamma

# criterion number -> (description, passed)
ACCEPTANCE_RESULTS: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def example_form():
    return BinaryCubicForm(1, 1, 2, 1)


@pytest.fixture
def example_gamma(example_form):
    return build_gamma(example_form, 0, 1)


@pytest.fixture
def example_point():
    return ProjectivePoint(-1, 1, 1)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        text, ok = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {text}")
