import pytest

from fqchol.gf import field_new
from fqchol.matfq import Matrix, SymMatrix

# criterion lines collected by test_acceptance, echoed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


SMALL = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2)]


@pytest.fixture(params=SMALL, ids=lambda pk: f"F{pk[0] ** pk[1]}")
def small_field(request):
    return field_new(*request.param)


@pytest.fixture
def F3():
    return field_new(3)


@pytest.fixture
def F5():
    return field_new(5)


@pytest.fixture
def F7():
    return field_new(7)


@pytest.fixture
def F9():
    return field_new(3, 2)


@pytest.fixture
def F4():
    return field_new(2, 2)


@pytest.fixture
def F27():
    return field_new(3, 3)


def S(F, rows):
    return SymMatrix(F, tuple(map(tuple, rows)))


def M(F, rows):
    return Matrix(F, tuple(map(tuple, rows)))
