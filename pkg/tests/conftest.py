import sys

import pytest
from hypothesis import strategies as st

from rookchar import rook, tensor, thoma


@pytest.fixture(scope="session")
def r3():
    return rook.enumerate_rn(3)


@pytest.fixture(scope="session")
def r4():
    return rook.enumerate_rn(4)


@pytest.fixture(scope="session")
def p0():
    return thoma.validate((0.5, 0.3), (0.2,), 2)


@pytest.fixture(scope="session")
def m0():
    return tensor.validate_model(diag=(0.5, 0.3, -0.2), q_index=2, n_factors=4)


@pytest.fixture(scope="session")
def m_gamma():
    return tensor.validate_model(diag=(0.4, 0.3, -0.1, 0, 0, 0, 0), q_index=1, n_factors=4)


PARAM_SETS = [
    thoma.validate((0.5, 0.3), (0.2,), 2),
    thoma.validate((1.0,), (), 1),
    thoma.validate((0.4,), (0.3,), "zero"),
    thoma.validate((0.3, 0.2, 0.1), (0.25, 0.05), 1),
    thoma.validate((), (0.6, 0.1), "zero"),
]


@st.composite
def rook_elements(draw, max_n=6):
    """Random partial injection of {1..n}."""
    n = draw(st.integers(min_value=0, max_value=max_n))
    points = list(range(1, n + 1))
    images = draw(st.permutations(points))
    kill = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    killed_outputs = {j for j, k in zip(images, kill) if k}
    # kill by output so injectivity is automatic
    table = {i: (None if j in killed_outputs else j) for i, j in zip(points, images)}
    return rook.RookElement(table)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("tests.test_acceptance")
    if module and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
