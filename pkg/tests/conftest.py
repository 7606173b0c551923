import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from symtoep import catalog  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def f41():
    return catalog.cosine_2_12()


@pytest.fixture
def f42():
    return catalog.nonsymmetric_cubic()


@pytest.fixture
def f44():
    return catalog.step_525()


@pytest.fixture
def f45():
    return catalog.rotated_diagonal_2x2()


@pytest.fixture
def f46():
    return catalog.nonsymmetric_linear()


@pytest.fixture
def theta2():
    return catalog.theta_squared()



def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.RESULTS, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
