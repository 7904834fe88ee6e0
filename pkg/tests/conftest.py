import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from loewykit import corpus
from loewykit.exactlin import GF, QQ

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=150, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES, key=lambda k: (int("".join(c for c in k if c.isdigit())), k)):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])


@pytest.fixture(scope="session")
def sweedler5():
    return corpus.sweedler(5, 1)


@pytest.fixture(scope="session")
def currents52():
    return corpus.modular_currents(5, 2)


@pytest.fixture(scope="session")
def currents32():
    return corpus.modular_currents(3, 2)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


FIELDS = [GF(2), GF(3), GF(7), GF(2_147_483_647), QQ]
