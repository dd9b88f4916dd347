import sys
from pathlib import Path

_SRC = Path(__file__).resolve().parent.parent / "src"
if str(_SRC) not in sys.path:
    sys.path.insert(0, str(_SRC))

import pytest

import divgraph as dv


@pytest.fixture(scope="session")
def q8():
    return dv.quaternion8()


@pytest.fixture(scope="session")
def s3():
    return dv.symmetric(3)


@pytest.fixture(scope="session")
def s4():
    return dv.symmetric(4)


@pytest.fixture(scope="session")
def klein():
    return dv.klein4()


@pytest.fixture(scope="session")
def ea33():
    return dv.elementary_abelian(3, 3)


@pytest.fixture(scope="session")
def h27():
    return dv.heisenberg27()
