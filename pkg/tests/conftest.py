import pytest

from colorcode.acceptance import Workbench


@pytest.fixture(scope="session")
def bench() -> Workbench:
    return Workbench()


@pytest.fixture(scope="session")
def torus66(bench):
    return bench.torus66


@pytest.fixture(scope="session")
def group66(bench):
    return bench.group66


@pytest.fixture(scope="session")
def torus1212(bench):
    return bench.torus1212


@pytest.fixture(scope="session")
def group1212(bench):
    return bench.group1212


@pytest.fixture(scope="session")
def detectors(bench):
    return bench.detectors
