import numpy as np
import pytest

from ipgeom.closure.example import example1_polyhedron


def pytest_addoption(parser):
    parser.addoption(
        "--n-random",
        action="store",
        type=int,
        default=None,
        help="number of random instances per randomized test, overriding each test's own",
    )
    parser.addoption(
        "--seed",
        action="store",
        type=int,
        default=0,
        help="seed for the random instance generators",
    )


@pytest.fixture
def sample_size(request):
    """Call with the test's own sample size; ``--n-random`` replaces it"""
    override = request.config.getoption("--n-random")

    def size(default):
        return default if override is None else override

    return size


@pytest.fixture
def rng(request):
    return np.random.default_rng(request.config.getoption("--seed"))


@pytest.fixture
def example1():
    return example1_polyhedron()
