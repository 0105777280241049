import numpy as np
import pytest

from geo5 import config
from geo5.exact import Mat, random_invertible


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(config.GEO5_SEED)


@pytest.fixture
def random_basis(rng):
    """
    Random invertible integer matrix of a given size
    """
    def make(n: int) -> Mat:
        return random_invertible(rng, n)
    return make
