import numpy as np
import pytest

from treespace.oracle import admissible_families


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def families():
    """Covered node sets of every admissible family, keyed by tree depth."""
    return {d: admissible_families(d) for d in range(1, 5)}
