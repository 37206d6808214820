from itertools import product

import pytest

from pbwlab import DominantWeight


def all_weights(n, total):
    return [DominantWeight(n, m) for m in product(range(total + 1), repeat=n - 1) if sum(m) <= total]


@pytest.fixture
def weights_grid():
    return all_weights
