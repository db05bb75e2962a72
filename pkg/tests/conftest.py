import itertools

import pytest


def all_subsets(v):
    for size in range(v + 1):
        yield from itertools.combinations(range(1, v + 1), size)


@pytest.fixture
def subsets_of():
    return all_subsets
