import warnings
from functools import lru_cache

import pytest
from hypothesis import strategies as st

from hadz.cocycle import CoboundarySet
from hadz.search import SearchConfig, exhaustive_search

WORKED = (14, 10, 6, 11, 20, 12, 4, 25, 21, 9)


@lru_cache(maxsize=None)
def census_sets(t: int) -> tuple[CoboundarySet, ...]:
    return tuple(exhaustive_search(SearchConfig(t, "full")).sets)


@pytest.fixture(scope="session")
def census():
    return census_sets


@pytest.fixture
def worked():
    return CoboundarySet.from_indices(7, WORKED)


def sets_strategy(ts=(3, 5, 7, 9)):
    return st.sampled_from(ts).flatmap(
        lambda t: st.integers(0, (1 << (4 * t)) - 1).map(lambda m: CoboundarySet(t, m))
    )


@pytest.fixture(autouse=True)
def _quiet_orbit_warnings():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        yield
