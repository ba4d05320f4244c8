import pytest

import media_fixtures as mf


@pytest.fixture(scope="session")
def c4_medium():
    return mf.medium_of(mf.C4_FAMILY)


@pytest.fixture(scope="session")
def c6_medium():
    return mf.medium_of(mf.C6_FAMILY)


@pytest.fixture(scope="session")
def q3_medium():
    return mf.medium_of(mf.Q3_FAMILY)
