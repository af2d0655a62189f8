import pytest

from quasihopf.generators import FIXTURE_BUILDERS, fixture

_cache = {}


def get_fixture(name):
    if name not in _cache:
        _cache[name] = fixture(name)
    return _cache[name]


@pytest.fixture(params=sorted(FIXTURE_BUILDERS))
def any_algebra(request):
    return get_fixture(request.param)


@pytest.fixture
def kz2():
    return get_fixture("kZ2")


@pytest.fixture
def kz4():
    return get_fixture("kZ4")


@pytest.fixture
def h4():
    return get_fixture("sweedler")


@pytest.fixture
def h2a():
    return get_fixture("h2")


@pytest.fixture
def dgc25():
    return get_fixture("dgc-2-5")
