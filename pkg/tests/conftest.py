import pytest

from stjac.ffield import make_field

_cache = {}


@pytest.fixture
def field():
    """Memoized PrimeField factory (dlog tables are pure and reusable)."""

    def get(p):
        if p not in _cache:
            _cache[p] = make_field(p)
        return _cache[p]

    return get
