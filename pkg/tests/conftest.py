import warnings

import pytest

from tracecodes.codes import build_family_code
from tracecodes.weights import weight_distribution


@pytest.fixture(scope="session")
def codes():
    """Session-cached example codes keyed by (family, p, m, e)."""
    cache = {}

    def get(family, p, m, e=None, modulus=None):
        key = (family, p, m, e, tuple(modulus) if modulus else None)
        if key not in cache:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                cache[key] = build_family_code(family, p, m, e, modulus=modulus)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def dists(codes):
    """Session-cached enumerated weight distributions."""
    cache = {}

    def get(family, p, m, e=None, modulus=None):
        key = (family, p, m, e, tuple(modulus) if modulus else None)
        if key not in cache:
            cache[key] = weight_distribution(codes(family, p, m, e, modulus))
        return cache[key]

    return get
