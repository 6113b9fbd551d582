from __future__ import annotations

import pytest

from greenring.datum import GroupDatum, build_radford_datum, validate_datum

RADFORD_PARAMS = [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4)]

# Z/2 x Z/4: chi = (1, 2), g = (0, 1) gives n = 2, r = 2 and two orbits of each kind
PRODUCT_DATUM = GroupDatum((2, 4), (1, 2), (0, 1))


def all_data():
    return [build_radford_datum(m, n) for m, n in RADFORD_PARAMS] + [validate_datum(PRODUCT_DATUM)]


DATA_IDS = [f"radford{m}{n}" for m, n in RADFORD_PARAMS] + ["z2xz4"]


@pytest.fixture(params=all_data(), ids=DATA_IDS)
def datum(request):
    return request.param


@pytest.fixture
def r22():
    return build_radford_datum(2, 2)
