"""Shared fixtures.

The expensive shared object is the exhaustive full-spark status map of DFT
row subsets for a handful of small orders.  Several test modules consume the
same maps, so they are computed lazily once per session.
"""

import itertools

import pytest

from sparkforge import dft_submatrix, is_full_spark

_STATUS_CACHE: dict[int, dict[tuple[int, ...], bool]] = {}


def _exhaustive_status(order: int) -> dict[tuple[int, ...], bool]:
    # Every nonempty row subset, the full set included.
    status = {}
    for size in range(1, order + 1):
        for rows in itertools.combinations(range(order), size):
            cert = is_full_spark(dft_submatrix(order, rows))
            status[rows] = cert.full_spark
    return status


@pytest.fixture(scope="session")
def dft_status():
    def get(order: int) -> dict[tuple[int, ...], bool]:
        if order not in _STATUS_CACHE:
            _STATUS_CACHE[order] = _exhaustive_status(order)
        return _STATUS_CACHE[order]

    return get
