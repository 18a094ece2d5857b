"""Shared fixtures and the naive colourability oracle used for cross-checks."""

from __future__ import annotations

import pytest

from ksrays import builtin
from ksrays.orthograph import maximal_cliques
from ksrays.rays import Configuration


@pytest.fixture(scope="session")
def m_config() -> Configuration:
    return builtin("M")


@pytest.fixture(scope="session")
def n_config() -> Configuration:
    return builtin("N")


@pytest.fixture(scope="session")
def t0_config() -> Configuration:
    return builtin("T0")


@pytest.fixture(scope="session")
def kp40_config() -> Configuration:
    return builtin("KP40")


@pytest.fixture(scope="session")
def kp36_config() -> Configuration:
    return builtin("KP36")


def independent_sets(rows, n: int):
    """All independent vertex sets as bitmasks, including the empty set."""

    def rec(mask: int, allowed: int):
        yield mask
        cand = allowed
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            yield from rec(mask | low, cand & ~rows[v])

    yield from rec(0, (1 << n) - 1)


def naive_ks_ones(config: Configuration):
    """Reference KS-colourability decision by full independent-set scan.

    Returns the 1-set of some KS colouring as a bitmask, or None when
    the configuration admits none.  Exponential; small inputs only.
    """
    cliques = [sum(1 << v for v in c) for c in maximal_cliques(config)]
    if not cliques:
        return 0
    for ones in independent_sets(config.adj, config.n):
        if all((ones & cm).bit_count() == 1 for cm in cliques):
            return ones
    return None
