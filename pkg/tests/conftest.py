"""Shared fixtures.

The x = 10^9 sieve pass is the one genuinely heavy computation in the suite
(~1-2 minutes); it is session-scoped and shared between the acceptance
criteria and the bias-direction property tests.
"""

import pytest

from twosquares import constants, progressions


@pytest.fixture(scope="session")
def bundle():
    return constants.build_bundle(5)


@pytest.fixture(scope="session")
def stats_1e9():
    """(singles, pairs) residue matrices at x = 10^9, q = 5, one sieve pass."""
    return progressions.residue_pair_stats(10**9, 5, threads=8)
