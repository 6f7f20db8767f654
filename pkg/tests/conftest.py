"""Shared fixtures: the canonical worked examples.

The 12x12 matrices are rebuilt from the frozen generalized inversion
table (the canonical fixture builder); every statistic asserted against
them is an independently known value.
"""

from __future__ import annotations

from functools import lru_cache

import pytest

from asmc import (
    AsmMatrix,
    GenInvTable,
    enumerate_asm,
    pair_from_table,
    partial_discharge,
    restore,
    validate_asm,
)

# the smallest ASM with a -1
DIAMOND_ROWS = ((0, 1, 0), (1, -1, 1), (0, 1, 0))

# frozen encoding of the neutral half of the 12x12 worked example
TABLE12 = GenInvTable(k=10, a=(0, 0, 2, 2, 0, 0, 1, 5, 0, 3, 6, 6), b=4, beta=5)


@pytest.fixture
def diamond() -> AsmMatrix:
    return validate_asm(DIAMOND_ROWS)


@pytest.fixture(scope="session")
def pair12():
    return pair_from_table(TABLE12)


@pytest.fixture(scope="session")
def neutral12(pair12) -> AsmMatrix:
    return pair12.matrix


@pytest.fixture(scope="session")
def charged12(pair12) -> AsmMatrix:
    return restore(pair12)


@pytest.fixture(scope="session")
def perm12(neutral12) -> AsmMatrix:
    return partial_discharge(neutral12)


@lru_cache(maxsize=None)
def all_asm(n: int) -> tuple[AsmMatrix, ...]:
    return tuple(enumerate_asm(n))


@lru_cache(maxsize=None)
def one_minus(n: int) -> tuple[AsmMatrix, ...]:
    return tuple(enumerate_asm(n, s=1))
