"""Shared fixtures: one small-group pool built once per session."""

from __future__ import annotations

import pytest

from autbound import core


@pytest.fixture(scope="session")
def s3() -> core.FiniteGroup:
    return core.symmetric(3)


@pytest.fixture(scope="session")
def q8() -> core.FiniteGroup:
    return core.quaternion8()


@pytest.fixture(scope="session")
def d4() -> core.FiniteGroup:
    return core.dihedral(4)


@pytest.fixture(scope="session")
def c12() -> core.FiniteGroup:
    return core.cyclic(12)


@pytest.fixture(scope="session")
def klein() -> core.FiniteGroup:
    return core.elementary_abelian(2, 2)


@pytest.fixture(scope="session")
def small_pool() -> list[core.FiniteGroup]:
    """Mixed abelian and nonabelian groups, orders 1 through 24."""
    return [
        core.cyclic(1),
        core.cyclic(2),
        core.cyclic(3),
        core.cyclic(6),
        core.cyclic(8),
        core.elementary_abelian(2, 2),
        core.elementary_abelian(2, 3),
        core.abelian([4, 2]),
        core.abelian([9, 3]),
        core.symmetric(3),
        core.quaternion8(),
        core.dihedral(4),
        core.dihedral(6),
        core.dicyclic(3),
        core.symmetric(4),
        core.direct_product(core.cyclic(2), core.symmetric(3), name="C2xS3")[0],
    ]
