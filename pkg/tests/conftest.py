import os

import pytest

from cosetgeom import census_entry, low_index_subgroups
from cosetgeom.perms import PermGroup

FULL_SUITE = os.environ.get("COSETGEOM_FULL") == "1"

requires_full = pytest.mark.skipif(
    not FULL_SUITE, reason="full suite only (set COSETGEOM_FULL=1)")


def group_of(table):
    px, py = table.perm_rep()
    return PermGroup([px, py], degree=table.n)


def order_of(table):
    return group_of(table).order()


@pytest.fixture(scope="session")
def k1_pres():
    return census_entry("k1").presentation


@pytest.fixture(scope="session")
def k4_pres():
    return census_entry("k4").presentation


@pytest.fixture(scope="session")
def k19_pres():
    return census_entry("k19").presentation


@pytest.fixture(scope="session")
def k1_to_10(k1_pres):
    return low_index_subgroups(k1_pres, 10)


@pytest.fixture(scope="session")
def k4_to_9(k4_pres):
    return low_index_subgroups(k4_pres, 9)


@pytest.fixture(scope="session")
def k19_to_9(k19_pres):
    return low_index_subgroups(k19_pres, 9)
