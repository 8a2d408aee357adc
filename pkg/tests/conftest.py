import pytest

from permchar.catalog import (build, default_nonsolvable_specs,
                              default_solvable_specs)

CATALOG_SOLVABLE = default_solvable_specs()
CATALOG_NONSOLVABLE = default_nonsolvable_specs()
CATALOG = CATALOG_SOLVABLE + CATALOG_NONSOLVABLE


def catalog_upto(bound):
    return [s for s in CATALOG if build(s).order <= bound]


@pytest.fixture(scope="session")
def grp():
    return build
