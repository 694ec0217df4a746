import pytest

import ninfty
from ninfty import builtin, lattice_from_order


@pytest.fixture(scope="session")
def c2():
    return builtin("cyclic:2")


@pytest.fixture(scope="session")
def c4():
    return builtin("cyclic:4")


@pytest.fixture(scope="session")
def c8():
    return builtin("cyclic:8")


@pytest.fixture(scope="session")
def c12():
    return builtin("cyclic:12")


@pytest.fixture(scope="session")
def c30():
    return builtin("cyclic:30")


@pytest.fixture(scope="session")
def s3():
    return builtin("symmetric:3")


@pytest.fixture(scope="session")
def s4():
    return builtin("symmetric:4")


@pytest.fixture(scope="session")
def q8():
    return builtin("quaternion:8")


@pytest.fixture(scope="session")
def c2c2():
    return builtin("elemab:2:2")


@pytest.fixture(scope="session")
def diamond():
    # the lattice [1] x [1]
    return lattice_from_order(
        "diamond", ["1", "a", "b", "ab"], [1, 2, 2, 4],
        [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)])


@pytest.fixture(scope="session")
def pentagon():
    # the lattice N5: 0 < 1 < 4 and 0 < 2 < 3 < 4
    return lattice_from_order(
        "Pentagon", ["0", "1", "2", "3", "4"], [1, 4, 2, 4, 8],
        [(0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (2, 3), (2, 4), (3, 4)])


@pytest.fixture(scope="session")
def chain3():
    return lattice_from_order(
        "chain3", ["0", "1", "2", "3"], [1, 2, 4, 8],
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture(scope="session")
def c4_store(c4):
    return ninfty.enumerate_systems(c4)


@pytest.fixture(scope="session")
def c8_store(c8):
    return ninfty.enumerate_systems(c8)


@pytest.fixture(scope="session")
def s3_store(s3):
    return ninfty.enumerate_systems(s3)


@pytest.fixture(scope="session")
def q8_store(q8):
    return ninfty.enumerate_systems(q8)
