import pytest

from vertexmod import Lattice, VertexPath, from_paths


@pytest.fixture
def lat52():
    return Lattice(5, 2)


@pytest.fixture
def example2(lat52):
    """Two paths from the same corner; finite components of sizes 1 and 3."""
    return from_paths(lat52, [VertexPath((0, 0), "1121112"),
                              VertexPath((0, 0), "1212111")])


def staircase_band(d):
    """Two nested staircase loops on the (1,1) cylinder, gap d.

    Edge polynomials are (u - 1/2)(u - 1/2 - d) in both orientations; the
    region between the loops has d faces (an incontractible band for d >= 2,
    a single pinched square for d = 1).
    """
    lat = Lattice(1, 1)
    return from_paths(lat, [VertexPath((0, 1), "12"), VertexPath((0, d + 1), "12")])


@pytest.fixture
def example1_d4():
    return staircase_band(4)


@pytest.fixture
def example3():
    """Three paths on (5,2); finite components of sizes 6 and 14."""
    lat = Lattice(5, 2)
    return from_paths(lat, [VertexPath((0, 0), "1112112"),
                            VertexPath((0, 0), "2112111"),
                            VertexPath((0, 3), "1212111")])


@pytest.fixture
def example4():
    """Two paths on (7,3) with a doubled vertical edge; one 11-face component."""
    lat = Lattice(7, 3)
    return from_paths(lat, [VertexPath((0, 0), "1121122111"),
                            VertexPath((0, 2), "1111221211")])
