import pytest

from specalc import io
from specalc.pathalg import AlgebraPresentation, linear_quiver, radical_square_zero


def presentation(name):
    return io.presentation_from_dict(io.load_fixture(name))


@pytest.fixture
def ex_dim():
    """Path algebra of the four-vertex square quiver (no extra 1 -> 4 edges)."""
    return presentation("square_tau0")


@pytest.fixture
def square_rel():
    """Square quiver modulo b*a - d*c."""
    return presentation("square_commutative")


@pytest.fixture
def a4_rel():
    return AlgebraPresentation(linear_quiver(4), ["a2*a1"])


@pytest.fixture
def a5_rad2():
    return radical_square_zero(linear_quiver(5))
