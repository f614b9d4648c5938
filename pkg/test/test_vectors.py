"""Test points and tangent vectors."""

# pylint: disable=import-error
import math
import pytest
import solminimal
from solminimal.vector import Sol3Point, CoordVector, FrameVector, ORIGIN


def test_point_creation():
    """Create and check equality."""
    assert Sol3Point((1, 2, 3)) == Sol3Point([1.0, 2.0, 3.0])
    assert Sol3Point((1, 2, 3)) != Sol3Point((3, 2, 1))
    assert Sol3Point((1, 2, 3)).x3 == 3.0


def test_wrong_number_of_components():
    """Points have exactly three coordinates."""
    with pytest.raises(solminimal.exceptions.WrongNumberOfComponents):
        Sol3Point((1, 2))
    with pytest.raises(solminimal.exceptions.WrongNumberOfComponents):
        Sol3Point((1, 2, 3, 4))


def test_non_finite_component():
    """Coordinates must be finite."""
    with pytest.raises(solminimal.exceptions.NonFiniteComponent):
        Sol3Point((0, math.nan, 0))
    with pytest.raises(solminimal.exceptions.NonFiniteComponent):
        FrameVector(ORIGIN, (math.inf, 0, 0))


def test_string():
    """Test str of points and vectors."""
    assert str(Sol3Point((1, 2, 3))) == "Sol3Point[1.0, 2.0, 3.0]"
    assert str(FrameVector(ORIGIN, (1, 0, 0))) == "FrameVector[1.0, 0.0, 0.0]@[0.0, 0.0, 0.0]"


def test_vector_arithmetic():
    """Test addition, subtraction and scaling at one base point."""
    p = Sol3Point((0, 0, 1))
    first, second = CoordVector(p, (1, 1, 1)), CoordVector(p, (2, 3, 4))
    assert first + second == CoordVector(p, (3, 4, 5))
    assert first - second == CoordVector(p, (-1, -2, -3))
    assert -first == CoordVector(p, (-1, -1, -1))
    assert first.scaled(2) == CoordVector(p, (2, 2, 2))


def test_base_point_mismatch():
    """Vectors at different points cannot be combined."""
    first = FrameVector(ORIGIN, (1, 0, 0))
    second = FrameVector(Sol3Point((0, 0, 1)), (1, 0, 0))
    with pytest.raises(solminimal.exceptions.BasePointMismatch):
        first + second
    with pytest.raises(solminimal.exceptions.BasePointMismatch):
        first.dot(second)


def test_frame_algebra():
    """Dot and cross products in the orthonormal frame."""
    e1, e2 = FrameVector(ORIGIN, (1, 0, 0)), FrameVector(ORIGIN, (0, 1, 0))
    assert e1.cross(e2) == FrameVector(ORIGIN, (0, 0, 1))
    assert e1.dot(e2) == 0
    assert FrameVector(ORIGIN, (3, 4, 0)).norm() == 5
    assert FrameVector(ORIGIN, (0, 0, 2)).normalized() == FrameVector(ORIGIN, (0, 0, 1))


def test_distance():
    """Euclidean distance of coordinates."""
    assert Sol3Point((1, 2, 2)).distance(ORIGIN) == 3
