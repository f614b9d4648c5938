"""Test parameter grids and their cells."""

# pylint: disable=import-error
import pytest
import solminimal
from solminimal.tessellation import ParameterGrid


def test_create_grid():
    """A grid knows its size and describes itself."""
    grid = ParameterGrid(3, 4, (-1, 1), (0, 3))
    assert len(grid) == 12
    assert str(grid) == "ParameterGrid(3x4 on [-1, 1] x [0, 3])"


def test_points_are_row_major():
    """u is the outer loop and both ends are included."""
    points = list(ParameterGrid(2, 3, (0, 1), (0, 2)).points())
    assert points == [0j, 1j, 2j, complex(1, 0), complex(1, 1), complex(1, 2)]


def test_index_to_name():
    """Convert a multi-index to a position in lexicographic order."""
    itn = solminimal.tessellation._index_to_name
    assert itn([5], [6]) == 5
    assert itn([5, 0], [6, 6]) == 5*6
    assert itn([0, 0], [6, 6]) == 0
    assert itn([0, 5], [6, 6]) == 5
    assert itn([1, 5], [6, 6]) == 6+5
    assert itn([1, 2], [6, 3]) == 1*3+2
    assert itn([1, 2, 3], [6, 5, 4]) == 1*5*4 + 2*4+3


def test_vertex_index_matches_points():
    """Vertex (i, j) is the point u_i + i v_j."""
    grid = ParameterGrid(4, 5, (0, 3), (0, 4))
    points = list(grid.points())
    for i in range(4):
        for j in range(5):
            assert points[grid.vertex_index(i, j)] == complex(i, j)


def test_quad_cells():
    """(nu-1)(nv-1) quads, counter-clockwise in (u, v)."""
    grid = ParameterGrid(3, 3, (0, 1), (0, 1))
    cells = grid.quad_cells()
    assert len(cells) == 4
    assert cells[0] == (0, 3, 4, 1)
    assert cells[-1] == (4, 7, 8, 5)


def test_faulty_grid():
    """Pass bad arguments to the grid."""
    with pytest.raises(solminimal.exceptions.InvalidGrid):
        ParameterGrid(1, 4, (0, 1), (0, 1))
    with pytest.raises(solminimal.exceptions.InvalidGrid):
        ParameterGrid(4, 4, (1, 1), (0, 1))
    with pytest.raises(solminimal.exceptions.InvalidGrid):
        ParameterGrid(4, 4, (0, 1), (2, -2))
