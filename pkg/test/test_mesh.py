"""Test meshes and their text formats."""

# pylint: disable=import-error
import pytest
import solminimal
from solminimal import helicoid
from solminimal.mesh import Mesh, sample_mesh, write_csv
from solminimal.tessellation import ParameterGrid


def test_write_obj(tmp_path):
    """v lines, then f lines with 1-based indices."""
    path = tmp_path / "square.obj"
    Mesh([(0, 0, 0), (1, 0, 0), (1, 1, 0.5)], [(0, 1, 2)]).write_obj(path)
    assert path.read_text() == "v 0 0 0\nv 1 0 0\nv 1 1 0.5\nf 1 2 3\n"


def test_write_obj_with_normals(tmp_path):
    """Normals give vn lines and v//vn face references."""
    path = tmp_path / "normals.obj"
    Mesh([(0, 0, 0), (1, 0, 0), (0, 1, 0)], [(0, 1, 2)], [(0, 0, 1)] * 3).write_obj(path)
    lines = path.read_text().splitlines()
    assert lines.count("vn 0 0 1") == 3
    assert lines[-1] == "f 1//1 2//2 3//3"


def test_invalid_meshes():
    """Faces must index existing distinct vertices and normals must match."""
    with pytest.raises(solminimal.exceptions.InvalidGrid):
        Mesh([(0, 0, 0)], [(0, 1, 2)]).validate()
    with pytest.raises(solminimal.exceptions.InvalidGrid):
        Mesh([(0, 0, 0), (1, 0, 0)], [(0, 1, 1)]).validate()
    with pytest.raises(solminimal.exceptions.InvalidGrid):
        Mesh([(0, 0, 0), (1, 0, 0), (0, 1, 0)], [(0, 1, 2)], [(0, 0, 1)]).validate()


def test_sample_mesh():
    """A sampled helicoid has one vertex per grid point and one quad per cell."""
    m = helicoid.build(0.4)
    grid = ParameterGrid(5, 6, (-1, 1), (-m.W, m.W))
    mesh = sample_mesh(grid, m.immerse, lambda z: m.jet(z).normal)
    assert len(mesh.vertices) == 30
    assert len(mesh.faces) == 20
    assert len(mesh.normals) == 30
    assert str(mesh) == "Mesh(30 vertices, 20 faces)"


def test_write_csv(tmp_path):
    """A header, then floats at 17 significant digits."""
    path = tmp_path / "rows.csv"
    write_csv(path, ("t", "x1", "x2"), [(0.0, 0.1, -2.0)])
    assert path.read_text() == "t,x1,x2\n0,0.10000000000000001,-2\n"
