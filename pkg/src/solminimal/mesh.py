"""Polygon meshes of sampled surfaces and their text formats."""

from __future__ import annotations
import csv
import logging
from typing import Callable, Iterable, List, Optional, Sequence, Tuple
from . import exceptions
from .tessellation import ParameterGrid
from .vector import FrameVector, Sol3Point

logger = logging.getLogger(__name__)

Vertex = Tuple[float, float, float]


def _number(value: float) -> str:
    return f"{value:.17g}"


class Mesh:
    """Vertices in Sol3 coordinates, faces as 0-based vertex indices and optional normals."""

    vertices: List[Vertex]
    faces: List[Tuple[int, ...]]
    normals: Optional[List[Vertex]]

    def __init__(self, vertices: Iterable[Vertex], faces: Iterable[Sequence[int]],
                 normals: Optional[Iterable[Vertex]] = None):
        self.vertices = [tuple(float(x) for x in vertex) for vertex in vertices]
        self.faces = [tuple(int(i) for i in face) for face in faces]
        self.normals = None if normals is None else [tuple(float(x) for x in n) for n in normals]

    def validate(self) -> Mesh:
        """Check that faces index existing vertices and do not repeat one.

        Raises:
            exceptions.InvalidGrid: A face is out of range or degenerate, or the
                normals do not match the vertices.
        """
        count = len(self.vertices)
        for face in self.faces:
            if any(not 0 <= index < count for index in face):
                raise exceptions.InvalidGrid(f"face {face} indexes outside {count} vertices")
            if len(set(face)) != len(face):
                raise exceptions.InvalidGrid(f"face {face} repeats a vertex")
        if self.normals is not None and len(self.normals) != count:
            raise exceptions.InvalidGrid(f"{len(self.normals)} normals for {count} vertices")
        return self

    def write_obj(self, path) -> None:
        """Write v, vn and f lines; indices are 1-based and lines end in LF."""
        self.validate()
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            for vertex in self.vertices:
                f.write("v " + " ".join(map(_number, vertex)) + "\n")
            if self.normals is not None:
                for normal in self.normals:
                    f.write("vn " + " ".join(map(_number, normal)) + "\n")
            for face in self.faces:
                if self.normals is None:
                    f.write("f " + " ".join(str(i + 1) for i in face) + "\n")
                else:
                    f.write("f " + " ".join(f"{i + 1}//{i + 1}" for i in face) + "\n")
        logger.info("wrote %d vertices and %d faces to %s", len(self.vertices), len(self.faces), path)

    def __str__(self) -> str:
        return f"Mesh({len(self.vertices)} vertices, {len(self.faces)} faces)"


def sample_mesh(grid: ParameterGrid, position: Callable[[complex], Sol3Point],
                normal: Optional[Callable[[complex], FrameVector]] = None) -> Mesh:
    """Evaluate a surface on a grid; faces are the grid's quad cells."""
    points = list(grid.points())
    vertices = [position(z).entries for z in points]
    normals = None if normal is None else [normal(z).entries for z in points]
    return Mesh(vertices, grid.quad_cells(), normals).validate()


def write_csv(path, header: Sequence[str], rows: Iterable[Sequence[float]]) -> None:
    """Comma-separated rows after a header, floats at 17 significant digits, LF endings."""
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_number(value) if isinstance(value, float) else value
                             for value in row])

"""
The MIT License (MIT)

Copyright (c) 2021 The solminimal developers

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
"""
