"""Uniform parameter grids and their quadrilateral cells."""

from __future__ import annotations
from typing import Iterator, List, Sequence, Tuple
import itertools
import functools
import numpy as np
from . import exceptions


class ParameterGrid:
    """A uniform nu by nv grid on a rectangle of the (u, v) plane.

    Points are enumerated row-major with u outer, so the vertex (i, j) has
    the lexicographic index i * nv + j.
    """

    nu: int
    nv: int
    u_range: Tuple[float, float]
    v_range: Tuple[float, float]

    def __init__(self, nu: int, nv: int, u_range: Tuple[float, float],
                 v_range: Tuple[float, float]):
        """Validate the sample counts and ranges.

        Raises:
            exceptions.InvalidGrid: Counts must be at least 2 and ranges non-empty.
        """
        if nu < 2 or nv < 2:
            raise exceptions.InvalidGrid(f"sample counts must be at least 2, got {nu} x {nv}")
        for lower, upper in (u_range, v_range):
            if not lower < upper:
                raise exceptions.InvalidGrid(f"empty range [{lower}, {upper}]")
        self.nu, self.nv = nu, nv
        self.u_range = (float(u_range[0]), float(u_range[1]))
        self.v_range = (float(v_range[0]), float(v_range[1]))

    @functools.cached_property
    def us(self) -> np.ndarray:
        return np.linspace(*self.u_range, self.nu)

    @functools.cached_property
    def vs(self) -> np.ndarray:
        return np.linspace(*self.v_range, self.nv)

    def __len__(self) -> int:
        return self.nu * self.nv

    def points(self) -> Iterator[complex]:
        """Grid points u + iv in vertex order."""
        for u, v in itertools.product(self.us, self.vs):
            yield complex(u, v)

    def vertex_index(self, i: int, j: int) -> int:
        """Lexicographic index of the vertex (i, j)."""
        return _index_to_name((i, j), (self.nu, self.nv))

    def quad_cells(self) -> List[Tuple[int, int, int, int]]:
        """Quads (i,j), (i+1,j), (i+1,j+1), (i,j+1) as vertex indices."""
        return [tuple(self.vertex_index(i + di, j + dj)
                      for di, dj in ((0, 0), (1, 0), (1, 1), (0, 1)))
                for i, j in itertools.product(range(self.nu - 1), range(self.nv - 1))]

    def __str__(self):
        """Human-readable string representation."""
        return f"ParameterGrid({self.nu}x{self.nv} on " + \
            f"[{self.u_range[0]:g}, {self.u_range[1]:g}] x [{self.v_range[0]:g}, {self.v_range[1]:g}])"


def _index_to_name(index: Sequence[int], widths: Sequence[int]) -> int:
    """Position of a multi-index in lexicographic order."""
    def unpack(acc, position_entry):
        position, entry = position_entry
        return acc + entry * functools.reduce(lambda a, b: a * b, widths[position + 1:], 1)

    return functools.reduce(unpack, enumerate(index), 0)


__all__ = ["ParameterGrid"]

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
