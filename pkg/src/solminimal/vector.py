"""Points and tangent vectors of Sol3, stored as triples of finite reals."""

from __future__ import annotations
import math
from typing import Callable, Iterable, Iterator, Tuple
import numpy as np
from . import exceptions


class Triple:
    """Wrap three finite real entries with helper functions.

    Base class for points, coordinate vectors and frame vectors.
    """

    entries: Tuple[float, float, float]

    def __init__(self, entries: Iterable[float]):
        """Convert three reals into a triple.

        Raises:
            exceptions.WrongNumberOfComponents: There must be exactly three entries.
            exceptions.NonFiniteComponent: Entries must be finite.
        """
        values = tuple(float(entry) for entry in entries)
        if len(values) != 3:
            raise exceptions.WrongNumberOfComponents(values)
        if not all(math.isfinite(value) for value in values):
            raise exceptions.NonFiniteComponent(values)
        self.entries = values

    def action(self, other: Triple,
               action: Callable[[float, float], float]) -> Tuple[float, float, float]:
        """Apply the action to each successive pair of entries."""
        return tuple(action(a, b) for (a, b) in zip(self.entries, other.entries))

    def as_array(self) -> np.ndarray:
        """Entries as a numpy array of shape (3,)."""
        return np.array(self.entries)

    def distance(self, other: Triple) -> float:
        """Euclidean distance between the entries of two triples."""
        return math.sqrt(sum(d * d for d in self.action(other, lambda x, y: x-y)))

    def __getitem__(self, item) -> float:
        """Access to entries."""
        return self.entries[item]

    def __iter__(self) -> Iterator[float]:
        return iter(self.entries)

    def __len__(self) -> int:
        return 3

    def __eq__(self, other) -> bool:
        """Compare triples of the same kind component-wise."""
        return type(self) is type(other) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.entries))

    def __str__(self) -> str:
        """Human-readable string representation."""
        return f"{type(self).__name__}{list(self.entries)}"

    def __repr__(self) -> str:
        """Unambiguous string representation."""
        return str(self)


class Sol3Point(Triple):
    """A point (x1, x2, x3) of Sol3 in global coordinates."""

    @property
    def x1(self) -> float:
        return self.entries[0]

    @property
    def x2(self) -> float:
        return self.entries[1]

    @property
    def x3(self) -> float:
        return self.entries[2]


ORIGIN = Sol3Point((0.0, 0.0, 0.0))


class TangentVector(Triple):
    """A tangent vector that remembers its base point.

    Arithmetic between vectors based at different points is refused.
    """

    point: Sol3Point

    def __init__(self, point: Sol3Point, entries: Iterable[float]):
        """Attach three components to a base point."""
        super().__init__(entries)
        self.point = point

    def _check_same_base(self, other: TangentVector) -> None:
        if type(self) is not type(other) or self.point != other.point:
            raise exceptions.BasePointMismatch(self.point, other.point)

    def _like(self, entries: Iterable[float]) -> TangentVector:
        return type(self)(self.point, entries)

    def __add__(self, other: TangentVector) -> TangentVector:
        """Add two vectors at the same point."""
        self._check_same_base(other)
        return self._like(self.action(other, lambda x, y: x+y))

    def __sub__(self, other: TangentVector) -> TangentVector:
        """Subtract two vectors at the same point."""
        self._check_same_base(other)
        return self._like(self.action(other, lambda x, y: x-y))

    def __neg__(self) -> TangentVector:
        return self._like(-entry for entry in self.entries)

    def scaled(self, factor: float) -> TangentVector:
        """Multiply every component by factor."""
        return self._like(factor * entry for entry in self.entries)

    def __eq__(self, other) -> bool:
        return super().__eq__(other) and self.point == other.point

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.entries, self.point.entries))

    def __str__(self) -> str:
        return f"{type(self).__name__}{list(self.entries)}@{list(self.point.entries)}"


class CoordVector(TangentVector):
    """Components (a1, a2, a3) in the coordinate basis d1, d2, d3."""

    @property
    def a1(self) -> float:
        return self.entries[0]

    @property
    def a2(self) -> float:
        return self.entries[1]

    @property
    def a3(self) -> float:
        return self.entries[2]


class FrameVector(TangentVector):
    """Components (f1, f2, f3) in the orthonormal frame E1, E2, E3.

    Because the frame is orthonormal, the metric is the Euclidean dot
    product of the components.
    """

    @property
    def f1(self) -> float:
        return self.entries[0]

    @property
    def f2(self) -> float:
        return self.entries[1]

    @property
    def f3(self) -> float:
        return self.entries[2]

    def dot(self, other: FrameVector) -> float:
        """Metric pairing of two vectors at the same point."""
        self._check_same_base(other)
        return sum(self.action(other, lambda x, y: x*y))

    def norm(self) -> float:
        return math.sqrt(self.dot(self))

    def cross(self, other: FrameVector) -> FrameVector:
        """Cross product with respect to the oriented frame E1, E2, E3."""
        self._check_same_base(other)
        a, b = self.entries, other.entries
        return FrameVector(self.point, (a[1]*b[2] - a[2]*b[1],
                                        a[2]*b[0] - a[0]*b[2],
                                        a[0]*b[1] - a[1]*b[0]))

    def normalized(self) -> FrameVector:
        """Unit vector in the same direction."""
        return self.scaled(1.0 / self.norm())

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
