"""Group law, left-invariant metric, frame, isotropies and connection of Sol3.

Sol3 is R^3 with the multiplication

    x * y = (y1 e^(-x3) + x1, y2 e^(x3) + x2, x3 + y3)

and the left-invariant metric e^(2 x3) dx1^2 + e^(-2 x3) dx2^2 + dx3^2.
The frame E1 = e^(-x3) d1, E2 = e^(x3) d2, E3 = d3 is orthonormal everywhere.

Exponentials of x3 are evaluated directly, so callers keep |x3| <= 700.
"""

from __future__ import annotations
import math
from typing import List, Tuple
import numpy as np
from . import exceptions
from .vector import Sol3Point, CoordVector, FrameVector


def group_mul(x: Sol3Point, y: Sol3Point) -> Sol3Point:
    """Multiply two points of Sol3.

    Args:
        x (Sol3Point): Left factor, the translation.
        y (Sol3Point): Right factor.

    Returns:
        Sol3Point: x * y
    """
    return Sol3Point((y.x1 * math.exp(-x.x3) + x.x1,
                      y.x2 * math.exp(x.x3) + x.x2,
                      x.x3 + y.x3))


def group_inv(x: Sol3Point) -> Sol3Point:
    """Inverse element, so that x * group_inv(x) is the origin."""
    return Sol3Point((-x.x1 * math.exp(x.x3), -x.x2 * math.exp(-x.x3), -x.x3))


def _check_based_at(p: Sol3Point, *vectors) -> None:
    for vector in vectors:
        if vector.point != p:
            raise exceptions.BasePointMismatch(p, vector.point)


def metric(p: Sol3Point, first: CoordVector, second: CoordVector) -> float:
    """Evaluate the left-invariant metric on two coordinate vectors at p.

    Raises:
        exceptions.BasePointMismatch: Both vectors must be based at p.
    """
    _check_based_at(p, first, second)
    return (math.exp(2 * p.x3) * first.a1 * second.a1
            + math.exp(-2 * p.x3) * first.a2 * second.a2
            + first.a3 * second.a3)


def coord_to_frame(p: Sol3Point, vector: CoordVector) -> FrameVector:
    """Express a coordinate vector at p in the frame E1, E2, E3."""
    _check_based_at(p, vector)
    return FrameVector(p, (math.exp(p.x3) * vector.a1,
                           math.exp(-p.x3) * vector.a2,
                           vector.a3))


def frame_to_coord(p: Sol3Point, vector: FrameVector) -> CoordVector:
    """Inverse of coord_to_frame."""
    _check_based_at(p, vector)
    return CoordVector(p, (math.exp(-p.x3) * vector.f1,
                           math.exp(p.x3) * vector.f2,
                           vector.f3))


def translation_pushforward(a: Sol3Point, vector: CoordVector) -> CoordVector:
    """Push a coordinate vector forward along the left translation by a."""
    return CoordVector(group_mul(a, vector.point),
                       (math.exp(-a.x3) * vector.a1,
                        math.exp(a.x3) * vector.a2,
                        vector.a3))


_SIGMA = np.array([[0, 1, 0], [-1, 0, 0], [0, 0, -1]])
_TAU = np.diag([-1, 1, 1])


class IsotropyElement:
    """One of the eight isometries of Sol3 fixing the origin.

    Words are written sigma^rotation tau^reflection, so tau acts first.
    sigma(x) = (x2, -x1, -x3) and tau(x) = (-x1, x2, x3) generate a
    dihedral group of order eight.
    """

    TAGS = ("id", "s", "s2", "s3", "t", "st", "s2t", "s3t")

    rotation: int
    reflection: int

    def __init__(self, tag: str):
        """Build an isotropy from its word.

        Args:
            tag (str): One of id, s, s2, s3, t, st, s2t, s3t,
                where s is sigma and t is tau.

        Raises:
            exceptions.UnknownIsotropy: The word is not one of the eight.
        """
        if tag not in self.TAGS:
            raise exceptions.UnknownIsotropy(tag)
        index = self.TAGS.index(tag)
        self.rotation = index % 4
        self.reflection = index // 4

    @classmethod
    def from_powers(cls, rotation: int, reflection: int) -> IsotropyElement:
        """The word sigma^rotation tau^reflection."""
        return cls(cls.TAGS[(rotation % 4) + 4 * (reflection % 2)])

    @property
    def tag(self) -> str:
        return self.TAGS[self.rotation + 4 * self.reflection]

    def compose(self, other: IsotropyElement) -> IsotropyElement:
        """The isotropy self o other, using tau sigma = sigma^-1 tau."""
        sign = -1 if self.reflection else 1
        return IsotropyElement.from_powers(self.rotation + sign * other.rotation,
                                           self.reflection + other.reflection)

    def inverse(self) -> IsotropyElement:
        if self.reflection:
            return self
        return IsotropyElement.from_powers(-self.rotation, 0)

    def order(self) -> int:
        power, count = self, 1
        while power.tag != "id":
            power, count = power.compose(self), count + 1
        return count

    def matrix(self) -> np.ndarray:
        """Linear action on coordinates, also the pushforward on vectors."""
        return np.linalg.matrix_power(_SIGMA, self.rotation) @ \
            np.linalg.matrix_power(_TAU, self.reflection)

    def apply(self, p: Sol3Point) -> Sol3Point:
        return Sol3Point(self.matrix() @ p.as_array())

    def pushforward(self, vector: CoordVector) -> CoordVector:
        return CoordVector(self.apply(vector.point), self.matrix() @ vector.as_array())

    def __eq__(self, other) -> bool:
        return isinstance(other, IsotropyElement) and self.tag == other.tag

    def __hash__(self) -> int:
        return hash(self.tag)

    def __str__(self) -> str:
        return f"Isotropy({self.tag})"

    def __repr__(self) -> str:
        return str(self)


IDENTITY = IsotropyElement("id")
SIGMA = IsotropyElement("s")
TAU = IsotropyElement("t")


def isotropy_apply(word: IsotropyElement, p: Sol3Point) -> Sol3Point:
    """Apply an isotropy of the origin to a point."""
    return word.apply(p)


def isotropy_group() -> List[IsotropyElement]:
    """All eight isotropies of the origin."""
    return [IsotropyElement(tag) for tag in IsotropyElement.TAGS]


class Isometry:
    """Left translation after an isotropy: p -> translation * word(p)."""

    translation: Sol3Point
    word: IsotropyElement

    def __init__(self, translation: Sol3Point, word: IsotropyElement = IDENTITY):
        self.translation = translation
        self.word = word

    @classmethod
    def screw(cls, height: float) -> Isometry:
        """Vertical translation by height."""
        return cls(Sol3Point((0.0, 0.0, height)))

    def apply(self, p: Sol3Point) -> Sol3Point:
        return group_mul(self.translation, self.word.apply(p))

    def compose(self, other: Isometry) -> Isometry:
        """The isometry self o other.

        Isotropies are group automorphisms, so w(t * q) = w(t) * w(q).
        """
        return Isometry(group_mul(self.translation, self.word.apply(other.translation)),
                        self.word.compose(other.word))

    def __str__(self) -> str:
        return f"Isometry({self.translation} after {self.word.tag})"


def _bracket_table() -> np.ndarray:
    table = np.zeros((3, 3, 3), dtype=int)
    # [E1, E3] = E1, [E2, E3] = -E2
    table[0, 2, 0], table[2, 0, 0] = 1, -1
    table[1, 2, 1], table[2, 1, 1] = -1, 1
    return table


BRACKETS = _bracket_table()


class ConnectionTable:
    """Levi-Civita connection in the frame: nabla_Ei Ej = sum_k coefficients[i, j, k] Ek."""

    coefficients: np.ndarray

    def __init__(self):
        table = np.zeros((3, 3, 3), dtype=int)
        table[0, 0, 2] = -1  # nabla_E1 E1 = -E3
        table[1, 1, 2] = 1   # nabla_E2 E2 = E3
        table[0, 2, 0] = 1   # nabla_E1 E3 = E1
        table[1, 2, 1] = -1  # nabla_E2 E3 = -E2
        self.coefficients = table

    def apply(self, first, second) -> np.ndarray:
        """nabla_X Y for frame-constant X and Y, by bilinearity."""
        return np.einsum("i,j,ijk->k", np.asarray(first, dtype=float),
                         np.asarray(second, dtype=float), self.coefficients)

    def torsion_residual(self) -> np.ndarray:
        """nabla_Ei Ej - nabla_Ej Ei - [Ei, Ej], zero for a torsion-free table."""
        return self.coefficients - self.coefficients.transpose(1, 0, 2) - BRACKETS

    def compatibility_residual(self) -> np.ndarray:
        """<nabla_Ei Ej, Ek> + <Ej, nabla_Ei Ek>, zero for a metric table."""
        return self.coefficients + self.coefficients.transpose(0, 2, 1)


CONNECTION = ConnectionTable()


def lie_bracket(first: FrameVector, second: FrameVector) -> FrameVector:
    """Bracket of the left-invariant fields with the given frame components."""
    return FrameVector(first.point, np.einsum("i,j,ijk->k", first.as_array(),
                                              second.as_array(), BRACKETS))


def covariant_derivative(velocity: FrameVector, field: FrameVector,
                         field_rate: FrameVector) -> FrameVector:
    """Covariant derivative of a field along a curve.

    Args:
        velocity (FrameVector): Velocity of the curve.
        field (FrameVector): Value of the field on the curve.
        field_rate (FrameVector): Parameter derivative of the field's frame components.

    Returns:
        FrameVector: nabla_velocity field.
    """
    return FrameVector(velocity.point, field_rate.as_array()
                       + CONNECTION.apply(velocity.as_array(), field.as_array()))


def _frame_rate(first: FrameVector, second: FrameVector) -> FrameVector:
    # d/dt (e^{x3} a1, e^{-x3} a2, a3) given the frame form of the coordinate second derivative
    a1, a2, a3 = first.entries
    return second + FrameVector(second.point, (a3 * a1, -a3 * a2, 0.0))


def covariant_second_derivatives(jet) -> Tuple[FrameVector, FrameVector]:
    """Covariant second derivatives nabla_du x_u and nabla_dv x_v.

    Args:
        jet: A jet with first partials x_u, x_v and second partials x_uu, x_vv,
            all in frame components at the same point. Second partials are the
            coordinate second derivatives converted with coord_to_frame.

    Returns:
        Tuple[FrameVector, FrameVector]: The two covariant second derivatives.
    """
    return (covariant_derivative(jet.x_u, jet.x_u, _frame_rate(jet.x_u, jet.x_uu)),
            covariant_derivative(jet.x_v, jet.x_v, _frame_rate(jet.x_v, jet.x_vv)))


def ambient_sectional_curvature(normal: FrameVector) -> float:
    """Sectional curvature of the plane orthogonal to normal.

    The curvature operator is diagonal with value 1 on the horizontal plane
    and -1 on every vertical plane, giving 2 n3^2 - 1 for a unit normal n.
    """
    n1, n2, n3 = normal.entries
    return (2 * n3 * n3) / (n1 * n1 + n2 * n2 + n3 * n3) - 1.0


__all__ = ["group_mul", "group_inv", "metric", "coord_to_frame", "frame_to_coord",
           "translation_pushforward", "IsotropyElement", "isotropy_apply", "isotropy_group",
           "Isometry", "ConnectionTable", "CONNECTION", "lie_bracket", "covariant_derivative",
           "covariant_second_derivatives", "ambient_sectional_curvature"]

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
