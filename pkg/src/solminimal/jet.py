"""First and second order jets of an immersion at one parameter point."""

from __future__ import annotations
from dataclasses import dataclass
from typing import Tuple
from .vector import FrameVector, Sol3Point


@dataclass(frozen=True)
class ImmersionJet:
    """Position, partials, unit normal and conformal factor at z = u + iv.

    Partials and the normal are in frame components at the position.
    """

    z: complex
    position: Sol3Point
    x_u: FrameVector
    x_v: FrameVector
    normal: FrameVector
    conformal_factor: float

    def conformality_residuals(self) -> Tuple[float, float, float]:
        """Relative residuals of <x_u, x_v> = 0 and |x_u|^2 = |x_v|^2 = lambda."""
        scale = self.conformal_factor
        return (abs(self.x_u.dot(self.x_v)) / scale,
                abs(self.x_u.dot(self.x_u) - scale) / scale,
                abs(self.x_v.dot(self.x_v) - scale) / scale)


@dataclass(frozen=True)
class SecondOrderJet(ImmersionJet):
    """Jet with second partials.

    Second partials are coordinate second derivatives converted to frame
    components at the position; they are not covariant derivatives.
    """

    x_uu: FrameVector
    x_vv: FrameVector
    x_uv: FrameVector

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
