"""Finite-difference geometry on position evaluators.

A position evaluator is a callable (u, v) -> Sol3Point, so the same stencils
serve every surface family. Derivatives are taken in coordinates by central
differences and converted to frame components at the stencil centre, where
the connection table is constant.
"""

from __future__ import annotations
import logging
import math
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Tuple
import numpy as np
from . import exceptions
from .jet import ImmersionJet, SecondOrderJet
from .sol3 import ambient_sectional_curvature, coord_to_frame, covariant_derivative, \
    covariant_second_derivatives
from .vector import CoordVector, FrameVector, Sol3Point
from .weierstrass import GaussSample, axis_distance

logger = logging.getLogger(__name__)

Surface = Callable[[float, float], Sol3Point]

FD_STEP = 1e-4
FD_CONFORMALITY = 1e-4
AXIS_GUARD = 1e-3


def _evaluate(surface: Surface, u: float, v: float) -> np.ndarray:
    return surface(u, v).as_array()


def fd_jet(surface: Surface, z: complex, h: float = FD_STEP) -> SecondOrderJet:
    """Jet of a position evaluator by central differences.

    Args:
        surface (Surface): Position as a function of (u, v).
        z (complex): Centre u + iv of the stencil.
        h (float, optional): Step, between 1e-6 and 1e-3.

    Raises:
        exceptions.ParameterOutOfRange: The step is outside [1e-6, 1e-3].
        exceptions.NonFiniteComponent: The surface produced a non-finite value.

    Returns:
        SecondOrderJet: Partials in frame components at the centre; the normal is
            x_u x x_v normalised and the conformal factor is the mean squared length.
    """
    if not 1e-6 <= h <= 1e-3:
        raise exceptions.ParameterOutOfRange("h", h, "[1e-6, 1e-3]")
    u, v = z.real, z.imag
    centre = surface(u, v)
    here = centre.as_array()
    east, west = _evaluate(surface, u + h, v), _evaluate(surface, u - h, v)
    north, south = _evaluate(surface, u, v + h), _evaluate(surface, u, v - h)
    mixed = (_evaluate(surface, u + h, v + h) - _evaluate(surface, u + h, v - h)
             - _evaluate(surface, u - h, v + h) + _evaluate(surface, u - h, v - h)) / (4 * h * h)

    def framed(entries) -> FrameVector:
        return coord_to_frame(centre, CoordVector(centre, entries))

    x_u, x_v = framed((east - west) / (2 * h)), framed((north - south) / (2 * h))
    normal = x_u.cross(x_v).normalized()
    return SecondOrderJet(z, centre, x_u, x_v, normal,
                          (x_u.dot(x_u) + x_v.dot(x_v)) / 2,
                          framed((east - 2 * here + west) / (h * h)),
                          framed((north - 2 * here + south) / (h * h)),
                          framed(mixed))


def conformality_residuals(jet: ImmersionJet) -> Tuple[float, float, float]:
    """(|<x_u,x_v>|, |x_u|^2 - lambda, |x_v|^2 - lambda), all relative to lambda."""
    return jet.conformality_residuals()


def _second_fundamental_form(jet: SecondOrderJet) -> Tuple[float, float, float]:
    nabla_uu, nabla_vv = covariant_second_derivatives(jet)
    # d/du of the frame components of x_v
    rate = jet.x_uv + FrameVector(jet.position, (jet.x_u.f3 * jet.x_v.f1,
                                                 -jet.x_u.f3 * jet.x_v.f2, 0.0))
    nabla_uv = covariant_derivative(jet.x_u, jet.x_v, rate)
    return nabla_uu.dot(jet.normal), nabla_uv.dot(jet.normal), nabla_vv.dot(jet.normal)


def _checked_conformal(jet: SecondOrderJet) -> None:
    residual = max(jet.conformality_residuals())
    if residual > FD_CONFORMALITY:
        raise exceptions.ConformalityViolated(residual, FD_CONFORMALITY)


def mean_curvature(surface: Surface, z: complex, h: float = FD_STEP) -> float:
    """H = (<nabla_x_u x_u, N> + <nabla_x_v x_v, N>) / (2 lambda) from an FD jet.

    Raises:
        exceptions.ConformalityViolated: The parametrisation is not conformal at z.
    """
    jet = fd_jet(surface, z, h)
    _checked_conformal(jet)
    L, _, N = _second_fundamental_form(jet)
    return (L + N) / (2 * jet.conformal_factor)


def intrinsic_gauss_curvature(conformal_factor: Callable[[complex], float], z: complex,
                              h: float = FD_STEP) -> float:
    """-Laplacian(ln lambda) / (2 lambda) with the five-point stencil.

    Raises:
        exceptions.NonPositiveConformalFactor: lambda <= 0 on the stencil.
    """
    values = {}
    for offset in (0, h, -h, 1j * h, -1j * h):
        value = conformal_factor(z + offset)
        if not value > 0:
            raise exceptions.NonPositiveConformalFactor(value, z + offset)
        values[offset] = math.log(value)
    laplacian = (values[h] + values[-h] + values[1j * h] + values[-1j * h]
                 - 4 * values[0]) / (h * h)
    return -laplacian / (2 * math.exp(values[0]))


@dataclass(frozen=True)
class CurvatureSample:
    """Curvatures at one parameter point.

    `extrinsic` is (LN - M^2)/lambda^2, the determinant of the shape operator;
    by the Gauss equation intrinsic = extrinsic + ambient.
    """

    z: complex
    H: float
    intrinsic: float
    extrinsic: float
    ambient: float
    L: float
    M: float
    N: float
    display: Optional[float] = None


def curvature_sample(surface: Surface, z: complex, h: float = FD_STEP,
                     conformal_factor: Optional[Callable[[complex], float]] = None,
                     display_value: Optional[float] = None) -> CurvatureSample:
    """Mean, intrinsic and extrinsic curvature at z.

    Args:
        surface (Surface): Position evaluator.
        z (complex): Parameter point.
        h (float, optional): FD step.
        conformal_factor (Callable[[complex], float], optional): Closed-form lambda.
            Defaults to the lambda of FD jets, which costs a jet per stencil point.
        display_value (float, optional): A closed-form curvature value to carry along.
    """
    jet = fd_jet(surface, z, h)
    _checked_conformal(jet)
    L, M, N = _second_fundamental_form(jet)
    scale = jet.conformal_factor
    if conformal_factor is None:
        def conformal_factor(w):
            return fd_jet(surface, w, h).conformal_factor
        # FD lambda is only good to about 1e-12, so widen the stencil
        intrinsic = intrinsic_gauss_curvature(conformal_factor, z, max(h, 1e-3))
    else:
        intrinsic = intrinsic_gauss_curvature(conformal_factor, z, h)
    return CurvatureSample(z, (L + N) / (2 * scale), intrinsic, (L * N - M * M) / scale**2,
                           ambient_sectional_curvature(jet.normal), L, M, N, display_value)


def offset_grid(lo: float, hi: float, n: int, shift: int = 1) -> np.ndarray:
    """n points on [lo, hi) displaced by the fraction shift/sqrt(2) of the spacing.

    Raises:
        exceptions.InvalidGrid: n < 2 or an empty range.
    """
    if n < 2 or not lo < hi:
        raise exceptions.InvalidGrid(f"{n} points on [{lo}, {hi}]")
    fraction = math.fmod(shift / math.sqrt(2), 1.0)
    return lo + (np.arange(n) + fraction) * (hi - lo) / n


def regular_points(gauss: Callable[[complex], GaussSample], us: Iterable[float],
                   vs: Iterable[float], guard: float = AXIS_GUARD) -> List[complex]:
    """Grid points whose Gauss value keeps |sin 2 arg g| >= guard."""
    points, dropped = [], 0
    vs = list(vs)
    for u in us:
        for v in vs:
            z = complex(u, v)
            if axis_distance(gauss(z).g) < guard:
                dropped += 1
            else:
                points.append(z)
    if dropped:
        logger.debug("dropped %d grid points near the singular axes", dropped)
    return points

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
