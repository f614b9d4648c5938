"""The verification suites.

Each suite builds one surface and collects the residuals of its checks in a
VerificationReport. Finite-difference checks go through the position
evaluators of solminimal.finite_difference.
"""

from __future__ import annotations
import logging
import math
from typing import Mapping, Optional, Sequence
import numpy as np
from . import catenoid, exceptions, helicoid, limits
from .finite_difference import FD_STEP, Surface, curvature_sample, fd_jet, \
    intrinsic_gauss_curvature, mean_curvature, offset_grid, regular_points
from .report import VerificationReport
from .sol3 import ambient_sectional_curvature, coord_to_frame, covariant_derivative
from .vector import CoordVector, FrameVector
from .weierstrass import coordinate_partials, conformal_factor_from_representation, \
    harmonic_residual, hopf_q, normal_from_gauss, representation_rhs

logger = logging.getLogger(__name__)

SECTION_LEVELS = (-2.0, -1.0, 0.0, 1.0, 2.0)
TOTAL_CURVATURE_RADII = (1.0, 2.0, 3.0, 4.0, 5.0, 6.0)

DEFAULT_TOLERANCES = {
    "harmonic": 1e-9,
    "hopf.value": 1e-8,
    "hopf.spread": 1e-9,
    "conformality.analytic": 1e-6,
    "conformality.fd": 1e-4,
    "normal.gauss": 1e-10,
    "representation.partials": 1e-8,
    "representation.conformal_factor": 1e-8,
    "mean_curvature": 1e-4,
    "curvature.gauss_equation": 1e-3,
    "curvature.asymptote": 1e-8,
    "shape_operator": 1e-4,
    "total_curvature.decreasing": 0,
    "total_curvature.divergence": 0,
}


def shape_operator_check(m: helicoid.HelicoidModel, z: complex,
                         h: float = FD_STEP) -> VerificationReport:
    """Compare FD covariant derivatives of the normal with the closed-form coefficients.

    nabla_x_u N and nabla_x_v N are decomposed in the orthogonal basis (x_u, x_v).

    Raises:
        exceptions.DegenerateDecomposition: lambda vanishes at z.
    """
    report = VerificationReport(f"helicoid K={m.K} shape operator at {z}")
    jet = m.jet(z)
    scale = jet.conformal_factor
    if not scale > 1e-12:
        raise exceptions.DegenerateDecomposition(scale)
    location = f"z={z.real:.6f}{z.imag:+.6f}i"
    measured = []
    for direction, velocity in ((1.0, jet.x_u), (1j, jet.x_v)):
        forward = m.jet(z + h * direction).normal.as_array()
        backward = m.jet(z - h * direction).normal.as_array()
        rate = FrameVector(jet.position, (forward - backward) / (2 * h))
        derivative = covariant_derivative(velocity, jet.normal, rate)
        measured.append((derivative.dot(jet.x_u) / scale, derivative.dot(jet.x_v) / scale))
    expected = m.shape_operator_coefficients(z)
    tolerance = DEFAULT_TOLERANCES["shape_operator"]
    for row, first in enumerate("uv"):
        for column, second in enumerate("uv"):
            report.add(f"shape_operator.{first}_{second}",
                       abs(measured[row][column] - expected[row][column]), tolerance, location)
    report.add("shape_operator.trace", abs(measured[0][0] + measured[1][1]), tolerance, location)
    determinant = measured[0][0] * measured[1][1] - measured[0][1] * measured[1][0]
    report.add("shape_operator.determinant",
               abs(determinant - m.extrinsic_curvature(z)),
               tolerance * max(1.0, abs(determinant)), location)
    return report


def _where(z: complex) -> str:
    return f"z={z.real:.6f}{z.imag:+.6f}i"


def _tolerance(name: str, tolerances: Optional[Mapping[str, float]]) -> float:
    if tolerances and name in tolerances:
        return float(tolerances[name])
    return DEFAULT_TOLERANCES[name]


def _finish(report: VerificationReport, tolerances: Optional[Mapping[str, float]]) -> VerificationReport:
    if tolerances:
        report = report.with_tolerances(tolerances)
    logger.info("%s", report)
    return report


def weierstrass_checks(report: VerificationReport, model, points: Sequence[complex],
                       q_expected: complex, tolerances=None) -> None:
    """Harmonicity, Hopf constancy and agreement of the model with its representation."""
    locations = [_where(z) for z in points]
    samples = [model.gauss_sample(z) for z in points]
    jets = [model.jet(z) for z in points]
    report.add_max("harmonic", [harmonic_residual(s) for s in samples],
                   _tolerance("harmonic", tolerances), locations)
    qs = np.array([hopf_q(s).q for s in samples])
    report.add_max("hopf.value", np.abs(qs - q_expected), _tolerance("hopf.value", tolerances),
                   locations)
    report.add("hopf.spread", max(np.ptp(qs.real), np.ptp(qs.imag)),
               _tolerance("hopf.spread", tolerances))
    report.add_max("conformality.analytic", [max(j.conformality_residuals()) for j in jets],
                   _tolerance("conformality.analytic", tolerances), locations)
    report.add_max("normal.gauss",
                   [j.normal.distance(normal_from_gauss(s.g, j.position))
                    for j, s in zip(jets, samples)],
                   _tolerance("normal.gauss", tolerances), locations)
    partials, factors = [], []
    for jet, sample in zip(jets, samples):
        rhs = representation_rhs(sample, jet.position.x3)
        x_u, x_v = coordinate_partials(rhs)
        framed_u = coord_to_frame(jet.position, CoordVector(jet.position, x_u))
        framed_v = coord_to_frame(jet.position, CoordVector(jet.position, x_v))
        size = math.sqrt(jet.conformal_factor)
        partials.append(max((framed_u - jet.x_u).norm(), (framed_v - jet.x_v).norm()) / size)
        factors.append(abs(conformal_factor_from_representation(rhs, jet.position.x3)
                           - jet.conformal_factor) / jet.conformal_factor)
    report.add_max("representation.partials", partials,
                   _tolerance("representation.partials", tolerances), locations)
    report.add_max("representation.conformal_factor", factors,
                   _tolerance("representation.conformal_factor", tolerances), locations)


def minimality_checks(report: VerificationReport, surface: Surface, points: Sequence[complex],
                      tolerances=None, h: float = FD_STEP) -> None:
    """FD conformality and FD mean curvature at the given points."""
    locations = [_where(z) for z in points]
    jets = [fd_jet(surface, z, h) for z in points]
    report.add_max("conformality.fd", [max(j.conformality_residuals()) for j in jets],
                   _tolerance("conformality.fd", tolerances), locations)
    report.add_max("mean_curvature", [abs(mean_curvature(surface, z, h)) for z in points],
                   _tolerance("mean_curvature", tolerances), locations)


def helicoid_suite(K: float, tolerances: Optional[Mapping[str, float]] = None,
                   grid: int = 41, h: float = FD_STEP) -> VerificationReport:
    """Every check on H_K.

    Args:
        K (float): Parameter.
        tolerances (Mapping[str, float], optional): Overrides by check name.
        grid (int, optional): Points per side of the Gauss map grid on [-2,2]^2.
        h (float, optional): Finite-difference step.

    Returns:
        VerificationReport: The combined report.
    """
    m = helicoid.build(K)
    report = VerificationReport(f"helicoid K={K}")
    points = regular_points(m.gauss_sample, offset_grid(-2, 2, grid), offset_grid(-2, 2, grid, 2))
    weierstrass_checks(report, m, points, 1j * K / 8, tolerances)
    coarse = regular_points(m.gauss_sample, offset_grid(-2, 2, 5), offset_grid(-2, 2, 5, 2))
    minimality_checks(report, m.evaluator(), coarse, tolerances, h)
    medium = regular_points(m.gauss_sample, offset_grid(-2, 2, 11), offset_grid(-2, 2, 11, 3))
    report.add_max("curvature.gauss_equation",
                   [abs(intrinsic_gauss_curvature(m.conformal_factor, z, h)
                        - m.extrinsic_curvature(z)
                        - ambient_sectional_curvature(m.jet(z).normal)) for z in medium],
                   _tolerance("curvature.gauss_equation", tolerances), [_where(z) for z in medium])
    report.add("curvature.asymptote", abs(m.extrinsic_curvature(complex(20.0, 0.3)) + 1.0),
               _tolerance("curvature.asymptote", tolerances))
    for z in (complex(0.4, 0.6), complex(-0.7, 1.3), complex(1.1, -0.45)):
        report.extend(shape_operator_check(m, z, h))
    totals = [helicoid.total_curvature(m, U) for U in TOTAL_CURVATURE_RADII]
    report.add("total_curvature.decreasing", int(np.count_nonzero(np.diff(totals) >= 0)),
               _tolerance("total_curvature.decreasing", tolerances))
    report.add("total_curvature.divergence", max(0.0, totals[-1] + 100.0),
               _tolerance("total_curvature.divergence", tolerances))
    for check in (helicoid.symmetry_check, helicoid.periodicity_check,
                  helicoid.opposite_parameter_check):
        report.extend(check(m))
    report.extend(helicoid.embeddedness_check(m))
    return _finish(report, tolerances)


def catenoid_suite(alpha: float, tolerances: Optional[Mapping[str, float]] = None,
                   grid: int = 41, h: float = FD_STEP) -> VerificationReport:
    """Every check on C_alpha, including the section certificates at levels -2..2."""
    m = catenoid.build(alpha)
    report = VerificationReport(f"catenoid alpha={alpha}")
    points = regular_points(m.gauss_sample, offset_grid(-2, 2, grid), offset_grid(-2, 2, grid, 2))
    weierstrass_checks(report, m, points, -alpha / 4, tolerances)
    coarse = regular_points(m.gauss_sample, offset_grid(-2, 2, 5), offset_grid(-2, 2, 5, 2))
    minimality_checks(report, m.evaluator(), coarse, tolerances, h)
    samples = [curvature_sample(m.evaluator(), z, h, m.conformal_factor)
               for z in coarse]
    report.add_max("curvature.gauss_equation",
                   [abs(s.intrinsic - s.extrinsic - s.ambient) for s in samples],
                   _tolerance("curvature.gauss_equation", tolerances), [_where(z) for z in coarse])
    for level in SECTION_LEVELS:
        report.extend(catenoid.convexity_certificate(m.section(level)))
    report.extend(catenoid.symmetry_check(m))
    report.extend(catenoid.periodicity_check(m))
    return _finish(report, tolerances)


def graph_suite(tolerances: Optional[Mapping[str, float]] = None) -> VerificationReport:
    """Every check on the entire graph S."""
    report = VerificationReport("graph S")
    report.extend(limits.residual_suite_S())
    report.extend(limits.closed_form_check())
    report.extend(limits.graph_checks())
    return _finish(report, tolerances)


def plane_limit_suite(alpha: float, tolerances: Optional[Mapping[str, float]] = None,
                      h: float = FD_STEP) -> VerificationReport:
    """The rescaled catenoid against the plane, with its conformality and minimality."""
    surface = limits.PlaneLimit(alpha)
    report = VerificationReport(f"plane limit alpha={alpha}")
    report.extend(limits.alpha_zero_limit_check(alpha))
    points = regular_points(surface.gauss_sample, offset_grid(-1, 1, 5),
                            offset_grid(0, 2 * math.pi, 5, 2))
    report.add_max("conformality.analytic",
                   [max(surface.jet(z).conformality_residuals()) for z in points],
                   _tolerance("conformality.analytic", tolerances), [_where(z) for z in points])
    minimality_checks(report, surface.evaluator(), points, tolerances, h)
    return _finish(report, tolerances)

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
