"""The two limits of the catenoid family.

As alpha -> 0 the catenoid, reparametrised by u' = u + ln(alpha), converges to
the plane (-e^u'/2 sin v', e^u'/2 cos v', 0). At alpha = 1 the equations for
rho, gamma and F integrate in closed form,

    rho1 = arctan(tanh v),  gamma1 = -ln(cosh 2v)/2,  F1 = ln(cosh v),

and the surface, translated by (-1/2, 0, 0), is

    x(u + iv) = (-tanh(v)(1 + e^(-2u))/2, e^(2u)/4 - u/2 - cosh(2v)/4, u + ln(cosh v)),

an entire minimal x2-graph S over the (x1, x3) plane.
"""

from __future__ import annotations
import dataclasses
import logging
import math
from typing import Callable, List, Optional, Sequence, Tuple
import numpy as np
from scipy import optimize
from . import catenoid, exceptions
from .finite_difference import mean_curvature, offset_grid, regular_points
from .jet import ImmersionJet
from .ode import OdeSolution, solve_unit_catenoid_profile
from .report import VerificationReport
from .sol3 import group_mul
from .vector import FrameVector, Sol3Point
from .weierstrass import GaussSample, exponential_gauss_sample, harmonic_residual, \
    normal_from_gauss

logger = logging.getLogger(__name__)

CLOSED_FORM_TOLERANCE = 1e-8
IDENTITY_TOLERANCE = 1e-12
HARMONIC_TOLERANCE = 1e-10
MEAN_CURVATURE_TOLERANCE = 1e-4
ROUND_TRIP_TOLERANCE = 1e-8
ASYMPTOTE_TOLERANCE = 1e-3
PLANE_TOLERANCE = 2e-2
GRAPH_XTOL = 1e-15
BRACKET_LIMIT = 1024.0
CLOSED_FORM_RANGE = 5.0
SHIFT = Sol3Point((-0.5, 0.0, 0.0))


def rho1(v):
    return np.arctan(np.tanh(v))


def gamma1(v):
    return -0.5 * np.log(np.cosh(2 * v))


def F1(v):
    return np.log(np.cosh(v))


def _profile(v: float) -> Tuple[float, float, float, float, float, float]:
    """(rho1, rho1', rho1'', gamma1, gamma1', gamma1'')."""
    c = math.cosh(2 * v)
    return (math.atan(math.tanh(v)), 1.0 / c, -2 * math.tanh(2 * v) / c,
            -0.5 * math.log(c), -math.tanh(2 * v), -2.0 / (c * c))


class GraphSurface:
    """The entire minimal graph S, from closed forms only."""

    def immerse(self, z: complex) -> Sol3Point:
        u, v = z.real, z.imag
        return Sol3Point((-math.tanh(v) * (1 + math.exp(-2 * u)) / 2,
                          math.exp(2 * u) / 4 - u / 2 - math.cosh(2 * v) / 4,
                          u + math.log(math.cosh(v))))

    def untranslated(self, z: complex) -> Sol3Point:
        """The alpha = 1 member before the translation by (-1/2, 0, 0)."""
        p = self.immerse(z)
        return Sol3Point((p.x1 + 0.5, p.x2, p.x3))

    def evaluator(self) -> Callable[[float, float], Sol3Point]:
        def position(u: float, v: float) -> Sol3Point:
            return self.immerse(complex(u, v))
        return position

    def frame_partials(self, z: complex) -> Tuple[Sol3Point, FrameVector, FrameVector]:
        """x_u = (e^-u sinh v, sinh u / cosh v, 1), x_v = (-cosh u / cosh v, -e^-u sinh v, tanh v)."""
        u, v = z.real, z.imag
        position = self.immerse(z)
        twist = math.exp(-u) * math.sinh(v)
        x_u = FrameVector(position, (twist, math.sinh(u) / math.cosh(v), 1.0))
        x_v = FrameVector(position, (-math.cosh(u) / math.cosh(v), -twist, math.tanh(v)))
        return position, x_u, x_v

    def conformal_factor(self, z: complex) -> float:
        """lambda = e^-2u sinh^2 v + sinh^2 u / cosh^2 v + 1."""
        u, v = z.real, z.imag
        return (math.exp(-2 * u) * math.sinh(v)**2
                + (math.sinh(u) / math.cosh(v))**2 + 1.0)

    def gauss_sample(self, z: complex) -> GaussSample:
        """g = -i e^-u (cosh v + i sinh v) = e^(-u - gamma1) e^(i(rho1 - pi/2))."""
        rho, rho_d, rho_dd, gamma, gamma_d, gamma_dd = _profile(z.imag)
        return exponential_gauss_sample(z.real, rho - math.pi / 2, rho_d, rho_dd,
                                        gamma, gamma_d, gamma_dd)

    def normal(self, z: complex) -> FrameVector:
        return normal_from_gauss(self.gauss_sample(z).g, self.immerse(z))

    def jet(self, z: complex) -> ImmersionJet:
        position, x_u, x_v = self.frame_partials(z)
        return ImmersionJet(z, position, x_u, x_v,
                            normal_from_gauss(self.gauss_sample(z).g, position),
                            self.conformal_factor(z))

    def section(self, level: float, t) -> Tuple[np.ndarray, np.ndarray]:
        """The curve S n {x3 = level}, reached at u = level - ln cosh t.

        Exponentials are taken of level - ln cosh t, so the curve stays finite
        wherever its coordinates fit in a double. Beyond that they are +-inf.
        """
        t = np.asarray(t, dtype=float)
        u = level - _log_cosh(t)
        with np.errstate(over="ignore", invalid="ignore"):
            x1 = np.where(t == 0, 0.0, -np.tanh(t) * (1 + np.exp(-2 * u)) / 2)
            x2 = np.exp(2 * u) / 4 - u / 2 - np.cosh(2 * t) / 4
            # inf - inf: the larger exponent wins
            x2 = np.where(np.isnan(x2), np.copysign(np.inf, 2 * u + math.log(2) - 2 * np.abs(t)), x2)
        return x1, x2

    def section_derivative(self, level: float, t) -> Tuple[np.ndarray, np.ndarray]:
        """Derivative in t of the section; the first component is always negative."""
        t = np.asarray(t, dtype=float)
        cosh_t, sinh_t = np.cosh(t), np.sinh(t)
        d1 = -0.5 / cosh_t**2 - math.exp(-2 * level) * (0.5 + sinh_t**2)
        d2 = (-math.exp(2 * level) * sinh_t / (2 * cosh_t**3) + np.tanh(t) / 2
              - np.sinh(2 * t) / 2)
        return d1, d2


S = GraphSurface()


def graph_transversality(u: float, v: float) -> float:
    """<N, E2> = -2 cosh(v) e^-u / (1 + e^-2u cosh 2v), never zero."""
    return -2 * math.cosh(v) * math.exp(-u) / (1 + math.exp(-2 * u) * math.cosh(2 * v))


def _log_cosh(t):
    """ln cosh t without overflow."""
    a = np.abs(t)
    return a + np.log1p(np.exp(-2 * a)) - math.log(2)


def _section_x1(level: float, t: float) -> float:
    return float(S.section(level, t)[0])


def graph_eval(x1: float, x3: float) -> float:
    """The function f with S = {x2 = f(x1, x3)}.

    The section coordinate t -> x1 is a decreasing bijection of the line, so the
    preimage of x1 is bracketed by doubling and found by bisection. f grows like
    -x1 e^(2 x3) and is returned as -inf or inf where that leaves the double range.

    Raises:
        exceptions.ParameterOutOfRange: x3 is not finite.
        exceptions.TargetOutOfRange: x1 is not finite, or the preimage lies beyond
            |t| = BRACKET_LIMIT (x3 above about 1000).
    """
    if not math.isfinite(x3):
        raise exceptions.ParameterOutOfRange("x3", x3, "(-infinity, infinity)")
    reach = 1.0
    while not (math.isfinite(x1) and _section_x1(x3, reach) <= x1 <= _section_x1(x3, -reach)):
        reach *= 2
        if reach > BRACKET_LIMIT:
            raise exceptions.TargetOutOfRange(x1, _section_x1(x3, BRACKET_LIMIT),
                                              _section_x1(x3, -BRACKET_LIMIT))
    logger.debug("graph bracket [%g, %g] for x1=%g", -reach, reach, x1)
    t = optimize.bisect(lambda s: _section_x1(x3, s) - x1, -reach, reach,
                        xtol=GRAPH_XTOL, rtol=4 * np.finfo(float).eps)
    return float(S.section(x3, t)[1])


def asymptote_ratio(x1: float, x3: float) -> float:
    """f(x1, x3) / (x1 e^(2 x3)), which tends to -1 as x1 -> +inf and to 1 as x1 -> -inf."""
    return graph_eval(x1, x3) / (x1 * math.exp(2 * x3))


def graph_section(level: float, t_values: Sequence[float]) -> List[Tuple[float, float, float]]:
    """Rows (t, x1, x2) of the section of S at the given height."""
    x1, x2 = S.section(level, t_values)
    return [(float(t), float(a), float(b)) for t, a, b in zip(t_values, x1, x2)]


def closed_form_check(solution: Optional[OdeSolution] = None) -> VerificationReport:
    """Compare an integrated alpha = 1 profile with the closed forms on [-5, 5].

    Args:
        solution (OdeSolution, optional): (rho, gamma, F) at alpha = 1.
            Defaults to a fresh integration.
    """
    if solution is None:
        solution = solve_unit_catenoid_profile(CLOSED_FORM_RANGE)
    report = VerificationReport("graph S closed forms")
    nodes = solution.nodes[np.abs(solution.nodes) <= CLOSED_FORM_RANGE]
    values = solution(nodes)
    for index, (name, exact) in enumerate((("rho", rho1), ("gamma", gamma1), ("F", F1))):
        deviation = np.abs(values[:, index] - exact(nodes))
        worst = int(np.argmax(deviation))
        report.add(f"closed_form.{name}", float(deviation[worst]), CLOSED_FORM_TOLERANCE,
                   f"v={nodes[worst]:.6f}")
    vs = np.linspace(-CLOSED_FORM_RANGE, CLOSED_FORM_RANGE, 101)
    profiles = np.array([_profile(v) for v in vs])
    rho, rho_d, gamma_d = profiles[:, 0], profiles[:, 1], profiles[:, 4]
    report.add("closed_form.rho_equation", float(np.max(np.abs(rho_d - np.cos(2 * rho)))),
               IDENTITY_TOLERANCE)
    report.add("closed_form.gamma_equation", float(np.max(np.abs(gamma_d + np.sin(2 * rho)))),
               IDENTITY_TOLERANCE)
    report.add("closed_form.F_equation",
               float(np.max(np.abs(np.tanh(vs) - np.sin(2 * rho) / (1 + np.cos(2 * rho))))),
               IDENTITY_TOLERANCE)
    return report


def residual_suite_S() -> VerificationReport:
    """Harmonicity of g, FD minimality of S and monotonicity of its section coordinate."""
    report = VerificationReport("graph S residuals")
    points = regular_points(S.gauss_sample, offset_grid(-1.5, 1.5, 21), offset_grid(-1.5, 1.5, 21, 2))
    locations = [f"z={z.real:.6f}{z.imag:+.6f}i" for z in points]
    report.add_max("harmonic", [harmonic_residual(S.gauss_sample(z)) for z in points],
                   HARMONIC_TOLERANCE, locations)
    report.add_max("conformality.analytic",
                   [max(S.jet(z).conformality_residuals()) for z in points],
                   IDENTITY_TOLERANCE * 1e3, locations)
    coarse = [complex(u, v) for u in offset_grid(-2, 2, 5) for v in offset_grid(-2, 2, 5, 2)]
    report.add_max("mean_curvature", [abs(mean_curvature(S.evaluator(), z)) for z in coarse],
                   MEAN_CURVATURE_TOLERANCE, [f"z={z.real:.6f}{z.imag:+.6f}i" for z in coarse])
    t = np.linspace(-5, 5, 101)
    rising = sum(int(np.count_nonzero(S.section_derivative(level, t)[0] >= 0))
                 for level in (-2.0, 0.0, 10.0))
    report.add("section.x1_decreasing", rising, 0)
    return report


def graph_checks(samples: int = 100, seed: int = 0) -> VerificationReport:
    """Graph round trip, transversality, asymptotes and the translation to the alpha = 1 member."""
    report = VerificationReport("graph S certification")
    rng = np.random.default_rng(seed)
    us, vs = rng.uniform(-2, 2, samples), rng.uniform(-2, 2, samples)
    locations = [f"z={u:.6f}{v:+.6f}i" for u, v in zip(us, vs)]
    residuals = []
    for u, v in zip(us, vs):
        p = S.immerse(complex(u, v))
        residuals.append(abs(graph_eval(p.x1, p.x3) - p.x2))
    report.add_max("graph.round_trip", residuals, ROUND_TRIP_TOLERANCE, locations)
    report.add_max("graph.translation",
                   [group_mul(SHIFT, S.untranslated(complex(u, v))).distance(S.immerse(complex(u, v)))
                    for u, v in zip(us, vs)], IDENTITY_TOLERANCE * 1e3, locations)
    grid = np.linspace(-5, 5, 101)
    values = np.array([[graph_transversality(u, v) for v in grid] for u in grid])
    report.add("graph.transversality", int(np.count_nonzero(values >= 0)), 0)
    for level in (0.0, 1.0, 2.0):
        for x1, limit in ((1e4, -1.0), (-1e4, 1.0)):
            report.add("graph.asymptote", abs(asymptote_ratio(x1, level) - limit),
                       ASYMPTOTE_TOLERANCE, f"x1={x1:g} x3={level:g}")
    return report


class PlaneLimit:
    """The catenoid C_alpha seen through u' = u + ln(alpha)."""

    alpha: float
    model: catenoid.CatenoidModel

    def __init__(self, alpha: float, v_max: Optional[float] = None):
        if not 0 < alpha <= 0.1:
            raise exceptions.ParameterOutOfRange("alpha", alpha, "(0, 0.1]")
        self.alpha = alpha
        self.model = catenoid.build(alpha, v_max)

    def _shifted(self, z: complex) -> complex:
        return z - math.log(self.alpha)

    def immerse(self, z: complex) -> Sol3Point:
        return self.model.immerse(self._shifted(z))

    def evaluator(self) -> Callable[[float, float], Sol3Point]:
        def position(u: float, v: float) -> Sol3Point:
            return self.immerse(complex(u, v))
        return position

    def jet(self, z: complex) -> ImmersionJet:
        return dataclasses.replace(self.model.jet(self._shifted(z)), z=z)

    def gauss_sample(self, z: complex) -> GaussSample:
        return self.model.gauss_sample(self._shifted(z))

    def conformal_factor(self, z: complex) -> float:
        return self.model.conformal_factor(self._shifted(z))

    @staticmethod
    def plane(z: complex) -> Sol3Point:
        """The limit plane (-e^u'/2 sin v', e^u'/2 cos v', 0)."""
        radius = math.exp(z.real) / 2
        return Sol3Point((-radius * math.sin(z.imag), radius * math.cos(z.imag), 0.0))

    def __str__(self) -> str:
        return f"PlaneLimit(alpha={self.alpha})"


def plane_limit_grid() -> List[complex]:
    """u' on [-1, 1] at 21 points times v' on [0, 2 pi] at 41 points."""
    return [complex(u, v) for u in np.linspace(-1, 1, 21) for v in np.linspace(0, 2 * math.pi, 41)]


def alpha_zero_limit_check(alpha: float, tolerance: float = PLANE_TOLERANCE) -> VerificationReport:
    """Sup-distance between the rescaled catenoid and the limit plane.

    Raises:
        exceptions.ParameterOutOfRange: alpha must lie in (0, 0.1].
    """
    surface = PlaneLimit(alpha)
    report = VerificationReport(f"plane limit alpha={alpha}")
    grid = plane_limit_grid()
    locations = [f"z={z.real:.6f}{z.imag:+.6f}i" for z in grid]
    points = [surface.immerse(z) for z in grid]
    report.add_max("limit.plane_distance",
                   [p.distance(PlaneLimit.plane(z)) for p, z in zip(points, grid)],
                   tolerance, locations)
    report.add_max("limit.height", [abs(p.x3) for p in points], tolerance, locations)
    return report

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
