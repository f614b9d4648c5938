"""The minimal catenoids C_alpha of Sol3.

For 0 < |alpha| < 1 the functions rho, gamma and F solve

    rho' = sqrt(1 - alpha^2 sin^2 2rho),  gamma' = -alpha sin 2rho,
    F' = alpha^2 sin 2rho / (1 + rho'),

all vanishing at 0, and rho has quasi-period V (rho(v + V) = rho(v) + pi).
With E = e^(u + gamma) the immersion is

    x1 = e^(-alpha u - F) (E (cos(rho) F' - alpha sin rho) / (2(1 - alpha))
                           - E^-1 (alpha sin rho + cos(rho) F') / (2(1 + alpha)))
    x2 = e^(alpha u + F) (E (alpha cos rho + F' sin rho) / (2(1 + alpha))
                          + E^-1 (alpha cos rho - F' sin rho) / (2(1 - alpha)))
    x3 = alpha u + F(v),

with Gauss map g = -i e^(-u - gamma) e^(i rho). The x2 sign is the one obtained
by integrating the representation formula. The immersion is 2V-periodic in v,
so it factors through an annulus.
"""

from __future__ import annotations
import functools
import logging
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional, Tuple
import numpy as np
from . import exceptions
from .jet import ImmersionJet
from .ode import DEFAULT_STEP, OdeSolution, find_period, quadrature, solve_catenoid_profile
from .report import VerificationReport
from .sol3 import IsotropyElement
from .vector import FrameVector, Sol3Point
from .weierstrass import GaussSample, exponential_gauss_sample

logger = logging.getLogger(__name__)

RELATION_TOLERANCE = 1e-8
PARITY_TOLERANCE = 1e-10
SLOPE_TOLERANCE = 1e-6
CONVEXITY_BAND = 1e-12
SECTION_SAMPLES = 2**9
MINIMUM_SECTION_SAMPLES = 64


class _Profile(NamedTuple):
    rho: float
    rho_d: float
    rho_dd: float
    gamma: float
    gamma_d: float
    gamma_dd: float
    F: float
    F_d: float


def check_parameter(alpha: float) -> None:
    if alpha == 0:
        raise exceptions.DegenerateParameter("alpha", alpha)
    if not -1 < alpha < 1:
        raise exceptions.ParameterOutOfRange("alpha", alpha, "(-1,1), alpha != 0")


@dataclass(frozen=True)
class SectionCurve:
    """Intersection of the catenoid with the plane {x3 = level}.

    Samples t_k = 2V k/n for k < n, so t_k + V is the sample k + n/2.
    Derivatives are the closed forms
    c1' = -(e^-level/alpha)(F'^2 + alpha^2) cos(rho) cosh(u + gamma) and
    c2' = -(e^level/alpha)(F'^2 + alpha^2) sin(rho) cosh(u + gamma)
    with u = (level - F)/alpha.
    """

    level: float
    alpha: float
    period: float
    t: np.ndarray
    c1: np.ndarray
    c2: np.ndarray
    d1: np.ndarray
    d2: np.ndarray
    rho: np.ndarray
    closure: float

    def flat_coordinates(self) -> Tuple[np.ndarray, np.ndarray]:
        """(e^level c1, e^-level c2), in which the plane's metric is Euclidean."""
        return math.exp(self.level) * self.c1, math.exp(-self.level) * self.c2


class CatenoidModel:
    """One catenoid: the parameter, its ODE profile and closed-form evaluators.

    Use `build` rather than constructing directly.
    """

    alpha: float
    profile: OdeSolution
    V: float
    v_max: float

    def __init__(self, alpha: float, profile: OdeSolution, V: float, v_max: float):
        self.alpha = alpha
        self.profile = profile
        self.V = V
        self.v_max = v_max

    @functools.cached_property
    def rho(self) -> OdeSolution:
        return self.profile.component(0)

    @functools.cached_property
    def gamma(self) -> OdeSolution:
        return self.profile.component(1)

    @functools.cached_property
    def F(self) -> OdeSolution:
        return self.profile.component(2)

    def _state(self, v: float) -> _Profile:
        if not abs(v) <= self.v_max:
            raise exceptions.OutsideDomain(v, -self.v_max, self.v_max)
        rho, gamma, F = self.profile(v)
        alpha = self.alpha
        sine = math.sin(2 * rho)
        rho_d = math.sqrt(1.0 - (alpha * sine)**2)
        return _Profile(rho, rho_d, -alpha * alpha * math.sin(4 * rho),
                        gamma, -alpha * sine, -2 * alpha * math.cos(2 * rho) * rho_d,
                        F, alpha * alpha * sine / (1.0 + rho_d))

    def _position(self, u: float, s: _Profile) -> Sol3Point:
        alpha = self.alpha
        cos_rho, sin_rho = math.cos(s.rho), math.sin(s.rho)
        x1 = (math.exp((1 - alpha) * u + s.gamma - s.F) / (2 * (1 - alpha))
              * (cos_rho * s.F_d - alpha * sin_rho)
              - math.exp(-(1 + alpha) * u - s.gamma - s.F) / (2 * (1 + alpha))
              * (alpha * sin_rho + cos_rho * s.F_d))
        x2 = (math.exp((1 + alpha) * u + s.gamma + s.F) / (2 * (1 + alpha))
              * (alpha * cos_rho + s.F_d * sin_rho)
              + math.exp(-(1 - alpha) * u - s.gamma + s.F) / (2 * (1 - alpha))
              * (alpha * cos_rho - s.F_d * sin_rho))
        return Sol3Point((x1, x2, alpha * u + s.F))

    def immerse(self, z: complex) -> Sol3Point:
        """Point x(u + iv).

        Raises:
            exceptions.OutsideDomain: |v| must not exceed v_max.
        """
        return self._position(z.real, self._state(z.imag))

    def evaluator(self) -> Callable[[float, float], Sol3Point]:
        """The immersion as a function of (u, v)."""
        def position(u: float, v: float) -> Sol3Point:
            return self.immerse(complex(u, v))
        return position

    def frame_partials(self, z: complex) -> Tuple[Sol3Point, FrameVector, FrameVector]:
        """Position with x_u and x_v in frame components, with w = u + gamma:

            x_u = (F' cos(rho) cosh w - alpha sin(rho) sinh w,
                   alpha cos(rho) sinh w + F' sin(rho) cosh w, alpha)
            x_v = (-alpha cos(rho) cosh w - F' sin(rho) sinh w,
                   F' cos(rho) sinh w - alpha sin(rho) cosh w, F')
        """
        s = self._state(z.imag)
        position = self._position(z.real, s)
        w = z.real + s.gamma
        cos_rho, sin_rho = math.cos(s.rho), math.sin(s.rho)
        cosh_w, sinh_w = math.cosh(w), math.sinh(w)
        alpha, F_d = self.alpha, s.F_d
        x_u = FrameVector(position, (F_d * cos_rho * cosh_w - alpha * sin_rho * sinh_w,
                                     alpha * cos_rho * sinh_w + F_d * sin_rho * cosh_w,
                                     alpha))
        x_v = FrameVector(position, (-alpha * cos_rho * cosh_w - F_d * sin_rho * sinh_w,
                                     F_d * cos_rho * sinh_w - alpha * sin_rho * cosh_w,
                                     F_d))
        return position, x_u, x_v

    def conformal_factor(self, z: complex) -> float:
        """lambda = 2 alpha^2 cosh^2(u + gamma) / (1 + rho')."""
        s = self._state(z.imag)
        return 2 * self.alpha**2 * math.cosh(z.real + s.gamma)**2 / (1.0 + s.rho_d)

    def jet(self, z: complex) -> ImmersionJet:
        """Analytic jet; the normal (sin rho, -cos rho, sinh w)/cosh w comes from g."""
        position, x_u, x_v = self.frame_partials(z)
        s = self._state(z.imag)
        w = z.real + s.gamma
        normal = FrameVector(position, (math.sin(s.rho) / math.cosh(w),
                                        -math.cos(s.rho) / math.cosh(w),
                                        math.tanh(w)))
        return ImmersionJet(z, position, x_u, x_v, normal, self.conformal_factor(z))

    def gauss_sample(self, z: complex) -> GaussSample:
        """Gauss map g = -i e^(-u - gamma) e^(i rho) with its Wirtinger derivatives."""
        s = self._state(z.imag)
        return exponential_gauss_sample(z.real, s.rho - math.pi / 2, s.rho_d, s.rho_dd,
                                        s.gamma, s.gamma_d, s.gamma_dd)

    def section(self, level: float, samples: int = SECTION_SAMPLES) -> SectionCurve:
        """Sample the horizontal section {x3 = level} over one period.

        The section is the image of v -> (u(v), v) with u(v) = (level - F(v))/alpha.

        Raises:
            exceptions.InvalidGrid: samples must be even and at least 2.
        """
        if samples < 2 or samples % 2:
            raise exceptions.InvalidGrid(f"section samples must be even, got {samples}")
        alpha = self.alpha
        t = 2 * self.V * np.arange(samples) / samples
        c1, c2, d1, d2, rho = (np.empty(samples) for _ in range(5))
        for index, v in enumerate(t):
            s = self._state(float(v))
            u = (level - s.F) / alpha
            point = self._position(u, s)
            c1[index], c2[index] = point.x1, point.x2
            speed = (s.F_d**2 + alpha**2) * math.cosh(u + s.gamma) / alpha
            d1[index] = -math.exp(-level) * speed * math.cos(s.rho)
            d2[index] = -math.exp(level) * speed * math.sin(s.rho)
            rho[index] = s.rho
        end = self._state(2 * self.V)
        closing = self._position((level - end.F) / alpha, end)
        closure = math.hypot(closing.x1 - c1[0], closing.x2 - c2[0])
        return SectionCurve(level, alpha, self.V, t, c1, c2, d1, d2, rho, closure)

    def __str__(self) -> str:
        return f"CatenoidModel(alpha={self.alpha}, V={self.V:.12g}, v_max={self.v_max:.6g})"


@functools.lru_cache(maxsize=None)
def build(alpha: float, v_max: Optional[float] = None, step: float = DEFAULT_STEP) -> CatenoidModel:
    """Integrate the profile of C_alpha and locate its period.

    Args:
        alpha (float): Parameter in (-1,1), alpha != 0.
        v_max (float, optional): Half-width of the v range. Defaults to 4V.
        step (float, optional): Integration step.

    Raises:
        exceptions.DegenerateParameter: alpha = 0 collapses the surface to a point.
        exceptions.ParameterOutOfRange: |alpha| >= 1.

    Returns:
        CatenoidModel: The populated model.
    """
    check_parameter(alpha)
    floor = math.sqrt(1.0 - alpha * alpha)
    if v_max is None:
        reach = (4 * math.pi + 0.5) / floor
        profile = solve_catenoid_profile(alpha, reach, step,
                                         stop_when=lambda v, y: y[0] > 4 * math.pi + 0.25)
    else:
        profile = solve_catenoid_profile(alpha, max(v_max, (math.pi + 0.5) / floor), step)
    V = find_period(profile.component(0), math.pi)
    model = CatenoidModel(alpha, profile, V, 4 * V if v_max is None else v_max)
    logger.info("built catenoid alpha=%g: V=%.12g on %d nodes", alpha, V, len(profile.nodes))
    return model


def quadrature_V(alpha: float) -> float:
    """V = integral over [0, pi] of d rho / sqrt(1 - alpha^2 sin^2 2rho)."""
    return quadrature(lambda r: 1.0 / math.sqrt(1.0 - (alpha * math.sin(2 * r))**2),
                      0.0, math.pi).value


def _sample(m: CatenoidModel, samples: int, seed: int):
    rng = np.random.default_rng(seed)
    return rng.uniform(-2.0, 2.0, samples), rng.uniform(-m.V, m.V, samples)


def _locations(us, vs):
    return [f"z={u:.6f}{v:+.6f}i" for u, v in zip(us, vs)]


def symmetry_check(m: CatenoidModel, samples: int = 100, seed: int = 0) -> VerificationReport:
    """Half-turn, reflections and the alpha <-> -alpha relation.

    x(u+i(v+V)) = s2(x(u+iv)), x(u-iv) = t(x(u+iv)),
    x(u+i(-v+V)) = s2t(x(u+iv)) and x_{-alpha}(-u+iv) = s2(x_alpha(u+iv)).
    """
    report = VerificationReport(f"catenoid alpha={m.alpha} symmetries")
    us, vs = _sample(m, samples, seed)
    identities = (("symmetry.s2", "s2", lambda u, v: complex(u, v + m.V)),
                  ("symmetry.t", "t", lambda u, v: complex(u, -v)),
                  ("symmetry.s2t", "s2t", lambda u, v: complex(u, -v + m.V)))
    for name, tag, moved in identities:
        word = IsotropyElement(tag)
        report.add_max(name, [m.immerse(moved(u, v)).distance(word.apply(m.immerse(complex(u, v))))
                              for u, v in zip(us, vs)],
                       RELATION_TOLERANCE, _locations(us, vs))
    other = build(-m.alpha)
    half_turn = IsotropyElement("s2")
    report.add_max("relation.opposite_alpha",
                   [other.immerse(complex(-u, v)).distance(half_turn.apply(m.immerse(complex(u, v))))
                    for u, v in zip(us, vs)],
                   RELATION_TOLERANCE, _locations(us, vs))
    return report


def periodicity_check(m: CatenoidModel, samples: int = 100, seed: int = 0) -> VerificationReport:
    """2V-periodicity of the immersion and the structure of rho, gamma and F."""
    report = VerificationReport(f"catenoid alpha={m.alpha} periodicity")
    us, vs = _sample(m, samples, seed)
    report.add_max("periodicity.annulus",
                   [m.immerse(complex(u, v + 2 * m.V)).distance(m.immerse(complex(u, v)))
                    for u, v in zip(us, vs)],
                   RELATION_TOLERANCE, _locations(us, vs))
    report.add("periodicity.V_oracle", abs(m.V - quadrature_V(m.alpha)), RELATION_TOLERANCE)
    report.add("profile.F_period", abs(m.F(m.V)), RELATION_TOLERANCE)
    nodes = m.rho.nodes[np.abs(m.rho.nodes) <= m.v_max - m.V]
    report.add("profile.rho_translation",
               float(np.max(np.abs(m.rho(nodes + m.V) - m.rho(nodes) - math.pi))),
               RELATION_TOLERANCE)
    for name, solution in (("gamma", m.gamma), ("F", m.F)):
        report.add(f"profile.{name}_translation",
                   float(np.max(np.abs(solution(nodes + m.V) - solution(nodes)))),
                   RELATION_TOLERANCE)
    mirrored = -m.rho.nodes
    for name, solution, sign in (("rho", m.rho, -1.0), ("gamma", m.gamma, 1.0), ("F", m.F, 1.0)):
        report.add(f"profile.{name}_parity",
                   float(np.max(np.abs(solution(mirrored) - sign * solution.values))),
                   PARITY_TOLERANCE)
    report.add("profile.rho_quarter", abs(m.rho(m.V / 4) - math.pi / 4), RELATION_TOLERANCE)
    report.add("profile.rho_half", abs(m.rho(m.V / 2) - math.pi / 2), RELATION_TOLERANCE)
    inner = nodes[np.abs(nodes) <= m.V]
    report.add("profile.rho_reflection",
               float(np.max(np.abs(m.rho(-inner + m.V / 2) + m.rho(inner) - math.pi / 2))),
               RELATION_TOLERANCE)
    return report


def convexity_certificate(curve: SectionCurve) -> VerificationReport:
    """Certify that a horizontal section is a closed embedded convex curve.

    Checks on the open half-period t in (-V/2, V/2): c1' has the sign of -alpha,
    and the slope dc2/dc1 in flat coordinates equals tan(rho) and increases.
    The slope law is absolute where |tan rho| <= 1 and relative to max(1, |tan rho|)
    on the whole window.
    On the whole curve: central symmetry c(t+V) = -c(t), closure, non-vanishing
    speed and a constant turning sign of the sampled polygon.
    Counting residuals pass at zero.

    Raises:
        exceptions.InvalidGrid: At least 64 samples are needed.
    """
    count = len(curve.t)
    if count < MINIMUM_SECTION_SAMPLES:
        raise exceptions.InvalidGrid(f"need {MINIMUM_SECTION_SAMPLES} section samples, got {count}")
    report = VerificationReport(f"section alpha={curve.alpha} level={curve.level}")
    quarter = curve.period / 2
    margin = 1e-9 * curve.period
    before = np.nonzero(curve.t > 2 * curve.period - quarter + margin)[0]
    after = np.nonzero(curve.t < quarter - margin)[0]
    window = np.concatenate([before, after])

    expected = -np.sign(curve.alpha)
    report.add("section.c1_sign", int(np.count_nonzero(np.sign(curve.d1[window]) != expected)), 0)

    slope = math.exp(-2 * curve.level) * curve.d2[window] / curve.d1[window]
    tangent = np.tan(curve.rho[window])
    deviation = np.abs(slope - tangent)
    bounded = np.abs(tangent) <= 1
    report.add("section.slope_law", float(np.max(deviation[bounded], initial=0.0)),
               SLOPE_TOLERANCE)
    # tan(rho) is unbounded near the ends of the window
    report.add("section.slope_law_relative",
               float(np.max(deviation / np.maximum(1.0, np.abs(tangent)))), SLOPE_TOLERANCE)
    report.add("section.slope_monotone", int(np.count_nonzero(np.diff(slope) <= 0)), 0)

    half = count // 2
    opposite = np.hypot(curve.c1[half:] + curve.c1[:half], curve.c2[half:] + curve.c2[:half])
    report.add("section.central_symmetry", float(np.max(opposite)), RELATION_TOLERANCE)
    report.add("section.closed", curve.closure, RELATION_TOLERANCE)
    report.add("section.regular", int(np.count_nonzero(curve.d1**2 + curve.d2**2 <= 0)), 0)

    edges = np.stack([np.roll(curve.c1, -1) - curve.c1, np.roll(curve.c2, -1) - curve.c2], axis=1)
    following = np.roll(edges, -1, axis=0)
    turning = edges[:, 0] * following[:, 1] - edges[:, 1] * following[:, 0]
    orientation = np.sign(np.sum(turning))
    report.add("section.convex", int(np.count_nonzero(orientation * turning < -CONVEXITY_BAND)), 0)
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
