"""The minimal helicoids H_K of Sol3.

For 0 < |K| < 1 the angle b solves b' = sqrt(1 - K cos 2b), b(0) = 0, with
quasi-period W (b(v + W) = b(v) + pi), and x3' = K/(1 + b'), x3(0) = 0.
With psi = b + pi/4 the immersion is

    x(u + iv) = (x3' e^(-x3) cos(psi) sinh u, x3' e^(x3) sin(psi) sinh u, x3(v)),

a conformal minimal immersion with Gauss map g = e^(-u) e^(i(b - pi/4)),
invariant under the screw motion (0, 0, 2 x3(W)).
"""

from __future__ import annotations
import functools
import logging
import math
from typing import Callable, NamedTuple, Optional, Tuple
import numpy as np
from scipy import optimize, special
from . import exceptions
from .jet import ImmersionJet
from .ode import DEFAULT_STEP, OdeSolution, find_period, quadrature, solve_helicoid_profile
from .report import VerificationReport
from .sol3 import Isometry, IsotropyElement
from .vector import FrameVector, Sol3Point
from .weierstrass import GaussSample, exponential_gauss_sample

logger = logging.getLogger(__name__)

SYMMETRY_TOLERANCE = 1e-10
RELATION_TOLERANCE = 1e-8
INVERSION_XTOL = 1e-14
# 1 - K = e^-36 is the smallest gap a double below 1 can carry
GAP_EXPONENT_LIMIT = 36.0


class _Profile(NamedTuple):
    b: float
    b_d: float
    b_dd: float
    x3: float
    x3_d: float
    x3_dd: float


def check_parameter(K: float) -> None:
    if K == 0:
        raise exceptions.DegenerateParameter("K", K)
    if not -1 < K < 1:
        raise exceptions.ParameterOutOfRange("K", K, "(-1,1), K != 0")


class HelicoidModel:
    """One helicoid: the parameter, its ODE profile and closed-form evaluators.

    Use `build` rather than constructing directly.
    """

    K: float
    profile: OdeSolution
    W: float
    v_max: float

    def __init__(self, K: float, profile: OdeSolution, W: float, v_max: float):
        self.K = K
        self.profile = profile
        self.W = W
        self.v_max = v_max

    @functools.cached_property
    def b(self) -> OdeSolution:
        return self.profile.component(0)

    @functools.cached_property
    def x3(self) -> OdeSolution:
        return self.profile.component(1)

    def _state(self, v: float) -> _Profile:
        if not abs(v) <= self.v_max:
            raise exceptions.OutsideDomain(v, -self.v_max, self.v_max)
        b, x3 = self.profile(v)
        K = self.K
        b_d = math.sqrt(1.0 - K * math.cos(2 * b))
        b_dd = K * math.sin(2 * b)
        # regular form of x3' = (1 - b')/cos 2b
        x3_d = K / (1.0 + b_d)
        x3_dd = -K * b_dd / (1.0 + b_d)**2
        return _Profile(b, b_d, b_dd, x3, x3_d, x3_dd)

    def immerse(self, z: complex) -> Sol3Point:
        """Point x(u + iv).

        Raises:
            exceptions.OutsideDomain: |v| must not exceed v_max.
        """
        u, v = z.real, z.imag
        s = self._state(v)
        psi = s.b + math.pi / 4
        return Sol3Point((s.x3_d * math.exp(-s.x3) * math.cos(psi) * math.sinh(u),
                          s.x3_d * math.exp(s.x3) * math.sin(psi) * math.sinh(u),
                          s.x3))

    def evaluator(self) -> Callable[[float, float], Sol3Point]:
        """The immersion as a function of (u, v)."""
        def position(u: float, v: float) -> Sol3Point:
            return self.immerse(complex(u, v))
        return position

    def frame_partials(self, z: complex) -> Tuple[Sol3Point, FrameVector, FrameVector]:
        """Position with x_u and x_v in frame components.

        Writing x1 = P(v) sinh u and x2 = Q(v) sinh u with
        P = x3' e^(-x3) cos psi and Q = x3' e^(x3) sin psi, psi' = b':

            P' = e^(-x3) ((x3'' - x3'^2) cos psi - x3' b' sin psi)
            Q' = e^(x3) ((x3'' + x3'^2) sin psi + x3' b' cos psi)

        and x_u = (P cosh u, Q cosh u, 0), x_v = (P' sinh u, Q' sinh u, x3').
        """
        u, v = z.real, z.imag
        s = self._state(v)
        psi = s.b + math.pi / 4
        cos_psi, sin_psi = math.cos(psi), math.sin(psi)
        sinh_u, cosh_u = math.sinh(u), math.cosh(u)
        position = Sol3Point((s.x3_d * math.exp(-s.x3) * cos_psi * sinh_u,
                              s.x3_d * math.exp(s.x3) * sin_psi * sinh_u,
                              s.x3))
        x_u = FrameVector(position, (s.x3_d * cos_psi * cosh_u, s.x3_d * sin_psi * cosh_u, 0.0))
        square = s.x3_d * s.x3_d
        x_v = FrameVector(position, (
            ((s.x3_dd - square) * cos_psi - s.x3_d * s.b_d * sin_psi) * sinh_u,
            ((s.x3_dd + square) * sin_psi + s.x3_d * s.b_d * cos_psi) * sinh_u,
            s.x3_d))
        return position, x_u, x_v

    def conformal_factor(self, z: complex) -> float:
        """lambda = K^2 cosh^2 u / (1 + b')^2."""
        s = self._state(z.imag)
        return (self.K * math.cosh(z.real) / (1.0 + s.b_d))**2

    def jet(self, z: complex) -> ImmersionJet:
        """Analytic jet at z; the normal is sqrt(2)/(2 cosh u) (cos b + sin b, sin b - cos b, sqrt(2) sinh u)."""
        position, x_u, x_v = self.frame_partials(z)
        u = z.real
        b = self._state(z.imag).b
        scale = math.sqrt(2) / (2 * math.cosh(u))
        normal = FrameVector(position, (scale * (math.cos(b) + math.sin(b)),
                                        scale * (math.sin(b) - math.cos(b)),
                                        math.tanh(u)))
        return ImmersionJet(z, position, x_u, x_v, normal, self.conformal_factor(z))

    def gauss_sample(self, z: complex) -> GaussSample:
        """Gauss map g = e^(-u) e^(i(b - pi/4)) with its Wirtinger derivatives."""
        s = self._state(z.imag)
        return exponential_gauss_sample(z.real, s.b - math.pi / 4, s.b_d, s.b_dd)

    def extrinsic_curvature(self, z: complex) -> float:
        """Determinant of the shape operator.

        -1 + (2(1+b') cos 2b / K - (1+b')^2 / (K^2 cosh^2 u) + sin^2 2b) / cosh^2 u
        """
        s = self._state(z.imag)
        K, cosh2 = self.K, math.cosh(z.real)**2
        lift = 1.0 + s.b_d
        return -1.0 + (2 * lift * math.cos(2 * s.b) / K
                       - lift * lift / (K * K * cosh2)
                       + math.sin(2 * s.b)**2) / cosh2

    def shape_operator_coefficients(self, z: complex) -> Tuple[Tuple[float, float], Tuple[float, float]]:
        """Coefficients ((a, c), (c, -a)) with nabla_x_u N = a x_u + c x_v and nabla_x_v N = c x_u - a x_v."""
        s = self._state(z.imag)
        a = -math.sin(2 * s.b) * math.tanh(z.real)
        c = (1.0 + s.b_d) / (self.K * math.cosh(z.real)**2) - math.cos(2 * s.b)
        return (a, c), (c, -a)

    def period_T(self) -> float:
        """Height 2 x3(W) of the screw motion leaving the helicoid invariant."""
        return 2 * self.x3(self.W)

    def __str__(self) -> str:
        return f"HelicoidModel(K={self.K}, W={self.W:.12g}, v_max={self.v_max:.6g})"


@functools.lru_cache(maxsize=None)
def build(K: float, v_max: Optional[float] = None, step: float = DEFAULT_STEP) -> HelicoidModel:
    """Integrate the profile of H_K and locate its period.

    Args:
        K (float): Parameter in (-1,1), K != 0.
        v_max (float, optional): Half-width of the v range. Defaults to 4W.
        step (float, optional): Integration step.

    Raises:
        exceptions.DegenerateParameter: K = 0 collapses the surface to a point.
        exceptions.ParameterOutOfRange: |K| >= 1.

    Returns:
        HelicoidModel: The populated model.
    """
    check_parameter(K)
    floor = math.sqrt(1.0 - abs(K))
    if v_max is None:
        # b' >= sqrt(1-|K|), so b passes 4 pi + 1/4 before this bound
        reach = (4 * math.pi + 0.5) / floor
        profile = solve_helicoid_profile(K, reach, step,
                                         stop_when=lambda v, y: y[0] > 4 * math.pi + 0.25)
    else:
        profile = solve_helicoid_profile(K, max(v_max, (math.pi + 0.5) / floor), step)
    W = find_period(profile.component(0), math.pi)
    model = HelicoidModel(K, profile, W, 4 * W if v_max is None else v_max)
    logger.info("built helicoid K=%g: W=%.12g on %d nodes", K, W, len(profile.nodes))
    return model


def _s(K: float, u: float) -> float:
    return math.sqrt(1.0 - K * math.cos(2 * u))


def quadrature_W(K: float) -> float:
    """W = integral over [0, pi] of du / sqrt(1 - K cos 2u)."""
    return quadrature(lambda u: 1.0 / _s(K, u), 0.0, math.pi).value


def _height_integral(k: float, gap: float) -> float:
    """Integral over [0, pi] of du / (s (1 + s)) for s^2 = gap + 2k sin^2 u, gap = 1 - k.

    1/(s(1+s)) = 1/s - 1/(1+s). The first part is 2 K(m) / sqrt(1+k) with
    1 - m = gap/(1+k); the second is bounded by 1, so quadrature stays
    resolved however small the gap is.
    """
    def s(u: float) -> float:
        return math.sqrt(gap + 2 * k * math.sin(u)**2)

    elliptic = 2 * special.ellipkm1(gap / (1 + k)) / math.sqrt(1 + k)
    return elliptic - quadrature(lambda u: 1.0 / (1.0 + s(u)), 0.0, math.pi).value


def quadrature_x3W(K: float) -> float:
    """x3(W) = K times the integral over [0, pi] of du / (s (1 + s)), s = sqrt(1 - K cos 2u)."""
    if K == 0:
        return 0.0
    k = abs(K)
    return K * _height_integral(k, 1.0 - k)


def period_derivative(K: float) -> float:
    """dT/dK for T(K) = 2 x3_K(W), by quadrature of the K-derivative of the integrand."""
    def integrand(u: float) -> float:
        s = _s(K, u)
        return 1.0 / (s * (1.0 + s)) + K * (1.0 + 2 * s) * math.cos(2 * u) / (2 * s**3 * (1.0 + s)**2)
    return 2 * quadrature(integrand, 0.0, math.pi).value


def invert_period(T: float, xtol: float = INVERSION_XTOL) -> float:
    """The unique K in (0,1) whose helicoid has period T.

    K -> 2 x3_K(W) is an increasing bijection of (0,1) onto (0, infinity),
    with T growing like sqrt(2) ln(1/(1-K)). It is inverted by bisection in
    q = -ln(1 - K), so the gap 1 - K keeps full precision as K -> 1.

    Raises:
        exceptions.ParameterOutOfRange: T must be positive.
        exceptions.TargetOutOfRange: T needs 1 - K below what a double can hold,
            about T > 52.
    """
    if not T > 0:
        raise exceptions.ParameterOutOfRange("T", T, "(0, infinity)")

    def period(q: float) -> float:
        k = -math.expm1(-q)
        return 2 * k * _height_integral(k, math.exp(-q))

    high = 2.0
    while period(high) < T:
        if high == GAP_EXPONENT_LIMIT:
            raise exceptions.TargetOutOfRange(T, 0.0, period(GAP_EXPONENT_LIMIT))
        high = min(2 * high, GAP_EXPONENT_LIMIT)
    logger.debug("inverting period %g on q in [0, %g]", T, high)
    q = optimize.bisect(lambda q: period(q) - T, 0.0, high, xtol=xtol)
    return -math.expm1(-q)


def _sample(m: HelicoidModel, samples: int, seed: int):
    rng = np.random.default_rng(seed)
    return rng.uniform(-2.0, 2.0, samples), rng.uniform(-m.W, m.W, samples)


def symmetry_check(m: HelicoidModel, samples: int = 100, seed: int = 0) -> VerificationReport:
    """The three rotations by pi about the lines the helicoid contains.

    x(-u+iv) = s2(x(u+iv)), x(u-iv) = st(x(u+iv)) and x(-u-iv) = s3t(x(u+iv)).
    """
    report = VerificationReport(f"helicoid K={m.K} symmetries")
    us, vs = _sample(m, samples, seed)
    identities = (("symmetry.s2", lambda u, v: complex(-u, v)),
                  ("symmetry.st", lambda u, v: complex(u, -v)),
                  ("symmetry.s3t", lambda u, v: complex(-u, -v)))
    for name, moved in identities:
        word = IsotropyElement(name.split(".")[1])
        residuals = [m.immerse(moved(u, v)).distance(word.apply(m.immerse(complex(u, v))))
                     for u, v in zip(us, vs)]
        report.add_max(name, residuals, SYMMETRY_TOLERANCE,
                       [f"z={u:.6f}{v:+.6f}i" for u, v in zip(us, vs)])
    return report


def periodicity_check(m: HelicoidModel, samples: int = 100, seed: int = 0) -> VerificationReport:
    """Screw invariance (0,0,T) * x(u+iv) = x(u+i(v+2W)) and the period 2 x3(W)."""
    report = VerificationReport(f"helicoid K={m.K} periodicity")
    us, vs = _sample(m, samples, seed)
    screw = Isometry.screw(m.period_T())
    report.add_max("periodicity.screw",
                   [m.immerse(complex(u, v + 2 * m.W)).distance(screw.apply(m.immerse(complex(u, v))))
                    for u, v in zip(us, vs)],
                   RELATION_TOLERANCE, [f"z={u:.6f}{v:+.6f}i" for u, v in zip(us, vs)])
    report.add("periodicity.W_oracle", abs(m.W - quadrature_W(m.K)), RELATION_TOLERANCE)
    report.add("periodicity.x3W_oracle", abs(m.x3(m.W) - quadrature_x3W(m.K)), RELATION_TOLERANCE)
    nodes = m.b.nodes[np.abs(m.b.nodes) <= m.v_max - m.W]
    report.add("profile.b_translation",
               float(np.max(np.abs(m.b(nodes + m.W) - m.b(nodes) - math.pi))), RELATION_TOLERANCE)
    report.add("profile.x3_translation",
               float(np.max(np.abs(m.x3(nodes + m.W) - m.x3(nodes) - m.x3(m.W)))),
               RELATION_TOLERANCE)
    return report


def opposite_parameter_check(m: HelicoidModel, samples: int = 100, seed: int = 0) -> VerificationReport:
    """x_{-K}(u+iv) = (0,0,x3_K(W/2)) * s3(x_K(u+i(v+W/2)))."""
    report = VerificationReport(f"helicoid K={m.K} opposite parameter")
    other = build(-m.K)
    isometry = Isometry(Sol3Point((0.0, 0.0, m.x3(m.W / 2))), IsotropyElement("s3"))
    us, vs = _sample(m, samples, seed)
    report.add_max("relation.opposite_K",
                   [other.immerse(complex(u, v)).distance(
                       isometry.apply(m.immerse(complex(u, v + m.W / 2))))
                    for u, v in zip(us, vs)],
                   RELATION_TOLERANCE, [f"z={u:.6f}{v:+.6f}i" for u, v in zip(us, vs)])
    report.add("relation.opposite_T", abs(m.period_T() + other.period_T()), RELATION_TOLERANCE)
    return report


def total_curvature(m: HelicoidModel, U: float) -> float:
    """Integral of the displayed curvature over |u| <= U, 0 <= v <= 2W.

    The integrand separates in u and v. The v-integrals over two periods are
    taken in the variable b (dv = db / b'), the u-integrals are elementary.
    """
    K = m.K

    def over_two_periods(f: Callable[[float, float], float]) -> float:
        return 2 * quadrature(lambda b: f(b, _s(K, b)) / _s(K, b), 0.0, math.pi).value

    inverse_square = over_two_periods(lambda b, s: 1.0 / (1.0 + s)**2)
    cosine = over_two_periods(lambda b, s: math.cos(2 * b) / (1.0 + s))
    sine_square = over_two_periods(lambda b, s: math.sin(2 * b)**2 / (1.0 + s)**2)
    return (-K * K * inverse_square * (U + math.sinh(2 * U) / 2)
            + 2 * U * (2 * K * cosine + K * K * sine_square)
            - 2 * m.W * 2 * math.tanh(U))


def embeddedness_check(m: HelicoidModel) -> VerificationReport:
    """x3 strictly monotone in v and each horizontal line direction non-zero.

    Residuals count the violating nodes.
    """
    report = VerificationReport(f"helicoid K={m.K} embeddedness")
    inside = np.abs(m.x3.nodes) <= m.v_max
    nodes = m.x3.nodes[inside]
    slopes = np.sign(m.K) * m.x3.derivatives[inside]
    report.add("embedded.x3_monotone", int(np.count_nonzero(slopes <= 0)), 0)
    degenerate = 0
    for v in nodes[::16]:
        s = m._state(float(v))
        psi = s.b + math.pi / 4
        direction = abs(s.x3_d) * (math.exp(-s.x3) * abs(math.cos(psi))
                                   + math.exp(s.x3) * abs(math.sin(psi)))
        degenerate += direction <= 0
    report.add("embedded.horizontal_lines", degenerate, 0)
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
