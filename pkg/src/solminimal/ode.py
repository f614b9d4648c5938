"""Fixed-step integration with dense output, quadrature and period location.

All angle functions of the surface families come from here:
b and x3 for the helicoids, and rho, gamma and F for the catenoids.
Solutions are integrated forward from 0 and reflected, so parities hold exactly.
"""

from __future__ import annotations
import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence
import numpy as np
from scipy import integrate as scipy_integrate
from scipy import interpolate, optimize
from . import exceptions

logger = logging.getLogger(__name__)

DEFAULT_STEP = math.pi / 2**11
QUADRATURE_TOL = 1e-12
PERIOD_XTOL = 1e-12

ODD, EVEN = -1, 1


class OdeSolution:
    """Dense solution of an ODE system on a node grid.

    Values between nodes come from the cubic Hermite interpolant built on the
    node values and the right-hand side at the nodes, so the interpolant is C1.
    Scalar solutions have values of shape (n,), systems of shape (n, m).
    """

    nodes: np.ndarray
    values: np.ndarray
    derivatives: np.ndarray

    def __init__(self, nodes: np.ndarray, values: np.ndarray, derivatives: np.ndarray):
        self.nodes = np.asarray(nodes, dtype=float)
        self.values = np.asarray(values, dtype=float)
        self.derivatives = np.asarray(derivatives, dtype=float)
        self._spline = interpolate.CubicHermiteSpline(
            self.nodes, self.values, self.derivatives, axis=0, extrapolate=False)

    @property
    def domain(self):
        return float(self.nodes[0]), float(self.nodes[-1])

    @property
    def dimension(self) -> int:
        return 1 if self.values.ndim == 1 else self.values.shape[1]

    def _check(self, v) -> None:
        lower, upper = self.domain
        if np.any(np.asarray(v) < lower) or np.any(np.asarray(v) > upper):
            raise exceptions.OutsideDomain(v, lower, upper)

    def __call__(self, v, nu: int = 0):
        """Evaluate the interpolant (or its nu-th derivative) at v.

        Raises:
            exceptions.OutsideDomain: v must lie on the node grid's range.
        """
        self._check(v)
        result = self._spline(v, nu)
        if np.ndim(result) == 0:
            return float(result)
        return result

    def derivative(self, v):
        return self(v, 1)

    def component(self, index: int) -> OdeSolution:
        """One component of a system as a scalar solution."""
        if self.values.ndim == 1:
            return self
        return OdeSolution(self.nodes, self.values[:, index], self.derivatives[:, index])

    def __str__(self) -> str:
        lower, upper = self.domain
        return f"OdeSolution({len(self.nodes)} nodes on [{lower}, {upper}], dimension {self.dimension})"


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int


def _checked_rhs(rhs, v: float, y: np.ndarray) -> np.ndarray:
    slope = np.atleast_1d(np.asarray(rhs(v, y), dtype=float))
    if not np.all(np.isfinite(slope)):
        raise exceptions.NonFiniteDerivative(v, y)
    return slope


def integrate(rhs: Callable[[float, np.ndarray], Sequence[float]],
              y0,
              domain,
              step: float = DEFAULT_STEP,
              stop_when: Optional[Callable[[float, np.ndarray], bool]] = None) -> OdeSolution:
    """Integrate y' = rhs(v, y) with the classical fourth-order Runge-Kutta method.

    The grid is uniform: the range is split into ceil(range / step) equal steps.

    Args:
        rhs (Callable): Right-hand side, returning a scalar or a sequence.
        y0: Initial value at the start of the domain, scalar or sequence.
        domain: Pair (v_min, v_max).
        step (float, optional): Largest allowed step. Defaults to DEFAULT_STEP.
        stop_when (Callable, optional): Monotone predicate on (v, y);
            integration ends at the first node where it holds.

    Raises:
        exceptions.InvalidGrid: step must be positive and the domain non-empty.
        exceptions.NonFiniteDerivative: The right-hand side left the reals.

    Returns:
        OdeSolution: Dense solution, scalar if y0 is scalar.
    """
    v_min, v_max = float(domain[0]), float(domain[1])
    if not step > 0 or not v_max > v_min:
        raise exceptions.InvalidGrid(f"step {step} on [{v_min}, {v_max}]")
    scalar = np.ndim(y0) == 0
    count = max(1, int(math.ceil((v_max - v_min) / step - 1e-9)))
    nodes = np.linspace(v_min, v_max, count + 1)
    h = (v_max - v_min) / count

    y = np.atleast_1d(np.asarray(y0, dtype=float)).copy()
    values = np.empty((count + 1, y.size))
    slopes = np.empty((count + 1, y.size))
    k1 = _checked_rhs(rhs, v_min, y)
    last = count
    for index in range(count):
        v = nodes[index]
        values[index], slopes[index] = y, k1
        if stop_when is not None and stop_when(v, y):
            last = index
            break
        k2 = _checked_rhs(rhs, v + h / 2, y + h / 2 * k1)
        k3 = _checked_rhs(rhs, v + h / 2, y + h / 2 * k2)
        k4 = _checked_rhs(rhs, v + h, y + h * k3)
        y = y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        k1 = _checked_rhs(rhs, nodes[index + 1], y)
    else:
        values[count], slopes[count] = y, k1
    logger.debug("integrated %d steps of size %.3g on [%g, %g]",
                 last, h, v_min, nodes[last])

    nodes, values, slopes = nodes[:last + 1], values[:last + 1], slopes[:last + 1]
    if scalar:
        return OdeSolution(nodes, values[:, 0], slopes[:, 0])
    return OdeSolution(nodes, values, slopes)


def reflect(forward: OdeSolution, parities: Sequence[int]) -> OdeSolution:
    """Extend a solution on [0, v_max] to [-v_max, v_max].

    Args:
        forward (OdeSolution): Solution starting at v = 0.
        parities (Sequence[int]): ODD or EVEN for each component.

    Returns:
        OdeSolution: Two-sided solution with the prescribed parities.
    """
    signs = np.asarray(parities, dtype=float)
    if forward.values.ndim == 1:
        signs = signs[0]
    nodes = np.concatenate([-forward.nodes[:0:-1], forward.nodes])
    values = np.concatenate([signs * forward.values[:0:-1], forward.values])
    derivatives = np.concatenate([-signs * forward.derivatives[:0:-1], forward.derivatives])
    return OdeSolution(nodes, values, derivatives)


def b_slope(K, b):
    """b' = sqrt(1 - K cos 2b)."""
    return np.sqrt(1.0 - K * np.cos(2 * b))


def rho_slope(alpha, rho):
    """rho' = sqrt(1 - alpha^2 sin^2 2rho)."""
    return np.sqrt(1.0 - (alpha * np.sin(2 * rho))**2)


def _check_open_unit(name: str, value: float) -> None:
    if not -1 < value < 1:
        raise exceptions.ParameterOutOfRange(name, value, "(-1,1)")


def solve_helicoid_profile(K: float, v_max: float, step: float = DEFAULT_STEP,
                           stop_when=None) -> OdeSolution:
    """Integrate (b, x3) with b' = sqrt(1 - K cos 2b) and x3' = K/(1+b').

    Both components are odd.

    Raises:
        exceptions.ParameterOutOfRange: |K| must be below 1.
    """
    _check_open_unit("K", K)

    def rhs(_, y):
        slope = math.sqrt(1.0 - K * math.cos(2 * y[0]))
        return np.array([slope, K / (1.0 + slope)])

    forward = integrate(rhs, [0.0, 0.0], (0.0, v_max), step, stop_when)
    return reflect(forward, (ODD, ODD))


def solve_b(K: float, v_max: float, step: float = DEFAULT_STEP) -> OdeSolution:
    """Odd solution of b' = sqrt(1 - K cos 2b), b(0) = 0, on [-v_max, v_max]."""
    _check_open_unit("K", K)
    forward = integrate(lambda _, y: math.sqrt(1.0 - K * math.cos(2 * y[0])),
                        0.0, (0.0, v_max), step)
    return reflect(forward, (ODD,))


def solve_catenoid_profile(alpha: float, v_max: float, step: float = DEFAULT_STEP,
                           stop_when=None) -> OdeSolution:
    """Integrate (rho, gamma, F) for the catenoid of parameter alpha.

    rho' = sqrt(1 - alpha^2 sin^2 2rho), gamma' = -alpha sin 2rho and
    F' = alpha^2 sin 2rho / (1 + rho'), all starting at 0.
    rho is odd, gamma and F are even.

    Raises:
        exceptions.ParameterOutOfRange: |alpha| must be below 1.
    """
    _check_open_unit("alpha", alpha)

    def rhs(_, y):
        sine = math.sin(2 * y[0])
        slope = math.sqrt(1.0 - (alpha * sine)**2)
        return np.array([slope, -alpha * sine, alpha * alpha * sine / (1.0 + slope)])

    forward = integrate(rhs, [0.0, 0.0, 0.0], (0.0, v_max), step, stop_when)
    return reflect(forward, (ODD, EVEN, EVEN))


def solve_unit_catenoid_profile(v_max: float, step: float = DEFAULT_STEP) -> OdeSolution:
    """Integrate (rho, gamma, F) at alpha = 1.

    rho' = cos 2rho, gamma' = -sin 2rho and F' = sin 2rho / (1 + cos 2rho).
    """
    def rhs(_, y):
        angle = 2 * y[0]
        return np.array([math.cos(angle), -math.sin(angle),
                         math.sin(angle) / (1.0 + math.cos(angle))])

    return reflect(integrate(rhs, [0.0, 0.0, 0.0], (0.0, v_max), step), (ODD, EVEN, EVEN))


def solve_rho(alpha: float, v_max: float, step: float = DEFAULT_STEP) -> OdeSolution:
    """Odd solution of rho' = sqrt(1 - alpha^2 sin^2 2rho), rho(0) = 0."""
    _check_open_unit("alpha", alpha)
    forward = integrate(lambda _, y: math.sqrt(1.0 - (alpha * math.sin(2 * y[0]))**2),
                        0.0, (0.0, v_max), step)
    return reflect(forward, (ODD,))


def _along_rho(alpha: float, rho: OdeSolution, integrand, step: float) -> OdeSolution:
    _check_open_unit("alpha", alpha)
    upper = rho.domain[1]
    forward = integrate(lambda v, _: integrand(float(rho(v))), 0.0, (0.0, upper), step)
    return reflect(forward, (EVEN,))


def solve_gamma(alpha: float, rho: OdeSolution, step: float = DEFAULT_STEP) -> OdeSolution:
    """Even solution of gamma' = -alpha sin 2rho, gamma(0) = 0, on rho's range."""
    return _along_rho(alpha, rho, lambda angle: -alpha * math.sin(2 * angle), step)


def accumulate_F(alpha: float, rho: OdeSolution, step: float = DEFAULT_STEP) -> OdeSolution:
    """F(v) = alpha^2 * integral from 0 to v of sin 2rho / (1 + rho')."""
    def integrand(angle):
        return alpha * alpha * math.sin(2 * angle) / (1.0 + rho_slope(alpha, angle))
    return _along_rho(alpha, rho, integrand, step)


def find_period(solution: OdeSolution, target: float, xtol: float = PERIOD_XTOL) -> float:
    """Locate the unique v >= 0 with solution(v) = target by bisection.

    Args:
        solution (OdeSolution): Strictly increasing scalar solution.
        target (float): Value to reach.
        xtol (float, optional): Bracket width at termination.

    Raises:
        exceptions.TargetOutOfRange: The target is not covered.

    Returns:
        float: The crossing point.
    """
    lower, upper = max(0.0, solution.domain[0]), solution.domain[1]
    low_value, high_value = solution(lower), solution(upper)
    if not low_value <= target <= high_value:
        raise exceptions.TargetOutOfRange(target, low_value, high_value)
    if target == low_value:
        return lower
    logger.debug("bisecting for %g on [%g, %g]", target, lower, upper)
    return optimize.bisect(lambda v: solution(v) - target, lower, upper, xtol=xtol)


def quadrature(f: Callable[[float], float], a: float, b: float,
               tol: float = QUADRATURE_TOL, limit: int = 200,
               points: Optional[Sequence[float]] = None) -> QuadratureResult:
    """Adaptive Gauss-Kronrod quadrature of f over [a, b].

    Args:
        f (Callable[[float], float]): Integrand.
        a (float): Lower limit.
        b (float): Upper limit.
        tol (float, optional): Absolute tolerance. Defaults to QUADRATURE_TOL.
        limit (int, optional): Maximum number of subintervals.
        points (Sequence[float], optional): Interior break points, e.g. endpoint
            singularities of a piecewise integrand.

    Raises:
        exceptions.QuadratureDidNotConverge: The error estimate exceeds tol.

    Returns:
        QuadratureResult: Value, error estimate and evaluation count.
    """
    outcome = scipy_integrate.quad(f, a, b, epsabs=tol, epsrel=0.0, limit=limit,
                                   points=points, full_output=1)
    value, estimate, info = outcome[0], outcome[1], outcome[2]
    if len(outcome) > 3 or not estimate <= tol:
        message = outcome[3] if len(outcome) > 3 else "tolerance not met"
        raise exceptions.QuadratureDidNotConverge(message, estimate)
    logger.debug("quadrature on [%g, %g]: %d evaluations, error %.2e",
                 a, b, info["neval"], estimate)
    return QuadratureResult(float(value), float(estimate), int(info["neval"]))

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
