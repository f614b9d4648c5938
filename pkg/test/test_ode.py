"""Test integration, dense output, quadrature and period location."""

# pylint: disable=import-error
import math
import numpy as np
import pytest
import solminimal
from solminimal import ode


def test_exponential():
    """y' = y from y(0) = 1 matches e^v between nodes."""
    solution = ode.integrate(lambda v, y: y, 1.0, (0.0, 2.0), step=1e-2)
    vs = np.linspace(0, 2, 37)
    assert np.max(np.abs(solution(vs) - np.exp(vs))) < 1e-8
    assert solution.derivative(1.0) == pytest.approx(math.e, rel=1e-8)
    assert solution.dimension == 1
    assert solution.domain == (0.0, 2.0)


def test_system():
    """A rotation system keeps its components and their derivatives."""
    solution = ode.integrate(lambda v, y: np.array([y[1], -y[0]]), [0.0, 1.0], (0.0, math.pi))
    assert solution.dimension == 2
    sine = solution.component(0)
    assert sine(math.pi / 2) == pytest.approx(1.0, abs=1e-10)
    assert sine.derivative(math.pi / 3) == pytest.approx(0.5, abs=1e-10)


def test_outside_domain():
    """Evaluation beyond the grid is refused."""
    solution = ode.integrate(lambda v, y: 1.0, 0.0, (0.0, 1.0))
    with pytest.raises(solminimal.exceptions.OutsideDomain):
        solution(1.5)


def test_invalid_grid():
    """The step must be positive and the domain non-empty."""
    with pytest.raises(solminimal.exceptions.InvalidGrid):
        ode.integrate(lambda v, y: 1.0, 0.0, (0.0, 1.0), step=0.0)
    with pytest.raises(solminimal.exceptions.InvalidGrid):
        ode.integrate(lambda v, y: 1.0, 0.0, (1.0, 1.0))


def test_non_finite_derivative():
    """A right-hand side leaving the reals stops integration."""
    with pytest.raises(solminimal.exceptions.NonFiniteDerivative):
        ode.integrate(lambda v, y: math.sqrt(1.0 - v) if v <= 1 else math.nan, 0.0, (0.0, 2.0))


def test_stop_when():
    """Integration ends at the first node where the predicate holds."""
    solution = ode.integrate(lambda v, y: 1.0, 0.0, (0.0, 10.0), step=0.25,
                             stop_when=lambda v, y: y[0] > 3)
    assert solution.domain[1] == pytest.approx(3.25)


def test_reflect_parities():
    """Odd and even components reflect exactly."""
    profile = ode.solve_catenoid_profile(0.5, 2.0)
    nodes = profile.nodes[(profile.nodes > 0) & (profile.nodes < profile.domain[1])]
    rho, gamma, F = (profile.component(i) for i in range(3))
    assert np.max(np.abs(rho(-nodes) + rho(nodes))) < 1e-14
    assert np.max(np.abs(gamma(-nodes) - gamma(nodes))) < 1e-14
    assert np.max(np.abs(F(-nodes) - F(nodes))) < 1e-14


def test_slope_helpers():
    """The angle slopes at the closed-form points."""
    assert ode.b_slope(0.5, 0.0) == pytest.approx(math.sqrt(0.5))
    assert ode.b_slope(0.5, math.pi / 2) == pytest.approx(math.sqrt(1.5))
    assert ode.rho_slope(0.6, math.pi / 4) == pytest.approx(0.8)


def test_parameter_range():
    """Profiles need a parameter in (-1,1)."""
    with pytest.raises(solminimal.exceptions.ParameterOutOfRange):
        ode.solve_b(1.0, 1.0)
    with pytest.raises(solminimal.exceptions.ParameterOutOfRange):
        ode.solve_rho(-1.2, 1.0)


def test_period_of_trivial_angle():
    """At K = 0, b(v) = v and the period is pi."""
    b = ode.solve_b(0.0, 4.0)
    assert ode.find_period(b, math.pi) == pytest.approx(math.pi, abs=1e-12)
    with pytest.raises(solminimal.exceptions.TargetOutOfRange):
        ode.find_period(b, 10.0)


@pytest.mark.parametrize("K", [0.3, -0.6, 0.9])
def test_self_convergence(K):
    """Halving the step changes the angle by less than 1e-9."""
    coarse = ode.solve_b(K, 8.0)
    fine = ode.solve_b(K, 8.0, step=ode.DEFAULT_STEP / 2)
    assert np.max(np.abs(coarse.values - fine(coarse.nodes))) < 1e-9


@pytest.mark.parametrize("alpha", [0.5, -0.9])
def test_separate_and_coupled_profiles(alpha):
    """gamma and F integrated along rho agree with the coupled system."""
    profile = ode.solve_catenoid_profile(alpha, 6.0)
    rho = ode.solve_rho(alpha, 6.0)
    gamma = ode.solve_gamma(alpha, rho)
    F = ode.accumulate_F(alpha, rho)
    vs = np.linspace(-5.5, 5.5, 51)
    assert np.max(np.abs(rho(vs) - profile.component(0)(vs))) < 1e-10
    assert np.max(np.abs(gamma(vs) - profile.component(1)(vs))) < 1e-8
    assert np.max(np.abs(F(vs) - profile.component(2)(vs))) < 1e-8


def test_quadrature():
    """Integral of sin over [0, pi] with its evaluation count."""
    result = ode.quadrature(math.sin, 0.0, math.pi)
    assert result.value == pytest.approx(2.0, abs=1e-12)
    assert result.error_estimate <= ode.QUADRATURE_TOL
    assert result.evaluations > 0


def test_quadrature_failure():
    """An oscillatory integrand on one subinterval cannot converge."""
    with pytest.raises(solminimal.exceptions.QuadratureDidNotConverge):
        ode.quadrature(lambda x: math.sin(200 * x), 0.0, 10.0, limit=1)
