"""Test the helicoid family H_K."""

# pylint: disable=import-error
import math
import numpy as np
import pytest
import solminimal
from solminimal import helicoid
from solminimal.ode import quadrature
from solminimal.sol3 import Isometry
from solminimal.sol3 import ambient_sectional_curvature
from solminimal.finite_difference import fd_jet, intrinsic_gauss_curvature
from solminimal.weierstrass import normal_from_gauss

POINTS = [complex(0.3, 0.2), complex(-1.1, 0.9), complex(0.7, -1.6), complex(1.8, 2.4)]


def quadrature_T(K):
    return 2 * helicoid.quadrature_x3W(K)


@pytest.mark.parametrize("K", [0.0, 1.0, -1.0, 1.5])
def test_illegal_parameters(K):
    """K = 0 is degenerate and |K| >= 1 is outside the family."""
    expected = solminimal.exceptions.DegenerateParameter if K == 0 else \
        solminimal.exceptions.ParameterOutOfRange
    with pytest.raises(expected):
        helicoid.build(K)


def test_parameter_message():
    """The message names the legal range."""
    with pytest.raises(solminimal.exceptions.ParameterOutOfRange, match=r"K must lie in \(-1,1\)"):
        helicoid.build(1.2)


@pytest.mark.parametrize("K", list(np.arange(1, 10) / 10) + [-0.3, -0.6, -0.9])
def test_period_against_quadrature(K):
    """W and x3(W) agree with their quadrature oracles."""
    m = helicoid.build(K)
    assert abs(m.W - helicoid.quadrature_W(K)) < 1e-8
    assert abs(m.x3(m.W) - helicoid.quadrature_x3W(K)) < 1e-8


def test_quadrature_oracles():
    """Closed values and parity of the oracles."""
    assert helicoid.quadrature_W(0.0) == pytest.approx(math.pi, abs=1e-12)
    assert helicoid.quadrature_W(0.5) == pytest.approx(helicoid.quadrature_W(-0.5), abs=1e-12)
    assert helicoid.quadrature_x3W(-0.7) == pytest.approx(-helicoid.quadrature_x3W(0.7), abs=1e-12)
    assert helicoid.quadrature_x3W(0.0) == 0.0


@pytest.mark.parametrize("K", [0.3, 0.9, 0.999])
def test_height_integral_split(K):
    """The elliptic split of x3(W) matches direct quadrature of 1/(s(1+s))."""
    direct = K * quadrature(lambda u: 1 / (helicoid._s(K, u) * (1 + helicoid._s(K, u))),
                            0.0, math.pi).value
    assert helicoid.quadrature_x3W(K) == pytest.approx(direct, rel=1e-9)


def test_outside_domain():
    """v beyond v_max is refused."""
    m = helicoid.build(0.4)
    with pytest.raises(solminimal.exceptions.OutsideDomain):
        m.immerse(complex(0, 5 * m.W))


def test_contained_lines():
    """The origin, the x3 axis and the line {(x, x, 0)} lie on the surface."""
    K = 0.4
    m = helicoid.build(K)
    assert m.immerse(0j).distance(solminimal.vector.ORIGIN) == 0
    for v in (-1.3, 0.5, 2.2):
        p = m.immerse(complex(0, v))
        assert (p.x1, p.x2) == (0, 0)
        assert p.x3 == pytest.approx(m.x3(v))
    for u in (-2.0, 0.5, 1.5):
        p = m.immerse(complex(u, 0))
        expected = math.sqrt(2) / 2 * K / (1 + math.sqrt(1 - K)) * math.sinh(u)
        assert p.x1 == pytest.approx(expected, rel=1e-12)
        assert p.x2 == pytest.approx(expected, rel=1e-12)
        assert p.x3 == 0


def test_conformal_factor_at_origin():
    """lambda(0) = K^2/(1 + sqrt(1-K))^2."""
    m = helicoid.build(0.4)
    assert m.conformal_factor(0j) == pytest.approx(0.16 / (1 + math.sqrt(0.6))**2, rel=1e-12)


@pytest.mark.parametrize("K", [0.4, -0.7])
@pytest.mark.parametrize("z", POINTS)
def test_jet(K, z):
    """Analytic jets are conformal, with a unit normal from g, and match FD partials."""
    m = helicoid.build(K)
    jet = m.jet(z)
    assert max(jet.conformality_residuals()) < 1e-8
    assert jet.normal.norm() == pytest.approx(1.0, abs=1e-14)
    assert jet.normal.distance(normal_from_gauss(m.gauss_sample(z).g, jet.position)) < 1e-10
    numeric = fd_jet(m.evaluator(), z, 1e-5)
    size = math.sqrt(jet.conformal_factor)
    assert numeric.x_u.distance(jet.x_u) < 1e-6 * max(1.0, size)
    assert numeric.x_v.distance(jet.x_v) < 1e-6 * max(1.0, size)


def test_screw_invariance():
    """(0, 0, T) * x(z) = x(z + 2iW) on random points."""
    m = helicoid.build(0.4)
    screw = Isometry.screw(m.period_T())
    rng = np.random.default_rng(0)
    for u, v in zip(rng.uniform(-2, 2, 50), rng.uniform(-m.W, m.W, 50)):
        z = complex(u, v)
        assert m.immerse(z + 2j * m.W).distance(screw.apply(m.immerse(z))) < 1e-8


def test_period_monotone_and_odd():
    """T is odd in K and strictly increasing on 0.1..0.9."""
    periods = [helicoid.build(K).period_T() for K in np.arange(1, 10) / 10]
    assert np.all(np.diff(periods) > 0)
    assert helicoid.build(-0.4).period_T() == pytest.approx(-helicoid.build(0.4).period_T(),
                                                            abs=1e-10)


def test_invert_period():
    """Round trip through the period and the two endpoints."""
    T = helicoid.build(0.4).period_T()
    assert helicoid.invert_period(T) == pytest.approx(0.4, abs=1e-6)
    assert abs(2 * helicoid.quadrature_x3W(helicoid.invert_period(T)) - T) <= 1e-8
    assert 0 < helicoid.invert_period(1e-6) < 1e-4
    assert helicoid.invert_period(10.0) > 0.99
    with pytest.raises(solminimal.exceptions.ParameterOutOfRange):
        helicoid.invert_period(0.0)


def test_invert_period_near_one():
    """Large T pushes K toward 1 and still round-trips through the period."""
    K = helicoid.invert_period(40.0)
    assert 0 < 1 - K < 1e-9
    assert abs(2 * helicoid.quadrature_x3W(K) - 40.0) < 1e-3
    assert helicoid.invert_period(20.0) < K


def test_invert_period_beyond_double():
    """A period that would need 1 - K below double precision is refused."""
    with pytest.raises(solminimal.exceptions.TargetOutOfRange):
        helicoid.invert_period(80.0)


@pytest.mark.parametrize("K", [0.0, 0.3, 0.8])
def test_period_derivative(K):
    """dT/dK against central differences of the quadrature period."""
    h = 1e-5
    numeric = (quadrature_T(K + h) - quadrature_T(K - h)) / (2 * h)
    assert helicoid.period_derivative(K) == pytest.approx(numeric, rel=1e-6)
    assert helicoid.period_derivative(K) > 0


def test_period_derivative_at_zero():
    """dT/dK at K = 0 is pi."""
    assert helicoid.period_derivative(0.0) == pytest.approx(math.pi, abs=1e-10)


@pytest.mark.parametrize("z", POINTS[:3])
def test_extrinsic_curvature(z):
    """The displayed curvature plus the ambient term is the intrinsic curvature."""
    m = helicoid.build(0.4)
    intrinsic = intrinsic_gauss_curvature(m.conformal_factor, z)
    ambient = ambient_sectional_curvature(m.jet(z).normal)
    assert intrinsic == pytest.approx(m.extrinsic_curvature(z) + ambient, abs=1e-3)
    assert m.extrinsic_curvature(complex(-z.real, z.imag)) == \
        pytest.approx(m.extrinsic_curvature(z), rel=1e-12)


def test_curvature_tends_to_minus_one():
    """Far out in u the curvature approaches -1."""
    m = helicoid.build(0.4)
    for u in (-10.0, 10.0):
        assert abs(m.extrinsic_curvature(complex(u, 0.7)) + 1) <= 1e-6


@pytest.mark.parametrize("K", [0.4, -0.6])
def test_symmetry_reports(K):
    """The three half-turn identities hold to 1e-10."""
    report = helicoid.symmetry_check(helicoid.build(K))
    assert report.passed, report.to_text()
    assert {c.name for c in report.checks} == {"symmetry.s2", "symmetry.st", "symmetry.s3t"}


def test_periodicity_and_opposite_parameter():
    """Screw invariance, profile translations and the K <-> -K isometry."""
    m = helicoid.build(0.4)
    periodicity = helicoid.periodicity_check(m)
    opposite = helicoid.opposite_parameter_check(m)
    assert periodicity.passed, periodicity.to_text()
    assert opposite.passed, opposite.to_text()


def test_total_curvature_diverges():
    """Partial integrals decrease in U and pass below -100 by U = 10."""
    m = helicoid.build(0.4)
    totals = [helicoid.total_curvature(m, U) for U in range(1, 11)]
    assert np.all(np.diff(totals) < 0)
    assert totals[-1] < -100


def test_embeddedness():
    """x3 is monotone and the horizontal lines never degenerate."""
    report = helicoid.embeddedness_check(helicoid.build(-0.5))
    assert report.passed, report.to_text()


def test_string():
    """Models describe their parameter and period."""
    assert str(helicoid.build(0.4)).startswith("HelicoidModel(K=0.4, W=")
