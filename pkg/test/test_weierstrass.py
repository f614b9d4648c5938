"""Test the Gauss map machinery."""

# pylint: disable=import-error
import cmath
import math
import pytest
import solminimal
from solminimal import weierstrass
from solminimal.vector import FrameVector, ORIGIN

POINTS = [complex(0.3, 0.2), complex(-0.8, 1.1), complex(1.4, -0.7)]


def test_normal_correspondence():
    """Stereographic projection and its inverse agree."""
    for g in (0.4 + 0.3j, -1.5 + 0.2j, 0.1 - 2.0j):
        normal = weierstrass.normal_from_gauss(g)
        assert normal.norm() == pytest.approx(1.0)
        assert weierstrass.gauss_from_normal(normal) == pytest.approx(g, abs=1e-14)
    assert weierstrass.normal_from_gauss(0j) == FrameVector(ORIGIN, (0, 0, 1))


def test_pole():
    """The south pole has no stereographic image."""
    with pytest.raises(solminimal.exceptions.PoleOfStereographicProjection):
        weierstrass.gauss_from_normal(FrameVector(ORIGIN, (0, 0, -1)))


def test_singular_axes():
    """Real and imaginary Gauss values are singular."""
    assert weierstrass.axis_distance(2.0) == 0
    assert weierstrass.axis_distance(-3j) == 0
    assert weierstrass.axis_distance(cmath.exp(1j * math.pi / 4)) == pytest.approx(1.0)
    with pytest.raises(solminimal.exceptions.SingularGaussMap):
        weierstrass.harmonic_residual(weierstrass.GaussSample(2.0, 1.0, 1.0, 0.0))
    with pytest.raises(solminimal.exceptions.SingularGaussMap):
        weierstrass.hopf_q(weierstrass.GaussSample(1j, 1.0, 1.0, 0.0))


def test_exponential_sample_derivatives():
    """Wirtinger derivatives against finite differences."""
    def g(u, v):
        return cmath.exp(complex(-u - v * v, math.sin(v)))

    h = 1e-4
    for z in POINTS:
        u, v = z.real, z.imag
        sample = weierstrass.exponential_gauss_sample(u, math.sin(v), math.cos(v), -math.sin(v),
                                                      v * v, 2 * v, 2.0)
        g_u = (g(u + h, v) - g(u - h, v)) / (2 * h)
        g_v = (g(u, v + h) - g(u, v - h)) / (2 * h)
        laplacian = (g(u + h, v) + g(u - h, v) + g(u, v + h) + g(u, v - h) - 4 * g(u, v)) / h**2
        assert sample.g == pytest.approx(g(u, v))
        assert sample.g_z == pytest.approx((g_u - 1j * g_v) / 2, abs=1e-7)
        assert sample.g_zbar == pytest.approx((g_u + 1j * g_v) / 2, abs=1e-7)
        assert sample.g_zzbar == pytest.approx(laplacian / 4, abs=1e-6)


def test_sample_transforms():
    """The transformed samples carry i g, 1/g, i/g and conj(g)."""
    sample = weierstrass.exponential_gauss_sample(0.2, 0.7, 1.1, -0.3)
    assert sample.rotated().g == pytest.approx(1j * sample.g)
    assert sample.inverted().g == pytest.approx(1 / sample.g)
    assert sample.inverse_rotated().g == pytest.approx(1j / sample.g)
    assert sample.conjugated().g == pytest.approx(sample.g.conjugate())
    assert sample.conjugated().g_z == pytest.approx(sample.g_zbar.conjugate())


@pytest.mark.parametrize("z", POINTS)
def test_harmonic_solutions_stay_harmonic(z):
    """i g, 1/g and conj(g) solve the Gauss map equation with g."""
    sample = solminimal.helicoid.build(0.5).gauss_sample(z)
    for transformed in (sample, sample.rotated(), sample.inverted(),
                        sample.inverse_rotated(), sample.conjugated()):
        assert weierstrass.harmonic_residual(transformed) < 1e-12


@pytest.mark.parametrize("z", POINTS)
def test_hopf_and_covariance(z):
    """The Hopf coefficient of H_K is iK/8 and the representation is covariant."""
    m = solminimal.helicoid.build(-0.4)
    sample = m.gauss_sample(z)
    assert weierstrass.hopf_q(sample).q == pytest.approx(-0.4j / 8, abs=1e-12)
    assert weierstrass.representation_covariance(sample, m.immerse(z).x3) < 1e-12


@pytest.mark.parametrize("z", POINTS)
def test_representation_recovers_partials(z):
    """The representation gives the closed-form partials and conformal factor."""
    m = solminimal.catenoid.build(0.6)
    jet = m.jet(z)
    rhs = weierstrass.representation_rhs(m.gauss_sample(z), jet.position.x3)
    x_u, x_v = weierstrass.coordinate_partials(rhs)
    framed_u = solminimal.sol3.coord_to_frame(jet.position,
                                              solminimal.CoordVector(jet.position, x_u))
    framed_v = solminimal.sol3.coord_to_frame(jet.position,
                                              solminimal.CoordVector(jet.position, x_v))
    size = math.sqrt(jet.conformal_factor)
    assert framed_u.distance(jet.x_u) < 1e-8 * size
    assert framed_v.distance(jet.x_v) < 1e-8 * size
    assert weierstrass.conformal_factor_from_representation(rhs, jet.position.x3) == \
        pytest.approx(jet.conformal_factor, rel=1e-8)
