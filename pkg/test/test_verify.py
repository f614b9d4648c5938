"""Test the verification suites."""

# pylint: disable=import-error
import pytest
from solminimal import helicoid, verify


@pytest.mark.parametrize("z", [complex(0.4, 0.6), complex(-0.7, 1.3)])
def test_shape_operator(z):
    """FD derivatives of the normal match the closed-form shape operator."""
    report = verify.shape_operator_check(helicoid.build(0.4), z)
    assert report.passed, report.to_text()
    assert "shape_operator.trace" in report


def test_helicoid_suite():
    """Every helicoid check passes at K = 0.4."""
    report = verify.helicoid_suite(0.4, grid=21)
    assert report.passed, report.to_text()
    assert "hopf.value" in report


def test_catenoid_suite():
    """Every catenoid check passes at alpha = -0.6."""
    report = verify.catenoid_suite(-0.6, grid=21)
    assert report.passed, report.to_text()
    assert "section.convex" in report


def test_graph_and_plane_suites():
    """The graph S and the plane limit at alpha = 1e-3 pass."""
    for report in (verify.graph_suite(), verify.plane_limit_suite(1e-3)):
        assert report.passed, report.to_text()


def test_tolerance_override():
    """An impossible tolerance turns a passing check into a failure."""
    report = verify.helicoid_suite(0.4, tolerances={"mean_curvature": 1e-300}, grid=11)
    assert [c.name for c in report.failures] == ["mean_curvature"]
