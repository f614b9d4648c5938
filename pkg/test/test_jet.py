"""Test immersion jets."""

# pylint: disable=import-error
import pytest
from solminimal.jet import ImmersionJet
from solminimal.vector import FrameVector, Sol3Point

P = Sol3Point((0.5, -1.0, 0.25))


def make_jet(x_u, x_v, scale):
    return ImmersionJet(0j, P, FrameVector(P, x_u), FrameVector(P, x_v),
                        FrameVector(P, (0, 0, 1)), scale)


def test_conformal_jet():
    """Orthogonal partials of equal length lambda have zero residuals."""
    assert make_jet((0, 2, 0), (-2, 0, 0), 4.0).conformality_residuals() == (0, 0, 0)


def test_residuals_are_relative():
    """Residuals are divided by lambda."""
    residuals = make_jet((1, 1, 0), (0, 1, 0), 2.0).conformality_residuals()
    assert residuals == pytest.approx((0.5, 0.0, 0.5))


def test_jets_are_frozen():
    """Jets cannot be modified."""
    jet = make_jet((1, 0, 0), (0, 1, 0), 1.0)
    with pytest.raises(AttributeError):
        jet.conformal_factor = 2.0
