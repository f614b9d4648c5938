"""Exceptions for the solminimal package."""


class SolMinimalException(Exception):
    """Base exception class for the solminimal package."""


class ParameterOutOfRange(SolMinimalException):
    """A family parameter must lie in its open interval."""

    def __init__(self, name, value, description):
        """Create ParameterOutOfRange exception."""
        super().__init__(f"{name} must lie in {description}; got {value}")


class DegenerateParameter(SolMinimalException):
    """The parameter value collapses the surface to a point."""

    def __init__(self, name, value):
        """Create DegenerateParameter exception."""
        super().__init__(
            f"{name} = {value} is degenerate: the image of the immersion is a point")


class OutsideDomain(SolMinimalException):
    """Evaluation was requested outside the tabulated range."""

    def __init__(self, value, lower, upper):
        """Create OutsideDomain exception."""
        super().__init__(f"{value} lies outside the domain [{lower}, {upper}]")


class NonFiniteDerivative(SolMinimalException):
    """The right-hand side of an ODE produced a non-finite value."""

    def __init__(self, v, y):
        """Create NonFiniteDerivative exception."""
        super().__init__(f"Non-finite derivative at v={v} with state {y}")


class QuadratureDidNotConverge(SolMinimalException):
    """Adaptive quadrature could not meet the requested tolerance."""

    def __init__(self, message, estimate):
        """Create QuadratureDidNotConverge exception."""
        super().__init__(
            f"Quadrature did not converge (error estimate {estimate}): {message}")


class TargetOutOfRange(SolMinimalException):
    """A monotone function cannot reach the requested value."""

    def __init__(self, target, lower, upper):
        """Create TargetOutOfRange exception."""
        super().__init__(
            f"Target {target} is not attained on the covered range [{lower}, {upper}]")


class SingularGaussMap(SolMinimalException):
    """The target metric is singular on the real and imaginary axes."""

    def __init__(self, g):
        """Create SingularGaussMap exception."""
        super().__init__(f"Gauss map value {g} is real or pure imaginary")


class PoleOfStereographicProjection(SolMinimalException):
    """The south pole has no image under stereographic projection."""

    def __init__(self, normal):
        """Create PoleOfStereographicProjection exception."""
        super().__init__(f"{normal} is the pole of the stereographic projection")


class ConformalityViolated(SolMinimalException):
    """The parametrisation is not conformal enough for the curvature formula."""

    def __init__(self, residual, tolerance):
        """Create ConformalityViolated exception."""
        super().__init__(
            f"Conformality residual {residual} exceeds {tolerance}")


class DegenerateDecomposition(SolMinimalException):
    """The tangent basis is too short to decompose against."""

    def __init__(self, conformal_factor):
        """Create DegenerateDecomposition exception."""
        super().__init__(
            f"Cannot decompose in a tangent basis with conformal factor {conformal_factor}")


class WrongNumberOfComponents(SolMinimalException):
    """Points and vectors of Sol3 have exactly three components."""

    def __init__(self, entries):
        """Create WrongNumberOfComponents exception."""
        super().__init__(f"Expected three components, got {entries}")


class NonFiniteComponent(SolMinimalException):
    """Components must be finite reals."""

    def __init__(self, entries):
        """Create NonFiniteComponent exception."""
        super().__init__(f"All components of {entries} must be finite")


class BasePointMismatch(SolMinimalException):
    """Tangent vectors must share a base point to be combined."""

    def __init__(self, first, second):
        """Create BasePointMismatch exception."""
        super().__init__(f"Tangent vectors based at {first} and {second}")


class UnknownIsotropy(SolMinimalException):
    """Isotropy words are id, s, s2, s3, t, st, s2t, s3t."""

    def __init__(self, tag):
        """Create UnknownIsotropy exception."""
        super().__init__(f"{tag} is not an isotropy of the origin")


class InvalidGrid(SolMinimalException):
    """Grids need at least two samples over a non-empty range."""

    def __init__(self, reason):
        """Create InvalidGrid exception."""
        super().__init__(f"Invalid grid: {reason}")


class NonPositiveConformalFactor(SolMinimalException):
    """The conformal factor must be positive for the metric to be Riemannian."""

    def __init__(self, value, z):
        """Create NonPositiveConformalFactor exception."""
        super().__init__(f"Conformal factor {value} at z={z} is not positive")


class ConfigError(SolMinimalException):
    """The run configuration could not be assembled."""

    def __init__(self, reason):
        """Create ConfigError exception."""
        super().__init__(f"Invalid configuration: {reason}")


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
