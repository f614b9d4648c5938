"""Gauss map machinery: stereographic correspondence, harmonic residual, Hopf differential.

A conformal minimal immersion x of a domain of C into Sol3 has a Gauss map g
(the stereographic projection of the unit normal in frame components) which
satisfies

    (g^2 - conj(g)^2) g_zzbar = 2 g g_z g_zbar,

and x is recovered from g by the representation

    x1_z = e^(-x3) (conj(g)^2 - 1) g_z / (g^2 - conj(g)^2)
    x2_z = i e^(x3) (conj(g)^2 + 1) g_z / (g^2 - conj(g)^2)
    x3_z = 2 conj(g) g_z / (g^2 - conj(g)^2).

The target metric is singular where g is real or pure imaginary.
"""

from __future__ import annotations
import cmath
import math
from dataclasses import dataclass
from typing import Tuple
import numpy as np
from . import exceptions
from .vector import ORIGIN, FrameVector, Sol3Point

SINGULAR_GUARD = 1e-14


@dataclass(frozen=True)
class GaussSample:
    """Value and Wirtinger derivatives of a Gauss map at one parameter point."""

    g: complex
    g_z: complex
    g_zbar: complex
    g_zzbar: complex

    def rotated(self) -> GaussSample:
        """Sample of i*g."""
        return GaussSample(1j * self.g, 1j * self.g_z, 1j * self.g_zbar, 1j * self.g_zzbar)

    def inverted(self) -> GaussSample:
        """Sample of 1/g."""
        g, g_z, g_zbar = self.g, self.g_z, self.g_zbar
        return GaussSample(1 / g, -g_z / g**2, -g_zbar / g**2,
                           -self.g_zzbar / g**2 + 2 * g_z * g_zbar / g**3)

    def inverse_rotated(self) -> GaussSample:
        """Sample of i/g."""
        return self.inverted().rotated()

    def conjugated(self) -> GaussSample:
        """Sample of conj(g); the z and zbar derivatives swap under conjugation."""
        return GaussSample(self.g.conjugate(), self.g_zbar.conjugate(),
                           self.g_z.conjugate(), self.g_zzbar.conjugate())


@dataclass(frozen=True)
class HopfValue:
    q: complex


def exponential_gauss_sample(u: float, theta: float, theta_d: float, theta_dd: float,
                             gamma: float = 0.0, gamma_d: float = 0.0,
                             gamma_dd: float = 0.0) -> GaussSample:
    """Sample of g = exp(-u - gamma(v) + i theta(v)).

    With s = -gamma' + i theta' one has g_u = -g and g_v = s g, hence
    g_z = g (-1 - i s)/2, g_zbar = g (-1 + i s)/2 and
    g_zzbar = (g_uu + g_vv)/4 = g (1 + s^2 + s')/4.
    """
    g = cmath.exp(complex(-u - gamma, theta))
    s = complex(-gamma_d, theta_d)
    s_d = complex(-gamma_dd, theta_dd)
    return GaussSample(g, 0.5 * g * (-1 - 1j * s), 0.5 * g * (-1 + 1j * s),
                       0.25 * g * (1 + s * s + s_d))


def axis_distance(g: complex) -> float:
    """|sin(2 arg g)|, zero exactly on the real and imaginary axes."""
    modulus = abs(g)
    if modulus == 0:
        return 0.0
    return abs((g * g).imag) / modulus**2


def _check_regular(g: complex) -> complex:
    if axis_distance(g) <= SINGULAR_GUARD:
        raise exceptions.SingularGaussMap(g)
    return g * g - g.conjugate()**2


def normal_from_gauss(g: complex, point: Sol3Point = ORIGIN) -> FrameVector:
    """Unit normal (2 Re g, 2 Im g, 1 - |g|^2)/(1 + |g|^2) in frame components."""
    size = abs(g)**2
    return FrameVector(point, (2 * g.real / (1 + size),
                               2 * g.imag / (1 + size),
                               (1 - size) / (1 + size)))


def gauss_from_normal(normal: FrameVector) -> complex:
    """Stereographic projection from the south pole.

    Raises:
        exceptions.PoleOfStereographicProjection: The normal is -E3.
    """
    n1, n2, n3 = normal.entries
    if 1 + n3 <= 0:
        raise exceptions.PoleOfStereographicProjection(normal)
    return complex(n1, n2) / (1 + n3)


def harmonic_residual(sample: GaussSample) -> float:
    """|(g^2 - conj(g)^2) g_zzbar - 2 g g_z g_zbar|.

    Raises:
        exceptions.SingularGaussMap: g is real or pure imaginary.
    """
    difference = _check_regular(sample.g)
    return abs(difference * sample.g_zzbar - 2 * sample.g * sample.g_z * sample.g_zbar)


def hopf_q(sample: GaussSample) -> HopfValue:
    """Coefficient q of the Hopf differential q dz^2."""
    difference = _check_regular(sample.g)
    return HopfValue(sample.g_z * sample.g_zbar.conjugate() / difference)


def representation_rhs(sample: GaussSample, x3: float) -> Tuple[complex, complex, complex]:
    """The z-derivatives (x1_z, x2_z, x3_z) of the immersion with Gauss map g."""
    g, g_z = sample.g, sample.g_z
    difference = _check_regular(g)
    g_bar = g.conjugate()
    return (math.exp(-x3) * (g_bar**2 - 1) * g_z / difference,
            1j * math.exp(x3) * (g_bar**2 + 1) * g_z / difference,
            2 * g_bar * g_z / difference)


def coordinate_partials(rhs: Tuple[complex, complex, complex]) -> Tuple[np.ndarray, np.ndarray]:
    """Coordinate partials x_u = 2 Re(x_z) and x_v = -2 Im(x_z)."""
    values = np.array(rhs, dtype=complex)
    return 2 * values.real, -2 * values.imag


def conformal_factor_from_representation(rhs: Tuple[complex, complex, complex],
                                         x3: float) -> float:
    """lambda = 2 |x_z|^2, the norm taken in frame components."""
    frame = (math.exp(x3) * rhs[0], math.exp(-x3) * rhs[1], rhs[2])
    return 2 * sum(abs(component)**2 for component in frame)


def representation_covariance(sample: GaussSample, x3: float) -> float:
    """Check that i*g and 1/g represent sigma o x and tau o x.

    Returns:
        float: Largest deviation between the representation of the transformed
            Gauss map and the transformed z-derivatives of x.
    """
    base = np.array(representation_rhs(sample, x3))
    # sigma(x) = (x2, -x1, -x3) and tau(x) = (-x1, x2, x3)
    rotated = np.array(representation_rhs(sample.rotated(), -x3))
    inverted = np.array(representation_rhs(sample.inverted(), x3))
    expected_rotated = np.array([base[1], -base[0], -base[2]])
    expected_inverted = np.array([-base[0], base[1], base[2]])
    return float(max(np.max(np.abs(rotated - expected_rotated)),
                     np.max(np.abs(inverted - expected_inverted))))

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
