"""Extremal bandlimited majorant/minorant pair for the Poisson kernel.

For 0 < beta < 1/2 and delta >= 1 this module evaluates the unique entire
functions m+ (majorant) and m- (minorant) of exponential type 2*pi*delta
that bracket h(x) = beta/(beta^2 + x^2) pointwise while minimizing the L1
distance.  Their Fourier transforms are supported on [-delta, delta] and
known in closed form, as are the L1 gaps; everything here is exact
arithmetic on those closed forms.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .numkit import DomainError

Sign = str  # "+" or "-"


def _check_sign(sign: Sign) -> None:
    if sign not in ("+", "-"):
        raise DomainError(f"sign must be '+' or '-', got {sign!r}")


@dataclass(frozen=True)
class PoissonExtremalPair:
    """Parameters (beta, delta) of the extremal pair for beta/(beta^2+x^2)."""

    beta: float
    delta: float

    def __post_init__(self):
        if not 0.0 < self.beta < 0.5:
            raise DomainError(f"beta must lie in (0, 1/2), got {self.beta}")
        if self.delta < 1.0:
            raise DomainError(f"delta must be >= 1, got {self.delta}")

    # -- target kernel -----------------------------------------------------

    def h(self, x):
        """Poisson kernel beta/(beta^2 + x^2); accepts scalars or arrays."""
        b = self.beta
        return b / (b * b + x * x)

    # -- denominator (e^{pi b d} -/+ e^{-pi b d})^2 -----------------------

    def _denom(self, sign: Sign) -> float:
        a = math.pi * self.beta * self.delta
        if sign == "+":
            return (math.exp(a) - math.exp(-a)) ** 2
        return (math.exp(a) + math.exp(-a)) ** 2

    # -- extremal functions ------------------------------------------------

    def m_eval(self, sign: Sign, z: complex) -> complex:
        """Value of the majorant (sign '+') or minorant ('-') at complex z.

        The quotient form has removable singularities at z = +/- i*beta;
        near those points the factored product of shifted sinc kernels is
        used instead.  |Im z| is capped at 700/(2*pi*delta) so the complex
        sine cannot overflow double precision.
        """
        _check_sign(sign)
        b, d = self.beta, self.delta
        z = complex(z)
        cap = 700.0 / (2.0 * math.pi * d)
        if abs(z.imag) > cap:
            z = complex(z.real, math.copysign(cap, z.imag))
        D = self._denom(sign)
        if min(abs(z - 1j * b), abs(z + 1j * b)) < 1e-4:
            # factored form: 4 b sin(pi d (z+ib)) sin(pi d (z-ib))
            #                / ((z+ib)(z-ib) D), written with sinc factors
            s1 = _sinc_pi(d * (z + 1j * b))
            s2 = _sinc_pi(d * (z - 1j * b))
            return (4.0 / b) * s1 * s2 * (b * d) ** 2 / D * (math.pi ** 2)
        a = 2.0 * math.pi * b * d
        num = math.exp(a) + math.exp(-a) - 2.0 * cmath.cos(2.0 * math.pi * d * z)
        return (b / (b * b + z * z)) * num / D

    def m_real(self, sign: Sign, x: np.ndarray) -> np.ndarray:
        """Vectorized evaluation on the real axis (no singularities there)."""
        _check_sign(sign)
        b, d = self.beta, self.delta
        x = np.asarray(x, dtype=np.float64)
        a = 2.0 * math.pi * b * d
        num = math.exp(a) + math.exp(-a) - 2.0 * np.cos(2.0 * math.pi * d * x)
        return (b / (b * b + x * x)) * num / self._denom(sign)

    # -- Fourier transform -------------------------------------------------

    def ft_m(self, sign: Sign, xi: float) -> float:
        """Closed-form Fourier transform; identically 0 for |xi| > delta."""
        _check_sign(sign)
        b, d = self.beta, self.delta
        axi = abs(xi)
        if axi > d:
            return 0.0
        w = 2.0 * math.pi * b * (d - axi)
        return math.pi * (math.exp(w) - math.exp(-w)) / self._denom(sign)

    # -- L1 gaps -----------------------------------------------------------

    def l1_gap(self, sign: Sign) -> float:
        """Exact L1 distance to the Poisson kernel (majorant or minorant)."""
        _check_sign(sign)
        q = math.exp(-2.0 * math.pi * self.beta * self.delta)
        if sign == "+":
            return 2.0 * math.pi * q / (1.0 - q)
        return 2.0 * math.pi * q / (1.0 + q)

    # -- decay envelope ----------------------------------------------------

    def envelope_const(self, sign: Sign) -> float:
        """K with 0 <= m_sign(x) <= K * h(x) on the real axis (exact).

        For the majorant K = 1 + 4/(e^{pi b d} - e^{-pi b d})^2; the
        minorant sits below h so K = 1.
        """
        _check_sign(sign)
        if sign == "-":
            return 1.0
        a = math.pi * self.beta * self.delta
        return 1.0 + 4.0 / (math.exp(a) - math.exp(-a)) ** 2


def _sinc_pi(w: complex) -> complex:
    """sin(pi w)/(pi w) with Taylor fallback near w = 0."""
    if abs(w) < 1e-6:
        pw2 = (math.pi * w) ** 2
        return 1.0 - pw2 / 6.0 + pw2 * pw2 / 120.0
    return cmath.sin(math.pi * w) / (math.pi * w)
