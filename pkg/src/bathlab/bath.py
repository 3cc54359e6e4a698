"""Ohmic heat-bath models and the damping-kernel quantities derived from them.

A bath is specified by its spectral density of oscillators J(w) = (pi/2)
sum_n m_n w_n^3 delta(w - w_n). Two continuum variants are provided: the
Drude model with an algebraic cutoff and the strictly Ohmic reference
J = M*gamma*w. The Laplace transform of the damping kernel,

    gamma_hat(z) = (2 / pi M) int_0^inf dw J(w)/w * z/(w^2 + z^2),

its zero-frequency slope, and the "missing mass" relative to the strictly
Ohmic reference carry the low-temperature anomaly criterion: the specific
heat of the damped free particle turns negative iff gamma_hat'(0) < -1,
equivalently iff the missing oscillator mass exceeds the particle mass.
"""

from __future__ import annotations

import abc
import math
from dataclasses import dataclass

import numpy as np

from bathlab import numerics
from bathlab.numerics import QuadratureSpec

__all__ = [
    "SpectralDensity",
    "Drude",
    "StrictOhmic",
    "AnomalyReport",
    "gamma_hat_by_quadrature",
    "im_gamma_hat_iaxis_by_quadrature",
]

# Quadrature noise can land either side of the marginal point gamma_hat'(0)
# = -1 (omega_d = gamma); the verdict uses a guard band so that case is
# deterministically "not negative".
_MARGIN = 1e-9


@dataclass(frozen=True)
class AnomalyReport:
    """Negative-specific-heat criterion for one bath model."""

    gamma_hat_zero: float
    gamma_hat_prime_zero: float
    missing_mass_ratio: float
    low_t_specific_heat_negative: bool


class SpectralDensity(abc.ABC):
    """Common interface of the continuum bath models.

    Subclasses are immutable value objects; every operation is pure.
    """

    gamma: float
    system_mass: float

    @abc.abstractmethod
    def j(self, omega):
        """Spectral density of bath oscillators J(w), vectorized over w."""

    @abc.abstractmethod
    def gamma_hat(self, z: float) -> float:
        """Laplace-transformed damping kernel at z >= 0 (closed form)."""

    @abc.abstractmethod
    def im_gamma_hat_iaxis(self, omega):
        """Im gamma_hat(i*w + 0+), the reactive part on the imaginary axis."""

    def _scales(self) -> tuple[float, ...]:
        """Characteristic frequencies, used as quadrature panel anchors."""
        return (self.gamma,)

    def gamma_hat_prime_zero(self, spec: QuadratureSpec | None = None) -> float:
        """Slope of gamma_hat at z = 0.

        Evaluated from the infrared-subtracted representation,
        (2/pi) int dw [J(w)/(M w) - gamma_hat(0)] / w^2; the unsubtracted
        integrand would diverge logarithmically for Ohmic baths.
        """
        g0 = self.gamma_hat(0.0)
        m = self.system_mass

        def integrand(w):
            return (self.j(w) / (m * w) - g0) / (w * w)

        return (2.0 / math.pi) * numerics.integrate_semi_infinite(
            integrand, spec, breakpoints=self._scales()
        )

    def missing_mass(self, spec: QuadratureSpec | None = None) -> float:
        """Oscillator mass missing relative to the strictly Ohmic reference.

        (2/pi) int dw [M gamma_hat(0) w - J(w)] / w^3. Finite for any
        Ohmic bath even though each total mass diverges separately.
        """
        g0 = self.gamma_hat(0.0)
        m = self.system_mass

        def integrand(w):
            return (m * g0 * w - self.j(w)) / w**3

        return (2.0 / math.pi) * numerics.integrate_semi_infinite(
            integrand, spec, breakpoints=self._scales()
        )

    def anomaly(self, spec: QuadratureSpec | None = None) -> AnomalyReport:
        """Assemble the negative-specific-heat report for this bath."""
        gp = self.gamma_hat_prime_zero(spec)
        ratio = self.missing_mass(spec) / self.system_mass
        return AnomalyReport(
            gamma_hat_zero=self.gamma_hat(0.0),
            gamma_hat_prime_zero=gp,
            missing_mass_ratio=ratio,
            low_t_specific_heat_negative=gp < -1.0 - _MARGIN,
        )


@dataclass(frozen=True)
class Drude(SpectralDensity):
    """Ohmic bath with Drude cutoff: J = M gamma w wd^2 / (w^2 + wd^2)."""

    gamma: float
    omega_d: float
    system_mass: float = 1.0

    def __post_init__(self):
        if not self.gamma > 0.0:
            raise ValueError("gamma must be positive")
        if not self.omega_d > 0.0:
            raise ValueError("omega_d must be positive")
        if not self.system_mass > 0.0:
            raise ValueError("system_mass must be positive")

    def j(self, omega):
        wd2 = self.omega_d**2
        return self.system_mass * self.gamma * omega * wd2 / (omega**2 + wd2)

    def gamma_hat(self, z: float) -> float:
        if z < 0.0:
            raise ValueError("gamma_hat defined for z >= 0")
        return self.gamma * self.omega_d / (z + self.omega_d)

    def im_gamma_hat_iaxis(self, omega):
        wd2 = self.omega_d**2
        return -self.gamma * self.omega_d * omega / (omega**2 + wd2)

    def _scales(self):
        return (self.gamma, self.omega_d)


@dataclass(frozen=True)
class StrictOhmic(SpectralDensity):
    """Strictly Ohmic reference bath, J = M gamma w with no cutoff."""

    gamma: float
    system_mass: float = 1.0

    def __post_init__(self):
        if not self.gamma > 0.0:
            raise ValueError("gamma must be positive")
        if not self.system_mass > 0.0:
            raise ValueError("system_mass must be positive")

    def j(self, omega):
        return self.system_mass * self.gamma * np.asarray(omega, dtype=float)

    def gamma_hat(self, z: float) -> float:
        if z < 0.0:
            raise ValueError("gamma_hat defined for z >= 0")
        return self.gamma

    def im_gamma_hat_iaxis(self, omega):
        return np.zeros_like(np.asarray(omega, dtype=float))


def gamma_hat_by_quadrature(
    sd: SpectralDensity, z: float, spec: QuadratureSpec | None = None
) -> float:
    """Evaluate gamma_hat(z) directly from J(w) for z > 0.

    Cross-check of the closed forms; the z = 0 value is only defined as a
    limit and must be taken from the closed form.
    """
    if not z > 0.0:
        raise ValueError("quadrature route requires z > 0")

    def integrand(w):
        return sd.j(w) / w * z / (w * w + z * z)

    return (2.0 / (math.pi * sd.system_mass)) * numerics.integrate_semi_infinite(
        integrand, spec, breakpoints=(z, *sd._scales())
    )


def im_gamma_hat_iaxis_by_quadrature(
    sd: SpectralDensity, omega: float, spec: QuadratureSpec | None = None
) -> float:
    """Im gamma_hat(i*w) from J via the subtracted principal-value integral.

    The pole of J(w')/w'/(w'^2 - w^2) at w' = w is removed by subtracting
    J(w)/w, which leaves a smooth difference quotient; the principal value
    of the subtracted constant term vanishes identically on (0, inf).
    """
    if not omega > 0.0:
        raise ValueError("requires omega > 0")
    ratio_at_omega = float(sd.j(omega)) / omega

    def integrand(w):
        return (sd.j(w) / w - ratio_at_omega) / (w * w - omega * omega)

    bp = (0.5 * omega, omega, 2.0 * omega, *sd._scales())
    val = numerics.integrate_semi_infinite(integrand, spec, breakpoints=bp)
    return (2.0 * omega / (math.pi * sd.system_mass)) * val
