"""Thermodynamics of the damped free particle from the eigenmode shift.

Everything here refers to differences "coupled system minus bare bath",
the quantities generated by the reduced partition function. Reduced units
throughout: hbar = k_B = 1 and frequencies/temperatures measured in units
of the damping rate, so tau is the dimensionless temperature and specific
heat comes out in units of k_B.

The specific heat is the oscillator heat capacity weighted by the density
change, C(tau) = int dw delta_rho(w) c_ho(w, tau); for Drude damping the
integral has a closed form built from the trigamma function.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from bathlab import modeshift, numerics, specfun
from bathlab.bath import Drude, SpectralDensity
from bathlab.modeshift import DampedSystemFrequencies
from bathlab.numerics import QuadratureSpec

__all__ = [
    "ThermoPoint",
    "LowTAsymptote",
    "c_ho",
    "specific_heat_quadrature",
    "specific_heat_closed",
    "low_t_asymptote",
    "internal_energy",
    "zero_point_energy",
    "ln_partition_ratio",
    "thermo_point",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ThermoPoint:
    """One temperature point of the coupling-induced thermodynamics."""

    temperature: float
    specific_heat: float
    internal_energy: float
    ln_partition_ratio: float


@dataclass(frozen=True)
class LowTAsymptote:
    """Linear low-temperature coefficient: C/k_B = slope * tau + O(tau^3)."""

    slope: float


def c_ho(omega, tau: float):
    """Specific heat of a harmonic oscillator, (x / 2 sinh(x/2))^2, x = w/tau.

    Overflow-safe for any x; tends to 1 (equipartition) as x -> 0 and to 0
    as the oscillator freezes out. Vectorized over omega.
    """
    if not tau > 0.0:
        raise ValueError("tau must be positive")
    x = np.asarray(omega, dtype=float) / tau
    if np.any(x < 0.0):
        raise ValueError("omega must be non-negative")
    # x/(2 sinh(x/2)) = x e^{-x/2} / (1 - e^{-x})
    den = -np.expm1(-x)
    safe = den > 0.0
    ratio = np.where(safe, x * np.exp(-0.5 * x) / np.where(safe, den, 1.0), 1.0)
    out = ratio * ratio
    if np.ndim(omega) == 0:
        return float(out)
    return out


def specific_heat_quadrature(
    sd: SpectralDensity, tau: float, spec: QuadratureSpec | None = None
) -> float:
    """C(tau) as the delta_rho-weighted oscillator-heat integral.

    Integration runs in x = w/tau so the thermal window stays resolved at
    low temperature; panel anchors cover both the thermal scales and the
    bath's own feature frequencies.
    """
    if not tau > 0.0:
        raise ValueError("tau must be positive")
    spec = spec or QuadratureSpec(rel_tol=1e-9, abs_tol=1e-11)

    def integrand(x):
        return tau * modeshift.delta_rho(sd, tau * x) * c_ho(x, 1.0)

    anchors = [1.0, 10.0, 50.0]
    anchors += [s / tau for s in sd._scales()]
    if isinstance(sd, Drude):
        freqs = modeshift.characteristic_frequencies(sd.gamma, sd.omega_d)
        anchors += [abs(freqs.omega1) / tau, abs(freqs.omega2) / tau]
    return numerics.integrate_semi_infinite(
        integrand, spec, breakpoints=tuple(anchors)
    )


def specific_heat_closed(freqs: DampedSystemFrequencies, tau: float) -> float:
    """Closed-form Drude specific heat from complex trigamma values.

    C/k_B = sum over {w1, w2} of v^2 psi'(v) - v_D^2 psi'(v_D) - 1/2 with
    v = w/(2 pi tau); real by conjugate pairing.
    """
    if not tau > 0.0:
        raise ValueError("tau must be positive")
    scale = 1.0 / (_TWO_PI * tau)
    total = 0.0 + 0.0j
    for w in (freqs.omega1, freqs.omega2):
        v = w * scale
        total += v * v * specfun.trigamma(v)
    vd = freqs.omega_d * scale
    total -= vd * vd * specfun.trigamma(vd)
    total -= 0.5
    assert abs(total.imag) <= 1e-12 * max(1.0, abs(total.real))
    return total.real


def low_t_asymptote(sd: SpectralDensity, spec: QuadratureSpec | None = None) -> LowTAsymptote:
    """Leading low-temperature slope (pi/3)(1 + gamma_hat'(0))/gamma_hat(0).

    Negative exactly when the missing-mass anomaly criterion holds.
    """
    gp = sd.gamma_hat_prime_zero(spec)
    return LowTAsymptote(slope=(math.pi / 3.0) * (1.0 + gp) / sd.gamma_hat(0.0))


def internal_energy(freqs: DampedSystemFrequencies, tau: float) -> float:
    """Coupling-induced internal-energy difference at temperature tau.

    U = -sum (w/2pi) psi(w/2pi tau) over {w1, w2} + (w_D/2pi) psi(...)
    - tau/2, with vanishing integration constant.
    """
    if not tau > 0.0:
        raise ValueError("tau must be positive")
    scale = 1.0 / (_TWO_PI * tau)
    total = 0.0 + 0.0j
    for w in (freqs.omega1, freqs.omega2):
        total -= w / _TWO_PI * specfun.digamma(w * scale)
    wd = freqs.omega_d
    total += wd / _TWO_PI * specfun.digamma(wd * scale)
    total -= 0.5 * tau
    assert abs(total.imag) <= 1e-12 * max(1.0, abs(total.real))
    return total.real


def zero_point_energy(freqs: DampedSystemFrequencies) -> float:
    """Zero-temperature limit of the internal-energy difference.

    U0 = sum over {w1, w2} of (w/2pi) ln(w_D/w); real by conjugate pairing.
    """
    total = 0.0 + 0.0j
    for w in (freqs.omega1, freqs.omega2):
        total += w / _TWO_PI * cmath.log(freqs.omega_d / w)
    assert abs(total.imag) <= 1e-13 * max(1.0, abs(total.real))
    return total.real


def ln_partition_ratio(freqs: DampedSystemFrequencies, tau: float) -> float:
    """ln of the reduced partition function, up to a tau-independent constant.

    ln Z = (1/2) ln tau + ln Gamma(1 + v1) + ln Gamma(1 + v2)
    - ln Gamma(1 + v_D), v = w/(2 pi tau). Only tau-derivatives are
    physically meaningful since the overall prefactor is undetermined.
    """
    if not tau > 0.0:
        raise ValueError("tau must be positive")
    scale = 1.0 / (_TWO_PI * tau)
    total = complex(0.5 * math.log(tau))
    for w in (freqs.omega1, freqs.omega2):
        total += specfun.log_gamma(1.0 + w * scale)
    total -= specfun.log_gamma(1.0 + freqs.omega_d * scale)
    assert abs(total.imag) <= 1e-12 * max(1.0, abs(total.real))
    return total.real


def thermo_point(freqs: DampedSystemFrequencies, tau: float) -> ThermoPoint:
    """Bundle C, U and ln Z at one temperature."""
    return ThermoPoint(
        temperature=tau,
        specific_heat=specific_heat_closed(freqs, tau),
        internal_energy=internal_energy(freqs, tau),
        ln_partition_ratio=ln_partition_ratio(freqs, tau),
    )
