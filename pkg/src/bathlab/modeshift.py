"""Change of the bath's eigenmode density induced by coupling a free particle.

Coupling a zero-frequency degree of freedom to an equidistant oscillator
grid shifts every eigenfrequency within its interlacing interval. In the
continuum limit the density of eigenmodes changes by

    delta_rho(W) = (1/pi) g'(W) / (1 + g(W)^2),

with g(W) = M W / J(W) * (W + Im gamma_hat(iW)). For a Drude bath this is
exactly a sum of three Lorentzians centered at zero frequency, with widths
given by the characteristic frequencies of the damped particle.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from bathlab import bath as _bath
from bathlab import numerics
from bathlab.bath import Drude, SpectralDensity, StrictOhmic
from bathlab.errors import DomainError

__all__ = [
    "DampedSystemFrequencies",
    "DensityShift",
    "characteristic_frequencies",
    "g",
    "g_by_quadrature",
    "delta_rho",
    "delta_rho_generic",
    "delta_rho_lorentzian",
    "lorentzian_components",
]

_PI = np.pi


@dataclass(frozen=True)
class DampedSystemFrequencies:
    """The three frequencies governing Drude-damped free-particle dynamics.

    omega1 and omega2 are the roots of w^2 - omega_d*w + gamma*omega_d = 0,
    so omega1 + omega2 = omega_d and omega1*omega2 = gamma*omega_d; they are
    a complex-conjugate pair when omega_d < 4*gamma.
    """

    omega1: complex
    omega2: complex
    omega_d: float

    @property
    def is_real_pair(self) -> bool:
        return self.omega1.imag == 0.0

    @property
    def gamma(self) -> float:
        return (self.omega1 * self.omega2).real / self.omega_d


def characteristic_frequencies(gamma: float, omega_d: float) -> DampedSystemFrequencies:
    """Frequencies (omega_d/2)*(1 +- sqrt(1 - 4*gamma/omega_d))."""
    if not (gamma > 0.0 and omega_d > 0.0):
        raise ValueError("gamma and omega_d must be positive")
    disc = 1.0 - 4.0 * gamma / omega_d
    root = cmath.sqrt(disc)  # imaginary for omega_d < 4*gamma
    half = 0.5 * omega_d
    return DampedSystemFrequencies(half * (1.0 + root), half * (1.0 - root), omega_d)


def _g_closed(sd: SpectralDensity, omega):
    w = np.asarray(omega, dtype=float)
    if isinstance(sd, Drude):
        a = sd.omega_d**2 - sd.gamma * sd.omega_d
        return w * (w * w + a) / (sd.gamma * sd.omega_d**2)
    if isinstance(sd, StrictOhmic):
        return w / sd.gamma
    raise TypeError(f"no closed form for {type(sd).__name__}")


def _g_prime_closed(sd: SpectralDensity, omega):
    w = np.asarray(omega, dtype=float)
    if isinstance(sd, Drude):
        a = sd.omega_d**2 - sd.gamma * sd.omega_d
        return (3.0 * w * w + a) / (sd.gamma * sd.omega_d**2)
    if isinstance(sd, StrictOhmic):
        return np.full_like(w, 1.0 / sd.gamma)
    raise TypeError(f"no closed form for {type(sd).__name__}")


def g(sd: SpectralDensity, omega):
    """Dimensionless function whose arctangent is the mode-shift phase.

    Closed form for the built-in bath variants; see `g_by_quadrature` for
    the direct route through Im gamma_hat(iW).
    """
    return _scalar_or_array(_g_closed(sd, omega), omega)


def g_by_quadrature(sd: SpectralDensity, omega: float) -> float:
    """g evaluated from its definition, M*W/J(W) * (W + Im gamma_hat(iW))."""
    if not omega > 0.0:
        raise ValueError("requires omega > 0")
    j = float(sd.j(omega))
    if j == 0.0:
        raise DomainError(f"J({omega}) = 0, g undefined")
    im = _bath.im_gamma_hat_iaxis_by_quadrature(sd, omega)
    return sd.system_mass * omega / j * (omega + im)


def delta_rho(sd: SpectralDensity, omega):
    """Eigenmode-density change rho_coupled - rho_bath at frequency W >= 0.

    W = 0 is evaluated as the analytic limit. Accepts arrays.
    """
    gv = _g_closed(sd, omega)
    gp = _g_prime_closed(sd, omega)
    return _scalar_or_array(gp / (_PI * (1.0 + gv * gv)), omega)


def delta_rho_generic(sd: SpectralDensity, omega: float) -> float:
    """delta_rho via quadrature-g and Richardson differentiation.

    Validation route for the closed forms; also the template for bath
    models without an analytic g.
    """
    if not omega > 0.0:
        raise ValueError("requires omega > 0")
    h = max(1e-6, 1e-6 * omega)
    h = min(h, omega / 8.0)
    gv = g_by_quadrature(sd, omega)
    gp = numerics.derivative(lambda w: g_by_quadrature(sd, w), omega, h)
    return gp / (_PI * (1.0 + gv * gv))


def _lorentzian_terms(freqs: DampedSystemFrequencies, omega):
    w = np.asarray(omega, dtype=float)
    w2 = w * w
    t1 = freqs.omega1 / (w2 + freqs.omega1**2)
    t2 = freqs.omega2 / (w2 + freqs.omega2**2)
    t3 = freqs.omega_d / (w2 + freqs.omega_d**2)
    return t1, t2, t3


def _real_checked(z, omega):
    z = np.asarray(z)
    scale = np.maximum(1.0, np.abs(z.real))
    assert np.all(np.abs(z.imag) <= 1e-13 * scale), "imaginary residual too large"
    return _scalar_or_array(z.real, omega)


def delta_rho_lorentzian(freqs: DampedSystemFrequencies, omega):
    """Drude density change as the explicit three-Lorentzian sum."""
    t1, t2, t3 = _lorentzian_terms(freqs, omega)
    return _real_checked((t1 + t2 - t3) / _PI, omega)


def lorentzian_components(freqs: DampedSystemFrequencies, omega):
    """The three Lorentzian contributions, summing to delta_rho_lorentzian.

    For a complex-conjugate frequency pair the first component carries the
    (real) pair sum and the second is zero, since the individual terms are
    not separately real.
    """
    t1, t2, t3 = _lorentzian_terms(freqs, omega)
    if freqs.is_real_pair:
        c1 = _real_checked(t1 / _PI, omega)
        c2 = _real_checked(t2 / _PI, omega)
    else:
        c1 = _real_checked((t1 + t2) / _PI, omega)
        c2 = _scalar_or_array(np.zeros_like(np.asarray(omega, dtype=float)), omega)
    c3 = _real_checked(-t3 / _PI, omega)
    return c1, c2, c3


def _scalar_or_array(value, like):
    if np.ndim(like) == 0:
        return float(value)
    return np.asarray(value)


class DensityShift:
    """Callable evaluator of the eigenmode-density change for one bath."""

    def __init__(self, sd: SpectralDensity):
        self.bath = sd
        self._freqs = (
            characteristic_frequencies(sd.gamma, sd.omega_d)
            if isinstance(sd, Drude)
            else None
        )

    def __call__(self, omega):
        return delta_rho(self.bath, omega)

    def components(self, omega):
        if self._freqs is None:
            raise DomainError("Lorentzian decomposition requires a Drude bath")
        return lorentzian_components(self._freqs, omega)
