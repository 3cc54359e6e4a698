"""Eigenmode-density shift and thermodynamics of an Ohmic-damped free particle.

Reduced units throughout: hbar = k_B = 1, frequencies and temperatures in
units of the damping rate gamma, masses in units of the particle mass.
"""

from bathlab._kernels import BACKEND as kernel_backend
from bathlab.bath import AnomalyReport, Drude, SpectralDensity, StrictOhmic
from bathlab.errors import (
    BathlabError,
    DomainError,
    InvalidBracket,
    NonConvergence,
    PoleError,
    RootNotBracketed,
)
from bathlab.modeshift import (
    DampedSystemFrequencies,
    DensityShift,
    characteristic_frequencies,
    delta_rho,
    delta_rho_lorentzian,
    lorentzian_components,
)
from bathlab.oracle import (
    CoupledSpectrum,
    DiscreteBath,
    build_bath,
    coupled_spectrum,
    dense_spectrum,
    discrete_specific_heat,
)
from bathlab.thermo import (
    LowTAsymptote,
    ThermoPoint,
    c_ho,
    internal_energy,
    ln_partition_ratio,
    low_t_asymptote,
    specific_heat_closed,
    specific_heat_quadrature,
    zero_point_energy,
)

__version__ = "0.1.0"

__all__ = [
    "AnomalyReport",
    "BathlabError",
    "CoupledSpectrum",
    "DampedSystemFrequencies",
    "DensityShift",
    "DiscreteBath",
    "DomainError",
    "Drude",
    "InvalidBracket",
    "LowTAsymptote",
    "NonConvergence",
    "PoleError",
    "RootNotBracketed",
    "SpectralDensity",
    "StrictOhmic",
    "ThermoPoint",
    "build_bath",
    "c_ho",
    "characteristic_frequencies",
    "coupled_spectrum",
    "delta_rho",
    "delta_rho_lorentzian",
    "dense_spectrum",
    "discrete_specific_heat",
    "internal_energy",
    "kernel_backend",
    "ln_partition_ratio",
    "lorentzian_components",
    "low_t_asymptote",
    "specific_heat_closed",
    "specific_heat_quadrature",
    "zero_point_energy",
]
