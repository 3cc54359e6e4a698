import math

import numpy as np
import pytest

from bathlab import thermo
from bathlab.bath import Drude, StrictOhmic
from bathlab.errors import DomainError
from bathlab.modeshift import characteristic_frequencies, delta_rho
from bathlab.oracle import (
    DiscreteBath,
    build_bath,
    coupled_spectrum,
    cot_condition_residuals,
    counting_difference,
    dense_spectrum,
    discrete_specific_heat,
)


def _unit_bath():
    return DiscreteBath(delta=1.0, masses=np.array([1.0]), frequencies=np.array([1.0]))


class TestBuildBath:
    def test_drude_single_mass(self):
        bath = build_bath(Drude(1.0, 1.0), 0.1, 1)
        # (2/pi) * J(0.1)/0.1^3 * 0.1 with J(0.1) = 0.1/1.01
        assert bath.masses[0] == pytest.approx(6.30316606304536, abs=1e-12)

    def test_strict_ohmic_masses(self):
        bath = build_bath(StrictOhmic(1.0), 1.0, 6)
        n = np.arange(1, 7)
        assert bath.masses == pytest.approx(2.0 / (math.pi * n**2), rel=1e-14)

    def test_masses_positive_and_counted(self):
        bath = build_bath(Drude(2.0, 0.5), 0.05, 40)
        assert bath.n_modes == 40
        assert np.all(bath.masses > 0)
        assert bath.frequencies[0] == pytest.approx(0.05)

    def test_validation(self):
        with pytest.raises(ValueError):
            build_bath(Drude(1.0, 1.0), -0.1, 5)
        with pytest.raises(ValueError):
            build_bath(Drude(1.0, 1.0), 0.1, 0)
        with pytest.raises(ValueError):
            DiscreteBath(delta=1.0, masses=np.array([-1.0]), frequencies=np.array([1.0]))
        with pytest.raises(ValueError):
            DiscreteBath(delta=1.0, masses=np.array([1.0]), frequencies=np.array([2.0]))


class TestCoupledSpectrum:
    def test_single_mode_analytic(self):
        spectrum = coupled_spectrum(_unit_bath())
        assert spectrum.eigenfrequencies[0] == pytest.approx(math.sqrt(2), abs=1e-12)
        assert spectrum.has_zero_mode

    def test_single_mode_decoupling(self):
        bath = DiscreteBath(
            delta=1.0, masses=np.array([1e-12]), frequencies=np.array([1.0])
        )
        assert coupled_spectrum(bath).eigenfrequencies[0] == pytest.approx(
            1.0, abs=1e-9
        )

    def test_two_modes_match_dense(self):
        bath = build_bath(Drude(1.0, 1.0), 0.5, 2)
        secular = coupled_spectrum(bath).eigenfrequencies
        dense, zero_resid = dense_spectrum(bath)
        assert np.sort(dense) == pytest.approx(secular, abs=1e-10)
        assert zero_resid <= 1e-12

    def test_interlacing_strict(self):
        bath = build_bath(Drude(1.0, 1.0), 0.05, 400)
        omega = coupled_spectrum(bath).eigenfrequencies
        w = bath.frequencies
        assert np.all(omega[:-1] > w[:-1])
        assert np.all(omega[:-1] < w[1:])
        assert omega[-1] > w[-1]

    def test_secular_residuals(self):
        bath = build_bath(Drude(1.0, 1.0), 0.05, 400)
        spectrum = coupled_spectrum(bath)
        assert spectrum.secular_residuals.max() <= 1e-8

    def test_dense_cross_validation_n50(self):
        bath = build_bath(Drude(1.0, 1.0), 0.1, 50)
        secular = coupled_spectrum(bath).eigenfrequencies
        dense, _ = dense_spectrum(bath)
        assert np.max(np.abs(np.sort(dense) - secular)) <= 1e-9


class TestCotCondition:
    def test_residuals_small_in_continuum_window(self):
        bath = build_bath(Drude(1.0, 1.0), 0.01, 5000)
        spectrum = coupled_spectrum(bath)
        res = cot_condition_residuals(bath, spectrum)
        omega = spectrum.eigenfrequencies
        window = (omega >= 0.1) & (omega <= 5.0)
        assert np.median(res[window]) <= 0.05

    def test_single_mode_inapplicable(self):
        bath = build_bath(Drude(1.0, 1.0), 1.0, 1)
        res = cot_condition_residuals(bath, coupled_spectrum(bath))
        assert res.size == 0

    def test_requires_source(self):
        with pytest.raises(ValueError):
            cot_condition_residuals(_unit_bath(), coupled_spectrum(_unit_bath()))


class TestDiscreteSpecificHeat:
    def test_classical_limit(self):
        bath = build_bath(Drude(1.0, 1.0), 0.1, 100)
        spectrum = coupled_spectrum(bath)
        assert discrete_specific_heat(bath, spectrum, 1e6) == pytest.approx(
            0.5, abs=1e-6
        )

    def test_matches_closed_form(self):
        bath = build_bath(Drude(1.0, 1.0), 0.02, 5000)
        spectrum = coupled_spectrum(bath)
        fr = characteristic_frequencies(1.0, 1.0)
        closed = thermo.specific_heat_closed(fr, 1.0)
        assert discrete_specific_heat(bath, spectrum, 1.0) == pytest.approx(
            closed, rel=0.02
        )

    def test_frozen_bath_returns_zero_mode_share(self):
        bath = build_bath(Drude(1.0, 1.0), 0.02, 200)
        spectrum = coupled_spectrum(bath)
        val = discrete_specific_heat(bath, spectrum, 1e-4)
        assert 0.45 <= val <= 0.5

    def test_halving_delta_improves(self):
        # fixed grid extent N*delta = 20
        fr = characteristic_frequencies(1.0, 1.0)
        closed = thermo.specific_heat_closed(fr, 1.0)
        errs = []
        for delta, n in ((0.04, 500), (0.02, 1000)):
            bath = build_bath(Drude(1.0, 1.0), delta, n)
            spectrum = coupled_spectrum(bath)
            errs.append(abs(discrete_specific_heat(bath, spectrum, 1.0) - closed))
        assert errs[1] < errs[0]


@pytest.fixture(scope="module")
def setup():
    bath = build_bath(Drude(1.0, 1.0), 0.01, 2000)
    return bath, coupled_spectrum(bath)


class TestCountingDifference:
    def test_below_first_mode(self, setup):
        bath, spectrum = setup
        assert counting_difference(bath, spectrum, 0.005) == 0.0

    def test_interlacing_bounds_values(self, setup):
        bath, spectrum = setup
        rng = np.random.default_rng(2)
        for omega in rng.uniform(0.1, 15.0, 200):
            assert counting_difference(bath, spectrum, omega) in (-1.0, 0.0)

    def test_grid_midpoints(self, setup):
        bath, spectrum = setup
        for k in (10, 100, 900):
            val = counting_difference(bath, spectrum, (k + 0.5) * bath.delta)
            assert val in (-1.0, 0.0)

    def test_domain_guard(self, setup):
        bath, spectrum = setup
        with pytest.raises(DomainError):
            counting_difference(bath, spectrum, 0.0)
        with pytest.raises(DomainError):
            counting_difference(bath, spectrum, (bath.n_modes - 1) * bath.delta)

    def test_windowed_average_recovers_density_shift(self, setup):
        # slope of the windowed mean of the staircase difference ~ delta_rho
        bath, spectrum = setup
        sd = bath.source

        def window_mean(lo, hi):
            grid = np.linspace(lo, hi, 400)
            return np.mean([counting_difference(bath, spectrum, w) for w in grid])

        m_low = window_mean(0.5, 1.0)
        m_high = window_mean(1.0, 1.5)
        estimate = (m_high - m_low) / 0.5
        # oracle: mean of delta_rho over the window between the two centers
        grid = np.linspace(0.75, 1.25, 400)
        target = float(np.mean(delta_rho(sd, grid)))
        assert estimate == pytest.approx(target, rel=0.10)
